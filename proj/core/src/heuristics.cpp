#include "hopmc/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <tuple>

namespace hopmc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Hop distances from `source` over alive edges, skipping blocked nodes as
// intermediates (a blocked `allowed` node may still be reached).
void bfs_avoiding(const Network& net, const std::vector<char>& alive,
                  const std::vector<char>& blocked, NodeId allowed, NodeId source,
                  std::vector<HopDistance>& dist, std::vector<NodeId>& queue) {
  dist.assign(static_cast<size_t>(net.node_count()), kUnreachable);
  queue.clear();
  dist[static_cast<size_t>(source)] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    if (blocked[static_cast<size_t>(u)] && u != source) continue;  // endpoint only
    for (const Network::Arc& arc : net.arcs(u)) {
      if (!alive[static_cast<size_t>(arc.edge)]) continue;
      NodeId w = arc.to;
      if (blocked[static_cast<size_t>(w)] && w != allowed) continue;
      if (dist[static_cast<size_t>(w)] != kUnreachable) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
      queue.push_back(w);
    }
  }
}

}  // namespace

std::optional<std::vector<EdgeId>> generate_path(const Network& net, NodeId s,
                                                 NodeId t, int l1, int l2,
                                                 std::span<const EdgeId> forbidden,
                                                 RandomStream& rng) {
  if (l1 < 1 || l2 < l1)
    throw Error(Error::Category::validation,
                "path length window [" + std::to_string(l1) + ", " +
                    std::to_string(l2) + "] is empty");
  if (s == t) return std::nullopt;

  std::vector<char> alive(static_cast<size_t>(net.edge_count()), 1);
  for (EdgeId e : forbidden) alive[static_cast<size_t>(e)] = 0;
  std::vector<char> on_path(static_cast<size_t>(net.node_count()), 0);
  on_path[static_cast<size_t>(s)] = 1;

  std::vector<HopDistance> dist;
  std::vector<NodeId> queue;
  std::vector<char> shp(static_cast<size_t>(net.node_count()), 0);
  std::vector<char> seen(static_cast<size_t>(net.node_count()), 0);
  std::vector<EdgeId> path;
  NodeId curr = s;
  int len = 0;

  while (true) {
    // shortest continuation to t avoiding nodes already on the walk
    bfs_avoiding(net, alive, on_path, curr, t, dist, queue);
    HopDistance d = dist[static_cast<size_t>(curr)];
    if (d == kUnreachable) return std::nullopt;  // dead end
    if (len + d > l2) return std::nullopt;       // cannot finish in the window

    // walk the shortest continuation once: its first hop is the follow step
    // (arcs scan in edge-id order, so parallels resolve to the lowest id)
    std::fill(shp.begin(), shp.end(), 0);
    shp[static_cast<size_t>(curr)] = 1;
    EdgeId follow_edge = -1;
    NodeId follow_node = -1;
    NodeId u = curr;
    while (u != t) {
      for (const Network::Arc& arc : net.arcs(u)) {
        if (!alive[static_cast<size_t>(arc.edge)]) continue;
        NodeId w = arc.to;
        if (on_path[static_cast<size_t>(w)] && w != curr) continue;
        if (dist[static_cast<size_t>(w)] != dist[static_cast<size_t>(u)] - 1)
          continue;
        if (u == curr) {
          follow_edge = arc.edge;
          follow_node = w;
        }
        shp[static_cast<size_t>(w)] = 1;
        u = w;
        break;
      }
    }

    // a step is forced when at most one fresh neighbor remains
    std::fill(seen.begin(), seen.end(), 0);
    int usable = 0;
    for (const Network::Arc& arc : net.arcs(curr)) {
      if (!alive[static_cast<size_t>(arc.edge)]) continue;
      NodeId w = arc.to;
      if (on_path[static_cast<size_t>(w)]) continue;
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      ++usable;
    }

    bool follow = usable <= 1;
    if (!follow) {
      // bias toward following once the window is reachable along it
      double num = static_cast<double>(len + d - l1);
      double den = static_cast<double>(l2 - l1);
      double prob = den == 0.0 ? (num >= 0.0 ? 1.0 : 0.0)
                               : std::clamp(num / den, 0.0, 1.0);
      follow = rng.bernoulli(prob);
    }

    EdgeId step_edge = follow_edge;
    NodeId step_node = follow_node;
    if (!follow) {
      // deviate to a fresh neighbor off the shortest continuation
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<NodeId> cand_nodes;
      std::vector<EdgeId> cand_edges;
      for (const Network::Arc& arc : net.arcs(curr)) {
        if (!alive[static_cast<size_t>(arc.edge)]) continue;
        NodeId w = arc.to;
        if (on_path[static_cast<size_t>(w)] || shp[static_cast<size_t>(w)])
          continue;
        if (seen[static_cast<size_t>(w)]) continue;
        seen[static_cast<size_t>(w)] = 1;
        cand_nodes.push_back(w);
        cand_edges.push_back(arc.edge);
      }
      if (!cand_nodes.empty()) {
        std::uint32_t k = rng.index(static_cast<std::uint32_t>(cand_nodes.size()));
        step_node = cand_nodes[k];
        step_edge = cand_edges[k];
      }
    }

    alive[static_cast<size_t>(step_edge)] = 0;
    path.push_back(step_edge);
    on_path[static_cast<size_t>(step_node)] = 1;
    curr = step_node;
    ++len;
    if (curr == t) {
      if (len >= l1) return path;
      return std::nullopt;  // arrived too early
    }
  }
}

void shake_distances(std::vector<HopDistance>& d, RandomStream& rng) {
  const int n = static_cast<int>(d.size());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (size_t k = pairs.size(); k > 1; --k)
    std::swap(pairs[k - 1], pairs[rng.index(static_cast<std::uint32_t>(k))]);
  for (const auto& [i, j] : pairs) {
    double gap = std::fabs(static_cast<double>(d[static_cast<size_t>(i)]) -
                           static_cast<double>(d[static_cast<size_t>(j)]));
    if (rng.bernoulli(1.0 / (1.0 + gap)))
      std::swap(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
  }
}

namespace {

bool short_path_exists(const Network& net, const Configuration& alive, NodeId s,
                       NodeId t, std::optional<HopDistance> bound,
                       BfsScratch& scratch) {
  bfs_distances(net, alive, s, scratch);
  HopDistance d = scratch.dist[static_cast<size_t>(t)];
  if (d == kUnreachable) return false;
  return !bound || d <= *bound;
}

}  // namespace

std::optional<std::vector<EdgeId>> generate_cutset(
    const Network& net, NodeId s, NodeId t, std::optional<HopDistance> bound,
    std::span<const EdgeId> protected_edges, RandomStream& rng) {
  std::vector<char> is_protected(static_cast<size_t>(net.edge_count()), 0);
  for (EdgeId e : protected_edges) is_protected[static_cast<size_t>(e)] = 1;

  Configuration alive = full_configuration(net);
  BfsScratch scratch;
  if (!short_path_exists(net, alive, s, t, bound, scratch))
    return std::nullopt;  // already beyond the bound: nothing to cut

  // removal order: distance from s with the protected edges absent, shaken
  Configuration unprotected = alive;
  for (EdgeId e = 0; e < net.edge_count(); ++e)
    if (is_protected[static_cast<size_t>(e)]) unprotected.set(e, false);
  std::vector<HopDistance> shaken = bfs_distances(net, unprotected, s);
  shake_distances(shaken, rng);

  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < net.edge_count(); ++e)
    if (!is_protected[static_cast<size_t>(e)]) order.push_back(e);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    HopDistance ka = std::min(shaken[static_cast<size_t>(net.edge(a).a)],
                              shaken[static_cast<size_t>(net.edge(a).b)]);
    HopDistance kb = std::min(shaken[static_cast<size_t>(net.edge(b).a)],
                              shaken[static_cast<size_t>(net.edge(b).b)]);
    return std::tie(ka, a) < std::tie(kb, b);
  });

  std::vector<EdgeId> new_cut;
  size_t next = 0;
  while (short_path_exists(net, alive, s, t, bound, scratch)) {
    if (next == order.size()) return std::nullopt;  // protected edges sustain it
    EdgeId e = order[next++];
    alive.set(e, false);
    new_cut.push_back(e);
  }

  // reverse deletion: keep only the members whose return re-admits a path
  std::vector<EdgeId> min_cut;
  for (EdgeId e : new_cut) {
    alive.set(e, true);
    if (short_path_exists(net, alive, s, t, bound, scratch)) {
      alive.set(e, false);
      min_cut.push_back(e);
    }
  }
  return min_cut;
}

namespace {

enum class RegionKind { first, interior, last };

RegionKind classify(const RegionBounds& bounds) {
  if (!bounds.max_len) return RegionKind::last;
  if (bounds.min_len == 1) return RegionKind::first;
  return RegionKind::interior;
}

void validate_version(const std::string& version, RegionKind kind) {
  if (version.empty())
    throw Error(Error::Category::validation, "version string is empty");
  for (char c : version)
    if (c != 'P' && c != 'C')
      throw Error(Error::Category::validation,
                  std::string("version letter '") + c + "' is not P or C");
  switch (kind) {
    case RegionKind::first:
      if (version.find('C') != std::string::npos)
        throw Error(Error::Category::validation,
                    "the first region takes pathsets only (all-P version)");
      break;
    case RegionKind::last:
      if (version.find('P') != std::string::npos)
        throw Error(Error::Category::validation,
                    "the last region takes cutsets only (all-C version)");
      break;
    case RegionKind::interior:
      if (version.size() < 2 || version[0] != 'P' || version[1] != 'C')
        throw Error(Error::Category::validation,
                    "an interior region version must start with \"PC\"");
      break;
  }
}

double score_solution(const Network& net,
                      const std::vector<std::vector<EdgeId>>& paths,
                      const std::vector<std::vector<EdgeId>>& cuts,
                      RegionKind kind) {
  double some_path_up = 0.0;
  if (!paths.empty()) {
    double all_miss = 1.0;
    for (const auto& p : paths) {
      double up = 1.0;
      for (EdgeId e : p) up *= net.edge(e).reliability;
      all_miss *= 1.0 - up;
    }
    some_path_up = 1.0 - all_miss;
  }
  double some_cut_down = 0.0;
  if (!cuts.empty()) {
    double all_live = 1.0;
    for (const auto& c : cuts) {
      double down = 1.0;
      for (EdgeId e : c) down *= 1.0 - net.edge(e).reliability;
      all_live *= 1.0 - down;
    }
    some_cut_down = 1.0 - all_live;
  }
  switch (kind) {
    case RegionKind::first:
      return some_path_up;
    case RegionKind::last:
      return some_cut_down;
    case RegionKind::interior:
      return some_path_up * some_cut_down;
  }
  return 0.0;
}

}  // namespace

HeuristicSolution run_region_heuristic(const Network& net, NodeId s, NodeId t,
                                       const RegionBounds& bounds,
                                       const HeuristicConfig& config) {
  if (bounds.min_len < 1 || (bounds.max_len && *bounds.max_len < bounds.min_len))
    throw Error(Error::Category::validation, "invalid region length bounds");
  const RegionKind kind = classify(bounds);
  validate_version(config.version, kind);
  const std::optional<HopDistance> cut_bound =
      bounds.max_len ? std::optional<HopDistance>(bounds.min_len - 1)
                     : std::nullopt;

  HeuristicSolution best;
  best.component_solutions.assign(config.version.size() + 1, 0);
  RandomStream rng(config.seed);
  auto start = Clock::now();

  do {
    ++best.iterations;
    std::vector<std::vector<EdgeId>> paths;
    std::vector<std::vector<EdgeId>> cuts;
    std::vector<EdgeId> used;
    bool aborted = false;

    for (char letter : config.version) {
      bool grown = false;
      for (int attempt = 0; attempt < config.max_tries && !grown; ++attempt) {
        if (letter == 'P') {
          auto p = generate_path(net, s, t, bounds.min_len, *bounds.max_len,
                                 used, rng);
          if (p) {
            used.insert(used.end(), p->begin(), p->end());
            paths.push_back(std::move(*p));
            grown = true;
          }
        } else {
          auto c = generate_cutset(net, s, t, cut_bound, used, rng);
          if (c) {
            used.insert(used.end(), c->begin(), c->end());
            cuts.push_back(std::move(*c));
            grown = true;
          }
        }
      }
      if (!grown) {
        aborted = true;
        break;
      }
      size_t components = paths.size() + cuts.size();
      if (components >= 2) ++best.component_solutions[components];
      double score = score_solution(net, paths, cuts, kind);
      if (score > best.probability) {
        best.probability = score;
        best.pathsets = paths;
        best.cutsets = cuts;
        best.improvements.push_back(score);
      }
    }
    (void)aborted;
  } while (seconds_since(start) < config.max_time_seconds);

  return best;
}

RegionBounds region_bounds_for(const RegionSpec& spec, int region) {
  validate_region_spec(spec);
  if (region < 0 || region >= spec.region_count())
    throw Error(Error::Category::validation,
                "region " + std::to_string(region) + " out of range");
  RegionBounds bounds;
  bounds.min_len =
      region == 0 ? 1 : spec.thresholds[static_cast<size_t>(region) - 1] + 1;
  if (region < spec.last_region())
    bounds.max_len = spec.thresholds[static_cast<size_t>(region)];
  return bounds;
}

}  // namespace hopmc
