#include "hopmc/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace hopmc {

Network::Network(int node_count, std::vector<Edge> edges,
                 std::vector<NodeId> terminals)
    : node_count_(node_count),
      edges_(std::move(edges)),
      terminals_(std::move(terminals)) {
  if (node_count_ <= 0)
    throw InvalidNetwork("node count must be positive, got " +
                         std::to_string(node_count_));
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.a < 0 || e.a >= node_count_ || e.b < 0 || e.b >= node_count_)
      throw InvalidNetwork("edge " + std::to_string(i) + " endpoint out of range");
    if (e.a == e.b)
      throw InvalidNetwork("edge " + std::to_string(i) + " is a self-loop");
    if (!(e.reliability > 0.0) || !(e.reliability < 1.0))
      throw InvalidNetwork("edge " + std::to_string(i) +
                           " reliability must lie strictly between 0 and 1");
  }
  if (terminals_.size() < 2)
    throw InvalidNetwork("need at least two terminals, got " +
                         std::to_string(terminals_.size()));
  std::unordered_set<NodeId> seen;
  for (NodeId t : terminals_) {
    if (t < 0 || t >= node_count_)
      throw InvalidNetwork("terminal " + std::to_string(t) + " out of range");
    if (!seen.insert(t).second)
      throw InvalidNetwork("terminal " + std::to_string(t) + " listed twice");
  }

  arc_start_.assign(static_cast<size_t>(node_count_) + 1, 0);
  for (const Edge& e : edges_) {
    ++arc_start_[static_cast<size_t>(e.a) + 1];
    ++arc_start_[static_cast<size_t>(e.b) + 1];
  }
  for (size_t v = 1; v < arc_start_.size(); ++v) arc_start_[v] += arc_start_[v - 1];
  arcs_.resize(2 * edges_.size());
  std::vector<int> cursor(arc_start_.begin(), arc_start_.end() - 1);
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    EdgeId id = static_cast<EdgeId>(i);
    arcs_[static_cast<size_t>(cursor[static_cast<size_t>(e.a)]++)] = {e.b, id};
    arcs_[static_cast<size_t>(cursor[static_cast<size_t>(e.b)]++)] = {e.a, id};
  }
}

Configuration full_configuration(const Network& net) {
  Configuration x(net.edge_count());
  std::fill(x.up.begin(), x.up.end(), 1);
  return x;
}

Configuration configuration_from_subset(const Network& net,
                                        std::span<const EdgeId> subset) {
  Configuration x(net.edge_count());
  for (EdgeId e : subset) x.set(e, true);
  return x;
}

void bfs_distances(const Network& net, const Configuration& x, NodeId source,
                   BfsScratch& scratch) {
  scratch.dist.assign(static_cast<size_t>(net.node_count()), kUnreachable);
  scratch.queue.clear();
  scratch.dist[static_cast<size_t>(source)] = 0;
  scratch.queue.push_back(source);
  for (size_t head = 0; head < scratch.queue.size(); ++head) {
    NodeId v = scratch.queue[head];
    HopDistance dv = scratch.dist[static_cast<size_t>(v)];
    for (const Network::Arc& arc : net.arcs(v)) {
      if (!x.is_up(arc.edge)) continue;
      if (scratch.dist[static_cast<size_t>(arc.to)] != kUnreachable) continue;
      scratch.dist[static_cast<size_t>(arc.to)] = dv + 1;
      scratch.queue.push_back(arc.to);
    }
  }
}

std::vector<HopDistance> bfs_distances(const Network& net, const Configuration& x,
                                       NodeId source) {
  BfsScratch scratch;
  bfs_distances(net, x, source, scratch);
  return std::move(scratch.dist);
}

HopDistance max_terminal_distance(const Network& net, const Configuration& x,
                                  BfsScratch& scratch) {
  // BFS from all terminals but the last; every pair gets covered once.
  HopDistance worst = 0;
  const std::vector<NodeId>& ks = net.terminals();
  for (size_t i = 0; i + 1 < ks.size(); ++i) {
    bfs_distances(net, x, ks[i], scratch);
    for (size_t j = i + 1; j < ks.size(); ++j) {
      HopDistance d = scratch.dist[static_cast<size_t>(ks[j])];
      if (d == kUnreachable) return kUnreachable;
      worst = std::max(worst, d);
    }
  }
  return worst;
}

HopDistance max_terminal_distance(const Network& net, const Configuration& x) {
  BfsScratch scratch;
  return max_terminal_distance(net, x, scratch);
}

bool is_d_connected(const Network& net, const Configuration& active,
                    std::optional<HopDistance> d) {
  HopDistance delta = max_terminal_distance(net, active);
  if (delta == kUnreachable) return false;
  return !d || delta <= *d;
}

bool is_d_connected(const Network& net, std::span<const EdgeId> active_subset,
                    std::optional<HopDistance> d) {
  return is_d_connected(net, configuration_from_subset(net, active_subset), d);
}

}  // namespace hopmc
