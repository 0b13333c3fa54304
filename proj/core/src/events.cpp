#include "hopmc/events.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace hopmc {

namespace {

// Edge state probability under fixings, with one optional extra override.
double edge_up_prob(const Network& net, Fixings fix, EdgeId e, EdgeId override_edge,
                    int override_state) {
  if (e == override_edge) return override_state;
  if (!fix.empty()) {
    std::int8_t f = fix[static_cast<size_t>(e)];
    if (f >= 0) return f;
  }
  return net.edge(e).reliability;
}

double region_prob(const Network& net, const EdgeSetFamilies& fams, int region,
                   Fixings fix, EdgeId override_edge, int override_state) {
  if (region < 0 || region >= fams.region_count())
    throw Error(Error::Category::validation,
                "region " + std::to_string(region) + " out of range");
  if (!fams.region_disjoint[static_cast<size_t>(region)])
    throw FamilyNotDisjoint("region " + std::to_string(region) +
                            " has overlapping sets; factorized probabilities "
                            "need pairwise disjoint sets");
  const RegionFamily& fam = fams.regions[static_cast<size_t>(region)];

  double some_path_up = 0.0;
  if (!fam.pathsets.empty()) {
    double all_miss = 1.0;
    for (const auto& ps : fam.pathsets) {
      double up = 1.0;
      for (EdgeId e : ps)
        up *= edge_up_prob(net, fix, e, override_edge, override_state);
      all_miss *= 1.0 - up;
    }
    some_path_up = 1.0 - all_miss;
  }

  double some_cut_down = 0.0;
  if (!fam.cutsets.empty()) {
    double all_live = 1.0;
    for (const auto& cs : fam.cutsets) {
      double down = 1.0;
      for (EdgeId e : cs)
        down *= 1.0 - edge_up_prob(net, fix, e, override_edge, override_state);
      all_live *= 1.0 - down;
    }
    some_cut_down = 1.0 - all_live;
  }

  if (region == 0) return some_path_up;
  if (region == fams.region_count() - 1) return some_cut_down;
  return some_path_up * some_cut_down;
}

double sum_ascending(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

}  // namespace

double region_event_prob(const Network& net, const EdgeSetFamilies& fams,
                         int region, Fixings fixings) {
  return region_prob(net, fams, region, fixings, -1, 0);
}

EventProbabilities total_z_and_phi(const Network& net, const EdgeSetFamilies& fams,
                                   const RegionSpec& spec) {
  if (static_cast<size_t>(fams.region_count()) != spec.phi_values.size())
    throw Error(Error::Category::validation,
                "family region count does not match the region spec");
  EventProbabilities out;
  out.z_per_region.resize(static_cast<size_t>(fams.region_count()));
  for (int i = 0; i < fams.region_count(); ++i)
    out.z_per_region[static_cast<size_t>(i)] = region_event_prob(net, fams, i);
  out.z = sum_ascending(out.z_per_region);
  if (out.z >= 1.0)
    throw DegenerateFamilies(
        "the pinning events cover the whole configuration space");
  std::vector<double> terms(out.z_per_region.size());
  for (size_t i = 0; i < terms.size(); ++i)
    terms[i] = spec.phi_values[i] * out.z_per_region[i];
  out.phi_offset = sum_ascending(std::move(terms));
  return out;
}

double conditional_up_probability(const Network& net, const EdgeSetFamilies& fams,
                                  Fixings fixings, EdgeId edge) {
  double pinned_now = 0.0;
  double pinned_if_up = 0.0;
  for (int i = 0; i < fams.region_count(); ++i) {
    pinned_now += region_prob(net, fams, i, fixings, -1, 0);
    pinned_if_up += region_prob(net, fams, i, fixings, edge, 1);
  }
  double denominator = 1.0 - pinned_now;
  if (!(denominator > 0.0))
    throw ZeroConditional(
        "the fixed edges already force a pinning event; nothing remains to "
        "sample");
  double p = net.edge(edge).reliability * (1.0 - pinned_if_up) / denominator;
  return std::clamp(p, 0.0, 1.0);
}

std::uint64_t SubConfigTable::pick(double u) const {
  double target = u * total_mass;
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
  if (it == cumulative.end()) {
    // u rounded up to the full mass: take the last live sub-configuration
    size_t k = cumulative.size() - 1;
    while (k > 0 && cumulative[k] <= cumulative[k - 1]) --k;
    return k;
  }
  return static_cast<std::uint64_t>(it - cumulative.begin());
}

SubConfigTable build_subconfig_table(const Network& net, const EdgeSetFamilies& fams,
                                     int cap) {
  SubConfigTable tab;
  tab.omega = fams.omega;
  const int n = static_cast<int>(tab.omega.size());
  if (n > cap)
    throw OmegaTooLarge("the families touch " + std::to_string(n) +
                        " edges; the sub-configuration table handles at most " +
                        std::to_string(cap));
  (void)net;

  const size_t size = size_t{1} << n;
  // Position masks of every set over omega bits, grouped by region.
  const int regions = fams.region_count();
  std::vector<std::vector<std::uint64_t>> path_masks(
      static_cast<size_t>(regions));
  std::vector<std::vector<std::uint64_t>> cut_masks(static_cast<size_t>(regions));
  auto bit_of = [&](EdgeId e) {
    auto it = std::lower_bound(tab.omega.begin(), tab.omega.end(), e);
    return static_cast<int>(it - tab.omega.begin());
  };
  for (int i = 0; i < regions; ++i) {
    for (const auto& ps : fams.regions[static_cast<size_t>(i)].pathsets) {
      std::uint64_t m = 0;
      for (EdgeId e : ps) m |= std::uint64_t{1} << bit_of(e);
      path_masks[static_cast<size_t>(i)].push_back(m);
    }
    for (const auto& cs : fams.regions[static_cast<size_t>(i)].cutsets) {
      std::uint64_t m = 0;
      for (EdgeId e : cs) m |= std::uint64_t{1} << bit_of(e);
      cut_masks[static_cast<size_t>(i)].push_back(m);
    }
  }
  const int last = regions - 1;
  auto pinned_by = [&](std::uint64_t mask) -> int {
    for (int i = 0; i < regions; ++i) {
      bool path_up = false;
      for (std::uint64_t m : path_masks[static_cast<size_t>(i)])
        if ((mask & m) == m) {
          path_up = true;
          break;
        }
      bool cut_down = false;
      for (std::uint64_t m : cut_masks[static_cast<size_t>(i)])
        if ((mask & m) == 0) {
          cut_down = true;
          break;
        }
      bool hit = i == 0 ? path_up : i == last ? cut_down : path_up && cut_down;
      if (hit) return i;
    }
    return -1;
  };

  // Mass of every omega pattern by incremental products from the all-down base.
  std::vector<double> ratio(static_cast<size_t>(n));
  double base = 1.0;
  for (int j = 0; j < n; ++j) {
    double r = net.edge(tab.omega[static_cast<size_t>(j)]).reliability;
    ratio[static_cast<size_t>(j)] = r / (1.0 - r);
    base *= 1.0 - r;
  }
  tab.cumulative.resize(size);
  tab.cumulative[0] = base;
  for (size_t mask = 1; mask < size; ++mask) {
    size_t low = mask & (~mask + 1);
    int b = std::countr_zero(mask);
    tab.cumulative[mask] = tab.cumulative[mask ^ low] * ratio[static_cast<size_t>(b)];
  }

  // Zero the pinned patterns (collecting exact z per region), then turn the
  // mass array into its Kahan running sum in place.
  tab.z_per_region.assign(static_cast<size_t>(regions), 0.0);
  std::vector<double> z_comp(static_cast<size_t>(regions), 0.0);
  for (size_t mask = 0; mask < size; ++mask) {
    int region = pinned_by(mask);
    if (region < 0) continue;
    double y = tab.cumulative[mask] - z_comp[static_cast<size_t>(region)];
    double t = tab.z_per_region[static_cast<size_t>(region)] + y;
    z_comp[static_cast<size_t>(region)] =
        (t - tab.z_per_region[static_cast<size_t>(region)]) - y;
    tab.z_per_region[static_cast<size_t>(region)] = t;
    tab.cumulative[mask] = 0.0;
  }
  double running = 0.0;
  double comp = 0.0;
  for (size_t mask = 0; mask < size; ++mask) {
    double y = tab.cumulative[mask] - comp;
    double t = running + y;
    comp = (t - running) - y;
    running = t;
    tab.cumulative[mask] = running;
  }
  tab.total_mass = running;
  {
    std::vector<double> zs = tab.z_per_region;
    std::sort(zs.begin(), zs.end());
    double z = 0.0;
    for (double v : zs) z += v;
    tab.z = z;
  }
  if (!(tab.total_mass > 0.0))
    throw DegenerateFamilies(
        "the pinning events absorb all probability mass; nothing remains to "
        "sample");
  return tab;
}

std::optional<int> pinned_region(const EdgeSetFamilies& fams,
                                 const Configuration& x) {
  const int last = fams.region_count() - 1;
  for (int i = 0; i <= last; ++i) {
    const RegionFamily& fam = fams.regions[static_cast<size_t>(i)];
    bool path_up = false;
    for (const auto& ps : fam.pathsets) {
      bool all = true;
      for (EdgeId e : ps) all = all && x.is_up(e);
      if (all) {
        path_up = true;
        break;
      }
    }
    bool cut_down = false;
    for (const auto& cs : fam.cutsets) {
      bool all = true;
      for (EdgeId e : cs) all = all && !x.is_up(e);
      if (all) {
        cut_down = true;
        break;
      }
    }
    bool hit = i == 0 ? path_up : i == last ? cut_down : path_up && cut_down;
    if (hit) return i;
  }
  return std::nullopt;
}

}  // namespace hopmc
