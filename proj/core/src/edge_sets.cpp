#include "hopmc/edge_sets.hpp"

#include <algorithm>
#include <set>

namespace hopmc {

namespace {

void check_member(const Network& net, const std::vector<EdgeId>& member,
                  const char* kind, int region, size_t index) {
  std::string where = std::string(kind) + " " + std::to_string(index) +
                      " of region " + std::to_string(region);
  if (member.empty())
    throw Error(Error::Category::validation, where + " is empty");
  std::vector<EdgeId> sorted = member;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Error::Category::validation, where + " repeats an edge id");
  for (EdgeId e : member)
    if (e < 0 || e >= net.edge_count())
      throw Error(Error::Category::validation,
                  where + " names edge " + std::to_string(e) +
                      " outside the network");
}

}  // namespace

bool validate_pathset(const Network& net, std::span<const EdgeId> pathset,
                      std::optional<HopDistance> d) {
  return is_d_connected(net, pathset, d);
}

bool validate_cutset(const Network& net, std::span<const EdgeId> cutset,
                     std::optional<HopDistance> d) {
  Configuration x = full_configuration(net);
  for (EdgeId e : cutset) x.set(e, false);
  return !is_d_connected(net, x, d);
}

EdgeSetFamilies build_families(const Network& net, const RegionSpec& spec,
                               const std::vector<RegionFamily>& raw,
                               bool require_disjoint) {
  validate_region_spec(spec);
  if (raw.size() != static_cast<size_t>(spec.region_count()))
    throw Error(Error::Category::validation,
                "expected one family per region (" +
                    std::to_string(spec.region_count()) + "), got " +
                    std::to_string(raw.size()));

  const int last = spec.last_region();
  EdgeSetFamilies out;
  out.regions = raw;
  out.region_disjoint.assign(raw.size(), 1);

  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    const RegionFamily& fam = raw[static_cast<size_t>(i)];
    for (size_t j = 0; j < fam.pathsets.size(); ++j) {
      check_member(net, fam.pathsets[j], "pathset", i, j);
      if (i == last)
        throw InvalidPathset("the last region cannot carry pathsets");
      HopDistance bound = spec.thresholds[static_cast<size_t>(i)];
      if (!validate_pathset(net, fam.pathsets[j], bound))
        throw InvalidPathset("pathset " + std::to_string(j) + " of region " +
                             std::to_string(i) +
                             " does not keep the terminals within " +
                             std::to_string(bound) + " hops");
    }
    for (size_t j = 0; j < fam.cutsets.size(); ++j) {
      check_member(net, fam.cutsets[j], "cutset", i, j);
      if (i == 0)
        throw InvalidCutset("the first region cannot carry cutsets");
      std::optional<HopDistance> bound;
      if (i != last) bound = spec.thresholds[static_cast<size_t>(i) - 1];
      if (!validate_cutset(net, fam.cutsets[j], bound))
        throw InvalidCutset(
            "cutset " + std::to_string(j) + " of region " + std::to_string(i) +
            (bound ? " does not push the terminals beyond " +
                         std::to_string(*bound) + " hops"
                   : " does not disconnect the terminals"));
    }
  }

  std::set<EdgeId> omega;
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    const RegionFamily& fam = raw[static_cast<size_t>(i)];
    std::set<EdgeId> seen;
    bool disjoint = true;
    std::string detail;
    auto absorb = [&](const std::vector<EdgeId>& member) {
      for (EdgeId e : member) {
        omega.insert(e);
        if (!seen.insert(e).second && disjoint) {
          disjoint = false;
          detail = "region " + std::to_string(i) + " uses edge " +
                   std::to_string(e) + " in more than one set";
        }
      }
    };
    for (const auto& ps : fam.pathsets) absorb(ps);
    for (const auto& cs : fam.cutsets) absorb(cs);
    if (!disjoint) {
      if (require_disjoint) throw OverlapWithinRegion(detail);
      out.region_disjoint[static_cast<size_t>(i)] = 0;
      out.all_disjoint = false;
      if (out.overlap_detail.empty()) out.overlap_detail = detail;
    }
  }
  out.omega.assign(omega.begin(), omega.end());
  return out;
}

}  // namespace hopmc
