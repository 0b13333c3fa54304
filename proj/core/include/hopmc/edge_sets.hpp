#ifndef HOPMC_EDGE_SETS_HPP
#define HOPMC_EDGE_SETS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopmc/graph.hpp"
#include "hopmc/region.hpp"

namespace hopmc {

// One region's certifying sets.
//
// A pathset with bound d "operates" when all its edges are up, which forces
// the maximal terminal distance to be at most d. A cutset with bound d
// "fails" when all its edges are down, which forces the distance above d
// (an unbounded cutset forces disconnection). Together they pin
// configurations into their region without running any graph search.
struct RegionFamily {
  std::vector<std::vector<EdgeId>> pathsets;
  std::vector<std::vector<EdgeId>> cutsets;
};

// Validated per-region families.
//
// For a spec with r thresholds: region i < r carries d_i-pathsets; region
// i >= 1 carries cutsets at bound d_{i-1}, except the last region whose
// cutsets are plain (connectivity) cutsets. The first region has no cutsets
// and the last no pathsets. Sets of the same region must be pairwise
// edge-disjoint for factorized probabilities; sharing across regions is fine.
struct EdgeSetFamilies {
  std::vector<RegionFamily> regions;  // size = region count (r+1)
  std::vector<EdgeId> omega;          // sorted distinct union of all member edges

  // Per-region pairwise disjointness, and the first offending pair found
  // (region, description) when some region overlaps.
  std::vector<char> region_disjoint;
  bool all_disjoint = true;
  std::string overlap_detail;

  int region_count() const { return static_cast<int>(regions.size()); }
  bool empty() const { return omega.empty(); }
};

// True iff the terminals are pairwise within distance d using only `pathset`
// edges (no bound = plain connectivity).
bool validate_pathset(const Network& net, std::span<const EdgeId> pathset,
                      std::optional<HopDistance> d);

// True iff removing `cutset` leaves some terminal pair at distance > d
// (no bound = disconnects some pair).
bool validate_cutset(const Network& net, std::span<const EdgeId> cutset,
                     std::optional<HopDistance> d);

// Validates every raw set against its region's bound and assembles the
// families. Throws InvalidPathset/InvalidCutset naming the offender, and
// OverlapWithinRegion when require_disjoint is set and two sets of one
// region share an edge. With require_disjoint=false the overlap is recorded
// in the result instead (the table sampling mode tolerates it; factorized
// probabilities will refuse to run on the overlapping region).
EdgeSetFamilies build_families(const Network& net, const RegionSpec& spec,
                               const std::vector<RegionFamily>& raw,
                               bool require_disjoint = false);

}  // namespace hopmc

#endif
