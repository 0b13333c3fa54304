#ifndef HOPMC_EVENTS_HPP
#define HOPMC_EVENTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hopmc/edge_sets.hpp"
#include "hopmc/graph.hpp"
#include "hopmc/region.hpp"

namespace hopmc {

// Per-region pinning probabilities z_i = Pr(region i's sets pin the
// configuration), their sum z, and the offset phi = sum_i phi_i * z_i that
// the conditioned estimator adds back.
struct EventProbabilities {
  std::vector<double> z_per_region;
  double z = 0.0;
  double phi_offset = 0.0;
};

inline constexpr int kDefaultTableCap = 24;

// Edge-state fixings: one entry per edge, -1 unknown, 0 forced down,
// 1 forced up. An empty span means nothing is fixed.
using Fixings = std::span<const std::int8_t>;

// Probability that region i's pinning event occurs, given fixings.
// Factorized over the region's pairwise disjoint sets:
//   Pr(T_i) = 1 - prod_P (1 - prod_{e in P} q_e)
//   Pr(K_i) = 1 - prod_C (1 - prod_{e in C} (1 - q_e))
// with q_e the reliability, or the fixed 0/1 state. Interior regions
// combine both factors; the first region uses only T, the last only K.
// Throws FamilyNotDisjoint if region i's sets overlap.
double region_event_prob(const Network& net, const EdgeSetFamilies& fams,
                         int region, Fixings fixings = {});

// All z_i (factorized), their sum (accumulated in ascending magnitude), and
// the phi offset. Throws DegenerateFamilies if z reaches 1 (nothing left to
// sample).
EventProbabilities total_z_and_phi(const Network& net, const EdgeSetFamilies& fams,
                                   const RegionSpec& spec);

// Chain-rule conditional for sequential sampling: probability that `edge` is
// up given the already-fixed edges, conditioned on the configuration
// avoiding every pinning event. Throws ZeroConditional if the conditioning
// probability underflows (the fixings already force a pinning event).
double conditional_up_probability(const Network& net, const EdgeSetFamilies& fams,
                                  Fixings fixings, EdgeId edge);

// Exhaustive conditional law over the states of omega's edges.
//
// Entry k of `cumulative` is the total probability mass of sub-configurations
// 0..k (in omega-bit order: bit j of the index is the state of omega[j]),
// counting only those that avoid every pinning event. Pinned sub-
// configurations contribute zero, so a cut-point search over the array
// samples exactly the conditional distribution; total_mass = 1 - z.
struct SubConfigTable {
  std::vector<EdgeId> omega;
  std::vector<double> cumulative;
  double total_mass = 1.0;
  std::vector<double> z_per_region;  // exact, from the same enumeration
  double z = 0.0;

  // Sub-configuration index for a uniform draw u in [0,1).
  std::uint64_t pick(double u) const;
};

// Builds the table by enumerating all 2^|omega| sub-configurations (works
// for overlapping families too). Throws OmegaTooLarge beyond the cap and
// DegenerateFamilies when no mass remains.
SubConfigTable build_subconfig_table(const Network& net, const EdgeSetFamilies& fams,
                                     int cap = kDefaultTableCap);

// Direct event evaluation on a full configuration: the region whose pinning
// event holds, or nullopt. (The events are pairwise disjoint by
// construction: a pathset up bounds the distance inside the region while a
// cutset down bounds it away from lower regions.)
std::optional<int> pinned_region(const EdgeSetFamilies& fams, const Configuration& x);

}  // namespace hopmc

#endif
