#ifndef HOPMC_ORACLE_HPP
#define HOPMC_ORACLE_HPP

#include <optional>
#include <vector>

#include "hopmc/edge_sets.hpp"
#include "hopmc/events.hpp"
#include "hopmc/graph.hpp"
#include "hopmc/region.hpp"

namespace hopmc {

// Exhaustive ground truth for small instances.
struct ExactResult {
  double expected_phi = 0.0;
  std::vector<double> p;                       // exact region probabilities
  std::optional<std::vector<double>> z;        // when families were supplied
};

inline constexpr int kDefaultEnumerationCap = 22;

// Walks all 2^m edge configurations, scoring each by BFS, and accumulates
// exact region probabilities (compensated summation; sums hold to ~1e-15).
// With families it also accumulates exact z_i and cross-checks that every
// pinned configuration lies in the region its event claims. Throws
// TooManyEdges above the cap.
ExactResult enumerate_exact(const Network& net, const RegionSpec& spec,
                            int cap = kDefaultEnumerationCap);
ExactResult enumerate_exact(const Network& net, const RegionSpec& spec,
                            const EdgeSetFamilies& fams,
                            int cap = kDefaultEnumerationCap);

// Exact z_i by enumerating only the 2^|omega| states of the family edges
// (the pinning events depend on nothing else). Independent of the
// factorized product formulas, so the two routes cross-check each other.
// Throws OmegaTooLarge above the cap.
std::vector<double> enumerate_z(const Network& net, const EdgeSetFamilies& fams,
                                const RegionSpec& spec, int cap = kDefaultTableCap);

}  // namespace hopmc

#endif
