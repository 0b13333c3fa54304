#ifndef HOPMC_HEURISTICS_HPP
#define HOPMC_HEURISTICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopmc/graph.hpp"
#include "hopmc/region.hpp"
#include "hopmc/rng.hpp"

namespace hopmc {

// Greedy randomized construction of pathset/cutset families for one region,
// two-terminal case.

struct HeuristicConfig {
  std::string version;          // letters over {P, C}, e.g. "PCPC"
  double max_time_seconds = 1;  // total budget for the restart loop
  int max_tries = 5;            // retries per component before aborting an iteration
  std::uint64_t seed = 1;
};

// Length window of one region, driving both generators:
//   paths must have length in [min_len, max_len];
//   cutsets are built at bound min_len-1 (or unbounded when max_len is
//   absent, i.e. the last region, whose cutsets disconnect the terminals).
// First region: min_len = 1 (all-P versions). Last region: no max_len
// (all-C versions).
struct RegionBounds {
  int min_len = 1;
  std::optional<int> max_len;
};

struct HeuristicSolution {
  std::vector<std::vector<EdgeId>> pathsets;
  std::vector<std::vector<EdgeId>> cutsets;
  double probability = 0.0;  // pinning probability of the recorded best
  // component_solutions[k] = number of solutions reaching k components
  // (indices 0 and 1 unused).
  std::vector<std::uint64_t> component_solutions;
  std::vector<double> improvements;  // best-so-far trace, strictly increasing
  std::uint64_t iterations = 0;
};

// Random walk biased toward the BFS shortest path, returning a simple s-t
// path whose length lies in [l1, l2], or nullopt when the walk dead-ends or
// overshoots. Edges in `forbidden` are unavailable. Each accepted step
// removes the chosen edge from the private working copy, so the result
// never repeats an edge.
std::optional<std::vector<EdgeId>> generate_path(const Network& net, NodeId s,
                                                 NodeId t, int l1, int l2,
                                                 std::span<const EdgeId> forbidden,
                                                 RandomStream& rng);

// Greedy cut construction: removes non-protected edges in increasing order
// of (randomly shaken) distance from s until no s-t path of length <= bound
// remains, then prunes to a minimal such cutset. Edges in `protected_edges`
// stay in the graph and never enter the cut; nullopt when they alone
// sustain a short path (no valid cutset exists) or when nothing needs
// cutting. No bound = disconnecting cutset.
std::optional<std::vector<EdgeId>> generate_cutset(const Network& net, NodeId s,
                                                   NodeId t,
                                                   std::optional<HopDistance> bound,
                                                   std::span<const EdgeId> protected_edges,
                                                   RandomStream& rng);

// Randomized perturbation used to diversify the cut order: one pass over all
// unordered index pairs in random order, swapping each visited pair (u, v)
// with probability 1 / (1 + |d_u - d_v|).
void shake_distances(std::vector<HopDistance>& d, RandomStream& rng);

// Restart loop: until the time budget runs out, build one solution following
// config.version letter by letter (P adds a path, C adds a cut), retrying
// each component up to max_tries and abandoning the iteration on failure.
// Every grown solution is scored by its factorized pinning probability
// (interior solutions score 0 until both kinds are present) and the best one
// is kept. Interior bounds demand a version starting "PC" containing only
// P/C; first region all-P; last region all-C.
HeuristicSolution run_region_heuristic(const Network& net, NodeId s, NodeId t,
                                       const RegionBounds& bounds,
                                       const HeuristicConfig& config);

// Bounds for region `i` of the spec, for wiring the heuristic per region.
RegionBounds region_bounds_for(const RegionSpec& spec, int region);

}  // namespace hopmc

#endif
