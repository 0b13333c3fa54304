#ifndef HOPMC_GENERATORS_HPP
#define HOPMC_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "hopmc/edge_sets.hpp"
#include "hopmc/graph.hpp"
#include "hopmc/region.hpp"

namespace hopmc {

// Node id of grid coordinate (x, y), both in [0, k).
inline NodeId grid_node(int k, int x, int y) { return x * k + y; }

// k x k square lattice: 2k(k-1) edges (all horizontal neighbours, then-
// interleaved vertical ones, row by row), every edge at `reliability`,
// terminals s and t.
Network generate_grid(int k, double reliability, NodeId s, NodeId t);

// Degree-proportional growth: each of `extra_nodes` new nodes attaches
// `edges_per_node` edges to distinct existing nodes chosen with probability
// proportional to their current degree. New edges get `reliability`;
// terminals are inherited from the base graph.
Network generate_preferential_extension(const Network& base, int extra_nodes,
                                        int edges_per_node, double reliability,
                                        std::uint64_t seed);

// Copies with replaced reliabilities: one value for every edge, or values
// drawn per edge from the triangular distribution on [low, high] with the
// given mode.
Network with_uniform_reliability(const Network& net, double r);
Network with_triangular_reliability(const Network& net, double low, double mode,
                                    double high, std::uint64_t seed);
double triangular_sample(double low, double mode, double high, double u01);

// Bundled 22-node / 32-edge telephone-backbone benchmark instance with
// terminals {4, 14}, every edge at reliability r_e, three distance
// thresholds (5, 7, 21) — "within 5 hops", "6-7", "above 7 but connected",
// "disconnected" — and the hand-made families that certify each region.
struct BenchmarkFixture {
  Network net;
  std::vector<HopDistance> thresholds;
  std::vector<RegionFamily> family_sets;

  RegionSpec regions(std::vector<double> fines) const;
};
BenchmarkFixture antel_fixture(double r_e = 0.9);

// The fine schedule the benchmark scenario attaches to each reliability
// level (keys 0.9, 0.95, 0.99).
std::vector<double> antel_fines(double r_e);

}  // namespace hopmc

#endif
