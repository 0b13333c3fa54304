#ifndef HOPMC_REGION_HPP
#define HOPMC_REGION_HPP

#include <vector>

#include "hopmc/graph.hpp"
#include "hopmc/rng.hpp"

namespace hopmc {

// Distance regions and the value attached to each.
//
// Thresholds d_0 < d_1 < ... < d_{r-1} (all >= 1) split the possible values
// of the largest terminal-pair distance into r+1 regions:
//   region 0: (0, d_0],  region i: (d_{i-1}, d_i],  region r: (d_{r-1}, inf]
// The last region contains the disconnected state. phi_values[i] is the
// value the metric takes on region i; expected value over random edge
// failures is what the estimators compute.
struct RegionSpec {
  std::vector<HopDistance> thresholds;
  std::vector<double> phi_values;

  int region_count() const { return static_cast<int>(thresholds.size()) + 1; }
  int last_region() const { return static_cast<int>(thresholds.size()); }
};

// Throws InvalidRegionSpec unless thresholds are strictly increasing
// positive and phi_values has exactly one more entry than thresholds.
void validate_region_spec(const RegionSpec& spec);

// Region index of a distance value; delta must be >= 1 (a network has at
// least two distinct terminals, so distance 0 never occurs) or kUnreachable.
int region_of(HopDistance delta, const RegionSpec& spec);

// Metric value of a configuration: phi_values[region_of(max terminal distance)].
double phi_of(const Network& net, const Configuration& x, const RegionSpec& spec);
double phi_of(const Network& net, const Configuration& x, const RegionSpec& spec,
              BfsScratch& scratch);

// Independent Bernoulli draw of every edge state (edge e up with its own
// reliability), consuming exactly one uniform per edge, in edge-id order.
void sample_configuration(const Network& net, RandomStream& rng, Configuration& out);
Configuration sample_configuration(const Network& net, RandomStream& rng);

}  // namespace hopmc

#endif
