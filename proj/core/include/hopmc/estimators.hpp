#ifndef HOPMC_ESTIMATORS_HPP
#define HOPMC_ESTIMATORS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopmc/edge_sets.hpp"
#include "hopmc/events.hpp"
#include "hopmc/graph.hpp"
#include "hopmc/region.hpp"
#include "hopmc/rng.hpp"

namespace hopmc {

enum class SamplingMode { table, sequential };

// Everything a finished estimation run reports.
struct EstimateReport {
  std::string method;  // "crude", "conditioned(table)", "conditioned(sequential)"
  double point_estimate = 0.0;
  double variance_of_estimator = 0.0;  // estimated Var of point_estimate
  std::uint64_t sample_size = 0;
  std::vector<std::uint64_t> per_region_counts;  // sampled draws per region
  // Conditioned runs only:
  std::vector<double> z_per_region;
  double z = 0.0;
  double phi_offset = 0.0;
  // Timing split: setup covers validation, z computation and table builds.
  double sampling_seconds = 0.0;
  double setup_seconds = 0.0;
  // Run metadata.
  std::uint64_t seed = 0;
  int workers = 1;
  std::vector<std::string> warnings;
};

// Plain Monte Carlo: N independent configurations, each scored by a BFS
// sweep over the terminals. Workers split N evenly (earlier workers take the
// remainder), each on substream (seed, worker); merging is deterministic, so
// identical (seed, workers) reproduces the estimate bit for bit.
EstimateReport crude_estimate(const Network& net, const RegionSpec& spec,
                              std::uint64_t samples, std::uint64_t seed,
                              int workers = 1);

// Conditioned Monte Carlo: draws avoid every configuration pinned by the
// families, and the estimator returns (1-z) * mean + phi_offset. The edges
// outside omega stay independent Bernoulli draws.
//
// mode: table enumerates the conditional law of omega's edges up front
// (tolerates overlapping sets within a region); sequential fixes omega's
// edges one by one through factorized conditionals (requires within-region
// disjointness). Default: table when |omega| <= table_cap, else sequential.
EstimateReport conditioned_estimate(const Network& net, const RegionSpec& spec,
                                    const EdgeSetFamilies& fams,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers = 1,
                                    std::optional<SamplingMode> mode = std::nullopt,
                                    int table_cap = kDefaultTableCap);

// The sampler behind conditioned_estimate, exposed so tests can inspect the
// drawn sub-configurations directly.
class ConditionedSampler {
 public:
  ConditionedSampler(const Network& net, const EdgeSetFamilies& fams,
                     const RegionSpec& spec, std::optional<SamplingMode> mode,
                     int table_cap = kDefaultTableCap);

  // Draws a configuration avoiding all pinning events; returns the omega
  // sub-configuration as a bit mask (bit j = state of omega()[j]).
  std::uint64_t sample(RandomStream& rng, Configuration& out) const;

  SamplingMode mode() const { return mode_; }
  const std::vector<EdgeId>& omega() const { return fams_->omega; }
  const EventProbabilities& probabilities() const { return probs_; }
  const SubConfigTable* table() const { return table_ ? table_.get() : nullptr; }

 private:
  const Network* net_;
  const EdgeSetFamilies* fams_;
  SamplingMode mode_;
  EventProbabilities probs_;
  std::shared_ptr<SubConfigTable> table_;         // table mode
  std::vector<char> in_omega_;                    // per edge
  mutable std::vector<std::int8_t> fixings_tls_;  // prototype scratch (all -1)
};

// Single-sample variances from exact region probabilities:
//   crude:        sum phi_i^2 p_i - (sum phi_i p_i)^2
//   conditioned:  (1-z) sum phi_i^2 (p_i - z_i) - (phibar - phi_offset)^2
// Rejects inputs where some z_i exceeds p_i (inconsistent by definition).
struct TheoreticalVariances {
  double crude_single = 0.0;
  double conditioned_single = 0.0;
};
TheoreticalVariances theoretical_variances(std::span<const double> p,
                                           std::span<const double> z,
                                           std::span<const double> phi);

// The variance reduction, evaluated as the explicitly nonnegative double
// summation
//   sum_{i,j} (phi_i - phi_j)^2 (p_i - z_i) z_j
//   + sum_{i<j} (phi_j - phi_i)^2 z_i z_j
// which equals crude_single - conditioned_single identically.
double variance_difference(std::span<const double> p, std::span<const double> z,
                           std::span<const double> phi);

// Speedup of conditioned over crude accounting for work: variance ratio
// times time ratio, where the conditioned time includes its setup.
double relative_efficiency(const EstimateReport& crude,
                           const EstimateReport& conditioned);

}  // namespace hopmc

#endif
