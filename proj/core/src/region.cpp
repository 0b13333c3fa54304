#include "hopmc/region.hpp"

#include <string>

namespace hopmc {

void validate_region_spec(const RegionSpec& spec) {
  if (spec.phi_values.size() != spec.thresholds.size() + 1)
    throw InvalidRegionSpec("need exactly one value per region: " +
                            std::to_string(spec.thresholds.size()) +
                            " thresholds require " +
                            std::to_string(spec.thresholds.size() + 1) +
                            " values, got " +
                            std::to_string(spec.phi_values.size()));
  for (size_t i = 0; i < spec.thresholds.size(); ++i) {
    if (spec.thresholds[i] < 1)
      throw InvalidRegionSpec("threshold " + std::to_string(spec.thresholds[i]) +
                              " must be at least 1");
    if (i > 0 && spec.thresholds[i] <= spec.thresholds[i - 1])
      throw InvalidRegionSpec("thresholds must be strictly increasing: " +
                              std::to_string(spec.thresholds[i - 1]) + " then " +
                              std::to_string(spec.thresholds[i]));
  }
}

int region_of(HopDistance delta, const RegionSpec& spec) {
  if (delta < 1)
    throw Error(Error::Category::validation,
                "distance " + std::to_string(delta) +
                    " outside every region (must be >= 1)");
  int lo = 0;
  int hi = static_cast<int>(spec.thresholds.size());
  // first region whose threshold covers delta; past all thresholds = last
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (delta <= spec.thresholds[static_cast<size_t>(mid)])
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

double phi_of(const Network& net, const Configuration& x, const RegionSpec& spec,
              BfsScratch& scratch) {
  int region = region_of(max_terminal_distance(net, x, scratch), spec);
  return spec.phi_values[static_cast<size_t>(region)];
}

double phi_of(const Network& net, const Configuration& x, const RegionSpec& spec) {
  BfsScratch scratch;
  return phi_of(net, x, spec, scratch);
}

void sample_configuration(const Network& net, RandomStream& rng, Configuration& out) {
  out.up.resize(static_cast<size_t>(net.edge_count()));
  for (int e = 0; e < net.edge_count(); ++e)
    out.up[static_cast<size_t>(e)] = rng.bernoulli(net.edge(e).reliability) ? 1 : 0;
}

Configuration sample_configuration(const Network& net, RandomStream& rng) {
  Configuration x(net.edge_count());
  sample_configuration(net, rng, x);
  return x;
}

}  // namespace hopmc
