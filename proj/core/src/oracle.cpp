#include "hopmc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hopmc {

namespace {

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

double dot_ascending(std::span<const double> weights, std::span<const double> values) {
  std::vector<double> terms(weights.size());
  for (size_t i = 0; i < terms.size(); ++i) terms[i] = weights[i] * values[i];
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

ExactResult enumerate_core(const Network& net, const RegionSpec& spec,
                           const EdgeSetFamilies* fams, int cap) {
  validate_region_spec(spec);
  const int m = net.edge_count();
  if (m > cap)
    throw TooManyEdges("exhaustive enumeration over " + std::to_string(m) +
                       " edges refused (cap " + std::to_string(cap) + ")");

  const int regions = spec.region_count();
  std::vector<Kahan> p(static_cast<size_t>(regions));
  std::vector<Kahan> z(static_cast<size_t>(regions));
  Configuration x(m);
  BfsScratch scratch;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double pr = 1.0;
    for (int e = 0; e < m; ++e) {
      bool up = (mask >> e) & 1;
      x.set(e, up);
      pr *= up ? net.edge(e).reliability : 1.0 - net.edge(e).reliability;
    }
    int region = region_of(max_terminal_distance(net, x, scratch), spec);
    p[static_cast<size_t>(region)].add(pr);
    if (fams) {
      std::optional<int> pinned = pinned_region(*fams, x);
      if (pinned) {
        if (*pinned != region)
          throw Error(Error::Category::validation,
                      "a pinning event of region " + std::to_string(*pinned) +
                          " fired on a configuration of region " +
                          std::to_string(region));
        z[static_cast<size_t>(*pinned)].add(pr);
      }
    }
  }

  ExactResult out;
  out.p.resize(static_cast<size_t>(regions));
  for (int i = 0; i < regions; ++i) out.p[static_cast<size_t>(i)] = p[static_cast<size_t>(i)].sum;
  out.expected_phi = dot_ascending(out.p, spec.phi_values);
  if (fams) {
    out.z.emplace(static_cast<size_t>(regions));
    for (int i = 0; i < regions; ++i)
      (*out.z)[static_cast<size_t>(i)] = z[static_cast<size_t>(i)].sum;
  }
  return out;
}

}  // namespace

ExactResult enumerate_exact(const Network& net, const RegionSpec& spec, int cap) {
  return enumerate_core(net, spec, nullptr, cap);
}

ExactResult enumerate_exact(const Network& net, const RegionSpec& spec,
                            const EdgeSetFamilies& fams, int cap) {
  return enumerate_core(net, spec, &fams, cap);
}

std::vector<double> enumerate_z(const Network& net, const EdgeSetFamilies& fams,
                                const RegionSpec& spec, int cap) {
  validate_region_spec(spec);
  const int n = static_cast<int>(fams.omega.size());
  if (n > cap)
    throw OmegaTooLarge("the families touch " + std::to_string(n) +
                        " edges; direct event enumeration handles at most " +
                        std::to_string(cap));
  const int regions = fams.region_count();
  std::vector<Kahan> z(static_cast<size_t>(regions));
  Configuration x(net.edge_count());  // non-family edges never matter
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double pr = 1.0;
    for (int j = 0; j < n; ++j) {
      bool up = (mask >> j) & 1;
      EdgeId e = fams.omega[static_cast<size_t>(j)];
      x.set(e, up);
      pr *= up ? net.edge(e).reliability : 1.0 - net.edge(e).reliability;
    }
    std::optional<int> pinned = pinned_region(fams, x);
    if (pinned) z[static_cast<size_t>(*pinned)].add(pr);
  }
  std::vector<double> out(static_cast<size_t>(regions));
  for (int i = 0; i < regions; ++i) out[static_cast<size_t>(i)] = z[static_cast<size_t>(i)].sum;
  return out;
}

}  // namespace hopmc
