#include "hopmc/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

namespace hopmc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Streaming mean/M2 (Welford); merge is Chan's pairwise update, applied in
// worker order so results are reproducible.
struct Welford {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Welford& b) {
    if (b.n == 0) return;
    if (n == 0) {
      *this = b;
      return;
    }
    double delta = b.mean - mean;
    std::uint64_t total = n + b.n;
    mean += delta * (static_cast<double>(b.n) / static_cast<double>(total));
    m2 += b.m2 + delta * delta *
                     (static_cast<double>(n) * static_cast<double>(b.n) /
                      static_cast<double>(total));
    n = total;
  }

  double sample_variance() const {
    return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  }
};

struct WorkerResult {
  Welford acc;
  std::vector<std::uint64_t> counts;
  std::exception_ptr error;
};

// Runs `body(worker, draws, result)` across the workers, splitting `samples`
// evenly (earlier workers take the remainder), and merges in worker order.
template <typename Body>
void run_workers(std::uint64_t samples, int workers, int regions, Body body,
                 Welford& acc, std::vector<std::uint64_t>& counts) {
  const std::uint64_t base = samples / static_cast<std::uint64_t>(workers);
  const std::uint64_t extra = samples % static_cast<std::uint64_t>(workers);
  std::vector<WorkerResult> results(static_cast<size_t>(workers));
  for (auto& r : results) r.counts.assign(static_cast<size_t>(regions), 0);

  auto task = [&](int w) {
    WorkerResult& r = results[static_cast<size_t>(w)];
    std::uint64_t draws = base + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    try {
      body(w, draws, r);
    } catch (...) {
      r.error = std::current_exception();
    }
  };

  if (workers == 1) {
    task(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(task, w);
    for (auto& t : threads) t.join();
  }

  for (const auto& r : results)
    if (r.error) std::rethrow_exception(r.error);
  counts.assign(static_cast<size_t>(regions), 0);
  for (const auto& r : results) {
    acc.merge(r.acc);
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += r.counts[i];
  }
}

}  // namespace

EstimateReport crude_estimate(const Network& net, const RegionSpec& spec,
                              std::uint64_t samples, std::uint64_t seed,
                              int workers) {
  validate_region_spec(spec);
  workers = std::max(workers, 1);
  EstimateReport rep;
  rep.method = "crude";
  rep.sample_size = samples;
  rep.seed = seed;
  rep.workers = workers;

  auto start = Clock::now();
  Welford acc;
  run_workers(
      samples, workers, spec.region_count(),
      [&](int w, std::uint64_t draws, WorkerResult& r) {
        RandomStream rng(seed, static_cast<std::uint32_t>(w));
        Configuration x(net.edge_count());
        BfsScratch scratch;
        for (std::uint64_t i = 0; i < draws; ++i) {
          sample_configuration(net, rng, x);
          int region = region_of(max_terminal_distance(net, x, scratch), spec);
          ++r.counts[static_cast<size_t>(region)];
          r.acc.add(spec.phi_values[static_cast<size_t>(region)]);
        }
      },
      acc, rep.per_region_counts);
  rep.sampling_seconds = seconds_since(start);

  rep.point_estimate = acc.mean;
  rep.variance_of_estimator =
      samples > 0 ? acc.sample_variance() / static_cast<double>(samples) : 0.0;
  return rep;
}

ConditionedSampler::ConditionedSampler(const Network& net,
                                       const EdgeSetFamilies& fams,
                                       const RegionSpec& spec,
                                       std::optional<SamplingMode> mode,
                                       int table_cap)
    : net_(&net), fams_(&fams) {
  validate_region_spec(spec);
  if (static_cast<size_t>(fams.region_count()) != spec.phi_values.size())
    throw Error(Error::Category::validation,
                "family region count does not match the region spec");
  mode_ = mode.value_or(static_cast<int>(fams.omega.size()) <= table_cap
                            ? SamplingMode::table
                            : SamplingMode::sequential);
  if (mode_ == SamplingMode::table) {
    table_ = std::make_shared<SubConfigTable>(
        build_subconfig_table(net, fams, table_cap));
    probs_.z_per_region = table_->z_per_region;
    probs_.z = table_->z;
    std::vector<double> terms(probs_.z_per_region.size());
    for (size_t i = 0; i < terms.size(); ++i)
      terms[i] = spec.phi_values[i] * probs_.z_per_region[i];
    std::sort(terms.begin(), terms.end(), [](double a, double b) {
      return std::fabs(a) < std::fabs(b);
    });
    probs_.phi_offset = 0.0;
    for (double t : terms) probs_.phi_offset += t;
  } else {
    probs_ = total_z_and_phi(net, fams, spec);
  }
  in_omega_.assign(static_cast<size_t>(net.edge_count()), 0);
  for (EdgeId e : fams.omega) in_omega_[static_cast<size_t>(e)] = 1;
  fixings_tls_.assign(static_cast<size_t>(net.edge_count()), -1);
}

std::uint64_t ConditionedSampler::sample(RandomStream& rng,
                                         Configuration& out) const {
  const Network& net = *net_;
  out.up.assign(static_cast<size_t>(net.edge_count()), 0);
  const std::vector<EdgeId>& om = fams_->omega;

  std::uint64_t mask = 0;
  if (mode_ == SamplingMode::table) {
    mask = table_->pick(rng.uniform());
    for (size_t j = 0; j < om.size(); ++j)
      out.set(om[j], (mask >> j) & 1);
  } else {
    for (EdgeId e : om) fixings_tls_[static_cast<size_t>(e)] = -1;
    for (size_t j = 0; j < om.size(); ++j) {
      EdgeId e = om[j];
      double p = conditional_up_probability(net, *fams_, fixings_tls_, e);
      bool up = rng.bernoulli(p);
      fixings_tls_[static_cast<size_t>(e)] = up ? 1 : 0;
      out.set(e, up);
      if (up) mask |= std::uint64_t{1} << j;
    }
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (in_omega_[static_cast<size_t>(e)]) continue;
    out.set(e, rng.bernoulli(net.edge(e).reliability));
  }
  return mask;
}

EstimateReport conditioned_estimate(const Network& net, const RegionSpec& spec,
                                    const EdgeSetFamilies& fams,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers, std::optional<SamplingMode> mode,
                                    int table_cap) {
  workers = std::max(workers, 1);
  EstimateReport rep;
  rep.sample_size = samples;
  rep.seed = seed;
  rep.workers = workers;

  auto setup_start = Clock::now();
  ConditionedSampler sampler(net, fams, spec, mode, table_cap);
  rep.setup_seconds = seconds_since(setup_start);
  rep.method = sampler.mode() == SamplingMode::table ? "conditioned(table)"
                                                     : "conditioned(sequential)";
  rep.z_per_region = sampler.probabilities().z_per_region;
  rep.z = sampler.probabilities().z;
  rep.phi_offset = sampler.probabilities().phi_offset;
  if (fams.empty())
    rep.warnings.push_back(
        "families are empty: conditioning excludes nothing, so this run is "
        "plain Monte Carlo");

  auto start = Clock::now();
  Welford acc;
  run_workers(
      samples, workers, spec.region_count(),
      [&](int w, std::uint64_t draws, WorkerResult& r) {
        RandomStream rng(seed, static_cast<std::uint32_t>(w));
        ConditionedSampler local = sampler;  // private scratch per worker
        Configuration x(net.edge_count());
        BfsScratch scratch;
        for (std::uint64_t i = 0; i < draws; ++i) {
          local.sample(rng, x);
          int region = region_of(max_terminal_distance(net, x, scratch), spec);
          ++r.counts[static_cast<size_t>(region)];
          r.acc.add(spec.phi_values[static_cast<size_t>(region)]);
        }
      },
      acc, rep.per_region_counts);
  rep.sampling_seconds = seconds_since(start);

  double remaining = 1.0 - rep.z;
  rep.point_estimate = remaining * acc.mean + rep.phi_offset;
  rep.variance_of_estimator =
      samples > 0 ? remaining * remaining * acc.sample_variance() /
                        static_cast<double>(samples)
                  : 0.0;
  return rep;
}

TheoreticalVariances theoretical_variances(std::span<const double> p,
                                           std::span<const double> z,
                                           std::span<const double> phi) {
  if (p.size() != z.size() || p.size() != phi.size())
    throw Error(Error::Category::validation,
                "p, z and phi must have one entry per region");
  for (size_t i = 0; i < p.size(); ++i)
    if (z[i] > p[i] + 1e-12)
      throw Error(Error::Category::validation,
                  "z[" + std::to_string(i) + "] exceeds p[" + std::to_string(i) +
                      "]: a pinning event cannot outweigh its region");

  double a2 = 0.0, a1 = 0.0, t = 0.0, b1 = 0.0, sz = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    a2 += phi[i] * phi[i] * p[i];
    a1 += phi[i] * p[i];
    t += phi[i] * phi[i] * (p[i] - z[i]);
    b1 += phi[i] * z[i];
    sz += z[i];
  }
  TheoreticalVariances out;
  out.crude_single = a2 - a1 * a1;
  double centered = a1 - b1;
  out.conditioned_single = std::max(0.0, (1.0 - sz) * t - centered * centered);
  return out;
}

double variance_difference(std::span<const double> p, std::span<const double> z,
                           std::span<const double> phi) {
  if (p.size() != z.size() || p.size() != phi.size())
    throw Error(Error::Category::validation,
                "p, z and phi must have one entry per region");
  double total = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    double unpinned = std::max(0.0, p[i] - z[i]);
    for (size_t j = 0; j < p.size(); ++j) {
      double d = phi[i] - phi[j];
      total += d * d * unpinned * z[j];
      if (i < j) total += d * d * z[i] * z[j];
    }
  }
  return total;
}

double relative_efficiency(const EstimateReport& crude,
                           const EstimateReport& conditioned) {
  double variance_ratio =
      crude.variance_of_estimator / conditioned.variance_of_estimator;
  double crude_time = crude.sampling_seconds + crude.setup_seconds;
  double cond_time = conditioned.sampling_seconds + conditioned.setup_seconds;
  return variance_ratio * (crude_time / cond_time);
}

}  // namespace hopmc
