#ifndef HOPMC_RNG_HPP
#define HOPMC_RNG_HPP

#include <cstdint>
#include <random>

namespace hopmc {

// Seedable random stream with cheap derived substreams.
//
// Stream w of seed s is an mt19937_64 engine seeded through seed_seq from
// (s, w), so estimator workers get independent, reproducible streams: the
// same (seed, stream) always yields the same draw sequence, on any platform
// (all derived quantities below avoid implementation-defined std
// distributions).
class RandomStream {
 public:
  static constexpr const char* kEngineName = "mt19937_64/seed_seq(seed,stream)";

  explicit RandomStream(std::uint64_t seed, std::uint32_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32), stream,
                      0x9e3779b9u};
    engine_.seed(seq);
  }

  std::uint64_t raw() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform index in {0, ..., n-1}, n >= 1.
  std::uint32_t index(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hopmc

#endif
