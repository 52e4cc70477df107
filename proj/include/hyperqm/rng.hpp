#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>

namespace hyperqm {

/// Seeded random stream built on std::mt19937_64 with hand-rolled
/// distributions, so that sequences are identical across standard-library
/// implementations. Independent streams are derived from a master seed
/// with `child()`, which hashes a label into the seed (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Exponential variate with the given rate (events per unit).
  double exponential(double rate) {
    if (rate <= 0.0) throw std::domain_error("exponential: rate must be > 0");
    return -std::log1p(-uniform()) / rate;
  }

  /// Poisson variate. Inversion by sequential search for small means,
  /// normal approximation above 1e3 where the discrete error is negligible.
  std::uint64_t poisson(double mean) {
    if (mean < 0.0) throw std::domain_error("poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean < 50.0) {
      const double limit = std::exp(-mean);
      std::uint64_t n = 0;
      double prod = uniform();
      while (prod > limit) {
        ++n;
        prod *= uniform();
      }
      return n;
    }
    if (mean < 1000.0) {
      // split recursively; keeps exact Poisson statistics
      const std::uint64_t a = poisson(mean / 2.0);
      return a + poisson(mean - mean / 2.0);
    }
    const double g = gaussian(mean, std::sqrt(mean));
    return g <= 0.0 ? 0 : static_cast<std::uint64_t>(std::llround(g));
  }

  double gaussian(double mean, double sigma) {
    // Box-Muller, one value per call (no cached spare, keeps stream simple)
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return mean + sigma * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Samples an index from unnormalized weights.
  std::size_t pick(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = uniform() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      x -= weights[i];
      if (x < 0.0) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  /// Derives an independent stream from this one's seed lineage.
  Rng child(std::string_view label) const {
    std::uint64_t h = seed_hash_;
    for (char c : label) h = splitmix(h ^ static_cast<std::uint64_t>(c));
    Rng r(h);
    r.seed_hash_ = h;
    return r;
  }

  Rng child(std::uint64_t index) const {
    const std::uint64_t h = splitmix(seed_hash_ ^ (0x9e3779b97f4a7c15ULL + index));
    Rng r(h);
    r.seed_hash_ = h;
    return r;
  }

  static Rng master(std::uint64_t seed) {
    Rng r(splitmix(seed));
    r.seed_hash_ = seed;
    return r;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
  std::uint64_t seed_hash_ = 0;
};

}  // namespace hyperqm
