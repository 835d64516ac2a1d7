#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace bcast {

/// Seeded random stream used by every stochastic component.
///
/// The mt19937_64 engine is specified bit-exactly by the standard; all
/// variate mappings are done here instead of through std::*_distribution
/// (whose output is implementation-defined), so a seed pins the exact
/// sequence of draws on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Exponential waiting time; rate must be > 0.
  double exponential(double rate) {
    assert(rate > 0.0);
    return -std::log1p(-uniform()) / rate;
  }

  /// Index drawn proportionally to nonnegative weights with the given total.
  std::size_t pick(std::span<const double> weights, double total) {
    assert(total > 0.0 && !weights.empty());
    double u = uniform() * total;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      last_positive = i;
      u -= weights[i];
      if (u < 0.0) return i;
    }
    // Round-off leftovers land on the last positive weight.
    return last_positive;
  }

  /// Uniform integer in [0, bound) via rejection-free scaling.
  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound)) %
           bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bcast
