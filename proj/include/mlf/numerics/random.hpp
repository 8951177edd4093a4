#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "mlf/numerics/errors.hpp"

namespace mlf {

/// Seeded 64-bit stream of uniforms in the open interval (0, 1).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  double uniform() { return (double(eng_() >> 11) + 0.5) * 0x1.0p-53; }

  double exponential() { return -std::log(uniform()); }

  double normal() {
    // Marsaglia polar method, one value per call.
    for (;;) {
      const double u = 2.0 * uniform() - 1.0, v = 2.0 * uniform() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

  /// Gamma variate with the given shape and scale (Marsaglia-Tsang).
  double gamma(double shape, double scale = 1.0) {
    detail::require(shape > 0.0 && scale > 0.0, "gamma variate: shape and scale must be positive");
    if (shape < 1.0) return gamma(shape + 1.0, scale) * std::pow(uniform(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0, c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
  }

 private:
  std::mt19937_64 eng_;
};

/// One-sided alpha-stable draw with Laplace transform exp(-s^alpha), 0 < alpha <= 1
/// (Kanter's representation).
inline double stable_sample(RandomStream& rng, double alpha) {
  detail::require(alpha > 0.0 && alpha <= 1.0, "stable_sample: alpha must be in (0, 1]");
  if (alpha == 1.0) return 1.0;
  const double u = std::numbers::pi * rng.uniform();
  const double w = rng.exponential();
  const double a = std::sin(alpha * u) / std::pow(std::sin(u), 1.0 / alpha);
  const double b = std::pow(std::sin((1.0 - alpha) * u) / w, (1.0 - alpha) / alpha);
  return a * b;
}

}  // namespace mlf
