#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "mlf/numerics/errors.hpp"

namespace mlf {

struct TalbotResult {
  double value = 0.0;
  double abs_err = 0.0;  // |f_N - f_2N|
  bool consistent = true;
};

namespace detail {

// Optimized cotangent contour (Weideman and Trefethen):
// s(theta) = shift + (N/t) (-0.6122 + 0.5017 theta cot(0.6407 theta) + 0.2645 i theta).
template <class F>
double talbot_sum(F& image, double t, int nodes, double shift) {
  constexpr double sig = -0.6122, mu = 0.5017, a = 0.6407, nu = 0.2645;
  const double h = 2.0 * std::numbers::pi / nodes;
  const double scale = nodes / t;
  std::complex<double> acc = 0.0;
  // Conjugate symmetry: sum the upper half of the contour and double the real part.
  for (int k = 0; k < nodes / 2; ++k) {
    const double th = (k + 0.5) * h;
    const double ct = std::cos(a * th) / std::sin(a * th);
    const double st = std::sin(a * th);
    const std::complex<double> s(shift + scale * (sig + mu * th * ct), scale * nu * th);
    const std::complex<double> ds(scale * mu * (ct - a * th / (st * st)), scale * nu);
    acc += std::exp(s * t) * std::complex<double>(image(s)) * ds;
  }
  // f(t) = (1/(2 pi i)) sum h e^{st} F(s) s'(theta), summed over both halves.
  return 2.0 * (acc * h / std::complex<double>(0.0, 2.0 * std::numbers::pi)).real();
}

}  // namespace detail

/// Numerical inverse Laplace transform of `image` at t > 0.
/// The image must be analytic to the right of the contour (all singularities with real part
/// below `shift`). The sum is repeated with doubled nodes as a self-consistency check.
template <class F>
TalbotResult talbot_ilt(F&& image, double t, int nodes = 48, double shift = 0.0) {
  detail::require(t > 0.0, "talbot_ilt: t must be positive");
  detail::require(nodes >= 8 && nodes % 2 == 0, "talbot_ilt: nodes must be even and >= 8");
  TalbotResult r;
  r.value = detail::talbot_sum(image, t, nodes, shift);
  const double check = detail::talbot_sum(image, t, 2 * nodes, shift);
  r.abs_err = std::abs(r.value - check);
  if (!std::isfinite(r.value)) throw convergence_error("talbot", "non-finite result");
  r.consistent = r.abs_err <= 1e-7 * std::max(1.0, std::abs(r.value));
  return r;
}

}  // namespace mlf
