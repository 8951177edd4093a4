#pragma once

#include <cmath>
#include <numbers>

#include "mlf/ml/eval.hpp"
#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"
#include "mlf/numerics/quadrature.hpp"

namespace mlf {

/// Space order alpha in (0, 2], time order beta in (0, 1], diffusion constant D (or eta).
struct DiffusionParams {
  double alpha = 2.0;
  double beta = 1.0;
  double D_or_eta = 1.0;
};

namespace detail {

inline void check_diffusion(const DiffusionParams& d, double t) {
  require(d.alpha > 0.0 && d.alpha <= 2.0, "diffusion: alpha must be in (0, 2]");
  require(d.beta > 0.0 && d.beta <= 1.0, "diffusion: beta must be in (0, 1]");
  require(d.D_or_eta > 0.0, "diffusion: D must be positive");
  require(t > 0.0, "diffusion: t must be positive");
}

}  // namespace detail

/// Fourier symbol E_beta(-D |k|^alpha t^beta) of the fractional reaction-diffusion Green function.
inline double diffusion_symbol(const DiffusionParams& d, double k, double t) {
  detail::check_diffusion(d, t);
  const double u = d.D_or_eta * std::pow(std::abs(k), d.alpha) * std::pow(t, d.beta);
  if (d.beta == 1.0) return std::exp(-u);
  return ml_eval(MLParams{d.beta, 1.0, 1.0}, -u).value.real();
}

/// (1/pi) int_0^inf cos(k x) E_beta(-D k^alpha t^beta) dk with its quadrature error.
inline QuadResult<double> frd_green_report(const DiffusionParams& d, double x, double t,
                                           const QuadSpec& spec = {1e-11, 1e-10, 2000, 1e4}) {
  detail::check_diffusion(d, t);
  // Rescale k so the symbol decays on a unit scale.
  const double s = std::pow(d.D_or_eta * std::pow(t, d.beta), -1.0 / d.alpha);
  DiffusionParams unit = d;
  unit.D_or_eta = 1.0;
  auto r = integrate_cosine([&](double k) { return diffusion_symbol(unit, k, 1.0); }, x * s, spec);
  r.value *= s / std::numbers::pi;
  r.abs_err *= s / std::numbers::pi;
  return r;
}

/// Fractional reaction-diffusion Green function; throws when the quadrature fails.
inline double frd_green(const DiffusionParams& d, double x, double t) {
  const auto r = frd_green_report(d, x, t);
  if (!r.converged) throw convergence_error("frd_green", "cosine quadrature did not converge");
  return r.value;
}

/// Time-fractional diffusion (alpha = 2): Fourier symbol E_beta(-D k^2 t^beta).
inline double tfd_green(const DiffusionParams& d, double x, double t) {
  detail::require(d.alpha == 2.0, "tfd_green: alpha must be 2");
  return frd_green(d, x, t);
}

/// Space-fractional diffusion (beta = 1): Fourier symbol exp(-eta |k|^alpha t).
inline double sfd_green(const DiffusionParams& d, double x, double t) {
  detail::require(d.beta == 1.0, "sfd_green: beta must be 1");
  return frd_green(d, x, t);
}

/// Leading-order mass of the Green function on |x| > X when alpha < 2. From the small-k
/// behaviour 1 - A |k|^alpha of the symbol the density decays like
/// A Gamma(1 + alpha) sin(pi alpha / 2) / pi |x|^{-1-alpha}. Returns 0 for alpha = 2.
inline double green_tail_mass(const DiffusionParams& d, double X, double t) {
  detail::check_diffusion(d, t);
  detail::require(X > 0.0, "green_tail_mass: X must be positive");
  if (d.alpha == 2.0) return 0.0;
  const double A = d.D_or_eta * std::pow(t, d.beta) * rgamma(1.0 + d.beta);
  const double C = A * gamma_fn(1.0 + d.alpha) * std::sin(0.5 * std::numbers::pi * d.alpha) / std::numbers::pi;
  return 2.0 * C / (d.alpha * std::pow(X, d.alpha));
}

/// H_alpha(k) = (2/pi) int_0^inf E_{2 alpha}(-t^2) cos(k t) dt, 0 < alpha < 1.
inline double berberan_h(double alpha, double k) {
  detail::require(alpha > 0.0 && alpha < 1.0, "berberan_h: alpha must be in (0, 1)");
  detail::require(k >= 0.0, "berberan_h: k must be non-negative");
  const MLParams p{2.0 * alpha, 1.0, 1.0};
  QuadSpec spec{1e-11, 1e-10, 2000, 1e4};
  auto r = integrate_cosine([&](double t) { return ml_eval(p, -t * t).value.real(); }, k, spec);
  if (!r.converged) throw convergence_error("berberan_h", "cosine quadrature did not converge");
  return 2.0 / std::numbers::pi * r.value;
}

}  // namespace mlf
