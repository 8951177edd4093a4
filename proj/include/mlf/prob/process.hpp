#pragma once

#include <cmath>
#include <vector>

#include "mlf/ml/prabhakar.hpp"
#include "mlf/numerics/quadrature.hpp"
#include "mlf/numerics/random.hpp"
#include "mlf/prob/distributions.hpp"

namespace mlf {

/// [1 + a (q - 1) t^alpha]^{-eta / (q - 1)}; tends to exp(-a eta t^alpha) as q -> 1+.
inline double pathway_laplace(const DistParams& p, double t) {
  detail::require(p.q > 1.0, "pathway_laplace: q must exceed 1");
  detail::require(p.alpha > 0.0 && p.eta > 0.0 && p.a > 0.0, "pathway_laplace: alpha, eta, a must be positive");
  detail::require(t > 0.0, "pathway_laplace: t must be positive");
  const double qm = p.q - 1.0;
  return std::exp(-p.eta / qm * std::log1p(p.a * qm * std::pow(t, p.alpha)));
}

/// Linnik characteristic function 1 / (1 + |t|^alpha), 0 < alpha <= 2.
inline double linnik_cf(double alpha, double t) {
  detail::require(alpha > 0.0 && alpha <= 2.0, "linnik_cf: alpha must be in (0, 2]");
  return 1.0 / (1.0 + std::pow(std::abs(t), alpha));
}

/// Density of the ML process at time t: x^{alpha t - 1} E^t_{alpha, alpha t}(-x^alpha).
inline double mlp_density(double alpha, double t, double x) {
  detail::check_ml_alpha(alpha);
  detail::require(t > 0.0, "mlp_density: t must be positive");
  detail::require(x > 0.0, "mlp_density: x must be positive");
  const double u = std::pow(x, alpha);
  const double e = ml_prabhakar(MLParams{alpha, alpha * t, t}, -u).value.real();
  return std::exp((alpha * t - 1.0) * std::log(x)) * e;
}

namespace detail {

// Series x^{alpha t} E^t_{alpha, alpha t + 1}(-x^alpha) of the process CDF.
// Returns false when the alternating sum loses more than 1e8 to cancellation.
inline bool mlp_cdf_series(double alpha, double t, double x, double& out) {
  const double u = std::pow(x, alpha);
  const MLParams p{alpha, alpha * t + 1.0, t};
  double abs_sum;
  try {
    abs_sum = prabhakar_series(p, u).value.real();
  } catch (const convergence_error&) {
    return false;
  }
  const double s = prabhakar_series(p, -u).value.real();
  if (!(std::abs(s) > 0.0) || abs_sum / std::abs(s) > 1e8) return false;
  out = std::pow(u, t) * s;
  return true;
}

}  // namespace detail

/// CDF of the ML process at time t. Uses the series when it is well conditioned, otherwise
/// the series value at x = 1 plus quadrature of mlp_density over [1, x].
inline double mlp_cdf(double alpha, double t, double x) {
  detail::check_ml_alpha(alpha);
  detail::require(t > 0.0, "mlp_cdf: t must be positive");
  if (x <= 0.0) return 0.0;
  double v;
  if (detail::mlp_cdf_series(alpha, t, x, v)) return v;
  double base;
  if (!detail::mlp_cdf_series(alpha, t, 1.0, base))
    throw convergence_error("mlp_cdf", "series ill-conditioned at x = 1");
  auto pts = detail::geometric_breaks(1.0, x, 1.0);
  QuadSpec spec;
  spec.abs_tol = 1e-13;
  auto q = integrate_breaks([&](double s) { return mlp_density(alpha, t, s); }, pts, spec);
  if (!q.converged) throw convergence_error("mlp_cdf", "density quadrature did not converge");
  return base + q.value;
}

/// MLAR(1): x_n = e_n with probability p, else e_n + a x_{n-1}; x_0 is an ML draw.
/// Innovations are 0 with probability a^alpha and ML(alpha) otherwise, which keeps the ML(alpha)
/// marginal stationary when p = 0. With p > 0 the same innovations are used and the marginal
/// is not guaranteed to be ML.
inline std::vector<double> mlar1_simulate(double alpha, double a, double p, size_t n, RandomStream& rng) {
  detail::check_ml_alpha(alpha);
  detail::require(a >= 0.0 && a < 1.0, "mlar1_simulate: a must be in [0, 1)");
  detail::require(p >= 0.0 && p <= 1.0, "mlar1_simulate: p must be in [0, 1]");
  const double zero_prob = std::pow(a, alpha);
  std::vector<double> xs;
  xs.reserve(n);
  double x = ml_sample(alpha, rng);
  for (size_t i = 0; i < n; ++i) {
    const double e = rng.uniform() < zero_prob ? 0.0 : ml_sample(alpha, rng);
    const bool restart = p > 0.0 && rng.uniform() < p;
    x = restart ? e : e + a * x;
    xs.push_back(x);
  }
  return xs;
}

}  // namespace mlf
