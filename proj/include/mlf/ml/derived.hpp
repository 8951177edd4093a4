#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "mlf/ml/eval.hpp"
#include "mlf/ml/prabhakar.hpp"
#include "mlf/ml/series.hpp"
#include "mlf/numerics/gamma.hpp"

namespace mlf {

enum class DerivativeRoute { automatic, series, recurrence, prabhakar };

/// m-th derivative of E_{alpha,beta}(z).
/// series: termwise; recurrence: [E_{alpha,beta-1} - (beta-1) E_{alpha,beta}] / (alpha z), m = 1;
/// prabhakar: m! E^{m+1}_{alpha, beta + m alpha}.
inline EvalReport ml_derivative(const MLParams& p, cplx z, int m = 1,
                                DerivativeRoute route = DerivativeRoute::automatic,
                                const EvalOptions& opt = {}) {
  detail::require(p.alpha > 0.0, "ml_derivative: alpha must be positive");
  detail::require(m >= 0, "ml_derivative: order must be non-negative");
  if (m == 0) return ml_eval(p, z, opt);
  if (route == DerivativeRoute::automatic) {
    const auto other = m == 1 && z != 0.0 ? DerivativeRoute::recurrence : DerivativeRoute::prabhakar;
    if (std::abs(z) > opt.series_radius) return ml_derivative(p, z, m, other, opt);
    // the differentiated series cancels badly for negative z of moderate size
    EvalReport s;
    try {
      s = ml_derivative(p, z, m, DerivativeRoute::series, opt);
    } catch (const convergence_error&) {
      if (z == 0.0) throw;
      return ml_derivative(p, z, m, other, opt);
    }
    if (detail::accurate(s, opt.tol) || z == 0.0) return s;
    const EvalReport o = ml_derivative(p, z, m, other, opt);
    return o.abs_err < s.abs_err ? o : s;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  switch (route) {
    case DerivativeRoute::series: {
      detail::SeriesOptions so;
      so.tol = 0.1 * opt.tol;
      so.regime = "ml_derivative";
      return detail::power_series(
          z,
          [&](int j) {
            const double x = p.beta + p.alpha * (j + m);
            if (is_nonpositive_integer(x)) return detail::LogCoef{0.0, 0};
            int sg;
            const double l = lgamma_abs(x, &sg);
            return detail::LogCoef{lgamma_abs(j + m + 1.0) - lgamma_abs(j + 1.0) - l, sg};
          },
          so);
    }
    case DerivativeRoute::recurrence: {
      detail::require(m == 1, "ml_derivative: the recurrence route gives the first derivative only");
      detail::require(z != 0.0, "ml_derivative: the recurrence route needs z != 0");
      const EvalReport a = ml_eval(MLParams{p.alpha, p.beta - 1.0, 1.0}, z, opt);
      const EvalReport b = ml_eval(p, z, opt);
      EvalReport r;
      r.method = b.method;
      r.value = (a.value - (p.beta - 1.0) * b.value) / (p.alpha * z);
      r.abs_err = (a.abs_err + std::abs(p.beta - 1.0) * b.abs_err) / (p.alpha * std::abs(z)) +
                  4 * eps * (std::abs(a.value) + std::abs((p.beta - 1.0) * b.value)) /
                      (p.alpha * std::abs(z));
      r.terms = a.terms + b.terms;
      return r;
    }
    case DerivativeRoute::prabhakar:
    default: {
      EvalReport r = ml_prabhakar(MLParams{p.alpha, p.beta + m * p.alpha, m + 1.0}, z, opt);
      const double f = std::exp(lgamma_abs(m + 1.0));
      r.value *= f;
      r.abs_err *= f;
      return r;
    }
  }
}

/// E_{alpha,beta}(z) minus the first r terms of its series.
inline EvalReport ml_shift(const MLParams& p, cplx z, int r, const EvalOptions& opt = {}) {
  detail::require(r >= 0, "ml_shift: r must be non-negative");
  EvalReport e = ml_eval(p, z, opt);
  cplx zn = 1.0;
  double absum = 0.0;
  for (int n = 0; n < r; ++n) {
    const cplx t = zn * rgamma(p.beta + n * p.alpha);
    e.value -= t;
    absum += std::abs(t);
    zn *= z;
  }
  e.abs_err += 4 * std::numeric_limits<double>::epsilon() * absum;
  return e;
}

/// e^z [1 + sum_{r=1}^{n-1} gamma(1 - r/n, z) / Gamma(1 - r/n)], z >= 0, which equals
/// E_{1/n}(z^{1/n}).
inline double ml_rational_identity(int n, double z) {
  detail::require(n >= 1, "ml_rational_identity: n must be a positive integer");
  detail::require(z >= 0.0, "ml_rational_identity: z must be non-negative");
  if (z > 709.0) throw overflow_error("ml_rational_identity: e^z overflows");
  double s = 1.0;
  for (int r = 1; r < n; ++r) {
    const double a = 1.0 - double(r) / n;
    s += lower_inc_gamma(a, z) / gamma_fn(a);
  }
  return std::exp(z) * s;
}

}  // namespace mlf
