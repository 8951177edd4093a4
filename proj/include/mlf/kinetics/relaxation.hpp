#pragma once

#include <cmath>
#include <limits>

#include "mlf/ml/prabhakar.hpp"
#include "mlf/numerics/errors.hpp"

namespace mlf {

/// Time orders alpha > beta, damping a, diffusion nu2, nonlinearity zeta2, space order gamma_x.
struct WaveParams {
  double alpha = 1.0;
  double beta = 0.5;
  double a = 0.0;
  double nu2 = 1.0;
  double zeta2 = 0.0;
  double gamma_x = 2.0;
};

struct RelaxResult {
  double value = 0.0;
  double abs_err = 0.0;
  int terms = 0;
};

namespace detail {

// t^{alpha-rho} sum_r c^r t^{q r} E^{r+1}_{A, alpha - rho + 1 + q r}(Z), summed until the terms
// stay below double precision.
inline RelaxResult relax_series(double alpha, double rho, double t, double c, double q, double A, double Z,
                                int n_terms) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double step = c * std::pow(t, q);
  RelaxResult out;
  double sum = 0.0, round = 0.0, fac = 1.0, prev = std::numeric_limits<double>::infinity();
  int small = 0;
  for (int r = 0; r < n_terms; ++r) {
    const auto e = ml_prabhakar(MLParams{A, alpha - rho + 1.0 + q * r, r + 1.0}, Z);
    const double term = fac * e.value.real();
    sum += term;
    round += std::abs(fac) * e.abs_err + eps * std::abs(term);
    out.terms = r + 1;
    const double mag = std::abs(term);
    if (r > n_terms / 2 && mag > prev) throw convergence_error("three_term_relax", "terms grow");
    if (c == 0.0) break;
    if (mag <= 1e-17 * std::abs(sum) + 1e-300) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
    prev = mag;
    fac *= step;
    if (r + 1 == n_terms) throw convergence_error("three_term_relax", "term budget exhausted");
  }
  const double scale = std::pow(t, alpha - rho);
  out.value = scale * sum;
  out.abs_err = scale * (round + (c == 0.0 ? 0.0 : 3.0 * prev));
  return out;
}

// Rough count of terms before x^r / Gamma(q r + 1) drops below 1e-17.
inline int relax_terms_needed(double x, double q) {
  if (x == 0.0) return 1;
  const double lx = std::log(std::abs(x));
  for (int r = 1; r < 100000; ++r)
    if (std::lgamma(q * r + 1.0) - r * lx > 40.0) return r;
  return 100000;
}

}  // namespace detail

/// Inverse Laplace transform of s^{rho-1} / (s^alpha + a s^beta + b). Two expansions are used:
/// in powers of a, t^{alpha-rho} sum_r (-a)^r t^{(alpha-beta) r} E^{r+1}_{alpha, alpha + (alpha-beta) r - rho + 1}(-b t^alpha),
/// and in powers of b, t^{alpha-rho} sum_k (-b)^k t^{alpha k} E^{k+1}_{alpha-beta, alpha (k+1) - rho + 1}(-a t^{alpha-beta}).
/// The one needing fewer terms runs first and the other is the fallback.
inline RelaxResult three_term_relax_report(const WaveParams& w, double b, double rho, double t,
                                           int n_terms = 200) {
  detail::require(w.alpha > w.beta && w.beta >= 0.0, "three_term_relax: need alpha > beta >= 0");
  detail::require(t > 0.0, "three_term_relax: t must be positive");
  detail::require(n_terms >= 2, "three_term_relax: n_terms must be at least 2");
  const double d = w.alpha - w.beta;
  auto in_a = [&] { return detail::relax_series(w.alpha, rho, t, -w.a, d, w.alpha, -b * std::pow(t, w.alpha), n_terms); };
  auto in_b = [&] { return detail::relax_series(w.alpha, rho, t, -b, w.alpha, d, -w.a * std::pow(t, d), n_terms); };
  const bool a_first = detail::relax_terms_needed(w.a * std::pow(t, d), d) <=
                       detail::relax_terms_needed(b * std::pow(t, w.alpha), w.alpha);
  try {
    return a_first ? in_a() : in_b();
  } catch (const convergence_error&) {
    return a_first ? in_b() : in_a();
  }
}

inline double three_term_relax(const WaveParams& w, double b, double rho, double t, int n_terms = 200) {
  return three_term_relax_report(w, b, rho, t, n_terms).value;
}

/// Fourier-mode amplitude for delta initial data with zero forcing: the inverse transform of
/// (s^{alpha-1} + a s^{beta-1}) / (s^alpha + a s^beta + b), b = nu2 |k|^gamma_x - zeta2.
inline double wave_mode(const WaveParams& w, double k, double t, int n_terms = 200) {
  detail::require(w.gamma_x > 0.0 && w.gamma_x <= 2.0, "wave_mode: gamma_x must be in (0, 2]");
  const double b = w.nu2 * std::pow(std::abs(k), w.gamma_x) - w.zeta2;
  const double first = three_term_relax(w, b, w.alpha, t, n_terms);
  if (w.a == 0.0) return first;
  return first + w.a * three_term_relax(w, b, w.beta, t, n_terms);
}

}  // namespace mlf
