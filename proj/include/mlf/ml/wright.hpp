#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mlf/ml/series.hpp"
#include "mlf/ml/types.hpp"
#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"

namespace mlf {

/// Wright function phi(a, b; z) = sum z^r / (r! Gamma(a r + b)), a > -1.
inline EvalReport wright_phi(double a, double b, cplx z, double tol = 1e-15) {
  detail::require(a > -1.0, "wright_phi: a must exceed -1");
  detail::SeriesOptions opt;
  opt.tol = tol;
  opt.max_terms = 5000;
  opt.regime = "wright_phi";
  return detail::power_series(
      z,
      [&](int r) {
        const double x = a * r + b;
        if (is_nonpositive_integer(x)) return detail::LogCoef{0.0, 0};
        int sg;
        const double l = lgamma_abs(x, &sg);
        return detail::LogCoef{-lgamma_abs(r + 1.0) - l, sg};
      },
      opt);
}

/// Generalized Wright function pPsi_q:
/// sum_r prod Gamma(a_j + A_j r) / prod Gamma(b_j + B_j r) z^r / r!.
/// Needs Delta = sum B - sum A > -1, or Delta = -1 with |z| below the convergence radius.
inline EvalReport wright_psi(const WrightParams& w, cplx z, double tol = 1e-15) {
  double sa = 0.0, sb = 0.0, lrad = 0.0;
  for (auto [a, A] : w.upper) {
    detail::require(A > 0.0, "wright_psi: upper A_j must be positive");
    sa += A;
    lrad -= A * std::log(A);
  }
  for (auto [b, B] : w.lower) {
    detail::require(B > 0.0, "wright_psi: lower B_j must be positive");
    sb += B;
    lrad += B * std::log(B);
  }
  const double delta = sb - sa;
  detail::SeriesOptions opt;
  opt.tol = tol;
  opt.max_terms = 5000;
  opt.regime = "wright_psi";
  const double dtol = 1e-12;
  if (delta < -1.0 - dtol) throw domain_error("wright_psi: series diverges (Delta < -1)");
  if (std::abs(delta + 1.0) <= dtol) {
    const double radius = std::exp(lrad);
    if (std::abs(z) >= radius) throw domain_error("wright_psi: |z| outside the convergence disk");
    opt.ratio_limit = std::abs(z) / radius;
  }
  for (auto [a, A] : w.upper) {
    // A pole of an upper Gamma can only occur at the start of the series.
    for (int r = 0; r < 64; ++r)
      if (is_nonpositive_integer(a + A * r)) throw pole_error("wright_psi: upper Gamma argument at a pole");
  }
  return detail::power_series(
      z,
      [&](int r) {
        double l = -lgamma_abs(r + 1.0);
        int sign = 1;
        for (auto [a, A] : w.upper) {
          const double x = a + A * r;
          if (is_nonpositive_integer(x)) throw pole_error("wright_psi: upper Gamma argument at a pole");
          int sg;
          l += lgamma_abs(x, &sg);
          sign *= sg;
        }
        for (auto [b, B] : w.lower) {
          const double x = b + B * r;
          if (is_nonpositive_integer(x)) return detail::LogCoef{0.0, 0};
          int sg;
          l -= lgamma_abs(x, &sg);
          sign *= sg;
        }
        return detail::LogCoef{l, sign};
      },
      opt);
}

/// M-series sum prod (a_j)_r / prod (b_j)_r z^r / Gamma(alpha r + 1), alpha > 0.
/// p <= q converges everywhere. p = q + 1 needs alpha >= 1 and is accepted inside the unit disk;
/// p > q + 1 is rejected.
inline EvalReport m_series(const std::vector<double>& a, const std::vector<double>& b, double alpha,
                           cplx z, double tol = 1e-15) {
  detail::require(alpha > 0.0, "m_series: alpha must be positive");
  const size_t p = a.size(), q = b.size();
  if (p > q + 1) throw domain_error("m_series: p > q + 1 diverges");
  for (double bj : b)
    if (is_nonpositive_integer(bj)) throw pole_error("m_series: lower parameter at a non-positive integer");
  detail::SeriesOptions opt;
  opt.tol = tol;
  opt.max_terms = 5000;
  opt.regime = "m_series";
  if (p == q + 1) {
    // the terms grow like r!^{1 - alpha}
    if (alpha < 1.0 && z != 0.0) throw domain_error("m_series: p = q + 1 diverges for alpha < 1");
    if (std::abs(z) >= 1.0) throw domain_error("m_series: p = q + 1 needs |z| < 1");
    opt.ratio_limit = std::abs(z);
  }
  // Pochhammer ratios are accumulated term by term so terminating series stay exact.
  double lpoch = 0.0;
  int spoch = 1;
  int last = -1;
  return detail::power_series(
      z,
      [&](int r) {
        while (last < r - 1) {
          ++last;
          for (double aj : a) {
            const double v = aj + last;
            if (v == 0.0) spoch = 0;
            else {
              lpoch += std::log(std::abs(v));
              if (v < 0) spoch = -spoch;
            }
          }
          for (double bj : b) {
            const double v = bj + last;
            lpoch -= std::log(std::abs(v));
            if (v < 0) spoch = -spoch;
          }
        }
        if (spoch == 0) return detail::LogCoef{0.0, 0, true};
        int sg;
        const double l = lgamma_abs(alpha * r + 1.0, &sg);
        return detail::LogCoef{lpoch - l, spoch * sg};
      },
      opt);
}

}  // namespace mlf
