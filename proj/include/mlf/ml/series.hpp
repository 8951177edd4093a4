#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "mlf/ml/types.hpp"
#include "mlf/numerics/errors.hpp"

namespace mlf::detail {

/// Coefficient c_k of a power series, stored as log|c_k| and its sign (0 for c_k = 0).
struct LogCoef {
  double log_abs = 0.0;
  int sign = 0;
  bool last = false;  // every later coefficient is zero
};

struct SeriesOptions {
  double tol = 1e-15;
  int max_terms = 2000;
  int min_terms = 3;
  double ratio_limit = 0.0;  // lim |t_{k+1}/t_k|, when it is approached from below
  const char* regime = "series";
};

// Compensated complex accumulator.
struct KahanC {
  double re = 0, im = 0, cre = 0, cim = 0;
  static void add(double& s, double& c, double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  void add(cplx v) {
    add(re, cre, v.real());
    add(im, cim, v.imag());
  }
  cplx value() const { return {re + cre, im + cim}; }
};

/// Sums sum_k c_k z^k with coefficients from next(k), called for k = 0, 1, 2, ...
/// The tail after term k is bounded by |t_k| q / (1 - q) once the term ratios are below one
/// and no longer increasing; q is the larger of the current ratio and ratio_limit.
/// abs_err = 2 * tail bound + a rounding estimate.
template <class Gen>
EvalReport power_series(cplx z, Gen&& next, const SeriesOptions& opt = {}) {
  const double eps = std::numeric_limits<double>::epsilon();
  EvalReport rep;
  rep.method = Method::series;
  if (z == 0.0) {
    const LogCoef c = next(0);
    rep.value = c.sign == 0 ? 0.0 : c.sign * std::exp(c.log_abs);
    rep.abs_err = eps * std::abs(rep.value) * (2 + std::abs(c.log_abs));
    rep.terms = 1;
    return rep;
  }
  const double lz = std::log(std::abs(z)), th = std::arg(z);
  KahanC sum;
  double round = 0.0;
  double prev_mag = -1.0, prev_ratio = std::numeric_limits<double>::infinity();
  int prev_k = -1;
  for (int k = 0; k < opt.max_terms; ++k) {
    const LogCoef c = next(k);
    if (c.last) {
      rep.value = sum.value();
      rep.abs_err = round + eps * std::abs(rep.value);
      rep.terms = k;
      return rep;
    }
    if (c.sign == 0) continue;
    const double lm = c.log_abs + k * lz;
    if (lm > 700.0) throw convergence_error(opt.regime, "term overflow");
    const double mag = std::exp(lm);
    const double ph = k * th;
    sum.add(cplx(c.sign * mag * std::cos(ph), c.sign * mag * std::sin(ph)));
    round += mag * eps * (4.0 + 2.0 * std::abs(c.log_abs) + std::abs(k * lz) + std::abs(ph));
    if (prev_mag >= 0.0) {
      const double ratio =
          prev_mag > 0 ? std::pow(mag / prev_mag, 1.0 / (k - prev_k)) : (mag > 0 ? 1e300 : 0.0);
      const double q = std::max(ratio, opt.ratio_limit);
      const bool settled = ratio <= prev_ratio * (1 + 1e-12) || opt.ratio_limit > 0.0;
      if (k >= opt.min_terms && q < 1.0 && settled) {
        const double tail = mag * q / (1.0 - q);
        const double s = std::abs(sum.value());
        if (tail <= opt.tol * s || tail <= 1e-3 * round || mag == 0.0) {
          rep.value = sum.value();
          rep.abs_err = 2.0 * tail + round + eps * s;
          rep.terms = k + 1;
          return rep;
        }
      }
      prev_ratio = ratio;
    }
    prev_mag = mag;
    prev_k = k;
  }
  throw convergence_error(opt.regime, "term budget exhausted");
}

}  // namespace mlf::detail
