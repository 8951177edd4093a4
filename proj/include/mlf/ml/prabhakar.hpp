#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

#include "mlf/ml/contour.hpp"
#include "mlf/ml/eval.hpp"
#include "mlf/ml/series.hpp"
#include "mlf/ml/types.hpp"

namespace mlf {

/// Series sum (gamma)_k z^k / (k! Gamma(beta + alpha k)).
inline EvalReport prabhakar_series(const MLParams& p, cplx z, double tol = 1e-15, int max_terms = 4000) {
  detail::require(p.alpha > 0.0, "prabhakar_series: alpha must be positive");
  detail::require(p.gamma > 0.0, "prabhakar_series: gamma must be positive");
  const double lg0 = lgamma_abs(p.gamma);
  detail::SeriesOptions opt;
  opt.tol = tol;
  opt.max_terms = max_terms;
  opt.regime = "prabhakar_series";
  return detail::power_series(
      z,
      [&](int k) {
        const double x = p.beta + p.alpha * k;
        if (is_nonpositive_integer(x)) return detail::LogCoef{0.0, 0};
        int sg;
        const double l = lgamma_abs(x, &sg);
        return detail::LogCoef{lgamma_abs(p.gamma + k) - lg0 - lgamma_abs(k + 1.0) - l, sg};
      },
      opt);
}

/// Algebraic expansion for large |z| when no singularity lies on the principal sheet
/// (|arg z| > alpha pi):
/// sum_k (-1)^k (gamma)_k / k! (-z)^{-gamma-k} / Gamma(beta - alpha (gamma + k)).
inline EvalReport prabhakar_asymptotic(const MLParams& p, cplx z, int n_terms = 200, double tol = 1e-8) {
  detail::require(p.alpha > 0.0 && p.alpha < 1.0, "prabhakar_asymptotic: alpha must be in (0, 1)");
  detail::require(p.gamma > 0.0, "prabhakar_asymptotic: gamma must be positive");
  detail::require(z != 0.0, "prabhakar_asymptotic: z must be non-zero");
  if (std::abs(std::arg(z)) < p.alpha * std::numbers::pi + 0.05 * std::numbers::pi)
    throw sector_error("prabhakar_asymptotic: singularity too close to the principal sheet");
  const double eps = std::numeric_limits<double>::epsilon();
  const cplx lmz = std::log(-z);
  const double lg0 = lgamma_abs(p.gamma);
  cplx sum = 0.0;
  double err = 0.0, prev = std::numeric_limits<double>::infinity(), omitted = 0.0;
  int used = 0;
  bool stopped = false;
  for (int k = 0; k <= n_terms; ++k) {
    const double x = p.beta - p.alpha * (p.gamma + k);
    if (is_nonpositive_integer(x)) continue;
    int sg;
    const double lr = lgamma_abs(x, &sg);
    const double lc = lgamma_abs(p.gamma + k) - lg0 - lgamma_abs(k + 1.0) - lr;
    const cplx lt = lc - (p.gamma + k) * lmz;
    const double mag = std::exp(lt.real());
    if (mag > prev || k == n_terms) {
      omitted = mag;
      stopped = true;
      break;
    }
    if (mag < 0.1 * eps * std::abs(sum)) {
      omitted = mag;
      stopped = true;
      break;
    }
    const double sign = ((k % 2) ? -1.0 : 1.0) * sg;
    sum += sign * std::polar(mag, lt.imag());
    err += mag * eps * (4.0 + std::abs(lc) + std::abs(lt.real()) + std::abs(lt.imag()));
    prev = mag;
    used = k + 1;
  }
  if (!stopped) omitted = 0.0;
  EvalReport rep;
  rep.method = Method::asymptotic;
  rep.value = sum;
  rep.abs_err = err + omitted + eps * std::abs(sum);
  rep.terms = used;
  if (!(rep.abs_err <= tol * std::abs(sum)))
    throw convergence_error("prabhakar_asymptotic", "smallest term exceeds the requested tolerance");
  return rep;
}

/// Three-parameter function E^gamma_{alpha,beta}(z).
inline EvalReport ml_prabhakar(const MLParams& p, cplx z, const EvalOptions& opt = {}) {
  detail::require(p.alpha > 0.0, "ml_prabhakar: alpha must be positive");
  detail::require(p.gamma > 0.0, "ml_prabhakar: gamma must be positive");
  if (p.gamma == 1.0) return ml_eval(MLParams{p.alpha, p.beta, 1.0}, z, opt);
  if (z == 0.0) {
    EvalReport r;
    r.method = Method::closed_form;
    r.value = rgamma(p.beta);
    r.abs_err = 4 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
    r.terms = 1;
    return r;
  }
  const double az = std::abs(z);
  const bool positive_axis = z.imag() == 0.0 && z.real() > 0.0;
  std::optional<EvalReport> best;
  std::string failure;
  auto consider = [&](auto&& fn) -> bool {
    try {
      EvalReport r = fn();
      if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag())) return false;
      if (!best || detail::rel_err(r) < detail::rel_err(*best)) best = r;
      return detail::accurate(r, opt.tol);
    } catch (const error& e) {
      failure = e.what();
      return false;
    }
  };
  if ((az <= opt.series_radius || positive_axis) &&
      consider([&] { return prabhakar_series(p, z, 0.1 * opt.tol); }))
    return *best;
  if (az >= opt.asymptotic_radius && p.alpha < 1.0 &&
      std::abs(std::arg(z)) >= (p.alpha + 0.05) * std::numbers::pi &&
      consider([&] { return prabhakar_asymptotic(p, z, 200, 1e300); }))
    return *best;
  if (p.alpha < 2.0 && !positive_axis &&
      std::numbers::pi * (1.0 - p.alpha / 2.0) - std::abs(std::arg(-z)) > 0.05 &&
      consider([&] { return ml_mellin_barnes(p, z, opt.tol); }))
    return *best;
  if (!positive_axis && az > opt.series_radius && az < 60.0 &&
      consider([&] { return prabhakar_series(p, z, 0.1 * opt.tol); }))
    return *best;
  if (best) return *best;
  throw convergence_error("ml_prabhakar", "no method produced a finite value (" + failure + ")");
}

}  // namespace mlf
