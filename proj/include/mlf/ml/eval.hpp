#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

#include "mlf/ml/asymptotic.hpp"
#include "mlf/ml/contour.hpp"
#include "mlf/ml/series.hpp"
#include "mlf/ml/types.hpp"
#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"

namespace mlf {

/// Taylor series sum z^k / Gamma(beta + alpha k).
inline EvalReport ml_series(const MLParams& p, cplx z, double tol = 1e-15, int max_terms = 2000) {
  detail::require(p.alpha > 0.0, "ml_series: alpha must be positive");
  const double alpha = p.alpha, beta = p.beta;
  detail::SeriesOptions opt;
  opt.tol = tol;
  opt.max_terms = max_terms;
  return detail::power_series(
      z,
      [&](int k) {
        const double x = beta + alpha * k;
        if (is_nonpositive_integer(x)) return detail::LogCoef{0.0, 0};
        int sg;
        const double l = lgamma_abs(x, &sg);
        return detail::LogCoef{-l, sg};
      },
      opt);
}

/// Options for the dispatcher.
struct EvalOptions {
  double tol = 1e-14;       // requested relative accuracy
  bool closed_forms = true;  // use elementary closed forms where they exist
  double series_radius = 5.0;
  double asymptotic_radius = 15.0;
};

namespace detail {

inline bool accurate(const EvalReport& r, double tol) {
  return std::isfinite(r.abs_err) && r.abs_err <= tol * std::abs(r.value);
}

inline double rel_err(const EvalReport& r) {
  const double v = std::abs(r.value);
  if (!std::isfinite(r.abs_err) || !std::isfinite(v)) return std::numeric_limits<double>::infinity();
  return v > 0 ? r.abs_err / v : (r.abs_err == 0 ? 0.0 : std::numeric_limits<double>::infinity());
}

// Elementary closed forms: alpha = 1 and 2 with beta in {1, 2}; E_{1/2}(x) for real x.
inline std::optional<EvalReport> ml_closed_form(const MLParams& p, cplx z) {
  const double a = p.alpha, b = p.beta;
  const double eps = std::numeric_limits<double>::epsilon();
  EvalReport r;
  r.method = Method::closed_form;
  r.terms = 1;
  auto small_ratio = [](cplx w) {
    // (e^w - 1)/w near 0
    cplx s = 1.0, t = 1.0;
    for (int k = 2; k < 20; ++k) {
      t *= w / double(k);
      s += t;
    }
    return s;
  };
  if (a == 1.0 && b == 1.0) {
    if (z.real() > 709.0) throw overflow_error("ml_eval: exp overflows");
    r.value = std::exp(z);
  } else if (a == 1.0 && b == 2.0) {
    if (z.real() > 709.0) throw overflow_error("ml_eval: exp overflows");
    r.value = std::abs(z) < 0.1 ? small_ratio(z) : (std::exp(z) - 1.0) / z;
  } else if (a == 2.0 && b == 1.0) {
    const cplx s = std::sqrt(z);
    if (std::abs(s.real()) > 709.0) throw overflow_error("ml_eval: cosh overflows");
    r.value = std::cosh(s);
  } else if (a == 2.0 && b == 2.0) {
    const cplx s = std::sqrt(z);
    if (std::abs(s.real()) > 709.0) throw overflow_error("ml_eval: sinh overflows");
    // sinh(s)/s = e^{-s} (e^{2s} - 1)/(2s)
    r.value = std::abs(s) < 0.1 ? std::exp(-s) * small_ratio(2.0 * s) : std::sinh(s) / s;
  } else if (a == 0.5 && b == 1.0 && z.imag() == 0.0) {
    const double x = z.real();
    if (x > 26.6) throw overflow_error("ml_eval: exp(x^2) overflows");
    r.value = erfc_fn(-x, true);
  } else {
    return std::nullopt;
  }
  r.abs_err = 8.0 * eps * std::abs(r.value) * (1.0 + std::abs(z));
  return r;
}

}  // namespace detail

inline EvalReport ml_eval(const MLParams& p, cplx z, const EvalOptions& opt = {});

/// E_{alpha,beta}(z) as the mean of E_{alpha/m,beta} over the m-th roots of z.
/// m = 0 picks m = ceil(alpha/2) + 1.
inline EvalReport ml_reduce_order(const MLParams& p, cplx z, int m = 0, const EvalOptions& opt = {}) {
  detail::require(p.alpha > 0.0, "ml_reduce_order: alpha must be positive");
  if (m <= 0) m = int(std::ceil(p.alpha / 2.0)) + 1;
  const MLParams q{p.alpha / m, p.beta, 1.0};
  const double r = std::pow(std::abs(z), 1.0 / m), th = std::arg(z) / m;
  EvalReport rep;
  rep.method = Method::order_reduction;
  for (int j = 0; j < m; ++j) {
    const cplx w = std::polar(r, th + 2.0 * std::numbers::pi * j / m);
    const EvalReport e = ml_eval(q, w, opt);
    rep.value += e.value;
    rep.abs_err += e.abs_err;
    rep.terms += e.terms;
  }
  rep.value /= double(m);
  rep.abs_err /= double(m);
  rep.abs_err += std::numeric_limits<double>::epsilon() * std::abs(rep.value) * m;
  return rep;
}

/// E_{alpha,beta}(z): closed forms, order reduction for alpha >= 2, otherwise the series
/// near the origin, the asymptotic expansion far out and contour integrals in between.
/// Returns the most accurate candidate when none meets the tolerance.
inline EvalReport ml_eval(const MLParams& p, cplx z, const EvalOptions& opt) {
  detail::require(p.alpha > 0.0, "ml_eval: alpha must be positive");
  detail::require(std::isfinite(p.alpha) && std::isfinite(p.beta), "ml_eval: parameters must be finite");
  detail::require(std::isfinite(z.real()) && std::isfinite(z.imag()), "ml_eval: z must be finite");
  if (p.gamma != 1.0) throw domain_error("ml_eval: use ml_prabhakar for gamma != 1");
  if (opt.closed_forms) {
    if (auto c = detail::ml_closed_form(p, z)) return *c;
  }
  if (z == 0.0) {
    EvalReport r;
    r.method = Method::closed_form;
    r.value = rgamma(p.beta);
    r.abs_err = 4 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
    r.terms = 1;
    return r;
  }
  if (p.alpha >= 2.0) return ml_reduce_order(p, z, 0, opt);

  const double az = std::abs(z);
  std::optional<EvalReport> best;
  std::string failure;
  auto consider = [&](auto&& fn) -> bool {
    try {
      EvalReport r = fn();
      if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag())) return false;
      if (!best || detail::rel_err(r) < detail::rel_err(*best)) best = r;
      return detail::accurate(r, opt.tol);
    } catch (const overflow_error&) {
      throw;
    } catch (const error& e) {
      failure = e.what();
      return false;
    }
  };
  if (az <= opt.series_radius && consider([&] { return ml_series(p, z, 0.1 * opt.tol); })) return *best;
  if (az >= opt.asymptotic_radius &&
      consider([&] { return ml_asymptotic(p, z, 200, 1e300); }) && detail::accurate(*best, opt.tol))
    return *best;
  if (consider([&] { return ml_hankel(p, z, opt.tol); })) return *best;
  const bool mb_ok = !(z.imag() == 0.0 && z.real() > 0.0) &&
                     std::numbers::pi * (1.0 - p.alpha / 2.0) - std::abs(std::arg(-z)) > 0.05;
  if (mb_ok && consider([&] { return ml_mellin_barnes(p, z, opt.tol); })) return *best;
  if (az > opt.series_radius && az < 60.0 && consider([&] { return ml_series(p, z, 0.1 * opt.tol); }))
    return *best;
  if (best) return *best;
  throw convergence_error("ml_eval", "no method produced a finite value (" + failure + ")");
}

inline EvalReport ml_eval(double alpha, double beta, cplx z, const EvalOptions& opt = {}) {
  return ml_eval(MLParams{alpha, beta, 1.0}, z, opt);
}

}  // namespace mlf
