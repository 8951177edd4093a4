#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "mlf/ml/types.hpp"
#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"

namespace mlf {

namespace detail {

/// Pole of e^t t^{alpha-beta} / (t^alpha - z) on the principal sheet, and its residue term
/// (1/alpha) t^{1-beta} e^t, carried in log form.
struct SheetPole {
  double phi;      // arg t in [-pi, pi]
  double radius;   // |t|
  cplx log_res;    // log of the residue term
};

inline std::vector<SheetPole> sheet_poles(double alpha, double beta, cplx z) {
  std::vector<SheetPole> out;
  const double r = std::abs(z);
  if (r == 0.0) return out;
  const double th = std::arg(z);
  const double rho = std::pow(r, 1.0 / alpha);
  for (int k = -1; k <= 1; ++k) {
    const double ang = th + 2.0 * std::numbers::pi * k;
    if (std::abs(ang) > alpha * std::numbers::pi) continue;
    const double phi = ang / alpha;
    const cplx logt(std::log(rho), phi);
    const cplx t = std::polar(rho, phi);
    out.push_back({phi, rho, (1.0 - beta) * logt + t - std::log(alpha)});
  }
  return out;
}

}  // namespace detail

/// Sector constant separating the exponential and algebraic asymptotic regimes.
inline double ml_sector_mu(double alpha) {
  return 0.5 * (std::numbers::pi * alpha / 2.0 + std::min(std::numbers::pi, std::numbers::pi * alpha));
}

/// Large-|z| expansion of E_{alpha,beta}(z), 0 < alpha < 2: exponential residues from the
/// principal sheet plus the algebraic series -sum z^{-r}/Gamma(beta - alpha r), truncated at
/// its smallest term. Throws accuracy-type convergence_error if the error exceeds tol*|value|.
inline EvalReport ml_asymptotic(const MLParams& p, cplx z, int n_terms = 200, double tol = 1e-8) {
  const double alpha = p.alpha, beta = p.beta;
  detail::require(alpha > 0.0 && alpha < 2.0, "ml_asymptotic: alpha must be in (0, 2)");
  detail::require(z != 0.0, "ml_asymptotic: z must be non-zero");
  const double eps = std::numeric_limits<double>::epsilon();
  EvalReport rep;
  rep.method = Method::asymptotic;

  cplx value = 0.0;
  double err = 0.0;
  for (const auto& pole : detail::sheet_poles(alpha, beta, z)) {
    if (pole.log_res.real() > 709.0) throw overflow_error("ml_asymptotic: exponential term overflows");
    const cplx res = std::exp(pole.log_res);
    value += res;
    err += std::abs(res) * eps * (2.0 + std::abs(pole.log_res));
    // Close to the cut the algebraic expansion is only good to the size of the residue.
    if (std::numbers::pi - std::abs(pole.phi) < 0.2) err += std::abs(res);
  }

  const double lz = std::log(std::abs(z)), th = std::arg(z);
  cplx alg = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double omitted = 0.0;
  int used = 0;
  bool stopped = false;
  for (int r = 1; r <= n_terms + 1; ++r) {
    const double arg = beta - alpha * r;
    if (is_nonpositive_integer(arg)) continue;
    int sg;
    const double lg = lgamma_abs(arg, &sg);
    const double lm = -r * lz - lg;
    const double mag = std::exp(lm);
    if (mag > prev || r == n_terms + 1) {
      // optimal truncation of a factorially divergent series: the remainder is the smallest
      // term times a factor growing like sqrt(2 pi N)
      omitted = prev * std::max(2.0, std::sqrt(2.0 * std::numbers::pi * std::max(used, 1)));
      stopped = true;
      break;
    }
    const double s = std::abs(value + alg);
    if (mag < 0.1 * eps * s) {
      omitted = mag;
      stopped = true;
      break;
    }
    const cplx term = -double(sg) * std::polar(mag, -r * th);
    alg += term;
    err += mag * eps * (4.0 + std::abs(lg) + std::abs(r * lz) + std::abs(r * th));
    prev = mag;
    used = r;
  }
  if (!stopped) {
    // The loop only runs out on poles; with integer alpha and beta every later term vanishes.
    const bool all_zero = alpha == std::floor(alpha) && beta == std::floor(beta);
    omitted = all_zero || used == 0 ? 0.0 : prev;
  }
  value += alg;
  err += omitted + eps * std::abs(value);
  rep.value = value;
  rep.abs_err = err;
  rep.terms = used;
  if (!(err <= tol * std::abs(value)))
    throw convergence_error("asymptotic", "smallest term exceeds the requested tolerance");
  return rep;
}

}  // namespace mlf
