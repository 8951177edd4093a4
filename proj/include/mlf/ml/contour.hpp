#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "mlf/ml/asymptotic.hpp"
#include "mlf/ml/types.hpp"
#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"
#include "mlf/numerics/quadrature.hpp"

namespace mlf {

/// Mellin-Barnes integral for E^gamma_{alpha,beta}(z) on the line Re s = c:
/// (1/2 pi i) int Gamma(s) Gamma(gamma - s) / Gamma(gamma) / Gamma(beta - alpha s) (-z)^{-s} ds,
/// with c = min(1, gamma)/2. Needs |arg(-z)| < pi (1 - alpha/2) and z off the positive axis.
inline EvalReport ml_mellin_barnes(const MLParams& p, cplx z, double tol = 1e-12) {
  const double alpha = p.alpha, beta = p.beta, gam = p.gamma;
  detail::require(alpha > 0.0 && alpha < 2.0, "ml_mellin_barnes: alpha must be in (0, 2)");
  detail::require(gam > 0.0, "ml_mellin_barnes: gamma must be positive");
  if (z == 0.0) throw branch_error("ml_mellin_barnes: z = 0 is not on a Mellin-Barnes contour");
  if (z.imag() == 0.0 && z.real() > 0.0)
    throw branch_error("ml_mellin_barnes: z on the positive real axis");
  const cplx lmz = std::log(-z);
  const double kappa = std::numbers::pi * (1.0 - alpha / 2.0) - std::abs(lmz.imag());
  if (kappa <= 0.0) throw sector_error("ml_mellin_barnes: contour integrand does not decay");

  const double c = 0.5 * std::min(1.0, gam);
  const double lg_gam = lgamma_abs(gam);
  auto logg = [&](double y) {
    const cplx s(c, y);
    return lgamma_c(s) + lgamma_c(gam - s) - lg_gam + log_rgamma_c(beta - alpha * s) - s * lmz;
  };
  auto g = [&](double y) { return std::exp(logg(y)); };

  // Truncation: march outwards until the log-magnitude has dropped far below the peak.
  const double drop = std::log(1.0 / (tol * 1e-3));
  double peak = logg(0.0).real();
  auto edge = [&](double dir) {
    double y = 1.0, last = logg(dir * y).real();
    peak = std::max(peak, last);
    while (y < 1e6) {
      y *= 1.5;
      last = logg(dir * y).real();
      peak = std::max(peak, last);
      if (last < peak - drop && y * kappa > 4.0) break;
    }
    return y;
  };
  const double yp = edge(1.0), ym = edge(-1.0);

  std::vector<double> pts;
  const double step = std::max(2.0, 4.0 / kappa);
  for (double y = -ym; y < 0.0; y += step) pts.push_back(y);
  for (double y = 0.0; y < yp; y += step) pts.push_back(y);
  pts.push_back(yp);
  std::sort(pts.begin(), pts.end());

  QuadSpec qs;
  qs.rel_tol = 0.1 * tol;
  qs.abs_tol = 0.1 * tol * std::exp(peak) * 1e-2;
  qs.max_subdivisions = 4000;
  auto q = integrate_breaks(g, pts, qs);
  auto qa = integrate_breaks([&](double y) { return std::abs(g(y)); }, pts,
                             QuadSpec{1e-300, 1e-3, 200, 0});

  const double eps = std::numeric_limits<double>::epsilon();
  const double tail = (std::exp(logg(yp).real()) + std::exp(logg(-ym).real())) / kappa;
  EvalReport rep;
  rep.method = Method::mellin_barnes;
  rep.value = q.value / (2.0 * std::numbers::pi);
  rep.abs_err = (q.abs_err + tail + eps * qa.value * (8.0 + std::abs(peak) + std::max(yp, ym))) /
                (2.0 * std::numbers::pi);
  rep.terms = q.evaluations;
  return rep;
}

/// E_{alpha,beta}(z), 0 < alpha < 2, from the Hankel loop with the rays moved to angle +-theta,
/// plus the residues of the principal-sheet poles left outside the loop.
inline EvalReport ml_hankel(const MLParams& p, cplx z, double tol = 1e-13) {
  const double alpha = p.alpha, beta = p.beta;
  detail::require(alpha > 0.0 && alpha < 2.0, "ml_hankel: alpha must be in (0, 2)");
  detail::require(p.gamma == 1.0, "ml_hankel: only gamma = 1");
  const double pi = std::numbers::pi;
  const auto poles = detail::sheet_poles(alpha, beta, z);
  const double rho = std::pow(std::abs(z), 1.0 / alpha);

  // Loop radius: around all poles when they are close to the origin, inside them otherwise.
  const double eps_r = rho < 1.0 ? rho + 1.0 : std::min(1.0, 0.5 * rho);
  const bool poles_inside = rho < eps_r;

  // Ray angle: keep away from the poles.
  double theta = pi;
  if (!poles_inside) {
    double best = -1.0;
    for (double cand : {1.0, 0.95, 0.9, 0.85, 0.8, 0.75, 0.7, 0.65, 0.6}) {
      double dmin = 10.0;
      for (const auto& pole : poles) dmin = std::min(dmin, std::abs(cand * pi - std::abs(pole.phi)));
      if (dmin > 0.08 * pi) {
        theta = cand * pi;
        best = dmin;
        break;
      }
      if (dmin > best) {
        best = dmin;
        theta = cand * pi;
      }
    }
  }

  // Integrand e^t t^{alpha-beta} / (t^alpha - z) at t = r e^{i phi}.
  auto f = [&](double r, double phi) {
    const cplx lt(std::log(r), phi);
    const cplx t = std::polar(r, phi);
    return std::exp(t + (alpha - beta) * lt) / (std::exp(alpha * lt) - z);
  };
  const cplx eip = std::polar(1.0, theta), eim = std::polar(1.0, -theta);
  auto ray = [&](double r) { return f(r, theta) * eip - f(r, -theta) * eim; };
  auto arc = [&](double phi) { return f(eps_r, phi) * cplx(0.0, eps_r) * std::polar(1.0, phi); };

  cplx resid = 0.0;
  double res_abs = 0.0;
  for (const auto& pole : poles) {
    // The loop encloses the disk |t| < eps_r and the sector theta < |arg t| <= pi.
    if (poles_inside || std::abs(pole.phi) >= theta) continue;
    if (pole.log_res.real() > 709.0) throw overflow_error("ml_hankel: exponential term overflows");
    const cplx v = std::exp(pole.log_res);
    resid += v;
    res_abs += std::abs(v) * (2.0 + std::abs(pole.log_res));
  }

  // Ray cut-off where e^{r cos theta} has decayed far below everything else.
  const double c = -std::cos(theta);
  double big = std::max(1.0, std::abs(beta - alpha) + 1.0);
  double rmax = eps_r + (std::log(1.0 / tol) + 40.0 + big * std::log(10.0 + rho)) / c;
  std::vector<double> pts = detail::geometric_breaks(eps_r, rmax, 1.0);
  if (!poles_inside && rho > eps_r && rho < rmax) {
    pts.push_back(rho);
    std::sort(pts.begin(), pts.end());
  }
  const double scale = std::abs(resid);
  QuadSpec qs;
  qs.rel_tol = 0.1 * tol;
  qs.abs_tol = scale > 0 ? 0.01 * tol * scale : 1e-300;
  qs.max_subdivisions = 3000;
  auto qr = integrate_breaks(ray, pts, qs);
  auto qc = integrate_breaks(arc, {-theta, -0.5 * theta, 0.0, 0.5 * theta, theta}, qs);
  auto qa = integrate_breaks([&](double r) { return std::abs(ray(r)); }, pts,
                             QuadSpec{1e-300, 1e-3, 200, 0});

  const double eps = std::numeric_limits<double>::epsilon();
  const cplx integral = (qr.value + qc.value) / cplx(0.0, 2.0 * pi);
  EvalReport rep;
  rep.method = Method::hankel;
  rep.value = integral + resid;
  rep.abs_err = (qr.abs_err + qc.abs_err) / (2.0 * pi) +
                eps * (res_abs + (qa.value * (8.0 + rmax) + std::abs(qc.value) * 8.0) / (2.0 * pi));
  rep.terms = qr.evaluations + qc.evaluations;
  return rep;
}

}  // namespace mlf
