#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"

namespace mlf {

/// Samples of a function at t0 + i dt, i = 0 .. values.size() - 1.
struct Grid1D {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> values;

  size_t size() const { return values.size(); }
  double t(size_t i) const { return t0 + dt * double(i); }
};

/// Samples f on [t0, t0 + T] with n intervals.
template <class F>
Grid1D sample_grid(F&& f, double T, size_t n, double t0 = 0.0) {
  detail::require(n >= 1 && T > 0.0, "sample_grid: need n >= 1 and T > 0");
  Grid1D g{t0, T / double(n), {}};
  g.values.resize(n + 1);
  for (size_t i = 0; i <= n; ++i) g.values[i] = f(g.t(i));
  return g;
}

namespace detail {

inline void check_grid(const Grid1D& f) {
  require(f.size() >= 2, "fractional operator: grid needs at least two points");
  require(f.dt > 0.0 && std::isfinite(f.dt), "fractional operator: dt must be positive");
}

// Second difference (m+1)^p - 2 m^p + (m-1)^p, by a binomial series for large m.
inline double second_difference_power(double m, double p) {
  if (m < 32.0) return std::pow(m + 1.0, p) - 2.0 * std::pow(m, p) + std::pow(m - 1.0, p);
  const double x = 1.0 / m;
  double c = 1.0, s = 0.0, xp = 1.0;
  for (int k = 1; k <= 16; ++k) {
    c *= (p - k + 1.0) / k;
    xp *= x;
    if (k % 2 == 0) s += c * xp;
  }
  return 2.0 * std::pow(m, p) * s;
}

// First derivative on the grid: central differences inside, second-order one-sided ends.
inline std::vector<double> grid_derivative(const std::vector<double>& g, double dt) {
  const size_t n = g.size();
  std::vector<double> d(n);
  if (n == 2) {
    d[0] = d[1] = (g[1] - g[0]) / dt;
    return d;
  }
  for (size_t i = 1; i + 1 < n; ++i) d[i] = (g[i + 1] - g[i - 1]) / (2.0 * dt);
  d[0] = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * dt);
  d[n - 1] = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * dt);
  return d;
}

}  // namespace detail

namespace detail {

// Solves the dense system a x = b in place by Gaussian elimination with partial pivoting.
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const size_t m = b.size();
  for (size_t c = 0; c < m; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < m; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) throw convergence_error("solve_dense", "singular system");
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (size_t r = c + 1; r < m; ++r) {
      const double f = a[r][c] / a[c][c];
      for (size_t k = c; k < m; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (size_t c = m; c-- > 0;) {
    for (size_t k = c + 1; k < m; ++k) b[c] -= a[c][k] * b[k];
    b[c] /= a[c][c];
  }
  return b;
}

// Product-integration weights of I^nu on the piecewise linear interpolant, unit step:
// I_k = sum_j weight(k, j) u_j with b[m] the interior weights.
struct ProductWeights {
  double nu;
  std::vector<double> b;

  ProductWeights(size_t n, double nu_) : nu(nu_), b(n) {
    for (size_t m = 1; m < n; ++m) b[m] = second_difference_power(double(m), nu + 1.0);
  }
  double first(size_t k) const {
    const double kd = double(k);
    return std::pow(kd - 1.0, nu + 1.0) - (kd - nu - 1.0) * std::pow(kd, nu);
  }
};

// Starting weights w[k][q - 1], q = 1 .. m, at unit step: adding sum_q w[k][q - 1] u_q to the
// product rule makes it exact for t^g, g in exps, at every node k, while keeping it exact for
// 1 and t. The caller scales by dt^nu. Empty exps gives no weights.
inline std::vector<std::vector<double>> starting_weights(const ProductWeights& pw, size_t n,
                                                         const std::vector<double>& exps) {
  if (exps.empty()) return std::vector<std::vector<double>>(n);
  std::vector<double> all{0.0, 1.0};
  for (double g : exps) {
    require(g > 0.0 && std::isfinite(g), "starting weights: exponents must be positive");
    bool dup = false;
    for (double a : all) dup = dup || std::abs(a - g) < 1e-9;
    if (!dup) all.push_back(g);
  }
  const size_t m = all.size();
  require(n > m, "starting weights: grid shorter than the exponent list");
  const double nu = pw.nu, scale = rgamma(nu + 2.0);
  std::vector<std::vector<double>> defect(m, std::vector<double>(n, 0.0));
  std::vector<double> u(n);
  for (size_t e = 2; e < m; ++e) {
    const double g = all[e];
    for (size_t j = 0; j < n; ++j) u[j] = std::pow(double(j), g);
    const double exact = std::exp(std::lgamma(g + 1.0) - std::lgamma(g + nu + 1.0));
    for (size_t k = 1; k < n; ++k) {
      double s = u[k];
      for (size_t j = 1; j < k; ++j) s += pw.b[k - j] * u[j];
      defect[e][k] = exact * std::pow(double(k), g + nu) - scale * s;
    }
  }
  std::vector<std::vector<double>> v(m, std::vector<double>(m));
  for (size_t e = 0; e < m; ++e)
    for (size_t q = 0; q < m; ++q) v[e][q] = std::pow(double(q + 1), all[e]);
  std::vector<std::vector<double>> w(n, std::vector<double>(m, 0.0));
  std::vector<double> rhs(m);
  for (size_t k = 1; k < n; ++k) {
    for (size_t e = 0; e < m; ++e) rhs[e] = defect[e][k];
    w[k] = solve_dense(v, rhs);
  }
  return w;
}

}  // namespace detail

/// Riemann-Liouville integral of order nu > 0 by product integration of the piecewise
/// linear interpolant. Non-empty start_exponents add starting weights on the first nodes so
/// that (t - t0)^g is integrated exactly for each listed g; use them for data with known
/// non-smooth terms at t0, such as t^nu.
inline Grid1D rl_integral(const Grid1D& f, double nu, const std::vector<double>& start_exponents = {}) {
  detail::check_grid(f);
  detail::require(nu > 0.0 && std::isfinite(nu), "rl_integral: order must be positive");
  const size_t n = f.size();
  const detail::ProductWeights pw(n, nu);
  const auto w = detail::starting_weights(pw, n, start_exponents);
  const double h = std::pow(f.dt, nu) * rgamma(nu + 2.0), hw = std::pow(f.dt, nu);
  Grid1D out{f.t0, f.dt, std::vector<double>(n, 0.0)};
  const auto& v = f.values;
  for (size_t k = 1; k < n; ++k) {
    double s = pw.first(k) * v[0] + v[k];
    for (size_t j = 1; j < k; ++j) s += pw.b[k - j] * v[j];
    double c = 0.0;
    for (size_t q = 0; q < w[k].size(); ++q) c += w[k][q] * v[q + 1];
    out.values[k] = h * s + hw * c;
  }
  return out;
}

/// Riemann-Liouville derivative of order alpha > 0: d^n/dt^n of I^{n - alpha} f, n = ceil(alpha).
/// The outer derivatives are central differences (one-sided at the ends).
inline Grid1D rl_derivative(const Grid1D& f, double alpha) {
  detail::check_grid(f);
  detail::require(alpha > 0.0 && std::isfinite(alpha), "rl_derivative: order must be positive");
  const int n = int(std::ceil(alpha));
  Grid1D g = (double(n) - alpha) > 0.0 ? rl_integral(f, double(n) - alpha) : f;
  detail::require(g.size() >= 3 || n == 0, "rl_derivative: grid too short");
  for (int i = 0; i < n; ++i) g.values = detail::grid_derivative(g.values, g.dt);
  return g;
}

/// Caputo derivative of order alpha in (0, 1]: I^{1 - alpha} applied to the panel-wise
/// derivative of the linear interpolant.
inline Grid1D caputo_derivative(const Grid1D& f, double alpha) {
  detail::check_grid(f);
  detail::require(alpha > 0.0 && alpha <= 1.0, "caputo_derivative: order must be in (0, 1]");
  const size_t n = f.size();
  const auto& v = f.values;
  Grid1D out{f.t0, f.dt, std::vector<double>(n, 0.0)};
  if (alpha == 1.0) {
    out.values = detail::grid_derivative(v, f.dt);
    return out;
  }
  const double q = 1.0 - alpha;
  std::vector<double> w(n);
  for (size_t m = 0; m < n; ++m) w[m] = std::pow(double(m + 1), q) - std::pow(double(m), q);
  const double h = std::pow(f.dt, -alpha) * rgamma(2.0 - alpha);
  for (size_t k = 1; k < n; ++k) {
    double s = 0.0;
    for (size_t j = 0; j < k; ++j) s += w[k - 1 - j] * (v[j + 1] - v[j]);
    out.values[k] = h * s;
  }
  return out;
}

enum class PowerMode { integral, derivative };

/// Power rule for t^rho: Gamma(rho+1)/Gamma(rho+1 +- nu) t^{rho +- nu}.
inline double rl_power_rule(double rho, double nu, double t, PowerMode mode) {
  detail::require(rho > -1.0, "rl_power_rule: rho must exceed -1");
  detail::require(nu >= 0.0, "rl_power_rule: order must be non-negative");
  detail::require(t > 0.0, "rl_power_rule: t must be positive");
  const double shift = mode == PowerMode::integral ? nu : -nu;
  const double den = rho + 1.0 + shift;
  if (is_nonpositive_integer(den)) throw pole_error("rl_power_rule: denominator Gamma at a pole");
  int s1, s2;
  const double l = lgamma_abs(rho + 1.0, &s1) - lgamma_abs(den, &s2);
  return s1 * s2 * std::exp(l + (rho + shift) * std::log(t));
}

}  // namespace mlf
