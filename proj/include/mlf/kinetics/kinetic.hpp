#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mlf/frac/operators.hpp"
#include "mlf/ml/eval.hpp"
#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"

namespace mlf {

struct KineticParams {
  double N0 = 1.0;
  double c = 1.0;
  double nu = 1.0;
  double mu = 1.0;  // power-law source exponent
};

namespace detail {

inline void check_kinetic(const KineticParams& k) {
  require(k.c > 0.0, "kinetic: c must be positive");
  require(k.nu > 0.0 && k.nu <= 1.0, "kinetic: nu must be in (0, 1]");
  require(k.mu > 0.0, "kinetic: mu must be positive");
}

}  // namespace detail

/// N(t) = N0 E_nu(-c^nu t^nu), the solution of N - N0 = -c^nu I^nu N.
inline double kinetic_solution(const KineticParams& k, double t) {
  detail::check_kinetic(k);
  detail::require(t >= 0.0, "kinetic_solution: t must be non-negative");
  if (t == 0.0) return k.N0;
  return k.N0 * ml_eval(MLParams{k.nu, 1.0, 1.0}, -std::pow(k.c * t, k.nu)).value.real();
}

/// N(t) = N0 Gamma(mu) t^{mu-1} E_{nu,mu}(-c^nu t^nu), the solution for the source N0 t^{mu-1}.
inline double kinetic_solution_power(const KineticParams& k, double t) {
  detail::check_kinetic(k);
  detail::require(t > 0.0, "kinetic_solution_power: t must be positive");
  const double e = ml_eval(MLParams{k.nu, k.mu, 1.0}, -std::pow(k.c * t, k.nu)).value.real();
  return k.N0 * gamma_fn(k.mu) * std::pow(t, k.mu - 1.0) * e;
}

/// Exponents g = mu - 1 + k nu in (0, 1 - nu], k >= 0, for the source t^{mu-1} (mu = 1 for a
/// smooth source): the terms of the solution that the plain product rule integrates at order
/// below one. Listing more of them brings larger starting weights and a longer pre-asymptotic range.
inline std::vector<double> kinetic_start_exponents(double nu, double mu = 1.0) {
  std::vector<double> e;
  for (int k = 0; mu - 1.0 + (k + 1) * nu <= 1.0 + 1e-12; ++k) {
    const double g = mu - 1.0 + k * nu;
    if (g > 1e-12 && std::abs(g - std::round(g)) > 1e-12) e.push_back(g);
  }
  return e;
}

/// Solves N(t) = N0 f(t) - c^nu (I^nu N)(t) on the grid of f.
/// I^nu is rl_integral with the given starting exponents, so the discrete system is
/// lower-triangular past the nodes that carry starting weights; that leading block is solved densely
/// and the rest by forward substitution.
inline Grid1D kinetic_volterra(const Grid1D& f, double c, double nu, double N0,
                               const std::vector<double>& start_exponents) {
  detail::require(f.size() >= 2 && f.dt > 0.0, "kinetic_volterra: grid needs two points and dt > 0");
  detail::require(c >= 0.0, "kinetic_volterra: c must be non-negative");
  detail::require(nu > 0.0 && nu <= 1.0, "kinetic_volterra: nu must be in (0, 1]");
  const size_t n = f.size();
  Grid1D out{f.t0, f.dt, std::vector<double>(n, 0.0)};
  auto& N = out.values;
  for (size_t k = 0; k < n; ++k) N[k] = N0 * f.values[k];
  if (c == 0.0) return out;

  const detail::ProductWeights pw(n, nu);
  const auto w = detail::starting_weights(pw, n, start_exponents);
  const size_t m = w[0].size();
  const double cn = std::pow(c * f.dt, nu), lam = cn * rgamma(nu + 2.0);
  const double diag = 1.0 + lam;
  if (!(diag > 0.0)) throw convergence_error("kinetic_volterra", "vanishing diagonal");

  // nodes 1 .. m couple through the starting weights
  if (m > 0) {
    std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
    std::vector<double> rhs(m);
    for (size_t k = 1; k <= m; ++k) {
      for (size_t q = 1; q <= m; ++q) {
        double coef = cn * w[k][q - 1];
        if (q < k) coef += lam * pw.b[k - q];
        if (q == k) coef += diag;
        a[k - 1][q - 1] = coef;
      }
      rhs[k - 1] = N0 * f.values[k] - lam * pw.first(k) * N[0];
    }
    const auto x = detail::solve_dense(a, rhs);
    for (size_t k = 1; k <= m; ++k) N[k] = x[k - 1];
  }
  for (size_t k = m + 1; k < n; ++k) {
    double s = pw.first(k) * N[0];
    for (size_t j = 1; j < k; ++j) s += pw.b[k - j] * N[j];
    double corr = 0.0;
    for (size_t q = 1; q <= m; ++q) corr += w[k][q - 1] * N[q];
    N[k] = (N0 * f.values[k] - lam * s - cn * corr) / diag;
  }
  return out;
}

/// As above with the starting exponents of a smooth source, kinetic_start_exponents(nu).
inline Grid1D kinetic_volterra(const Grid1D& f, double c, double nu, double N0 = 1.0) {
  detail::require(nu > 0.0 && nu <= 1.0, "kinetic_volterra: nu must be in (0, 1]");
  return kinetic_volterra(f, c, nu, N0, kinetic_start_exponents(nu));
}

}  // namespace mlf
