#pragma once

#include <cmath>
#include <complex>

#include "mlf/ml/eval.hpp"
#include "mlf/ml/prabhakar.hpp"
#include "mlf/numerics/gamma.hpp"
#include "mlf/numerics/quadrature.hpp"

namespace mlf {

/// Closed forms of Riemann-Liouville and Weyl operators applied to ML-type functions.
/// Left operators act on the image below, right (Weyl) operators on the one with t^{-alpha}.
enum class RLMLKind {
  left_integral_difference,      // I^a[t^{b-1} E_{a,b}(c t^a)] = x^{b-1}/c [E_{a,b}(c x^a) - 1/G(b)]
  left_integral_difference_exp,  // I^a[E_a(c t^a)] = [E_a(c x^a) - 1]/c
  left_integral,                 // I^a[t^{b-1} E_{a,b}(c t^a)] = x^{a+b-1} E_{a,a+b}(c x^a)
  left_integral_exp,             // I^a[E_a(c t^a)] = x^a E_{a,a+1}(c x^a)
  right_integral,        // I_-^a[t^{-a-b} E_{a,b}(c t^-a)] = x^{a-b}/c [E_{a,b}(c x^-a) - 1/G(b)]
  right_integral_exp,    // I_-^a[t^{-a-1} E_a(c t^-a)] = x^{a-1}/c [E_a(c x^-a) - 1]
  left_derivative,       // D^a[t^{b-1} E_{a,b}(c t^a)] = x^{b-a-1}/G(b-a) + c x^{b-1} E_{a,b}(c x^a)
  left_derivative_exp,   // D^a[E_a(c t^a)] = x^-a/G(1-a) + c E_a(c x^a)
  right_derivative,      // D_-^a[t^{a-b} E_{a,b}(c t^-a)] = x^-b/G(b-a) + c x^{-a-b} E_{a,b}(c x^-a)
  prabhakar_left_integral,     // I^a[t^{g-1} E^d_{b,g}(c t^b)] = x^{a+g-1} E^d_{b,a+g}(c x^b)
  prabhakar_right_integral,    // I_-^a[t^{-a-g} E^d_{b,g}(c t^-b)] = x^-g E^d_{b,a+g}(c x^-b)
  prabhakar_left_derivative,   // D^a[t^{g-1} E^d_{b,g}(c t^b)] = x^{g-a-1} E^d_{b,g-a}(c x^b)
  prabhakar_right_derivative,  // D_-^a[t^{a-g} E^d_{b,g}(c t^-b)] = x^-g E^d_{b,g-a}(c x^-b)
};

/// Operator order alpha, ML order beta, second ML parameter gamma, Prabhakar delta, scale a.
/// For the two-parameter kinds the ML order equals alpha and beta is the second parameter.
struct RLMLParams {
  double alpha = 0.5;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 1.0;
  double a = 1.0;
};

/// Right-hand side of the selected rule at x > 0.
inline double rl_of_ml(RLMLKind kind, const RLMLParams& p, double x) {
  detail::require(x > 0.0, "rl_of_ml: x must be positive");
  detail::require(p.alpha > 0.0, "rl_of_ml: alpha must be positive");
  const double al = p.alpha, b = p.beta, c = p.a;
  auto E = [](double a_, double b_, double z) { return ml_eval(MLParams{a_, b_, 1.0}, z).value.real(); };
  auto P = [](double a_, double b_, double g_, double z) {
    return ml_prabhakar(MLParams{a_, b_, g_}, z).value.real();
  };
  auto needs_c = [&] { detail::require(c != 0.0, "rl_of_ml: this form divides by a"); };
  switch (kind) {
    case RLMLKind::left_integral_difference:
      needs_c();
      return std::pow(x, b - 1.0) / c * (E(al, b, c * std::pow(x, al)) - rgamma(b));
    case RLMLKind::left_integral_difference_exp:
      needs_c();
      return (E(al, 1.0, c * std::pow(x, al)) - 1.0) / c;
    case RLMLKind::left_integral:
      return std::pow(x, al + b - 1.0) * E(al, al + b, c * std::pow(x, al));
    case RLMLKind::left_integral_exp:
      return std::pow(x, al) * E(al, al + 1.0, c * std::pow(x, al));
    case RLMLKind::right_integral:
      needs_c();
      return std::pow(x, al - b) / c * (E(al, b, c * std::pow(x, -al)) - rgamma(b));
    case RLMLKind::right_integral_exp:
      needs_c();
      return std::pow(x, al - 1.0) / c * (E(al, 1.0, c * std::pow(x, -al)) - 1.0);
    case RLMLKind::left_derivative:
      return std::pow(x, b - al - 1.0) * rgamma(b - al) +
             c * std::pow(x, b - 1.0) * E(al, b, c * std::pow(x, al));
    case RLMLKind::left_derivative_exp:
      return std::pow(x, -al) * rgamma(1.0 - al) + c * E(al, 1.0, c * std::pow(x, al));
    case RLMLKind::right_derivative:
      return std::pow(x, -b) * rgamma(b - al) + c * std::pow(x, -al - b) * E(al, b, c * std::pow(x, -al));
    case RLMLKind::prabhakar_left_integral:
      return std::pow(x, al + p.gamma - 1.0) * P(b, al + p.gamma, p.delta, c * std::pow(x, b));
    case RLMLKind::prabhakar_right_integral:
      return std::pow(x, -p.gamma) * P(b, al + p.gamma, p.delta, c * std::pow(x, -b));
    case RLMLKind::prabhakar_left_derivative:
      return std::pow(x, p.gamma - al - 1.0) * P(b, p.gamma - al, p.delta, c * std::pow(x, b));
    case RLMLKind::prabhakar_right_derivative:
      return std::pow(x, -p.gamma) * P(b, p.gamma - al, p.delta, c * std::pow(x, -b));
  }
  throw domain_error("rl_of_ml: unknown kind");
}

/// Weyl (right-sided) integral (1/Gamma(alpha)) int_x^inf (t - x)^{alpha-1} phi(t) dt by quadrature;
/// spec.max_upper_limit bounds the truncated domain.
template <class F>
QuadResult<double> weyl_integral_numeric(F&& phi, double alpha, double x, const QuadSpec& spec = {}) {
  detail::require(alpha > 0.0, "weyl_integral_numeric: alpha must be positive");
  const double g = rgamma(alpha);
  auto r = integrate_semiinf([&](double u) { return std::pow(u, alpha - 1.0) * phi(x + u); }, spec);
  r.value *= g;
  r.abs_err *= g;
  return r;
}

}  // namespace mlf
