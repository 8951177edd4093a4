#include <gtest/gtest.h>

#include <cmath>

#include "mlf/frac/ml_rules.hpp"
#include "mlf/frac/operators.hpp"
#include "mlf/ml/eval.hpp"
#include "mlf/numerics/quadrature.hpp"

using namespace mlf;

namespace {

double E(double a, double b, double z) { return ml_eval(MLParams{a, b, 1}, z).value.real(); }

// (1/Gamma(a)) int_0^x (x-t)^{a-1} f(t) dt after u = (x-t)^a.
template <class F>
double rl_quad(F&& f, double a, double x) {
  QuadSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-12;
  auto g = [&](double u) { return f(x - std::pow(u, 1.0 / a)); };
  return integrate(g, 0.0, std::pow(x, a), spec).value * rgamma(a + 1.0);
}

double max_err(const Grid1D& g, auto&& exact, size_t from = 1) {
  double m = 0.0;
  for (size_t i = from; i < g.size(); ++i) m = std::max(m, std::abs(g.values[i] - exact(g.t(i))));
  return m;
}

}  // namespace

TEST(PowerRule, Values) {
  EXPECT_NEAR(rl_power_rule(1.0, 1.0, 2.0, PowerMode::integral), 2.0, 1e-15);
  EXPECT_NEAR(rl_power_rule(2.0, 1.0, 3.0, PowerMode::derivative), 6.0, 1e-14);
  EXPECT_NEAR(rl_power_rule(0.0, 0.5, 1.0, PowerMode::integral), 1.0 / std::tgamma(1.5), 1e-15);
  // D^{1/2} t^{-1/2} divides by Gamma(0)
  EXPECT_THROW(rl_power_rule(-0.5, 0.5, 1.0, PowerMode::derivative), pole_error);
  EXPECT_THROW(rl_power_rule(-1.5, 0.5, 1.0, PowerMode::integral), domain_error);
}

TEST(RLIntegral, PowerFunctions) {
  for (double rho : {0.0, 1.0, 2.0})
    for (double nu : {0.3, 0.7, 1.5}) {
      const auto f = sample_grid([&](double t) { return std::pow(t, rho); }, 1.0, 4096);
      const auto g = rl_integral(f, nu);
      const double err = max_err(g, [&](double t) { return rl_power_rule(rho, nu, t, PowerMode::integral); });
      EXPECT_LT(err, 1e-5) << rho << " " << nu;
      EXPECT_EQ(g.values[0], 0.0);
    }
  const auto g = rl_integral(sample_grid([](double t) { return std::pow(t, 0.3); }, 2.0, 4096), 0.7);
  EXPECT_NEAR(g.values.back(), rl_power_rule(0.3, 0.7, 2.0, PowerMode::integral), 1e-5);
  EXPECT_NEAR(rl_power_rule(0.3, 0.7, 2.0, PowerMode::integral), std::tgamma(1.3) * 2.0, 1e-14);
}

TEST(RLIntegral, RootSingularityConverges) {
  // t^{1/2} is not resolved by the linear interpolant at the origin: the max-norm error near
  // t = h scales like h^{rho + nu}
  auto exact = [](double t) { return rl_power_rule(0.5, 0.3, t, PowerMode::integral); };
  double prev = 0.0;
  for (size_t n : {512, 1024, 2048, 4096}) {
    const double err = max_err(rl_integral(sample_grid([](double t) { return std::sqrt(t); }, 1.0, n), 0.3), exact);
    if (prev > 0.0) EXPECT_GT(prev / err, 0.95 * std::pow(2.0, 0.8)) << n;
    prev = err;
  }
  EXPECT_LT(prev, 2e-4);
}

TEST(RLIntegral, StartingWeights) {
  // with the exponent listed, t^{1/2} is integrated exactly and constants and t stay exact
  auto exact = [](double t) {
    return rl_power_rule(0.5, 0.3, t, PowerMode::integral) + 2 * rl_power_rule(0.0, 0.3, t, PowerMode::integral) -
           rl_power_rule(1.0, 0.3, t, PowerMode::integral);
  };
  const auto f = sample_grid([](double t) { return std::sqrt(t) + 2 - t; }, 1.0, 256);
  EXPECT_LT(max_err(rl_integral(f, 0.3, {0.5}), exact), 1e-12);
  // a remaining t^{1.5} term converges at order 1.8
  auto exact2 = [](double t) { return rl_power_rule(1.5, 0.3, t, PowerMode::integral); };
  double prev = 0.0;
  for (size_t n : {256, 512, 1024}) {
    const auto g = sample_grid([](double t) { return std::pow(t, 1.5); }, 1.0, n);
    const double err = max_err(rl_integral(g, 0.3, {0.5}), exact2);
    if (prev > 0.0) EXPECT_GT(prev / err, 3.0) << n;
    prev = err;
  }
  EXPECT_THROW(rl_integral(sample_grid([](double) { return 1.0; }, 1.0, 2), 0.3, {0.5}), domain_error);
  EXPECT_THROW(rl_integral(f, 0.3, {-0.5}), domain_error);
}

TEST(RLIntegral, SecondOrderConvergence) {
  auto exact = [](double t) { return rl_power_rule(2.0, 0.6, t, PowerMode::integral); };
  double prev = 0.0;
  for (size_t n : {50, 100, 200, 400}) {
    const auto g = rl_integral(sample_grid([](double t) { return t * t; }, 1.0, n), 0.6);
    const double err = max_err(g, exact);
    if (prev > 0.0) EXPECT_GT(prev / err, 3.5) << n;
    prev = err;
  }
}

TEST(RLIntegral, Semigroup) {
  // I^{0.4} t is exact at the nodes, so the composition carries only the error of the second step
  const auto f = sample_grid([](double t) { return t; }, 1.0, 2000);
  const auto ab = rl_integral(rl_integral(f, 0.4), 0.4);
  const auto direct = rl_integral(f, 0.8);
  const auto second = rl_integral(sample_grid([](double t) { return t > 0 ? rl_power_rule(1.0, 0.4, t, PowerMode::integral) : 0.0; }, 1.0, 2000), 0.4);
  auto exact = [](double t) { return t > 0 ? rl_power_rule(1.0, 0.8, t, PowerMode::integral) : 0.0; };
  const double disc = max_err(second, exact, 0);
  double d = 0.0;
  for (size_t i = 0; i < f.size(); ++i) d = std::max(d, std::abs(ab.values[i] - direct.values[i]));
  EXPECT_LE(d, 10 * disc);
  EXPECT_LT(disc, 1e-5);
}

TEST(RLIntegral, SemigroupRefines) {
  // I^{0.4} cos has a t^{0.4} cusp, which slows the composed rule below second order
  double prev = 0.0;
  for (size_t n : {400, 800, 1600}) {
    const auto f = sample_grid([](double t) { return std::cos(t); }, 2.0, n);
    const auto ab = rl_integral(rl_integral(f, 0.4), 0.7);
    const auto direct = rl_integral(f, 1.1);
    double d = 0.0;
    for (size_t i = 0; i < f.size(); ++i) d = std::max(d, std::abs(ab.values[i] - direct.values[i]));
    if (prev > 0.0) EXPECT_GT(prev / d, 1.8) << n;
    prev = d;
  }
  EXPECT_LT(prev, 2e-4);
}

TEST(RLDerivative, InvertsIntegral) {
  auto exact = [](double t) { return rl_power_rule(2.0, 0.5, t, PowerMode::derivative); };
  const auto d = rl_derivative(sample_grid([](double t) { return t * t; }, 1.0, 400), 0.5);
  EXPECT_LT(max_err(d, exact, 2), 1e-3);
  const auto d2 = rl_derivative(sample_grid([](double t) { return t * t * t; }, 1.0, 400), 1.5);
  // orders above one apply two outer differences; compare at interior nodes
  for (size_t i = 2; i + 2 < d2.size(); ++i)
    EXPECT_NEAR(d2.values[i], rl_power_rule(3.0, 1.5, d2.t(i), PowerMode::derivative), 1e-3) << d2.t(i);
}

TEST(Caputo, Values) {
  const auto c = caputo_derivative(sample_grid([](double t) { return 3.0; }, 1.0, 100), 0.5);
  for (double v : c.values) EXPECT_EQ(v, 0.0);
  const auto q = caputo_derivative(sample_grid([](double t) { return t * t; }, 1.0, 400), 0.4);
  EXPECT_LT(max_err(q, [](double t) { return rl_power_rule(2.0, 0.4, t, PowerMode::derivative); }), 1e-4);
}

TEST(Caputo, RelatesToRiemannLiouville) {
  // D^a f = C^a f + f(0) t^{-a} / Gamma(1-a)
  const double a = 0.6;
  auto f = [](double t) { return 1.0 + std::sin(t); };
  const auto g = sample_grid(f, 1.0, 800);
  const auto rl = rl_derivative(g, a), cap = caputo_derivative(g, a);
  for (size_t i = 40; i + 1 < g.size(); i += 40)
    EXPECT_NEAR(rl.values[i], cap.values[i] + std::pow(g.t(i), -a) * rgamma(1 - a), 2e-3) << g.t(i);
}

TEST(Caputo, RelaxationEquation) {
  // C^a E_a(-t^a) = -E_a(-t^a)
  const double a = 0.7;
  auto f = [&](double t) { return E(a, 1, -std::pow(t, a)); };
  const auto g = sample_grid(f, 2.0, 1600);
  const auto c = caputo_derivative(g, a);
  for (size_t i = 200; i < g.size(); i += 200) EXPECT_NEAR(c.values[i], -g.values[i], 5e-3) << g.t(i);
}

TEST(Grid, Errors) {
  EXPECT_THROW(rl_integral(Grid1D{0, 0.1, {1.0}}, 0.5), domain_error);
  EXPECT_THROW(rl_integral(Grid1D{0, -0.1, {1.0, 2.0}}, 0.5), domain_error);
  EXPECT_THROW(rl_integral(Grid1D{0, 0.1, {1.0, 2.0}}, -1.0), domain_error);
  EXPECT_THROW(caputo_derivative(Grid1D{0, 0.1, {1.0, 2.0}}, 1.5), domain_error);
  EXPECT_THROW(sample_grid([](double) { return 0.0; }, 0.0, 10), domain_error);
}

TEST(MLRules, LeftIntegralByQuadrature) {
  for (double a : {0.4, 0.8, 1.3})
    for (double b : {1.0, 1.7}) {
      const double c = -1.2, x = 1.5;
      auto f = [&](double t) { return std::pow(t, b - 1) * E(a, b, c * std::pow(t, a)); };
      const double rule = rl_of_ml(RLMLKind::left_integral, RLMLParams{a, b, 1, 1, c}, x);
      EXPECT_NEAR(rl_quad(f, a, x), rule, 1e-8 * std::max(1.0, std::abs(rule))) << a << " " << b;
      // the difference form is the same function
      EXPECT_NEAR(rl_of_ml(RLMLKind::left_integral_difference, RLMLParams{a, b, 1, 1, c}, x), rule, 1e-11);
    }
  const double a = 0.5, c = 0.8, x = 0.9;
  EXPECT_NEAR(rl_of_ml(RLMLKind::left_integral_exp, RLMLParams{a, 1, 1, 1, c}, x),
              rl_of_ml(RLMLKind::left_integral_difference_exp, RLMLParams{a, 1, 1, 1, c}, x), 1e-12);
  EXPECT_NEAR(rl_quad([&](double t) { return E(a, 1, c * std::pow(t, a)); }, a, x),
              rl_of_ml(RLMLKind::left_integral_exp, RLMLParams{a, 1, 1, 1, c}, x), 1e-8);
}

TEST(MLRules, LeftIntegralOnGrid) {
  const double a = 0.6, b = 1.4, c = -2.0;
  auto f = [&](double t) { return t == 0.0 ? 0.0 : std::pow(t, b - 1) * E(a, b, c * std::pow(t, a)); };
  const auto g = rl_integral(sample_grid(f, 1.0, 1000), a);
  const RLMLParams p{a, b, 1, 1, c};
  for (size_t i = 100; i < g.size(); i += 100)
    EXPECT_NEAR(g.values[i], rl_of_ml(RLMLKind::left_integral, p, g.t(i)), 1e-4) << g.t(i);
}

TEST(MLRules, LeftDerivativeOnGrid) {
  // D^a [t^{b-1} E_{a,b}(c t^a)] with b > 1 so the sampled function is continuous at 0
  const double a = 0.5, b = 2.0, c = -1.0;
  auto f = [&](double t) { return std::pow(t, b - 1) * E(a, b, c * std::pow(t, a)); };
  const auto d = rl_derivative(sample_grid(f, 1.0, 2000), a);
  const RLMLParams p{a, b, 1, 1, c};
  for (size_t i = 200; i + 1 < d.size(); i += 200)
    EXPECT_NEAR(d.values[i], rl_of_ml(RLMLKind::left_derivative, p, d.t(i)), 2e-3) << d.t(i);
  // the exponential-type form reduces to b = 1
  const double x = 0.7;
  EXPECT_NEAR(rl_of_ml(RLMLKind::left_derivative_exp, RLMLParams{a, 1, 1, 1, c}, x),
              rl_of_ml(RLMLKind::left_derivative, RLMLParams{a, 1, 1, 1, c}, x), 1e-13);
}

TEST(MLRules, RightIntegralByQuadrature) {
  const double a = 0.6, b = 1.5, c = -1.0, x = 2.0;
  auto phi = [&](double t) { return std::pow(t, -a - b) * E(a, b, c * std::pow(t, -a)); };
  QuadSpec spec;
  spec.abs_tol = 1e-11;
  spec.max_upper_limit = 1e5;
  const auto r = weyl_integral_numeric(phi, a, x, spec);
  EXPECT_NEAR(r.value, rl_of_ml(RLMLKind::right_integral, RLMLParams{a, b, 1, 1, c}, x), 1e-7);
  auto phi1 = [&](double t) { return std::pow(t, -a - 1) * E(a, 1, c * std::pow(t, -a)); };
  EXPECT_NEAR(weyl_integral_numeric(phi1, a, x, spec).value,
              rl_of_ml(RLMLKind::right_integral_exp, RLMLParams{a, 1, 1, 1, c}, x), 1e-7);
}

TEST(MLRules, PrabhakarLeftIntegral) {
  // I^a [t^{g-1} E^d_{b,g}(c t^b)] = x^{a+g-1} E^d_{b,a+g}(c x^b)
  const double a = 0.7, b = 0.8, g = 1.3, d = 1.6, c = -0.9, x = 1.2;
  auto f = [&](double t) {
    return std::pow(t, g - 1) * ml_prabhakar(MLParams{b, g, d}, c * std::pow(t, b)).value.real();
  };
  EXPECT_NEAR(rl_quad(f, a, x), rl_of_ml(RLMLKind::prabhakar_left_integral, RLMLParams{a, b, g, d, c}, x), 1e-8);
}

TEST(MLRules, PrabhakarDerivativeInvertsIntegral) {
  // D^a I^a = identity on the Prabhakar family
  const double a = 0.4, b = 0.9, g = 1.2, d = 0.7, c = 1.1, x = 0.8;
  const RLMLParams p{a, b, g, d, c};
  const double base = std::pow(x, g - 1) * ml_prabhakar(MLParams{b, g, d}, c * std::pow(x, b)).value.real();
  // derivative of order a applied to exponent a + g gives back exponent g
  const RLMLParams shifted{a, b, a + g, d, c};
  EXPECT_NEAR(rl_of_ml(RLMLKind::prabhakar_left_derivative, shifted, x), base, 1e-12);
  EXPECT_NEAR(rl_of_ml(RLMLKind::prabhakar_right_derivative, RLMLParams{a, b, g, d, c}, x),
              std::pow(x, -g) * ml_prabhakar(MLParams{b, g - a, d}, c * std::pow(x, -b)).value.real(), 1e-13);
  EXPECT_NEAR(rl_of_ml(RLMLKind::prabhakar_right_integral, p, x),
              std::pow(x, -g) * ml_prabhakar(MLParams{b, a + g, d}, c * std::pow(x, -b)).value.real(), 1e-13);
}

TEST(MLRules, RightDerivativeByQuadrature) {
  // D_-^a phi = -d/dx I_-^{1-a} phi for a in (0,1)
  const double a = 0.4, b = 1.6, c = -1.0, x = 1.5, h = 1e-3;
  auto phi = [&](double t) { return std::pow(t, a - b) * E(a, b, c * std::pow(t, -a)); };
  QuadSpec spec;
  spec.abs_tol = 1e-13;
  spec.max_upper_limit = 1e6;
  auto I = [&](double y) { return weyl_integral_numeric(phi, 1 - a, y, spec).value; };
  const double num = -(I(x + h) - I(x - h)) / (2 * h);
  EXPECT_NEAR(num, rl_of_ml(RLMLKind::right_derivative, RLMLParams{a, b, 1, 1, c}, x), 1e-5);
}

TEST(MLRules, Domain) {
  EXPECT_THROW(rl_of_ml(RLMLKind::left_integral, RLMLParams{}, 0.0), domain_error);
  EXPECT_THROW(rl_of_ml(RLMLKind::left_integral_difference, RLMLParams{0.5, 1, 1, 1, 0.0}, 1.0), domain_error);
  EXPECT_THROW(rl_of_ml(RLMLKind::left_integral, RLMLParams{-0.5, 1, 1, 1, 1}, 1.0), domain_error);
}
