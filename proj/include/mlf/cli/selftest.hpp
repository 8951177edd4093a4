#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "mlf/cli/output.hpp"
#include "mlf/mlf.hpp"

namespace mlf::cli {

struct CheckOutcome {
  double value;
  double ref;
  double tol;  // absolute
};

struct Check {
  std::string name;
  std::function<CheckOutcome()> run;
};

namespace detail {

inline CheckOutcome rel(double v, double ref, double rtol) { return {v, ref, rtol * std::abs(ref)}; }

// Monte-Carlo mean of g over n draws, compared with ref at four standard errors.
template <class Draw, class G>
CheckOutcome mc(Draw draw, G g, double ref, size_t n, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> xs(n);
  for (auto& x : xs) x = draw(rng);
  const auto m = mean_se(xs, g);
  return {m.mean, ref, 4.0 * m.se};
}

inline double erfcx_asymptotic(double x) {
  // 1/(x sqrt(pi)) sum (-1)^k (2k-1)!! / (2x^2)^k
  double s = 1.0, t = 1.0;
  for (int k = 1; k < 12; ++k) {
    t *= -(2.0 * k - 1.0) / (2.0 * x * x);
    s += t;
  }
  return s / (x * std::sqrt(std::numbers::pi));
}

inline double grid_at(const Grid1D& g, double t) { return g.values[size_t(std::lround((t - g.t0) / g.dt))]; }

}  // namespace detail

inline std::vector<Check> selftest_checks() {
  using detail::mc;
  using detail::rel;
  const double pi = std::numbers::pi, e = std::numbers::e, euler = std::numbers::egamma;
  auto E = [](double a, double b, cplx z) { return ml_eval(MLParams{a, b, 1.0}, z).value.real(); };
  std::vector<Check> c;
  auto add = [&](std::string n, std::function<CheckOutcome()> f) { c.push_back({std::move(n), std::move(f)}); };

  // special functions and integrators
  add("gamma(0.5) = sqrt(pi)", [=] { return rel(gamma_fn(0.5), std::sqrt(pi), 1e-14); });
  add("digamma(1) = -euler", [=] { return rel(digamma(1.0), -euler, 1e-13); });
  add("digamma(2) = 1 - euler", [=] { return rel(digamma(2.0), 1.0 - euler, 1e-13); });
  add("digamma(0.5) = -euler - 2 ln 2", [=] { return rel(digamma(0.5), -euler - 2.0 * std::log(2.0), 1e-13); });
  add("lower_inc_gamma(1,1) = 1 - 1/e", [=] { return rel(lower_inc_gamma(1.0, 1.0), 1.0 - 1.0 / e, 1e-12); });
  add("lower_inc_gamma(0.5,4) = sqrt(pi) erf(2)",
      [=] { return rel(lower_inc_gamma(0.5, 4.0), std::sqrt(pi) * std::erf(2.0), 1e-12); });
  add("erfc(1)", [] { return rel(erfc_fn(1.0), 0.157299207050285130658779364917, 1e-14); });
  add("erfcx(50) asymptotic", [] { return rel(erfc_fn(50.0, true), detail::erfcx_asymptotic(50.0), 1e-13); });
  add("int exp(-t^2) cos t", [=] {
    auto r = integrate_cosine([](double t) { return std::exp(-t * t); }, 1.0);
    return rel(r.value, 0.5 * std::sqrt(pi) * std::exp(-0.25), 1e-10);
  });
  add("talbot 1/(1+s) at t=1", [=] {
    return rel(talbot_ilt([](cplx s) { return 1.0 / (1.0 + s); }, 1.0).value, 1.0 / e, 1e-9);
  });
  add("talbot s^-0.5 at t=1", [=] {
    return rel(talbot_ilt([](cplx s) { return std::pow(s, -0.5); }, 1.0).value, 1.0 / std::sqrt(pi), 1e-9);
  });
  add("stable(0.5) E[exp(-u)] = exp(-1)",
      [=] { return mc([](RandomStream& r) { return stable_sample(r, 0.5); }, [](double u) { return std::exp(-u); },
                      1.0 / e, 100000, 11); });
  add("stable(0.9) E[exp(-u/2)] = exp(-0.5^0.9)", [] {
    return mc([](RandomStream& r) { return stable_sample(r, 0.9); }, [](double u) { return std::exp(-0.5 * u); },
              std::exp(-std::pow(0.5, 0.9)), 100000, 12);
  });
  add("stable(0.5) E[u^0.2] = G(0.6)/G(0.8)", [] {
    return mc([](RandomStream& r) { return stable_sample(r, 0.5); }, [](double u) { return std::pow(u, 0.2); },
              std::tgamma(0.6) / std::tgamma(0.8), 100000, 13);
  });

  // Mittag-Leffler evaluation
  add("series E_{1,1}(1) = e", [=] { return rel(ml_series(MLParams{1, 1, 1}, 1.0).value.real(), e, 1e-14); });
  add("series E_{1,2}(1) = e - 1", [=] { return rel(ml_series(MLParams{1, 2, 1}, 1.0).value.real(), e - 1, 1e-14); });
  add("asymptotic E_{1/2}(-50) = erfcx(50)", [] {
    return rel(ml_asymptotic(MLParams{0.5, 1, 1}, -50.0).value.real(), detail::erfcx_asymptotic(50.0), 1e-10);
  });
  add("asymptotic E_{1/2}(25) / erfcx(-25)", [] {
    const double v = ml_asymptotic(MLParams{0.5, 1, 1}, 25.0).value.real();
    const double ref = std::exp(625.0) * std::erfc(-25.0);
    return CheckOutcome{v / ref, 1.0, 1e-8};
  });
  add("asymptotic E_{0.9}(-100) vs inverse powers", [] {
    double s = 0.0;
    for (int k = 1; k <= 8; ++k) s -= std::pow(-100.0, -k) / std::tgamma(1.0 - 0.9 * k);
    return CheckOutcome{ml_asymptotic(MLParams{0.9, 1, 1}, -100.0).value.real(), s, 1e-7};
  });
  add("mellin_barnes E_{1/2}(-1) = e erfc(1)",
      [=] { return rel(ml_mellin_barnes(MLParams{0.5, 1, 1}, -1.0).value.real(), e * std::erfc(1.0), 1e-10); });
  add("mellin_barnes E_1(-2) = exp(-2)",
      [] { return rel(ml_mellin_barnes(MLParams{1, 1, 1}, -2.0).value.real(), std::exp(-2.0), 1e-10); });
  add("mellin_barnes E_{1.5,2}(-3) vs series", [] {
    const MLParams p{1.5, 2, 1};
    return CheckOutcome{ml_mellin_barnes(p, -3.0).value.real(), ml_series(p, -3.0).value.real(), 1e-8};
  });
  add("E_2(-(pi/2)^2) = cos(pi/2)", [=] { return CheckOutcome{E(2, 1, -pi * pi / 4), 0.0, 1e-12}; });
  add("E_4(1) = (cos 1 + cosh 1)/2", [=] { return rel(E(4, 1, 1.0), 0.5 * (std::cos(1.0) + std::cosh(1.0)), 1e-12); });
  add("E_{0.7,1.3}(-5) series vs mellin_barnes", [] {
    const MLParams p{0.7, 1.3, 1};
    return CheckOutcome{ml_series(p, -5.0).value.real(), ml_mellin_barnes(p, -5.0).value.real(), 1e-9};
  });
  add("reduce_order E_2(4), m=2 = cosh 2",
      [] { return rel(ml_reduce_order(MLParams{2, 1, 1}, 4.0, 2).value.real(), std::cosh(2.0), 1e-12); });
  add("reduce_order E_3(1), m=3", [=] {
    const double ref = (e + 2.0 * std::exp(-0.5) * std::cos(std::sqrt(3.0) / 2.0)) / 3.0;
    return rel(ml_reduce_order(MLParams{3, 1, 1}, 1.0, 3).value.real(), ref, 1e-12);
  });
  add("prabhakar E^2_{1,3}(1) = 1F1(2;3;1)/2", [] {
    double s = 0.0, t = 1.0;
    for (int k = 0; k < 60; ++k) {
      s += t;
      t *= (2.0 + k) / ((3.0 + k) * (k + 1.0));
    }
    return rel(ml_prabhakar(MLParams{1, 3, 2}, 1.0).value.real(), s / 2.0, 1e-12);
  });
  add("derivative E_{1/2}'(-1) vs finite difference", [=] {
    const double h = 1e-5;
    const double fd = (E(0.5, 1, -1.0 + h) - E(0.5, 1, -1.0 - h)) / (2 * h);
    return CheckOutcome{ml_derivative(MLParams{0.5, 1, 1}, -1.0).value.real(), fd, 1e-6};
  });
  add("shift r=2 at (1,1,1) = e - 2", [=] { return rel(ml_shift(MLParams{1, 1, 1}, 1.0, 2).value.real(), e - 2, 1e-13); });
  auto bessel_sum = [] {
    double s = 0.0, t = 1.0;
    for (int k = 0; k < 50; ++k) {
      s += t;
      t /= double(k + 1) * double(k + 1);
    }
    return s;
  };
  add("wright_phi(1,1;1) = sum 1/k!^2", [=] { return rel(wright_phi(1, 1, 1.0).value.real(), bessel_sum(), 1e-14); });
  add("wright_psi 1psi1 (1,1;2,1) at 1 = e - 1", [=] {
    return rel(wright_psi(WrightParams{{{1.0, 1.0}}, {{2.0, 1.0}}}, 1.0).value.real(), e - 1, 1e-13);
  });
  add("multiindex m=1 = E_{0.6,1.2}(-2)", [=] {
    return rel(ml_multiindex(MultiIndexParams{{1 / 0.6}, {1.2}}, -2.0).value.real(), E(0.6, 1.2, -2.0), 1e-12);
  });
  add("multiindex m=2 at 1 = sum 1/k!^2", [=] {
    return rel(ml_multiindex(MultiIndexParams{{1, 1}, {1, 1}}, 1.0).value.real(), bessel_sum(), 1e-14);
  });
  add("kilbas_saigo m=1 = G(1.5) E_{1/2,3/2}(-1)", [=] {
    return rel(ml_kilbas_saigo(0.5, 1, 1, -1.0).value.real(), std::tgamma(1.5) * E(0.5, 1.5, -1.0), 1e-12);
  });
  add("kilbas_saigo (1,1,0) at 1 = e", [=] { return rel(ml_kilbas_saigo(1, 1, 0, 1.0).value.real(), e, 1e-14); });
  add("m_series empty at alpha=1, z=1 = e", [=] { return rel(m_series({}, {}, 1, 1.0).value.real(), e, 1e-14); });
  add("rational identity n=2 at 1 = e (1 + erf 1)",
      [=] { return rel(ml_rational_identity(2, 1.0), e * (1 + std::erf(1.0)), 1e-12); });
  add("rational identity n=3 at 1 = E_{1/3}(1)",
      [=] { return rel(ml_rational_identity(3, 1.0), E(1.0 / 3.0, 1, 1.0), 1e-9); });

  // fractional operators
  auto grid = [](auto f) { return sample_grid(f, 2.0, 4096); };
  add("rl_integral(1, 0.5) at 1", [=] {
    return CheckOutcome{detail::grid_at(rl_integral(grid([](double) { return 1.0; }), 0.5), 1.0),
                        1.0 / std::tgamma(1.5), 1e-5};
  });
  add("rl_integral(t^0.3, 0.7) at 2", [=] {
    return CheckOutcome{detail::grid_at(rl_integral(grid([](double t) { return std::pow(t, 0.3); }), 0.7), 2.0),
                        std::tgamma(1.3) * 2.0, 1e-5};
  });
  add("rl_derivative(1, 0.5) at 1", [=] {
    return CheckOutcome{detail::grid_at(rl_derivative(grid([](double) { return 1.0; }), 0.5), 1.0),
                        1.0 / std::sqrt(pi), 1e-5};
  });
  add("rl_derivative(t, 0.5) at 1", [=] {
    return CheckOutcome{detail::grid_at(rl_derivative(grid([](double t) { return t; }), 0.5), 1.0),
                        1.0 / std::tgamma(1.5), 1e-5};
  });
  add("caputo(t, 0.5) at 1", [=] {
    return CheckOutcome{detail::grid_at(caputo_derivative(grid([](double t) { return t; }), 0.5), 1.0),
                        1.0 / std::tgamma(1.5), 1e-5};
  });
  add("RL integral of E_{1/2}(t^{1/2}) at 1 = E_{1/2}(1) - 1", [=] {
    return rel(rl_of_ml(RLMLKind::left_integral_difference_exp, RLMLParams{0.5, 1, 1, 1, 1}, 1.0),
               e * (1 + std::erf(1.0)) - 1, 1e-12);
  });

  // distributions
  add("ml_cdf(1, 1) = 1 - 1/e", [=] { return rel(ml_cdf(1, 1), 1 - 1 / e, 1e-13); });
  add("ml_cdf(0.5, 1) = 1 - e erfc(1)", [=] { return rel(ml_cdf(0.5, 1), 1 - e * std::erfc(1.0), 1e-12); });
  add("ml_pdf(1, 0.5) = exp(-0.5)", [] { return rel(ml_pdf(1, 0.5), std::exp(-0.5), 1e-13); });
  add("genml_pdf(1, 2) at 1 = 1/e", [=] { return rel(genml_pdf(DistParams{1, 2, 1, 1}, 1.0), 1 / e, 1e-12); });
  add("ml_moment(0.75, 0.5)", [] {
    return rel(ml_moment(0.75, 0.5), std::tgamma(1.0 / 3) * std::tgamma(5.0 / 3) / std::tgamma(0.5), 1e-13);
  });
  add("ml_sample(0.5) E[exp(-u)] = 1/2", [] {
    return mc([](RandomStream& r) { return ml_sample(0.5, r); }, [](double u) { return std::exp(-u); }, 0.5, 100000, 21);
  });
  add("genml_sample(0.5,2,1) E[exp(-w)] = 1/4", [] {
    return mc([](RandomStream& r) { return genml_sample(DistParams{0.5, 2, 1}, r); },
              [](double u) { return std::exp(-u); }, 0.25, 100000, 22);
  });
  add("levy product (0.8,0.75) E[exp(-u)] = 1/e", [=] {
    return mc([](RandomStream& r) { return levy_product_sample({0.8, 0.75}, r); },
              [](double u) { return std::exp(-u); }, 1 / e, 100000, 23);
  });
  add("log_moments alpha=1: E ln w = -euler",
      [=] { return rel(log_moments(DistParams{1, 1, 1}).E_ln_w, -euler, 1e-13); });
  add("log_moments alpha=0.5: E ln u = euler",
      [=] { return rel(log_moments(DistParams{0.5, 1, 1}).E_ln_u, euler, 1e-13); });
  add("ml_sample(0.7) E[ln u] vs log_moments", [] {
    return mc([](RandomStream& r) { return ml_sample(0.7, r); }, [](double u) { return std::log(u); },
              log_moments(DistParams{0.7, 1, 1}).E_ln_w, 100000, 24);
  });
  add("pathway q=1.001 at t=1", [=] {
    DistParams p{0.5, 1, 1, 1, 1.001};
    return CheckOutcome{pathway_laplace(p, 1.0), 1 / e, 1e-3};
  });
  add("linnik_cf(2, 1) = 1/2", [] { return rel(linnik_cf(2, 1), 0.5, 1e-15); });
  add("mlp_density(1, 2, 1) = 1/e", [=] { return rel(mlp_density(1, 2, 1), 1 / e, 1e-12); });
  add("mlp_cdf' = mlp_density at (0.7,1.5,0.8)", [] {
    const double h = 1e-5;
    const double fd = (mlp_cdf(0.7, 1.5, 0.8 + h) - mlp_cdf(0.7, 1.5, 0.8 - h)) / (2 * h);
    return CheckOutcome{fd, mlp_density(0.7, 1.5, 0.8), 1e-6};
  });
  add("EAR(1) a=0.5 stationary mean 1", [] {
    RandomStream rng(25);
    const auto xs = mlar1_simulate(1.0, 0.5, 0.0, 100000, rng);
    const auto m = mean_se(xs);
    // AR(1) dependence inflates the variance of the mean by (1 + a)/(1 - a).
    return CheckOutcome{m.mean, 1.0, 4.0 * m.se * std::sqrt(3.0)};
  });

  // kinetics, diffusion, relaxation
  add("kinetic_solution(0.5) at 1 = e erfc(1)",
      [=] { return rel(kinetic_solution(KineticParams{1, 1, 0.5}, 1.0), e * std::erfc(1.0), 1e-12); });
  add("kinetic_solution_power(1, mu=2) at 1 = 1 - 1/e",
      [=] { return rel(kinetic_solution_power(KineticParams{1, 1, 1, 2}, 1.0), 1 - 1 / e, 1e-12); });
  add("kinetic_volterra f=1 vs closed form", [] {
    const auto N = kinetic_volterra(sample_grid([](double) { return 1.0; }, 2.0, 4096), 1.0, 0.5);
    double err = 0.0;
    for (size_t i = 0; i < N.size(); i += 16)
      err = std::max(err, std::abs(N.values[i] - kinetic_solution(KineticParams{1, 1, 0.5}, N.t(i))));
    return CheckOutcome{err, 0.0, 1e-4};
  });
  add("kinetic_volterra f=t^0.5 vs closed form", [] {
    const auto N = kinetic_volterra(sample_grid([](double t) { return std::sqrt(t); }, 2.0, 4096), 1.0, 0.5);
    double err = 0.0;
    for (size_t i = 16; i < N.size(); i += 16)
      err = std::max(err, std::abs(N.values[i] - kinetic_solution_power(KineticParams{1, 1, 0.5, 1.5}, N.t(i))));
    return CheckOutcome{err, 0.0, 1e-4};
  });
  add("tfd_green beta=1 at x=0", [=] { return rel(tfd_green({2, 1, 1}, 0, 1), 0.5 / std::sqrt(pi), 1e-8); });
  add("tfd_green beta=1 at x=2", [=] { return rel(tfd_green({2, 1, 1}, 2, 1), 0.5 / std::sqrt(pi) / e, 1e-8); });
  add("sfd_green alpha=2 at x=0", [=] { return rel(sfd_green({2, 1, 1}, 0, 1), 0.5 / std::sqrt(pi), 1e-8); });
  add("sfd_green alpha=1 at x=0 = 1/pi", [=] { return rel(sfd_green({1, 1, 1}, 0, 1), 1 / pi, 1e-8); });
  add("three_term_relax a=0 = exp(-1)",
      [=] { return rel(three_term_relax(WaveParams{1, 0.5, 0.0}, 1.0, 1.0, 1.0), 1 / e, 1e-13); });
  add("three_term_relax (1,0.5,0.5,1,1,1) vs talbot", [] {
    const double tl = talbot_ilt([](cplx s) { return 1.0 / (s + 0.5 * std::sqrt(s) + 1.0); }, 1.0).value;
    return CheckOutcome{three_term_relax(WaveParams{1, 0.5, 0.5}, 1.0, 1.0, 1.0), tl, 1e-6};
  });
  add("three_term_relax (0.9,0.3,0.2,0.5,0.9,0.7) vs talbot", [] {
    const double tl = talbot_ilt(
        [](cplx s) { return std::pow(s, -0.1) / (std::pow(s, 0.9) + 0.2 * std::pow(s, 0.3) + 0.5); }, 0.7).value;
    return CheckOutcome{three_term_relax(WaveParams{0.9, 0.3, 0.2}, 0.5, 0.9, 0.7), tl, 1e-6};
  });
  add("wave_mode (1,0.5,0.3,1,0.1,2) k=1 t=1 vs talbot", [] {
    const double tl = talbot_ilt(
        [](cplx s) { return (1.0 + 0.3 / std::sqrt(s)) / (s + 0.3 * std::sqrt(s) + 0.9); }, 1.0).value;
    return CheckOutcome{wave_mode(WaveParams{1, 0.5, 0.3, 1, 0.1, 2}, 1.0, 1.0), tl, 1e-6};
  });
  add("berberan_h(0.5, 0) = 1/sqrt(pi)", [=] { return rel(berberan_h(0.5, 0), 1 / std::sqrt(pi), 1e-8); });
  add("berberan_h(0.5, 2) = exp(-1)/sqrt(pi)", [=] { return rel(berberan_h(0.5, 2), 1 / (e * std::sqrt(pi)), 1e-8); });
  add("int exp(-k) berberan_h(0.5, k) dk = E_{1/2}(-1)", [=] {
    auto r = integrate_semiinf([](double k) { return std::exp(-k) * berberan_h(0.5, k); });
    return CheckOutcome{r.value, e * std::erfc(1.0), 1e-5};
  });
  return c;
}

/// Runs every check, prints one PASS/FAIL line each and returns the number of failures.
inline int run_selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& ch : selftest_checks()) {
    bool ok = false;
    std::string detail_text;
    try {
      const auto r = ch.run();
      ok = std::isfinite(r.value) && std::abs(r.value - r.ref) <= r.tol;
      detail_text = "value=" + format_real(r.value) + " ref=" + format_real(r.ref) + " tol=" + format_real(r.tol);
    } catch (const std::exception& e) {
      detail_text = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    out << (ok ? "PASS " : "FAIL ") << ch.name << " " << detail_text << '\n';
  }
  out << (failures ? "selftest: " + std::to_string(failures) + " failed" : std::string("selftest: all passed"))
      << '\n';
  return failures;
}

}  // namespace mlf::cli
