#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "mlf/ml/eval.hpp"
#include "mlf/ml/prabhakar.hpp"
#include "mlf/numerics/gamma.hpp"
#include "mlf/numerics/random.hpp"

namespace mlf {

/// alpha: ML order; eta, delta: gamma shape and scale of the generalized law;
/// a: density scale (Laplace transform (1 + a t^alpha)^{-eta}); q: pathway parameter.
struct DistParams {
  double alpha = 1.0;
  double eta = 1.0;
  double delta = 1.0;
  double a = 1.0;
  double q = 2.0;
};

struct SampleBatch {
  std::vector<double> draws;
  std::uint64_t seed = 0;
};

namespace detail {

inline void check_ml_alpha(double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "ML distribution: alpha must be in (0, 1]");
}

}  // namespace detail

/// 1 - E_alpha(-x^alpha), computed as x^alpha E_{alpha,alpha+1}(-x^alpha) to avoid cancellation.
inline double ml_cdf(double alpha, double x) {
  detail::check_ml_alpha(alpha);
  if (x <= 0.0) return 0.0;
  const double u = std::pow(x, alpha);
  return u * ml_eval(MLParams{alpha, alpha + 1.0, 1.0}, -u).value.real();
}

/// x^{alpha-1} E_{alpha,alpha}(-x^alpha), x > 0.
inline double ml_pdf(double alpha, double x) {
  detail::check_ml_alpha(alpha);
  detail::require(x > 0.0, "ml_pdf: x must be positive");
  const double u = std::pow(x, alpha);
  return std::pow(x, alpha - 1.0) * ml_eval(MLParams{alpha, alpha, 1.0}, -u).value.real();
}

/// Generalized ML density x^{alpha eta - 1} / a^eta E^eta_{alpha, alpha eta}(-x^alpha / a).
inline double genml_pdf(const DistParams& p, double x) {
  detail::check_ml_alpha(p.alpha);
  detail::require(p.eta > 0.0 && p.a > 0.0, "genml_pdf: eta and a must be positive");
  detail::require(x > 0.0, "genml_pdf: x must be positive");
  const double u = std::pow(x, p.alpha) / p.a;
  const double e = ml_prabhakar(MLParams{p.alpha, p.alpha * p.eta, p.eta}, -u).value.real();
  return std::exp((p.alpha * p.eta - 1.0) * std::log(x) - p.eta * std::log(p.a)) * e;
}

/// E[x^h] = Gamma(1 - h/alpha) Gamma(1 + h/alpha) / Gamma(1 - h), -alpha < h < alpha.
inline double ml_moment(double alpha, double h) {
  detail::check_ml_alpha(alpha);
  detail::require(h > -alpha && h < alpha, "ml_moment: h outside (-alpha, alpha)");
  return gamma_fn(1.0 - h / alpha) * gamma_fn(1.0 + h / alpha) / gamma_fn(1.0 - h);
}

/// E[w^h] for the generalized law, -alpha eta < h < alpha.
inline double genml_moment(const DistParams& p, double h) {
  detail::check_ml_alpha(p.alpha);
  detail::require(p.eta > 0.0 && p.delta > 0.0, "genml_moment: eta and delta must be positive");
  detail::require(h > -p.alpha * p.eta && h < p.alpha, "genml_moment: h outside (-alpha eta, alpha)");
  const double r = h / p.alpha;
  return gamma_fn(p.eta + r) * gamma_fn(1.0 - r) * std::pow(p.delta, r) /
         (gamma_fn(p.eta) * gamma_fn(1.0 - h));
}

/// ML draw: stable(alpha) times exponential^{1/alpha}; Laplace transform 1/(1 + t^alpha).
inline double ml_sample(double alpha, RandomStream& rng) {
  detail::check_ml_alpha(alpha);
  if (alpha == 1.0) return rng.exponential();
  const double y = stable_sample(rng, alpha);
  return y * std::pow(rng.exponential(), 1.0 / alpha);
}

/// Generalized ML draw: stable(alpha) times gamma(eta, delta)^{1/alpha};
/// Laplace transform (1 + delta t^alpha)^{-eta}.
inline double genml_sample(const DistParams& p, RandomStream& rng) {
  detail::check_ml_alpha(p.alpha);
  detail::require(p.eta > 0.0 && p.delta > 0.0, "genml_sample: eta and delta must be positive");
  const double v = rng.gamma(p.eta, p.delta);
  if (p.alpha == 1.0) return v;
  return stable_sample(rng, p.alpha) * std::pow(v, 1.0 / p.alpha);
}

/// x_1 x_2^{1/a_1} x_3^{1/(a_1 a_2)} ... with independent stable(a_i) draws;
/// Laplace transform exp(-t^{a_1 a_2 ... a_p}).
inline double levy_product_sample(const std::vector<double>& alphas, RandomStream& rng) {
  detail::require(!alphas.empty(), "levy_product_sample: need at least one alpha");
  double u = 1.0, power = 1.0;
  for (double a : alphas) {
    detail::require(a > 0.0 && a < 1.0, "levy_product_sample: each alpha must be in (0, 1)");
    u *= std::pow(stable_sample(rng, a), power);
    power /= a;
  }
  return u;
}

/// Draws n values with a fresh stream; `draw(rng)` produces one value.
template <class Draw>
SampleBatch sample_batch(Draw&& draw, std::size_t n, std::uint64_t seed) {
  RandomStream rng(seed);
  SampleBatch b;
  b.seed = seed;
  b.draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) b.draws.push_back(draw(rng));
  return b;
}

struct LogMoments {
  double E_ln_w;  // generalized ML variable
  double E_ln_u;  // positive stable factor
  double E_ln_v;  // gamma factor
};

inline LogMoments log_moments(const DistParams& p) {
  detail::check_ml_alpha(p.alpha);
  detail::require(p.eta > 0.0 && p.delta > 0.0, "log_moments: eta and delta must be positive");
  const double psi1 = digamma(1.0), psie = digamma(p.eta), ld = std::log(p.delta);
  return {psie / p.alpha - psi1 / p.alpha + psi1 + ld / p.alpha, -psi1 / p.alpha + psi1, psie + ld};
}

}  // namespace mlf
