#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "mlf/numerics/errors.hpp"

namespace mlf {

using cplx = std::complex<double>;

/// sin(pi x) with exact zeros at the integers.
inline double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);  // (-2, 2)
  if (r > 1.0) r -= 2.0;
  if (r <= -1.0) r += 2.0;
  // r in (-1, 1]
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

/// cos(pi x) with exact zeros at the half-integers.
inline double cos_pi(double x) { return sin_pi(x + 0.5); }

/// True when x is 0, -1, -2, ...
inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

namespace detail {

// Lanczos approximation, g = 7, n = 9.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_p[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

template <class T>
T lanczos_sum(const T& zm1) {
  T x = T(lanczos_p[0]);
  for (int i = 1; i < 9; ++i) x += lanczos_p[i] / (zm1 + double(i));
  return x;
}

inline constexpr double half_log_two_pi = 0.91893853320467274178;

// Stirling correction log Gamma(x) - [(x - 1/2) log x - x + log sqrt(2 pi)], x >= 10.
inline double stirling_tail(double x) {
  const double r = 1.0 / x, r2 = r * r;
  return r * (1.0 / 12 -
              r2 * (1.0 / 360 -
                    r2 * (1.0 / 1260 -
                          r2 * (1.0 / 1680 - r2 * (1.0 / 1188 - r2 * (691.0 / 360360 - r2 * (1.0 / 156)))))));
}

inline double lgamma_stirling(double x) {
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + stirling_tail(x);
}

}  // namespace detail

/// Gamma function on the reals. Throws pole_error at 0, -1, -2, ...
inline double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) throw pole_error("gamma_fn: pole at non-positive integer");
  if (x < 0.5) {
    const double s = sin_pi(x);
    return std::numbers::pi / (s * gamma_fn(1.0 - x));
  }
  if (x == std::floor(x) && x <= 30.0) {
    double f = 1.0;
    for (int k = 2; k < int(x); ++k) f *= k;
    return f;
  }
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  if (x >= 12.0) {
    // x^{x-1/2} e^{-x} in two halves keeps every factor within one rounding of exact
    const double p = std::pow(x, 0.5 * x - 0.25);
    return std::sqrt(2.0 * std::numbers::pi) * p * (p * std::exp(-x)) * std::exp(detail::stirling_tail(x));
  }
  const double zm1 = x - 1.0;
  const double t = zm1 + detail::lanczos_g + 0.5;
  const double p = std::pow(t, 0.5 * (zm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * detail::lanczos_sum(zm1) * (p * std::exp(-t)) * p;
}

/// log|Gamma(x)|; *sign receives the sign of Gamma(x). Throws at poles.
inline double lgamma_abs(double x, int* sign = nullptr) {
  if (is_nonpositive_integer(x)) throw pole_error("lgamma: pole at non-positive integer");
  if (sign) *sign = 1;
  if (x >= 10.0) return detail::lgamma_stirling(x);
  if (x >= 0.5) return std::log(gamma_fn(x));
  const double s = sin_pi(x);
  if (sign && s < 0) *sign = -1;
  return std::log(std::numbers::pi / std::abs(s)) - lgamma_abs(1.0 - x);
}

/// 1/Gamma(x), zero at the poles of Gamma.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) {
    int sg;
    return std::exp(-lgamma_abs(x, &sg));
  }
  if (x < -170.0) {
    int sg;
    double l = lgamma_abs(x, &sg);
    return sg * std::exp(-l);
  }
  return 1.0 / gamma_fn(x);
}

namespace detail {

// log(sin(pi z)) computed without overflow for large |Im z|.
inline cplx log_sin_pi(cplx z) {
  const double x = z.real(), y = z.imag();
  if (std::abs(y) < 20.0) {
    const cplx s(sin_pi(x) * std::cosh(std::numbers::pi * y),
                 cos_pi(x) * std::sinh(std::numbers::pi * y));
    return std::log(s);
  }
  if (y < 0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
  const cplx e2(cos_pi(2 * x) * std::exp(-2 * std::numbers::pi * y),
                sin_pi(2 * x) * std::exp(-2 * std::numbers::pi * y));
  const cplx lead(-std::numbers::ln2 + std::numbers::pi * y,
                  std::numbers::pi / 2 - std::numbers::pi * std::remainder(x, 2.0));
  return lead + std::log(1.0 - e2);
}

}  // namespace detail

/// A logarithm of Gamma(z): exp() of it recovers Gamma(z), but the imaginary part is not
/// the principal log-gamma branch. Throws at the poles.
inline cplx lgamma_c(cplx z) {
  if (z.imag() == 0.0) {
    int sg;
    const double l = lgamma_abs(z.real(), &sg);
    return {l, sg < 0 ? std::numbers::pi : 0.0};
  }
  if (z.real() < 0.5) {
    return std::log(std::numbers::pi) - detail::log_sin_pi(z) - lgamma_c(1.0 - z);
  }
  const cplx zm1 = z - 1.0;
  const cplx t = zm1 + detail::lanczos_g + 0.5;
  return detail::half_log_two_pi + (zm1 + 0.5) * std::log(t) - t +
         std::log(detail::lanczos_sum(zm1));
}

/// log(1/Gamma(z)), with real part -inf at the poles.
inline cplx log_rgamma_c(cplx z) {
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
    return {-std::numeric_limits<double>::infinity(), 0.0};
  return -lgamma_c(z);
}

/// Complex Gamma. Throws pole_error at non-positive integers.
inline cplx gamma_fn(cplx z) {
  if (z.imag() == 0.0) return gamma_fn(z.real());
  return std::exp(lgamma_c(z));
}

/// Complex 1/Gamma, zero at the poles.
inline cplx rgamma(cplx z) {
  if (z.imag() == 0.0) return rgamma(z.real());
  return std::exp(-lgamma_c(z));
}

/// Digamma for x > 0.
inline double digamma(double x) {
  detail::require(x > 0.0, "digamma: x must be positive");
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double r2 = 1.0 / (x * x);
  const double s =
      r2 * (1.0 / 12 -
            r2 * (1.0 / 120 -
                  r2 * (1.0 / 252 - r2 * (1.0 / 240 - r2 * (1.0 / 132 - r2 * (691.0 / 32760 - r2 / 12))))));
  return acc + std::log(x) - 0.5 / x - s;
}

/// Lower incomplete gamma (not normalized), a > 0, x >= 0.
inline double lower_inc_gamma(double a, double x) {
  detail::require(a > 0.0, "lower_inc_gamma: a must be positive");
  detail::require(x >= 0.0, "lower_inc_gamma: x must be non-negative");
  if (x == 0.0) return 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  const double lpref = a * std::log(x) - x;
  if (x < a + 1.0) {
    double term = 1.0 / a, sum = term;
    for (int n = 1; n < 10000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (std::abs(term) < std::abs(sum) * eps * 0.5) break;
    }
    return std::exp(lpref) * sum;
  }
  // Continued fraction for the upper function, modified Lentz.
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return gamma_fn(a) - std::exp(lpref) * h;
}

/// Complementary error function; with `scaled`, returns exp(x^2) erfc(x).
/// The unscaled value comes from std::erfc.
inline double erfc_fn(double x, bool scaled = false) {
  if (!scaled) return std::erfc(x);
  if (x < 0.0) {
    const double e = std::exp(x * x);
    return 2.0 * e - erfc_fn(-x, true);
  }
  if (x < 2.0) return std::exp(x * x) * std::erfc(x);
  // exp(x^2) erfc(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  const double tiny = 1e-300, eps = std::numeric_limits<double>::epsilon();
  double f = x, c = x, d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double an = 0.5 * n;
    d = x + an * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = c * d;
    f *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

}  // namespace mlf
