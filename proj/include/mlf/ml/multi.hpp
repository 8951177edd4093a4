#pragma once

#include <cmath>
#include <complex>

#include "mlf/ml/series.hpp"
#include "mlf/ml/types.hpp"
#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"

namespace mlf {

/// Multi-index function sum_k z^k / prod_j Gamma(mu_j + k / rho_j).
inline EvalReport ml_multiindex(const MultiIndexParams& p, cplx z, double tol = 1e-15) {
  detail::require(!p.rho.empty() && p.rho.size() == p.mu.size(),
                  "ml_multiindex: rho and mu must be non-empty and of equal length");
  for (double r : p.rho) detail::require(r > 0.0, "ml_multiindex: rho_j must be positive");
  detail::SeriesOptions opt;
  opt.tol = tol;
  opt.max_terms = 5000;
  opt.regime = "ml_multiindex";
  return detail::power_series(
      z,
      [&](int k) {
        double l = 0.0;
        int sign = 1;
        for (size_t j = 0; j < p.rho.size(); ++j) {
          const double x = p.mu[j] + k / p.rho[j];
          if (is_nonpositive_integer(x)) return detail::LogCoef{0.0, 0};
          int sg;
          l -= lgamma_abs(x, &sg);
          sign *= sg;
        }
        return detail::LogCoef{l, sign};
      },
      opt);
}

/// Kilbas-Saigo function sum_k c_k z^k with
/// c_k = prod_{i<k} Gamma(alpha (i m + beta) + 1) / Gamma(alpha (i m + beta + 1) + 1).
inline EvalReport ml_kilbas_saigo(double alpha, double m, double beta, cplx z, double tol = 1e-15) {
  detail::require(alpha > 0.0 && m > 0.0, "ml_kilbas_saigo: alpha and m must be positive");
  detail::SeriesOptions opt;
  opt.tol = tol;
  opt.max_terms = 5000;
  opt.regime = "ml_kilbas_saigo";
  double lc = 0.0;
  int sc = 1;
  int done = 0;  // c_done is current
  return detail::power_series(
      z,
      [&](int k) {
        while (done < k) {
          const double num = alpha * (done * m + beta) + 1.0;
          const double den = alpha * (done * m + beta + 1.0) + 1.0;
          if (is_nonpositive_integer(num)) throw pole_error("ml_kilbas_saigo: Gamma argument at a pole");
          if (is_nonpositive_integer(den)) return detail::LogCoef{0.0, 0, true};
          int s1, s2;
          lc += lgamma_abs(num, &s1) - lgamma_abs(den, &s2);
          sc *= s1 * s2;
          ++done;
        }
        return detail::LogCoef{lc, sc};
      },
      opt);
}

}  // namespace mlf
