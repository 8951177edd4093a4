#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mlf/numerics/errors.hpp"

namespace mlf {

struct MeanSE {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean
};

/// Sample mean of g(x) with its standard error.
template <class G>
MeanSE mean_se(const std::vector<double>& xs, G&& g) {
  detail::require(xs.size() >= 2, "mean_se: need at least two samples");
  double m = 0.0, s2 = 0.0;
  size_t n = 0;
  for (double x : xs) {  // Welford
    const double v = g(x);
    ++n;
    const double d = v - m;
    m += d / double(n);
    s2 += d * (v - m);
  }
  return {m, std::sqrt(s2 / double(n - 1) / double(n))};
}

inline MeanSE mean_se(const std::vector<double>& xs) {
  return mean_se(xs, [](double x) { return x; });
}

/// Kolmogorov-Smirnov statistic sup |F_n - F|.
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf&& cdf) {
  detail::require(!xs.empty(), "ks_statistic: empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = double(xs.size());
  double d = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - double(i) / n, double(i + 1) / n - f});
  }
  return d;
}

/// Asymptotic 1% critical value of the KS statistic.
inline double ks_critical_1pct(size_t n) { return 1.63 / std::sqrt(double(n)); }

}  // namespace mlf
