#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <queue>
#include <type_traits>
#include <vector>

#include "mlf/numerics/errors.hpp"

namespace mlf {

/// Tolerances and limits for the adaptive integrators.
struct QuadSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  double max_upper_limit = 200.0;
};

template <class T>
struct QuadResult {
  T value{};
  double abs_err = 0.0;
  int evaluations = 0;
  bool converged = true;
};

namespace detail {

inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double gk_w[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double g_w[4] = {0.129484966168869693270611432679082,
                                  0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975,
                                  0.417959183673469387755102040816327};

template <class T>
struct Segment {
  double a, b;
  T value;
  double err;
  double floor;  // rounding level 50 eps int |f|
  bool operator<(const Segment& o) const { return err < o.err; }
};

// 15-point Kronrod rule with the QUADPACK error heuristic.
template <class F, class T>
Segment<T> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T fv[15];
  fv[7] = f(c);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * gk_x[j]);
    fv[14 - j] = f(c + h * gk_x[j]);
  }
  T k = gk_w[7] * fv[7];
  T g = g_w[3] * fv[7];
  double kabs = gk_w[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    k += gk_w[j] * (fv[j] + fv[14 - j]);
    kabs += gk_w[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) g += g_w[j / 2] * (fv[j] + fv[14 - j]);
  }
  const T mean = 0.5 * k;
  double asc = gk_w[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    asc += gk_w[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  const double ah = std::abs(h);
  double err = std::abs((k - g) * h);
  asc *= ah;
  kabs *= ah;
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  if (kabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(50 * eps * kabs, err);
  if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
  return {a, b, k * h, err, 50 * eps * kabs};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod over [points[0], points.back()] with the given breakpoints.
template <class F>
auto integrate_breaks(F&& f, const std::vector<double>& points, const QuadSpec& spec)
    -> QuadResult<std::decay_t<decltype(f(0.0))>> {
  using T = std::decay_t<decltype(f(0.0))>;
  QuadResult<T> out;
  std::priority_queue<detail::Segment<T>> heap;
  T total{};
  double err = 0.0, floor = 0.0;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] == points[i]) continue;
    auto s = detail::gk15<F, T>(f, points[i], points[i + 1]);
    out.evaluations += 15;
    total += s.value;
    err += s.err;
    floor += s.floor;
    heap.push(s);
  }
  int splits = 0;
  // Refinement stops at the tolerance or once the error is within twice the rounding floor.
  while (!heap.empty() && err > std::max({spec.abs_tol, spec.rel_tol * std::abs(total), 2.0 * floor})) {
    if (splits >= spec.max_subdivisions) {
      out.converged = false;
      break;
    }
    auto s = heap.top();
    const double m = 0.5 * (s.a + s.b);
    if (!(m > std::min(s.a, s.b) && m < std::max(s.a, s.b))) {
      out.converged = false;
      break;
    }
    heap.pop();
    auto l = detail::gk15<F, T>(f, s.a, m);
    auto r = detail::gk15<F, T>(f, m, s.b);
    out.evaluations += 30;
    total += l.value + r.value - s.value;
    err += l.err + r.err - s.err;
    floor += l.floor + r.floor - s.floor;
    heap.push(l);
    heap.push(r);
    ++splits;
  }
  // Recompute from the leaves to shed accumulated updates.
  total = T{};
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().err;
    heap.pop();
  }
  out.value = total;
  out.abs_err = err;
  if (!std::isfinite(std::abs(total))) out.converged = false;
  return out;
}

/// Adaptive Gauss-Kronrod over a finite interval.
template <class F>
auto integrate(F&& f, double a, double b, const QuadSpec& spec = {}) {
  return integrate_breaks(f, std::vector<double>{a, b}, spec);
}

namespace detail {

// Breakpoints on [u, v] whose spacing is at most max(1, distance from the origin).
inline std::vector<double> geometric_breaks(double u, double v, double unit = 1.0) {
  std::vector<double> pts{u};
  double x = u;
  while (x < v) {
    x = std::min(v, std::max(2.0 * x, x + unit));
    pts.push_back(x);
  }
  return pts;
}

// Wynn epsilon extrapolation of a sequence of partial sums.
template <class T>
T wynn_epsilon(const std::vector<T>& s, double* err) {
  const size_t n = s.size();
  if (n < 3) {
    if (err) *err = n >= 2 ? std::abs(s[n - 1] - s[n - 2]) : std::numeric_limits<double>::infinity();
    return s.back();
  }
  T best = s.back(), prev = s.back();
  double best_err = std::abs(s[n - 1] - s[n - 2]);
  std::vector<T> col_prev(n, T{});  // eps_{-1} = 0
  std::vector<T> col(s.begin(), s.end());
  for (size_t k = 1; k < n; ++k) {
    std::vector<T> next(n - k);
    bool ok = true;
    for (size_t j = 0; j + k < n; ++j) {
      const T d = col[j + 1] - col[j];
      if (std::abs(d) == 0.0) {
        ok = false;
        break;
      }
      next[j] = col_prev[j + 1] + T(1.0) / d;
    }
    if (!ok) break;
    col_prev = std::move(col);
    col = std::move(next);
    if (k % 2 == 0 && col.size() >= 2) {
      const T cand = col.back();
      const double e = std::abs(cand - col[col.size() - 2]) + std::abs(cand - prev);
      if (std::isfinite(std::abs(cand)) && e < best_err) {
        best_err = e;
        best = cand;
      }
      prev = cand;
    }
  }
  if (err) *err = best_err;
  return best;
}

}  // namespace detail

/// Integral of f over [lower, infinity).
/// Panels double in width out to spec.max_upper_limit; a geometric tail is extrapolated when
/// the panel sums decay algebraically, and its uncertainty enters abs_err.
template <class F>
auto integrate_semiinf(F&& f, const QuadSpec& spec = {}, double lower = 0.0)
    -> QuadResult<std::decay_t<decltype(f(0.0))>> {
  using T = std::decay_t<decltype(f(0.0))>;
  QuadResult<T> out;
  QuadSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 0.1;
  std::vector<T> panel;
  double a = lower, w = 1.0;
  T total{};
  int small = 0;
  while (panel.empty() || a + w <= lower + spec.max_upper_limit) {
    const double b = a + w;
    auto r = integrate(f, a, b, inner);
    out.evaluations += r.evaluations;
    out.abs_err += r.abs_err;
    out.converged = out.converged && r.converged;
    total += r.value;
    panel.push_back(r.value);
    const double scale = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (std::abs(r.value) + r.abs_err < 0.01 * scale && a - lower > 0.0) {
      if (++small >= 3) {
        out.value = total;
        return out;
      }
    } else {
      small = 0;
    }
    a = b;
    w = std::max(w, a - lower);
  }
  // Tail beyond the last panel: the doubling-panel partial sums converge geometrically for
  // algebraic decay, so extrapolate them with the epsilon algorithm.
  const size_t n = panel.size();
  if (n >= 5) {
    std::vector<T> partial;
    T acc{};
    for (const T& v : panel) {
      acc += v;
      partial.push_back(acc);
    }
    const size_t m = std::min<size_t>(n, 12);
    std::vector<T> recent(partial.end() - m, partial.end());
    double e;
    const T est = detail::wynn_epsilon(recent, &e);
    const double r = std::abs(panel[n - 1]) / std::max(std::abs(panel[n - 2]), 1e-300);
    if (std::isfinite(e) && r < 1.0) {
      out.abs_err += e;
      total = est;
    } else {
      out.abs_err += std::abs(panel[n - 1]) * 10.0;
      out.converged = false;
    }
  }
  out.value = total;
  if (out.abs_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) out.converged = false;
  return out;
}

/// Integral of f(t) cos(w t) over [0, infinity).
/// Integrates between the zeros of the cosine and accelerates the alternating panel sums.
template <class F>
auto integrate_cosine(F&& f, double w, const QuadSpec& spec = {})
    -> QuadResult<std::decay_t<decltype(f(0.0))>> {
  using T = std::decay_t<decltype(f(0.0))>;
  w = std::abs(w);
  if (w == 0.0) return integrate_semiinf(f, spec);
  auto g = [&](double t) { return f(t) * std::cos(w * t); };
  QuadResult<T> out;
  QuadSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 0.1;
  const double half = std::numbers::pi / w;
  std::vector<T> sums;
  T total{};
  double a = 0.0, b = 0.5 * half;
  int small = 0;
  double last_est_err = std::numeric_limits<double>::infinity();
  T est{};
  const int max_panels = 4000;
  for (int n = 0; n < max_panels; ++n) {
    auto r = integrate_breaks(g, detail::geometric_breaks(a, b), inner);
    out.evaluations += r.evaluations;
    out.abs_err += r.abs_err;
    out.converged = out.converged && r.converged;
    total += r.value;
    sums.push_back(total);
    const double scale = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (std::abs(r.value) + r.abs_err < 0.01 * scale && n > 0) {
      if (++small >= 3) {
        out.value = total;
        return out;
      }
    } else {
      small = 0;
    }
    if (sums.size() >= 8) {
      const size_t m = std::min<size_t>(sums.size(), 40);
      std::vector<T> recent(sums.end() - m, sums.end());
      double e;
      est = detail::wynn_epsilon(recent, &e);
      last_est_err = e;
      if (e < 0.1 * scale) {
        out.value = est;
        out.abs_err += e;
        return out;
      }
    }
    a = b;
    b = a + half;
  }
  out.value = sums.size() >= 8 ? est : total;
  out.abs_err += last_est_err;
  out.converged = false;
  return out;
}

}  // namespace mlf
