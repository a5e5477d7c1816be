//  Copyright 2026 deltafront authors

#ifndef DELTAFRONT_NUMERICS_HPP_
#define DELTAFRONT_NUMERICS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace deltafront {
namespace numerics {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic on quadrature values: plain doubles or fixed-size arrays.
template <class V>
struct Ops;

template <>
struct Ops<double> {
  static double zero() { return 0.0; }
  static double norm(double v) { return std::abs(v); }
  static bool finite(double v) { return std::isfinite(v); }
};

template <std::size_t N>
struct Ops<std::array<double, N>> {
  using V = std::array<double, N>;
  static V zero() { return V{}; }
  static double norm(const V& v) {
    double s = 0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  static bool finite(const V& v) {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }
};

template <std::size_t N>
std::array<double, N> operator+(std::array<double, N> a,
                                const std::array<double, N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
  return a;
}
template <std::size_t N>
std::array<double, N> operator-(std::array<double, N> a,
                                const std::array<double, N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] -= b[i];
  return a;
}
template <std::size_t N>
std::array<double, N> operator*(double s, std::array<double, N> a) {
  for (double& x : a) x *= s;
  return a;
}

// Gauss-Kronrod 7/15 abscissae (positive half) and weights.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
struct Panel {
  double a, b;
  V value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class V, class F>
Panel<V> gk15(F& f, double a, double b) {
  using O = Ops<V>;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  V fc = f(c);
  V k = kWgk[7] * fc;
  V g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    V sum = f(c - dx) + f(c + dx);
    k = k + kWgk[j] * sum;
    if (j % 2 == 1) g = g + kWg[j / 2] * sum;
  }
  k = h * k;
  g = h * g;
  if (!O::finite(k)) throw QuadratureError("non-finite integrand value");
  return {a, b, k, O::norm(k - g)};
}

template <class V>
struct QuadResult {
  V value;
  double error = 0;
  bool converged = true;
};

// Globally adaptive G7K15 quadrature on [a, b]. Stops when the summed error
// estimate drops below max(abs_tol, rel_tol * |I|).
template <class V, class F>
QuadResult<V> integrate(F&& f, double a, double b, double abs_tol,
                        double rel_tol = 0.0, int max_panels = 400) {
  using O = Ops<V>;
  if (!(b > a)) return {O::zero(), 0.0, true};
  std::priority_queue<Panel<V>> heap;
  Panel<V> first = gk15<V>(f, a, b);
  V total = first.value;
  double err = first.error;
  heap.push(first);
  int panels = 1;
  while (err > std::max(abs_tol, rel_tol * O::norm(total))) {
    if (panels >= max_panels) return {total, err, false};
    Panel<V> p = heap.top();
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b)) return {total, err, false};
    Panel<V> l = gk15<V>(f, p.a, m), r = gk15<V>(f, m, p.b);
    total = total - p.value + l.value + r.value;
    err += l.error + r.error - p.error;
    heap.push(l);
    heap.push(r);
    panels += 1;
  }
  return {total, err, true};
}

// Shorthand for scalar integrands.
template <class F>
double quad(F&& f, double a, double b, double abs_tol, double rel_tol = 1e-13) {
  return integrate<double>(f, a, b, abs_tol, rel_tol).value;
}

// Cubic Hermite interpolation on [t0, t1].
inline double hermite(double t0, double t1, double y0, double y1, double d0,
                      double d1, double t) {
  const double h = t1 - t0, s = (t - t0) / h;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0 +
         (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * h * d1;
}

// Bisection down to a relative bracket of 1e-13, then one derivative step
// kept only if it stays inside the bracket. Requires a sign change.
template <class F, class DF>
double refine_root(F f, DF df, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0) return lo;
  for (int i = 0; i < 200; ++i) {
    if (hi - lo <= 1e-13 * std::max(1.0, std::abs(lo))) break;
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double d = df(mid);
  if (d != 0 && std::isfinite(d)) {
    const double t = mid - f(mid) / d;
    if (t >= lo && t <= hi) return t;
  }
  return mid;
}

// Safeguarded Newton on a bracket [lo, hi] with f(lo) > 0 > f(hi).
// fdf returns {f, f'}.
template <class FDF>
double newton_bracketed(FDF fdf, double lo, double hi, double rtol = 1e-15) {
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 100; ++i) {
    auto [fx, dx] = fdf(x);
    if (fx == 0) return x;
    if (fx > 0) lo = x; else hi = x;
    double xn = x - fx / dx;
    if (!(xn > lo && xn < hi) || !std::isfinite(xn)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) <= rtol * std::abs(xn)) return xn;
    if (hi - lo <= rtol * std::abs(hi)) return xn;
    x = xn;
  }
  return x;
}

}  // namespace numerics
}  // namespace deltafront

#endif  // DELTAFRONT_NUMERICS_HPP_
