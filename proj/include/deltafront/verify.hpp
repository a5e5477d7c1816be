//  Copyright 2026 deltafront authors

#ifndef DELTAFRONT_VERIFY_HPP_
#define DELTAFRONT_VERIFY_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "deltafront/core.hpp"
#include "deltafront/eval.hpp"
#include "deltafront/numerics.hpp"

namespace deltafront {
namespace verify {

using numerics::operator+;
using numerics::operator*;

// ---------------------------------------------------------------- test functions

// phi(t, x) = b((t - tc)/st) b((x - xc - drift (t - tc))/sx) with
// b(s) = (1 - s^2)^4 on [-1, 1]. C^3 with compact support; polynomial, so its
// x-integrals are closed form. A nonzero drift shears the bump along a front.
struct TestFunction {
  Point center;
  double sigma_t = 1;
  double sigma_x = 1;
  double drift = 0;

  static double b(double s) {
    if (std::abs(s) >= 1) return 0;
    const double w = 1 - s * s;
    return w * w * w * w;
  }
  static double db(double s) {
    if (std::abs(s) >= 1) return 0;
    const double w = 1 - s * s;
    return -8 * s * w * w * w;
  }
  // Antiderivative of b from -1.
  static double B(double s) {
    s = std::clamp(s, -1.0, 1.0);
    const double s2 = s * s;
    return s * (1 + s2 * (-4.0 / 3 + s2 * (6.0 / 5 + s2 * (-4.0 / 7 + s2 / 9)))) +
           128.0 / 315;
  }
  static constexpr double kMass = 256.0 / 315;  // integral of b
  static constexpr double kVariation = 2.0;     // integral of |b'|

  double tau(double t) const { return (t - center.t) / sigma_t; }
  double mid(double t) const { return center.x + drift * (t - center.t); }
  double xi(double t, double x) const { return (x - mid(t)) / sigma_x; }
  double phi(double t, double x) const { return b(tau(t)) * b(xi(t, x)); }
  double phi_t(double t, double x) const {
    const double tt = tau(t), xx = xi(t, x);
    return db(tt) * b(xx) / sigma_t - drift * b(tt) * db(xx) / sigma_x;
  }
  double phi_x(double t, double x) const {
    return b(tau(t)) * db(xi(t, x)) / sigma_x;
  }
  double t_lo() const { return center.t - sigma_t; }
  double t_hi() const { return center.t + sigma_t; }
  // x-extent of the whole support, and of its slice at time t.
  double x_lo() const { return center.x - sigma_x - std::abs(drift) * sigma_t; }
  double x_hi() const { return center.x + sigma_x + std::abs(drift) * sigma_t; }
  double x_lo(double t) const { return mid(t) - sigma_x; }
  double x_hi(double t) const { return mid(t) + sigma_x; }

  // W^{1,1} norm over the plane. With drift the phi_t part has no closed
  // form; it is summed with 4-point Gauss rules on a 128 x 128 grid.
  double norm() const {
    const double plain = sigma_t * sigma_x * kMass * kMass + 2 * sigma_t * kMass;
    if (drift == 0) return plain + 2 * sigma_x * kMass;
    static constexpr double g[4] = {-0.8611363115940526, -0.3399810435848563,
                                    0.3399810435848563, 0.8611363115940526};
    static constexpr double w[4] = {0.3478548451374538, 0.6521451548625461,
                                    0.6521451548625461, 0.3478548451374538};
    const int n = 128;
    const double h = 2.0 / n;
    double sum = 0;
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < 4; ++a) {
        const double s = -1 + h * (i + 0.5 * (g[a] + 1));
        const double bs = b(s), dbs = db(s);
        for (int j = 0; j < n; ++j)
          for (int c = 0; c < 4; ++c) {
            const double y = -1 + h * (j + 0.5 * (g[c] + 1));
            sum += w[a] * w[c] * std::abs(sigma_x * dbs * b(y) - drift * sigma_t * bs * db(y));
          }
      }
    return plain + sum * 0.25 * h * h;
  }
  // Integral of phi(t, .) over [a, b].
  double x_integral(double t, double a, double b_) const {
    return b(tau(t)) * sigma_x * (B(xi(t, b_)) - B(xi(t, a)));
  }
};

// ---------------------------------------------------------------- slices

struct Piece {
  double a;
  double b;
  const Region* region;
  double v_shift = 0;
};

// Smooth sub-intervals of [xa, xb] at time t, split at every alive front.
inline std::vector<Piece> slice(const Solution& sol, double t, double xa,
                                double xb) {
  const auto fr = sol.fronts_at(t);
  std::vector<Piece> out;
  double left = -kInf;
  const Region* reg = fr.empty() ? &sol.region(0) : &sol.region(fr[0]->left_region);
  for (std::size_t k = 0; k <= fr.size(); ++k) {
    const double right = k < fr.size() ? fr[k]->position(t) : kInf;
    const double a = std::max(left, xa), b = std::min(right, xb);
    if (b - a > 1e-14 * (1 + std::abs(a) + std::abs(b)))
      out.push_back({a, b, reg, 0.0});
    if (k < fr.size()) {
      left = std::max(left, right);
      reg = &sol.region(fr[k]->right_region);
    }
  }
  return out;
}

// Adds `shift` to v on [lo, hi], splitting pieces as needed.
inline void add_band(std::vector<Piece>& pieces, double lo, double hi,
                     double shift) {
  std::vector<Piece> out;
  for (const Piece& p : pieces) {
    const double cuts[4] = {p.a, std::clamp(lo, p.a, p.b),
                            std::clamp(hi, p.a, p.b), p.b};
    for (int k = 0; k < 3; ++k) {
      if (!(cuts[k + 1] > cuts[k])) continue;
      Piece q{cuts[k], cuts[k + 1], p.region, p.v_shift};
      if (k == 1) q.v_shift += shift;
      out.push_back(q);
    }
  }
  pieces = std::move(out);
}

// Integral over one piece of g(u, v, x). W laws blow up like d^(-1/2) at
// their left edge; x = a + s^2 removes that.
template <std::size_t N, class G>
numerics::QuadResult<std::array<double, N>> integrate_piece(const Piece& p,
                                                            double t, G& g,
                                                            double tol) {
  using V = std::array<double, N>;
  const Region& r = *p.region;
  auto at = [&](double x) {
    return g(value(r.u, t, x), value(r.v, t, x) + p.v_shift, x);
  };
  if (singular_left(r.v)) {
    const double a = singular_boundary(r.v, t);
    auto fs = [&](double s) {
      const double d = s * s, x = a + d;
      return (2 * s) * g(value(r.u, t, x), value_from_boundary(r.v, t, d) + p.v_shift, x);
    };
    const double s_lo = std::sqrt(std::max(0.0, p.a - a));
    const double s_hi = std::sqrt(std::max(0.0, p.b - a));
    return numerics::integrate<V>(fs, s_lo, s_hi, tol);
  }
  return numerics::integrate<V>(at, p.a, p.b, tol);
}

template <std::size_t N, class G>
std::array<double, N> integrate_pieces(const std::vector<Piece>& pieces,
                                       double t, G& g, double tol,
                                       bool& resolved) {
  std::array<double, N> sum{};
  const double share = tol / std::max<std::size_t>(1, pieces.size());
  for (const Piece& p : pieces) {
    auto q = integrate_piece<N>(p, t, g, share);
    resolved = resolved && q.converged;
    sum = sum + q.value;
  }
  return sum;
}

// Times in (lo, hi) where front f passes position x.
inline void crossing_times(const Front& f, double x, double lo, double hi,
                           std::vector<double>& out) {
  const double a = std::max(lo, f.t_begin), b = std::min(hi, f.t_end);
  if (!(b > a)) return;
  auto d = [&](double t) { return f.position(t) - x; };
  auto dd = [&](double t) { return f.speed(t); };
  const int n = 64;
  double t_prev = a, d_prev = d(a);
  for (int k = 1; k <= n; ++k) {
    const double t = a + (b - a) * k / n;
    const double dv = d(t);
    if (dv == 0.0) {
      out.push_back(t);
    } else if (d_prev != 0.0 && (dv < 0) != (d_prev < 0)) {
      out.push_back(numerics::refine_root(d, dd, t_prev, t));
    }
    t_prev = t;
    d_prev = dv;
  }
}

// Sorted breakpoints of [lo, hi]: event times and, when a window is given,
// the times fronts enter or leave it.
inline std::vector<double> breakpoints(const Solution& sol, double lo,
                                       double hi, double x_lo = kInf,
                                       double x_hi = -kInf) {
  std::vector<double> ts{lo, hi};
  for (const Event& e : sol.events)
    if (e.point.t > lo && e.point.t < hi) ts.push_back(e.point.t);
  if (x_lo < x_hi)
    for (const Front& f : sol.fronts) {
      crossing_times(f, x_lo, lo, hi, ts);
      crossing_times(f, x_hi, lo, hi, ts);
    }
  std::sort(ts.begin(), ts.end());
  std::vector<double> out;
  for (double t : ts)
    if (t >= lo && t <= hi && (out.empty() || t > out.back())) out.push_back(t);
  return out;
}

// Piecewise-constant initial data and its jump points.
inline double initial_value_integral(const Solution& sol, const TestFunction& phi,
                                     double (*field)(const State&)) {
  const Scenario& sc = sol.scenario;
  const double xa = sc.offset < 0 ? sc.offset : 0.0;
  const double xb = sc.offset < 0 ? 0.0 : sc.offset;
  const double lo = phi.x_lo(0), hi = phi.x_hi(0);
  return field(sc.left) * phi.x_integral(0, lo, std::clamp(xa, lo, hi)) +
         field(sc.middle) * phi.x_integral(0, std::clamp(xa, lo, hi),
                                           std::clamp(xb, lo, hi)) +
         field(sc.right) * phi.x_integral(0, std::clamp(xb, lo, hi), hi);
}

inline double field_scale(const Solution& sol) {
  double s = 1;
  for (const State& st : {sol.scenario.left, sol.scenario.middle, sol.scenario.right})
    s = std::max(s, 1 + st.u * st.u + std::abs(st.v) * (1 + std::abs(st.u)));
  return s;
}

// ---------------------------------------------------------------- weak form

struct WeakResidual {
  double r_u = 0;
  double r_v = 0;
  double norm = 1;
  bool resolved = true;
  double relative() const { return std::max(std::abs(r_u), std::abs(r_v)) / norm; }
};

inline WeakResidual weak_residual(const Solution& sol, const TestFunction& phi,
                                  double rel_tol = 1e-10) {
  using V2 = std::array<double, 2>;
  WeakResidual res;
  res.norm = phi.norm();
  const double scale = field_scale(sol);
  const double t_lo = std::max(0.0, phi.t_lo()), t_hi = phi.t_hi();
  if (!(t_hi > 0)) return res;
  const double tol_out = rel_tol * res.norm * scale;
  const double tol_in = tol_out / (2 * phi.sigma_t);

  auto inner = [&](double t) -> V2 {
    auto g = [&](double u, double v, double x) -> V2 {
      const double pt = phi.phi_t(t, x), px = phi.phi_x(t, x);
      return {u * pt + 0.5 * u * u * px, v * pt + (u - 1) * v * px};
    };
    auto pieces = slice(sol, t, phi.x_lo(t), phi.x_hi(t));
    return integrate_pieces<2>(pieces, t, g, tol_in, res.resolved);
  };
  const auto ts = breakpoints(sol, t_lo, t_hi, phi.x_lo(), phi.x_hi());
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    auto q = numerics::integrate<V2>(inner, ts[k], ts[k + 1],
                                     tol_out / (ts.size() - 1));
    res.resolved = res.resolved && q.converged;
    res.r_u += q.value[0];
    res.r_v += q.value[1];
  }

  // Atoms: alpha phi_t + (alpha0 (uL - 1) + alpha1 (uR - 1)) phi_x on the path.
  for (const Front& f : sol.fronts) {
    if (!f.strength) continue;
    const double a = std::max(t_lo, f.t_begin), b = std::min(t_hi, f.t_end);
    if (!(b > a)) continue;
    auto atom = [&](double t) {
      const double x = f.position(t);
      const double ul = value(sol.region(f.left_region).u, t, x);
      const double ur = value(sol.region(f.right_region).u, t, x);
      auto [a0, a1] = f.split_at(t);
      return (a0 + a1) * phi.phi_t(t, x) +
             (a0 * (ul - 1) + a1 * (ur - 1)) * phi.phi_x(t, x);
    };
    const auto tb = breakpoints(sol, a, b, phi.x_lo(), phi.x_hi());
    for (std::size_t k = 0; k + 1 < tb.size(); ++k) {
      auto q = numerics::integrate<double>(atom, tb[k], tb[k + 1],
                                           0.1 * tol_out);
      res.resolved = res.resolved && q.converged;
      res.r_v += q.value;
    }
  }

  if (phi.t_lo() < 0) {
    res.r_u += initial_value_integral(sol, phi, [](const State& s) { return s.u; });
    res.r_v += initial_value_integral(sol, phi, [](const State& s) { return s.v; });
  }
  if (!res.resolved)
    throw numerics::QuadratureError("weak residual quadrature did not converge");
  return res;
}

// ---------------------------------------------------------------- mass balance

struct MassBalance {
  double error_u = 0;
  double error_v = 0;
  double max_error() const { return std::max(error_u, error_v); }
};

// Integral of u and of v (regular part plus atoms) over [x0, x1].
inline std::array<double, 2> window_mass(const Solution& sol, double t,
                                         double x0, double x1) {
  bool ok = true;
  auto g = [](double u, double v, double) -> std::array<double, 2> {
    return {u, v};
  };
  auto pieces = slice(sol, t, x0, x1);
  auto m = integrate_pieces<2>(pieces, t, g, 1e-13 * (x1 - x0), ok);
  if (!ok) throw numerics::QuadratureError("window mass did not converge");
  for (const Front* f : sol.fronts_at(t))
    if (f->strength) m[1] += f->alpha(t);
  return m;
}

inline MassBalance mass_balance(const Solution& sol, double x0, double x1,
                                const std::vector<double>& times) {
  if (times.size() < 2) throw std::invalid_argument("mass_balance: need two times");
  for (double t : times)
    for (const Front* f : sol.fronts_at(t)) {
      const double x = f->position(t);
      if (!(x > x0 && x < x1))
        throw std::invalid_argument("mass_balance: front outside window");
    }
  auto flux = [&](double t) -> std::array<double, 2> {
    const Region& l = eval::region_at(sol, t, x0);
    const Region& r = eval::region_at(sol, t, x1);
    const double ul = value(l.u, t, x0), vl = value(l.v, t, x0);
    const double ur = value(r.u, t, x1), vr = value(r.v, t, x1);
    return {0.5 * ul * ul - 0.5 * ur * ur, (ul - 1) * vl - (ur - 1) * vr};
  };
  MassBalance mb;
  const auto m0 = window_mass(sol, times.front(), x0, x1);
  std::array<double, 2> inflow{};
  for (std::size_t k = 1; k < times.size(); ++k) {
    const auto ts = breakpoints(sol, times[k - 1], times[k]);
    for (std::size_t j = 0; j + 1 < ts.size(); ++j)
      inflow = numerics::operator+(
          inflow,
          numerics::integrate<std::array<double, 2>>(flux, ts[j], ts[j + 1], 1e-14)
              .value);
    const auto m = window_mass(sol, times[k], x0, x1);
    mb.error_u = std::max(mb.error_u, std::abs(m[0] - m0[0] - inflow[0]));
    mb.error_v = std::max(mb.error_v, std::abs(m[1] - m0[1] - inflow[1]));
  }
  return mb;
}

// ---------------------------------------------------------------- entropy

struct Polynomial {
  std::vector<double> c;  // c[k] x^k
  double operator()(double x) const {
    double s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
  }
  Polynomial derivative() const {
    Polynomial d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(k * c[k]);
    return d;
  }
  Polynomial antiderivative() const {
    Polynomial p{{0.0}};
    for (std::size_t k = 0; k < c.size(); ++k) p.c.push_back(c[k] / (k + 1));
    return p;
  }
};

// eta = f(u) + g(v e^{-u}) e^u, q = (u - 1) eta + f(u) - F(u) with F' = f.
struct EntropyPair {
  Polynomial f;
  Polynomial g;
  double eta(double u, double v) const {
    return f(u) + g(v * std::exp(-u)) * std::exp(u);
  }
  double q(double u, double v) const {
    return (u - 1) * eta(u, v) + f(u) - f.antiderivative()(u);
  }
  bool convex_on(double lo, double hi) const {
    const Polynomial f2 = f.derivative().derivative(), g2 = g.derivative().derivative();
    for (int k = 0; k <= 400; ++k) {
      const double x = lo + (hi - lo) * k / 400;
      if (f2(x) < -1e-12 || g2(x) < -1e-12) return false;
    }
    return true;
  }
};

// Integral of eta phi_t + q phi_x over the regular part. With eps set, every
// delta contact is smeared into two bands of width eps holding half its mass
// each.
inline double entropy_residual(const Solution& sol, const EntropyPair& pair,
                               const TestFunction& phi,
                               std::optional<double> eps = std::nullopt) {
  if (!pair.convex_on(-10, 10)) throw std::invalid_argument("entropy pair is not convex");
  using V1 = std::array<double, 1>;
  bool ok = true;
  const double t_lo = std::max(0.0, phi.t_lo()), t_hi = phi.t_hi();
  const double tol = 1e-12 * phi.norm() * field_scale(sol);
  auto inner = [&](double t) -> V1 {
    auto g = [&](double u, double v, double x) -> V1 {
      return {pair.eta(u, v) * phi.phi_t(t, x) + pair.q(u, v) * phi.phi_x(t, x)};
    };
    auto pieces = slice(sol, t, phi.x_lo(t), phi.x_hi(t));
    if (eps)
      for (const Front* f : sol.fronts_at(t)) {
        if (f->kind != FrontKind::DeltaContact) continue;
        const double c = f->position(t), a = f->alpha(t);
        add_band(pieces, c - *eps, c, 0.5 * a / *eps);
        add_band(pieces, c, c + *eps, 0.5 * a / *eps);
      }
    return integrate_pieces<1>(pieces, t, g, tol / (2 * phi.sigma_t), ok);
  };
  double r = 0;
  const auto ts = breakpoints(sol, t_lo, t_hi, phi.x_lo(), phi.x_hi());
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    auto q = numerics::integrate<V1>(inner, ts[k], ts[k + 1], tol);
    ok = ok && q.converged;
    r += q.value[0];
  }
  if (phi.t_lo() < 0) {
    const Scenario& sc = sol.scenario;
    const double xa = sc.offset < 0 ? sc.offset : 0.0;
    const double xb = sc.offset < 0 ? 0.0 : sc.offset;
    const double lo = phi.x_lo(0), hi = phi.x_hi(0);
    r += pair.eta(sc.left.u, sc.left.v) * phi.x_integral(0, lo, std::clamp(xa, lo, hi)) +
         pair.eta(sc.middle.u, sc.middle.v) *
             phi.x_integral(0, std::clamp(xa, lo, hi), std::clamp(xb, lo, hi)) +
         pair.eta(sc.right.u, sc.right.v) * phi.x_integral(0, std::clamp(xb, lo, hi), hi);
  }
  if (!ok) throw numerics::QuadratureError("entropy residual did not converge");
  return r;
}

// ---------------------------------------------------------------- N-shock oracle

struct OracleNode {
  double t;
  double x;
  double alpha;
};

struct OracleRun {
  int N = 0;
  std::vector<OracleNode> nodes;  // delta path, piecewise linear between nodes
  double t_entry = 0;             // first contact with the discretized fan
  bool broke_down = false;        // stopped when the delta lost overcompression
};

// The fan is replaced by N steps of size eta in u on lines of slope
// (u_{n-1} + u_n)/2; the v ratio across each step makes its own deficit zero,
// so the approximate data is an exact weak solution away from the delta.
// The delta is then tracked through straight lines only.
inline OracleRun fan_approx_oracle(const Scenario& sc, int N,
                                   double t_end = 0) {
  if (N < 2) throw std::invalid_argument("fan_approx_oracle: N < 2");
  const bool left_delta = sc.offset < 0;
  if (left_delta ? !(sc.right.u > sc.middle.u) : !(sc.left.u < sc.middle.u))
    throw std::invalid_argument("fan_approx_oracle: scenario has no fan");
  if (t_end <= 0) t_end = sc.t_max;
  // Fan between states lo and hi (u increasing left to right).
  const State lo = left_delta ? sc.middle : sc.left;
  const State hi = left_delta ? sc.right : sc.middle;
  const double eta = (hi.u - lo.u) / N;
  const double rho = (1 + eta / 2) / (1 - eta / 2);
  std::vector<State> step(N + 1);
  for (int n = 0; n <= N; ++n)
    step[n] = {lo.u + n * eta, hi.v * std::pow(rho, n - N)};

  // Lines the delta can cross, as (slope through origin, state beyond it).
  struct Crossing {
    double slope;
    State beyond;
  };
  std::vector<Crossing> lines;
  State ahead, behind;
  Point start{0, sc.offset};
  if (left_delta) {
    behind = sc.left;
    ahead = sc.middle;
    lines.push_back({lo.u - 1, step[0]});  // contact ahead of the fan
    for (int n = 1; n <= N; ++n) lines.push_back({lo.u + (n - 0.5) * eta, step[n]});
  } else {
    behind = sc.right;
    ahead = sc.middle;
    for (int n = N; n >= 1; --n) lines.push_back({lo.u + (n - 0.5) * eta, step[n - 1]});
    lines.push_back({sc.left.u - 1, sc.left});  // contact behind the fan
  }

  OracleRun run;
  run.N = N;
  double t = start.t, x = start.x, alpha = 0;
  run.nodes.push_back({t, x, alpha});
  std::size_t next = 0;
  for (;;) {
    const State& l = left_delta ? behind : ahead;
    const State& r = left_delta ? ahead : behind;
    if (l.u < r.u + 2) {
      run.broke_down = true;
      break;
    }
    const double c = 0.5 * (l.u + r.u);
    const double s = c * (r.v - l.v) - ((r.u - 1) * r.v - (l.u - 1) * l.v);
    double t_hit = kInf;
    if (next < lines.size() && lines[next].slope != c) {
      const double th = (x - c * t) / (lines[next].slope - c);
      if (th > t) t_hit = th;
    }
    const double t_stop = std::min(t_hit, t_end);
    x += c * (t_stop - t);
    alpha += s * (t_stop - t);
    t = t_stop;
    run.nodes.push_back({t, x, alpha});
    if (t_hit > t_end) break;
    if (next == 1 || (!left_delta && next == 0)) run.t_entry = t;
    ahead = lines[next].beyond;
    ++next;
  }
  return run;
}

struct OracleErrors {
  double trajectory = 0;
  double strength = 0;
  double t0 = 0;
  double t1 = 0;
};

// Sup differences against the exact delta over [t0, t1].
inline OracleErrors compare(const Solution& sol, const OracleRun& run,
                            double t0, double t1, int samples = 2000) {
  OracleErrors e{0, 0, t0, t1};
  for (int k = 0; k <= samples; ++k) {
    const double t = t0 + (t1 - t0) * k / samples;
    auto it = std::upper_bound(run.nodes.begin(), run.nodes.end(), t,
                               [](double a, const OracleNode& n) { return a < n.t; });
    if (it == run.nodes.begin()) ++it;
    if (it == run.nodes.end()) --it;
    const OracleNode& b = *it;
    const OracleNode& a = *(it - 1);
    const double w = b.t > a.t ? (t - a.t) / (b.t - a.t) : 0;
    const double x = a.x + w * (b.x - a.x), alpha = a.alpha + w * (b.alpha - a.alpha);
    const auto atoms = eval::atoms_at(sol, t);
    const eval::Atom* best = nullptr;
    for (const auto& at : atoms)
      if (!best || std::abs(at.x - x) < std::abs(best->x - x)) best = &at;
    if (!best) continue;
    e.trajectory = std::max(e.trajectory, std::abs(best->x - x));
    e.strength = std::max(e.strength, std::abs(best->alpha - alpha));
  }
  return e;
}

// Fan-crossing interval of the exact solution: from fan entry to the end of
// the fan-interior delta.
inline std::pair<double, double> fan_crossing_interval(const Solution& sol) {
  for (const Event& e : sol.events)
    if (e.rule == ResolutionRule::DeltaEntersFan) {
      const Front& f = sol.front(e.outgoing.front());
      return {f.t_begin, f.t_end};
    }
  throw std::invalid_argument("solution has no fan entry");
}

// ---------------------------------------------------------------- test draws

// Bumps anchored alternately at events and at points on fronts, scales drawn
// log-uniformly over two decades.
inline std::vector<TestFunction> random_test_functions(const Solution& sol,
                                                       int n,
                                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double t_last = 0;
  for (const Event& e : sol.events) t_last = std::max(t_last, e.point.t);
  const double horizon = std::max(2.0, 1.5 * t_last);
  std::vector<TestFunction> out;
  for (int i = 0; i < n; ++i) {
    Point anchor;
    if (i % 2 == 0) {
      anchor = sol.events[(i / 2) % sol.events.size()].point;
    } else {
      const Front& f = sol.fronts[static_cast<std::size_t>(U(rng) * sol.fronts.size()) %
                                  sol.fronts.size()];
      const double hi = std::min(f.t_end, std::max(f.t_begin + 1.0, horizon));
      const double t = f.t_begin + U(rng) * (hi - f.t_begin);
      anchor = {t, f.position(t)};
    }
    const double L = std::clamp(anchor.t, 0.5, 4.0);
    TestFunction phi;
    phi.sigma_t = L * std::pow(10.0, -2.0 * U(rng));
    phi.sigma_x = L * std::pow(10.0, -2.0 * U(rng));
    phi.center = {anchor.t + (U(rng) - 0.5) * phi.sigma_t,
                  anchor.x + (U(rng) - 0.5) * phi.sigma_x};
    out.push_back(phi);
  }
  return out;
}

// Copy of `sol` whose atom on front `id` grows `ds` faster from its start.
inline Solution perturb_strength_slope(Solution sol, int id, double ds) {
  Front& f = sol.fronts.at(id);
  if (!f.strength) throw std::invalid_argument("front carries no atom");
  if (auto* a = std::get_if<AffineStrength>(&*f.strength)) {
    a->gamma -= ds * (f.t_begin - a->t_ref);
    a->s += ds;
  } else if (auto* c = std::get_if<ConstantStrength>(&*f.strength)) {
    f.strength = AffineStrength{ds, c->gamma, f.t_begin};
  } else {
    auto& tab = std::get<TabulatedStrength>(*f.strength);
    tab.drift += ds;
  }
  return sol;
}

}  // namespace verify
}  // namespace deltafront

#endif  // DELTAFRONT_VERIFY_HPP_
