//  Copyright 2026 deltafront authors

#ifndef DELTAFRONT_FRONTS_HPP_
#define DELTAFRONT_FRONTS_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "deltafront/core.hpp"
#include "deltafront/numerics.hpp"

namespace deltafront {
namespace fronts {

// Delta path inside a centered fan with a constant state of velocity u_const
// on the other side: c' = ((c - xc)/(t - tc) + u_const)/2 through `entry`.
inline SqrtCurve fan_delta_trajectory(const Point& entry, double u_const,
                                      const Point& fan_center) {
  const double s = entry.t - fan_center.t;
  if (!(s > 0))
    throw std::invalid_argument("fan_delta_trajectory: entry at fan center");
  const double K = (entry.x - fan_center.x - u_const * s) / std::sqrt(s);
  return {fan_center, u_const, K};
}

// Time where |K|/(2 sqrt(t - tc)) = 1, i.e. the path speed is u_k -+ 1.
inline std::optional<double> breakdown_time(const SqrtCurve& c) {
  if (c.K == 0.0) return std::nullopt;
  return c.center.t + 0.25 * c.K * c.K;
}

inline LogCurve characteristic_in_fan(const Point& through,
                                      const Point& fan_center) {
  const double s = through.t - fan_center.t;
  if (!(s > 0))
    throw std::invalid_argument("characteristic_in_fan: point at fan center");
  return {fan_center, (through.x - fan_center.x) / s + std::log(s)};
}

struct Intersection {
  Point point;
  bool grazing = false;
};

namespace detail {

inline double after_eps(double after) {
  return 1e-12 * std::max(1.0, std::abs(after));
}

inline std::optional<Intersection> line_line(const Line& a, const Line& b,
                                             double after) {
  if (a.slope == b.slope) return std::nullopt;
  const double t = (b.origin.x - b.slope * b.origin.t - a.origin.x +
                    a.slope * a.origin.t) / (a.slope - b.slope);
  if (!(t > after + after_eps(after))) return std::nullopt;
  return Intersection{{t, a.position(t)}, false};
}

// Quadratic in r = sqrt(t - tc).
inline std::optional<Intersection> line_sqrt(const Line& l, const SqrtCurve& c,
                                             double after) {
  const double a = c.u_k - l.slope, b = c.K;
  const double c0 = c.center.x - l.origin.x - l.slope * (c.center.t - l.origin.t);
  std::vector<double> roots;
  bool grazing = false;
  if (a == 0.0) {
    if (b != 0.0) roots.push_back(-c0 / b);
  } else {
    const double disc = b * b - 4.0 * a * c0;
    const double scale = b * b + std::abs(4.0 * a * c0);
    if (std::abs(disc) <= 1e-12 * scale) {
      roots.push_back(-b / (2.0 * a));
      grazing = true;
    } else if (disc > 0) {
      const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      roots.push_back(q / a);
      if (q != 0.0) roots.push_back(c0 / q);
    }
  }
  std::optional<Intersection> best;
  for (double r : roots) {
    if (!(r >= 0)) continue;
    const double t = c.center.t + r * r;
    if (!(t > after + after_eps(after))) continue;
    if (!best || t < best->point.t) best = Intersection{{t, c.position(t)}, grazing};
  }
  return best;
}

inline double start_time(const CurveGeometry& g) {
  if (const auto* s = std::get_if<SqrtCurve>(&g)) return s->center.t;
  if (const auto* l = std::get_if<LogCurve>(&g)) return l->center.t;
  return -kInf;
}

// Log-spaced sign scan, then bracketed refinement.
inline std::optional<Intersection> scan(const CurveGeometry& a,
                                        const CurveGeometry& b, double after) {
  const double t_lo = std::max({after, start_time(a), start_time(b)});
  const double base = std::max(1.0, std::abs(t_lo));
  const double delta = 1e-9 * base, horizon = 1e7 * base;
  auto d = [&](double t) { return position(a, t) - position(b, t); };
  auto dd = [&](double t) { return speed(a, t) - speed(b, t); };
  const int n = 6000;
  const double ratio = std::pow(horizon / delta, 1.0 / n);
  // Differences at rounding level count as zero and are skipped, so curves
  // sharing a start point (possibly tangentially) do not report that point.
  auto noise = [&](double t) {
    return 64 * std::numeric_limits<double>::epsilon() *
           (1.0 + std::abs(position(a, t)) + std::abs(position(b, t)));
  };
  double t_prev = t_lo + delta, d_prev = d(t_prev);
  if (std::abs(d_prev) <= noise(t_prev)) d_prev = 0.0;
  double step = delta;
  for (int i = 1; i <= n; ++i) {
    step *= ratio;
    const double t = t_lo + step;
    const double dv = d(t);
    if (std::abs(dv) <= noise(t)) continue;
    if (d_prev != 0.0 && (dv < 0) != (d_prev < 0)) {
      const double r = numerics::refine_root(d, dd, t_prev, t);
      if (r > after + after_eps(after))
        return Intersection{{r, position(a, r)}, false};
    }
    t_prev = t;
    d_prev = dv;
  }
  return std::nullopt;
}

}  // namespace detail

// Earliest crossing with t > after. Tangential touches come back flagged.
inline std::optional<Intersection> intersect(const CurveGeometry& a,
                                             const CurveGeometry& b,
                                             double after) {
  const auto* la = std::get_if<Line>(&a);
  const auto* lb = std::get_if<Line>(&b);
  if (la && lb) return detail::line_line(*la, *lb, after);
  if (la)
    if (const auto* sb = std::get_if<SqrtCurve>(&b))
      return detail::line_sqrt(*la, *sb, after);
  if (lb)
    if (const auto* sa = std::get_if<SqrtCurve>(&a))
      return detail::line_sqrt(*lb, *sa, after);
  return detail::scan(a, b, after);
}

inline ShockTrace shock_left_trace(const SqrtCurve& curve, double t_break,
                                   const UField& left_u, const UField& right_u,
                                   const SimpleV& right_v) {
  return {curve, t_break, left_u, right_u, right_v};
}

// Profile between the delta contact and the shock after breakdown.
inline VField w_profile(const ShockTrace& trace, const UField& region_u) {
  if (const auto* c = std::get_if<ConstU>(&region_u))
    return WStraight{c->u - 1.0, trace};
  const auto& fan = std::get<FanU>(region_u);
  if (fan.center.t != trace.curve.center.t || fan.center.x != trace.curve.center.x)
    throw std::logic_error("w_profile: fan and shock centers differ");
  return WCurved{trace};
}

inline double strength_rate(double speed, const State& left,
                             const State& right) {
  return deficit(left, right, speed);
}

// Tabulate alpha on [t0, t1]: exact node values by quadrature of the rate,
// Hermite interpolation between. Intervals are bisected until the exact
// value at their midpoint matches the interpolant to 1e-11 relative.
inline TabulatedStrength strength_integrate(const RateSpec& rate, double t0,
                                            double gamma0, double t1) {
  TabulatedStrength law{rate, t0, gamma0, {}};
  if (!(t1 > t0)) return law;
  const double tol = 1e-14 * (1.0 + std::abs(gamma0) + (t1 - t0));
  auto seg = [&](double a, double b) { return numerics::quad(rate, a, b, tol, 1e-15); };
  const int n0 = 8;
  std::vector<StrengthNode> coarse(n0 + 1);
  double alpha = gamma0, amax = std::abs(gamma0);
  for (int i = 0; i <= n0; ++i) {
    const double t = i == n0 ? t1 : t0 + (t1 - t0) * i / n0;
    if (i > 0) alpha += seg(coarse[i - 1].t, t);
    coarse[i] = {t, alpha, rate(t)};
    amax = std::max(amax, std::abs(alpha));
  }
  const double accept = 1e-11 * (1.0 + amax);
  const double min_width = (t1 - t0) / 8192;
  std::vector<StrengthNode>& out = law.nodes;
  out.push_back(coarse.front());
  auto refine = [&](auto&& self, const StrengthNode& a, const StrengthNode& b) -> void {
    const double m = 0.5 * (a.t + b.t);
    const StrengthNode mid{m, a.alpha + seg(a.t, m), rate(m)};
    const double approx = numerics::hermite(a.t, b.t, a.alpha, b.alpha, a.rate, b.rate, m);
    if (std::abs(mid.alpha - approx) <= accept || b.t - a.t <= min_width) {
      out.push_back(b);
      return;
    }
    self(self, a, mid);
    self(self, mid, b);
  };
  for (int i = 0; i < n0; ++i) refine(refine, coarse[i], coarse[i + 1]);
  return law;
}

}  // namespace fronts
}  // namespace deltafront

#endif  // DELTAFRONT_FRONTS_HPP_
