//  Copyright 2026 deltafront authors

#ifndef DELTAFRONT_CORE_HPP_
#define DELTAFRONT_CORE_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "deltafront/numerics.hpp"

namespace deltafront {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct State {
  double u = 0;
  double v = 0;
};

struct Point {
  double t = 0;
  double x = 0;
};

struct Eigenvalues {
  double lambda1;
  double lambda2;
};

inline Eigenvalues eigenvalues(const State& s) { return {s.u - 1.0, s.u}; }

// c [v] - [(u-1) v]; the growth rate of an atom riding a jump at `speed`.
inline double deficit(const State& left, const State& right, double speed) {
  return speed * (right.v - left.v) -
         ((right.u - 1.0) * right.v - (left.u - 1.0) * left.v);
}

// ---------------------------------------------------------------- geometry

// x = origin.x + slope (t - origin.t)
struct Line {
  Point origin;
  double slope = 0;
  double position(double t) const { return origin.x + slope * (t - origin.t); }
  double speed(double) const { return slope; }
};

// x = xc + u_k (t - tc) + K sqrt(t - tc)
struct SqrtCurve {
  Point center;
  double u_k = 0;
  double K = 0;
  double position(double t) const {
    const double s = t - center.t;
    return center.x + u_k * s + K * std::sqrt(s);
  }
  double speed(double t) const {
    return u_k + K / (2.0 * std::sqrt(t - center.t));
  }
};

// x = xc + (t - tc)(C - log(t - tc)); solves dx/dt = (x - xc)/(t - tc) - 1.
struct LogCurve {
  Point center;
  double C = 0;
  double position(double t) const {
    const double s = t - center.t;
    return center.x + s * (C - std::log(s));
  }
  double speed(double t) const { return C - std::log(t - center.t) - 1.0; }
};

using CurveGeometry = std::variant<Line, SqrtCurve, LogCurve>;

inline double position(const CurveGeometry& g, double t) {
  return std::visit([t](const auto& c) { return c.position(t); }, g);
}
inline double speed(const CurveGeometry& g, double t) {
  return std::visit([t](const auto& c) { return c.speed(t); }, g);
}

// ---------------------------------------------------------------- u laws

struct ConstU {
  double u = 0;
};
struct FanU {
  Point center;
};
using UField = std::variant<ConstU, FanU>;

inline double value(const UField& f, double t, double x) {
  if (const auto* c = std::get_if<ConstU>(&f)) return c->u;
  const auto& fan = std::get<FanU>(f);
  return (x - fan.center.x) / (t - fan.center.t);
}

// ---------------------------------------------------------------- v laws

struct ConstV {
  double v = 0;
};
struct FanExpV {
  double v_ref = 0;
  double u_ref = 0;
  Point center;
  double value(double t, double x) const {
    return v_ref * std::exp((x - center.x) / (t - center.t) - u_ref);
  }
};
using SimpleV = std::variant<ConstV, FanExpV>;

inline double value(const SimpleV& f, double t, double x) {
  if (const auto* c = std::get_if<ConstV>(&f)) return c->v;
  return std::get<FanExpV>(f).value(t, x);
}

// Left trace of v on a shock running along `curve` for t > t_break, fixed by
// the pointwise v jump condition with the right-hand data.
struct ShockTrace {
  SqrtCurve curve;
  double t_break = 0;
  UField left_u;
  UField right_u;
  SimpleV right_v;

  double r_break() const { return std::sqrt(t_break - curve.center.t); }

  // Trace at tau = tc + r^2.
  double at_r(double r) const {
    const double tau = curve.center.t + r * r;
    const double x = curve.center.x + curve.u_k * r * r + curve.K * r;
    const double c = curve.u_k + curve.K / (2.0 * r);
    const double ul = value(left_u, tau, x), ur = value(right_u, tau, x);
    const double vr = value(right_v, tau, x);
    const double den = c - ul + 1.0;
    if (den == 0.0) return blowup_sign() * kInf;
    return vr * (c - ur + 1.0) / den;
  }
  double at(double tau) const { return at_r(std::sqrt(tau - curve.center.t)); }

  double blowup_sign() const {
    const double tb = t_break;
    const double vr = value(right_v, tb, curve.position(tb));
    return vr < 0 ? -1.0 : 1.0;
  }
};

// v constant on lines of slope `slope`, traced back to the shock. The
// characteristic through the breakdown point touches the shock there, so a
// point at distance d right of it meets the shock at r = r_b + sqrt(d/a).
struct WStraight {
  double slope = 0;
  ShockTrace source;

  double boundary(double t) const {
    const double tb = source.t_break;
    return source.curve.position(tb) + slope * (t - tb);
  }
  double value_d(double, double d) const {
    if (!(d > 0)) return source.blowup_sign() * kInf;
    const double a = source.curve.u_k - slope;
    return source.at_r(source.r_break() + std::sqrt(d / a));
  }
  double value(double t, double x) const { return value_d(t, x - boundary(t)); }
};

// v along fan characteristics dx/dt = (x - xc)/(t - tc) - 1, traced back
// to the shock; the shock and the fan share one center. Characteristics are
// labelled by C = (x - xc)/s + log s; with r = r_b (1 + z) the foot on the
// shock solves 2 (log(1+z) - z/(1+z)) = C - C_b.
struct WCurved {
  ShockTrace source;

  double boundary_label() const {
    return source.curve.u_k + 2.0 * std::log(source.r_break()) + 2.0;
  }
  double boundary(double t) const {
    const double s = t - source.curve.center.t;
    return source.curve.center.x + s * (boundary_label() - std::log(s));
  }
  static double lift(double z) {
    if (z < 0.1) {
      // sum_{k>=2} (-1)^k (k-1) z^k / k, free of cancellation
      double term = z * z, sum = 0;
      for (int k = 2; k < 40; ++k) {
        sum += ((k % 2 == 0) ? 1.0 : -1.0) * (k - 1) * term / k;
        term *= z;
      }
      return 2.0 * sum;
    }
    return 2.0 * (std::log1p(z) - z / (1.0 + z));
  }
  // Foot r on the shock of the characteristic with label C_b + dc.
  double foot(double dc) const {
    double hi = std::max(2.0 * std::sqrt(dc), std::exp(0.5 * dc + 1.0));
    while (lift(hi) < dc) hi *= 2.0;
    const double z = numerics::newton_bracketed(
        [&](double z) {
          const double w = 1.0 + z;
          return std::pair<double, double>{dc - lift(z), -2.0 * z / (w * w)};
        },
        0.0, hi);
    return source.r_break() * (1.0 + z);
  }
  // v (t - tc) is transported, since u_x = 1/(t - tc) in the fan.
  double value_label(double dc, double s) const {
    if (!(dc > 0)) return source.blowup_sign() * kInf;
    const double r = foot(dc);
    return source.at_r(r) * (r * r / s);
  }
  double value_d(double t, double d) const {
    const double s = t - source.curve.center.t;
    return value_label(d / s, s);
  }
  double value(double t, double x) const { return value_d(t, x - boundary(t)); }
};

// v constant on lines of slope `slope` that start on a fan edge, taking the
// edge value of the curved profile inside. `start` is where the profile's
// singular characteristic met the edge.
struct WEdge {
  double slope = 0;
  Line edge;
  WCurved inner;
  Point start;

  double boundary(double t) const { return start.x + slope * (t - start.t); }
  double value_d(double, double d) const {
    if (!(d > 0)) return inner.source.blowup_sign() * kInf;
    const double dt = d / (edge.slope - slope);
    const double s0 = start.t - inner.source.curve.center.t;
    return inner.value_label(std::log1p(dt / s0), s0 + dt);
  }
  double value(double t, double x) const { return value_d(t, x - boundary(t)); }
};

using VField = std::variant<ConstV, FanExpV, WStraight, WCurved, WEdge>;

inline double value(const VField& f, double t, double x) {
  return std::visit(
      [t, x](const auto& law) -> double {
        using L = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<L, ConstV>) {
          return law.v;
        } else {
          return law.value(t, x);
        }
      },
      f);
}

// W laws blow up with exponent -1/2 at a characteristic on their left.
inline bool singular_left(const VField& f) {
  return std::holds_alternative<WStraight>(f) ||
         std::holds_alternative<WCurved>(f) || std::holds_alternative<WEdge>(f);
}

inline double singular_boundary(const VField& f, double t) {
  if (const auto* w = std::get_if<WStraight>(&f)) return w->boundary(t);
  if (const auto* w = std::get_if<WCurved>(&f)) return w->boundary(t);
  if (const auto* w = std::get_if<WEdge>(&f)) return w->boundary(t);
  return -kInf;
}

// v at distance d > 0 right of the singular boundary.
inline double value_from_boundary(const VField& f, double t, double d) {
  if (const auto* w = std::get_if<WStraight>(&f)) return w->value_d(t, d);
  if (const auto* w = std::get_if<WCurved>(&f)) return w->value_d(t, d);
  if (const auto* w = std::get_if<WEdge>(&f)) return w->value_d(t, d);
  return value(f, t, singular_boundary(f, t) + d);
}

inline SimpleV as_simple(const VField& f) {
  if (const auto* c = std::get_if<ConstV>(&f)) return *c;
  if (const auto* e = std::get_if<FanExpV>(&f)) return *e;
  throw std::logic_error("v law is not a closed-form constant or fan law");
}

// ---------------------------------------------------------------- strengths

struct ConstantStrength {
  double gamma = 0;
};

// alpha(t) = s (t - t_ref) + gamma
struct AffineStrength {
  double s = 0;
  double gamma = 0;
  double t_ref = 0;
};

// alpha' = c'(t)(vR - vL) - ((uR - 1) vR - (uL - 1) vL) along `path`.
struct RateSpec {
  CurveGeometry path;
  UField left_u;
  UField right_u;
  SimpleV left_v;
  SimpleV right_v;
  double operator()(double t) const {
    const double x = position(path, t);
    const State l{value(left_u, t, x), value(left_v, t, x)};
    const State r{value(right_u, t, x), value(right_v, t, x)};
    return deficit(l, r, speed(path, t));
  }
};

struct StrengthNode {
  double t;
  double alpha;
  double rate;
};

struct TabulatedStrength {
  RateSpec rate;
  double t0 = 0;
  double gamma0 = 0;
  std::vector<StrengthNode> nodes;  // empty until the front terminates
  double drift = 0;                 // extra constant rate, for perturbation tests

  double direct(double t) const {
    if (t == t0) return gamma0;
    const double scale = 1.0 + std::abs(gamma0) + std::abs(t - t0);
    return gamma0 + numerics::quad(rate, t0, t, 1e-14 * scale, 1e-15);
  }
  double at(double t) const { return base(t) + drift * (t - t0); }
  double base(double t) const {
    if (nodes.size() < 2 || t < nodes.front().t || t > nodes.back().t)
      return direct(t);
    auto it = std::upper_bound(
        nodes.begin(), nodes.end(), t,
        [](double a, const StrengthNode& n) { return a < n.t; });
    if (it == nodes.end()) --it;
    const StrengthNode& hi = *it;
    const StrengthNode& lo = *(it - 1);
    return numerics::hermite(lo.t, hi.t, lo.alpha, hi.alpha, lo.rate, hi.rate,
                             t);
  }
};

using StrengthLaw =
    std::variant<ConstantStrength, AffineStrength, TabulatedStrength>;

inline double strength_at(const StrengthLaw& law, double t) {
  if (const auto* c = std::get_if<ConstantStrength>(&law)) return c->gamma;
  if (const auto* a = std::get_if<AffineStrength>(&law))
    return a->s * (t - a->t_ref) + a->gamma;
  return std::get<TabulatedStrength>(law).at(t);
}

inline double strength_rate_at(const StrengthLaw& law, double t) {
  if (std::holds_alternative<ConstantStrength>(law)) return 0.0;
  if (const auto* a = std::get_if<AffineStrength>(&law)) return a->s;
  const auto& tab = std::get<TabulatedStrength>(law);
  return tab.rate(t) + tab.drift;
}

// ---------------------------------------------------------------- fronts

enum class FrontKind { Shock, Contact, DeltaShock, DeltaContact, FanEdge };

inline const char* to_string(FrontKind k) {
  switch (k) {
    case FrontKind::Shock: return "Shock";
    case FrontKind::Contact: return "Contact";
    case FrontKind::DeltaShock: return "DeltaShock";
    case FrontKind::DeltaContact: return "DeltaContact";
    case FrontKind::FanEdge: return "FanEdge";
  }
  return "?";
}

inline bool carries_atom(FrontKind k) {
  return k == FrontKind::DeltaShock || k == FrontKind::DeltaContact;
}

// Atom rides a contact: halves on each side.
struct EvenSplit {};
// Atom on a u jump: weights from the delta-prime balance with one-sided u.
struct TraceSplit {
  UField left_u;
  UField right_u;
};
using SplitRule = std::variant<EvenSplit, TraceSplit>;

struct Front {
  int id = -1;
  FrontKind kind = FrontKind::Shock;
  CurveGeometry geometry;
  int left_region = -1;
  int right_region = -1;
  double t_begin = 0;
  double t_end = kInf;
  std::optional<StrengthLaw> strength;
  std::optional<SplitRule> split;

  double position(double t) const { return deltafront::position(geometry, t); }
  double speed(double t) const { return deltafront::speed(geometry, t); }
  bool alive(double t) const { return t_begin <= t && t < t_end; }
  double alpha(double t) const {
    return strength ? strength_at(*strength, t) : 0.0;
  }
  std::pair<double, double> split_at(double t) const {
    const double a = alpha(t);
    if (!split || std::holds_alternative<EvenSplit>(*split))
      return {0.5 * a, 0.5 * a};
    const auto& ts = std::get<TraceSplit>(*split);
    const double x = position(t), c = speed(t);
    const double ul = value(ts.left_u, t, x), ur = value(ts.right_u, t, x);
    const double a0 = a * (c - ur + 1.0) / (ul - ur);
    return {a0, a - a0};
  }
};

// ---------------------------------------------------------------- regions

struct Region {
  int id = -1;
  UField u;
  VField v;
};

enum class ResolutionRule {
  Initial,
  MergeDeltas,
  DeltaCrossesContact,
  ShockHitsDelta,
  DeltaEntersFan,
  BreakdownBifurcation,
  FrontExitsFan,
  ContactContinuation
};

inline const char* to_string(ResolutionRule r) {
  switch (r) {
    case ResolutionRule::Initial: return "Initial";
    case ResolutionRule::MergeDeltas: return "MergeDeltas";
    case ResolutionRule::DeltaCrossesContact: return "DeltaCrossesContact";
    case ResolutionRule::ShockHitsDelta: return "ShockHitsDelta";
    case ResolutionRule::DeltaEntersFan: return "DeltaEntersFan";
    case ResolutionRule::BreakdownBifurcation: return "BreakdownBifurcation";
    case ResolutionRule::FrontExitsFan: return "FrontExitsFan";
    case ResolutionRule::ContactContinuation: return "ContactContinuation";
  }
  return "?";
}

struct Event {
  Point point;
  std::vector<int> incoming;
  std::vector<int> outgoing;
  ResolutionRule rule = ResolutionRule::Initial;
};

struct Scenario {
  State left;
  State middle;
  State right;
  double offset = 0;
  double t_max = 10;
};

struct Solution {
  Scenario scenario;
  int case_id = 0;
  std::vector<Region> regions;
  std::vector<Front> fronts;
  std::vector<Event> events;
  std::vector<int> frontier;  // ids of unterminated fronts, left to right
  double t_max_computed = 0;
  bool complete = false;

  const Region& region(int id) const { return regions.at(id); }
  const Front& front(int id) const { return fronts.at(id); }

  // Fronts alive at t, ordered by position (ties by speed).
  std::vector<const Front*> fronts_at(double t) const {
    std::vector<std::pair<std::pair<double, double>, const Front*>> tmp;
    for (const Front& f : fronts)
      if (f.alive(t)) tmp.push_back({{f.position(t), f.speed(t)}, &f});
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second->id < b.second->id;
    });
    std::vector<const Front*> out;
    out.reserve(tmp.size());
    for (const auto& p : tmp) out.push_back(p.second);
    return out;
  }

  int interaction_count() const {
    int n = 0;
    for (const Event& e : events)
      if (e.rule != ResolutionRule::Initial) ++n;
    return n;
  }
};

}  // namespace deltafront

#endif  // DELTAFRONT_CORE_HPP_
