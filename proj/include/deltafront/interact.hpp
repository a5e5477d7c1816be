//  Copyright 2026 deltafront authors

#ifndef DELTAFRONT_INTERACT_HPP_
#define DELTAFRONT_INTERACT_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltafront/core.hpp"
#include "deltafront/fronts.hpp"
#include "deltafront/riemann.hpp"

namespace deltafront {
namespace interact {

class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxEvents = 64;

// Returns the interaction case 1..5. A negative offset puts the delta shock
// on the (u0, u1) pair, a positive one on the (u1, u2) pair.
inline int validate_scenario(const Scenario& sc) {
  for (double q : {sc.left.u, sc.left.v, sc.middle.u, sc.middle.v, sc.right.u,
                   sc.right.v, sc.offset})
    if (!std::isfinite(q)) throw ScenarioError("non-finite scenario value");
  if (!(sc.t_max > 0)) throw ScenarioError("t_max > 0 violated");
  if (sc.offset == 0) throw ScenarioError("offset != 0 violated");
  const double u0 = sc.left.u, u1 = sc.middle.u, u2 = sc.right.u;
  if (sc.offset < 0) {
    if (!(u0 >= u1 + 2)) throw ScenarioError("u0 >= u1+2 violated");
    if (u1 >= u2 + 2) return 1;
    if (u2 < u1) return 2;
    if (u2 > u1) return 4;
    throw ScenarioError("u2 != u1 violated");
  }
  if (!(u1 >= u2 + 2)) throw ScenarioError("u1 >= u2+2 violated");
  if (u0 >= u1 + 2) return 1;
  if (u1 < u0) return 3;
  if (u0 < u1) return 5;
  throw ScenarioError("u0 != u1 violated");
}

namespace detail {

inline int add_region(Solution& sol, const UField& u, const VField& v) {
  const int id = static_cast<int>(sol.regions.size());
  sol.regions.push_back({id, u, v});
  return id;
}

inline int add_front(Solution& sol, FrontKind kind, const CurveGeometry& g,
                     int left, int right, double t_begin,
                     std::optional<StrengthLaw> strength = {},
                     std::optional<SplitRule> split = {}) {
  Front f;
  f.id = static_cast<int>(sol.fronts.size());
  f.kind = kind;
  f.geometry = g;
  f.left_region = left;
  f.right_region = right;
  f.t_begin = t_begin;
  f.strength = std::move(strength);
  f.split = std::move(split);
  sol.fronts.push_back(std::move(f));
  return sol.fronts.back().id;
}

inline void terminate(Solution& sol, int id, double t) {
  Front& f = sol.fronts.at(id);
  f.t_end = t;
  if (f.strength)
    if (auto* tab = std::get_if<TabulatedStrength>(&*f.strength))
      *tab = fronts::strength_integrate(tab->rate, tab->t0, tab->gamma0, t);
}

// Wires a fan between two existing regions; interior regions are new.
inline std::vector<int> install_fan(Solution& sol, const riemann::WaveFan& fan,
                                    int left, int right) {
  std::vector<int> out;
  const double t0 = fan.origin.t;
  if (fan.fronts.empty()) {
    out.push_back(add_front(sol, FrontKind::Contact,
                            Line{fan.origin, value(sol.region(left).u, t0,
                                                   fan.origin.x) - 1.0},
                            left, right, t0));
    return out;
  }
  std::vector<int> ids{left};
  for (std::size_t k = 1; k + 1 < fan.regions.size(); ++k)
    ids.push_back(add_region(sol, fan.regions[k].u, fan.regions[k].v));
  ids.push_back(right);
  for (std::size_t k = 0; k < fan.fronts.size(); ++k) {
    const riemann::FanFront& ff = fan.fronts[k];
    out.push_back(add_front(sol, ff.kind, ff.geometry, ids[k], ids[k + 1], t0,
                            ff.strength, ff.split));
  }
  return out;
}

inline bool const_u(const Region& r) {
  return std::holds_alternative<ConstU>(r.u);
}

struct Candidate {
  Point p;
  int lo;  // frontier index range [lo, hi]
  int hi;
  bool breakdown;
};

inline std::string describe(const Solution& sol, const Event& ev) {
  std::ostringstream os;
  os << "event at (t=" << ev.point.t << ", x=" << ev.point.x << ") fronts";
  for (int id : ev.incoming) os << ' ' << id << ':' << to_string(sol.front(id).kind);
  return os.str();
}

}  // namespace detail

inline Solution initial_solution(const Scenario& sc) {
  Solution sol;
  sol.scenario = sc;
  sol.case_id = validate_scenario(sc);
  const State s[3] = {sc.left, sc.middle, sc.right};
  for (const State& st : s)
    detail::add_region(sol, ConstU{st.u}, ConstV{st.v});
  const double xa = sc.offset < 0 ? sc.offset : 0.0;
  const double xb = sc.offset < 0 ? 0.0 : sc.offset;
  for (int k = 0; k < 2; ++k) {
    const Point origin{0.0, k == 0 ? xa : xb};
    auto fan = riemann::solve_riemann(s[k], s[k + 1], origin);
    auto ids = detail::install_fan(sol, fan, k, k + 1);
    sol.events.push_back({origin, {}, ids, ResolutionRule::Initial});
    sol.frontier.insert(sol.frontier.end(), ids.begin(), ids.end());
  }
  return sol;
}

inline std::optional<Event> next_event(const Solution& sol, double after) {
  using detail::Candidate;
  std::vector<Candidate> cands;
  const auto& fr = sol.frontier;
  for (std::size_t k = 0; k + 1 < fr.size(); ++k) {
    const Front& a = sol.front(fr[k]);
    const Front& b = sol.front(fr[k + 1]);
    const double from = std::max({a.t_begin, b.t_begin, after});
    auto hit = fronts::intersect(a.geometry, b.geometry, from);
    if (hit && !hit->grazing)
      cands.push_back({hit->point, static_cast<int>(k), static_cast<int>(k + 1),
                       false});
  }
  for (std::size_t k = 0; k < fr.size(); ++k) {
    const Front& f = sol.front(fr[k]);
    if (f.kind != FrontKind::DeltaShock) continue;
    const auto* sc = std::get_if<SqrtCurve>(&f.geometry);
    if (!sc) continue;
    auto ts = fronts::breakdown_time(*sc);
    const double lo = std::max(f.t_begin, after);
    if (ts && *ts > lo + 1e-12 * std::max(1.0, lo))
      cands.push_back({{*ts, sc->position(*ts)}, static_cast<int>(k),
                       static_cast<int>(k), true});
  }
  if (cands.empty()) return std::nullopt;

  double t_min = kInf;
  for (const Candidate& c : cands) t_min = std::min(t_min, c.p.t);
  const double tol_t = 1e-12 * std::max(1.0, std::abs(t_min));
  std::vector<Candidate> first;
  bool any_crossing = false;
  for (const Candidate& c : cands)
    if (c.p.t <= t_min + tol_t) {
      first.push_back(c);
      any_crossing = any_crossing || !c.breakdown;
    }
  // A crossing at the breakdown instant wins (lower-numbered branch).
  if (any_crossing)
    first.erase(std::remove_if(first.begin(), first.end(),
                               [](const Candidate& c) { return c.breakdown; }),
                first.end());
  std::sort(first.begin(), first.end(), [](const Candidate& a, const Candidate& b) {
    return a.p.x < b.p.x;
  });
  Candidate block = first.front();
  for (std::size_t k = 1; k < first.size(); ++k) {
    const double tol_x = 1e-9 * std::max(1.0, std::abs(block.p.x));
    if (std::abs(first[k].p.x - block.p.x) > tol_x) break;
    block.lo = std::min(block.lo, first[k].lo);
    block.hi = std::max(block.hi, first[k].hi);
  }

  Event ev;
  ev.point = block.p;
  for (int k = block.lo; k <= block.hi; ++k) ev.incoming.push_back(fr[k]);
  if (block.breakdown) {
    ev.rule = ResolutionRule::BreakdownBifurcation;
    return ev;
  }
  const Region& L = sol.region(sol.front(ev.incoming.front()).left_region);
  const Region& R = sol.region(sol.front(ev.incoming.back()).right_region);
  int n_delta = 0;
  bool edge = false, shock = false, contact = false;
  for (int id : ev.incoming) {
    const FrontKind k = sol.front(id).kind;
    n_delta += carries_atom(k) ? 1 : 0;
    edge = edge || k == FrontKind::FanEdge;
    shock = shock || k == FrontKind::Shock;
    contact = contact || k == FrontKind::Contact;
  }
  if (detail::const_u(L) && detail::const_u(R)) {
    if (edge) ev.rule = ResolutionRule::FrontExitsFan;
    else if (n_delta >= 2) ev.rule = ResolutionRule::MergeDeltas;
    else if (n_delta == 1 && shock) ev.rule = ResolutionRule::ShockHitsDelta;
    else if (n_delta == 1 && contact) ev.rule = ResolutionRule::DeltaCrossesContact;
    else throw EngineError("no rule for " + detail::describe(sol, ev));
  } else if (n_delta == 1 && edge && ev.incoming.size() == 2) {
    FrontKind dk = FrontKind::DeltaShock;
    for (int id : ev.incoming)
      if (carries_atom(sol.front(id).kind)) dk = sol.front(id).kind;
    ev.rule = dk == FrontKind::DeltaShock ? ResolutionRule::DeltaEntersFan
                                          : ResolutionRule::ContactContinuation;
  } else {
    throw EngineError("no rule for " + detail::describe(sol, ev));
  }
  return ev;
}

inline Solution resolve_event(Solution sol, const Event& ev_in) {
  Event ev = ev_in;
  const Point P = ev.point;
  auto& fr = sol.frontier;
  auto first = std::find(fr.begin(), fr.end(), ev.incoming.front());
  if (first == fr.end()) throw EngineError("incoming front not active");
  const std::ptrdiff_t lo = first - fr.begin();
  const Front& f_first = sol.front(ev.incoming.front());
  const Front& f_last = sol.front(ev.incoming.back());
  const int L_id = f_first.left_region, R_id = f_last.right_region;
  double gamma = 0;
  for (int id : ev.incoming) gamma += sol.front(id).alpha(P.t);

  std::vector<int> out;
  switch (ev.rule) {
    case ResolutionRule::BreakdownBifurcation: {
      const Front d = sol.front(ev.incoming.front());
      const auto& curve = std::get<SqrtCurve>(d.geometry);
      const Region L = sol.region(L_id), R = sol.region(R_id);
      ev.point.x = curve.position(P.t);
      CurveGeometry g1;
      if (const auto* cu = std::get_if<ConstU>(&L.u))
        g1 = Line{ev.point, cu->u - 1.0};
      else
        g1 = fronts::characteristic_in_fan(ev.point, std::get<FanU>(L.u).center);
      auto trace = fronts::shock_left_trace(curve, P.t, L.u, R.u, as_simple(R.v));
      const int W = detail::add_region(sol, L.u, fronts::w_profile(trace, L.u));
      out.push_back(detail::add_front(sol, FrontKind::DeltaContact, g1, L_id, W,
                                      P.t, ConstantStrength{gamma}, EvenSplit{}));
      out.push_back(detail::add_front(sol, FrontKind::Shock, curve, W, R_id, P.t));
      break;
    }
    case ResolutionRule::DeltaEntersFan: {
      const Region L = sol.region(L_id), R = sol.region(R_id);
      double u_const;
      Point center;
      if (detail::const_u(L)) {
        u_const = std::get<ConstU>(L.u).u;
        center = std::get<FanU>(R.u).center;
      } else {
        u_const = std::get<ConstU>(R.u).u;
        center = std::get<FanU>(L.u).center;
      }
      const SqrtCurve curve = fronts::fan_delta_trajectory(P, u_const, center);
      const double c = curve.speed(P.t);
      const double ul = value(L.u, P.t, P.x), ur = value(R.u, P.t, P.x);
      const double tol = 1e-12 * (1.0 + std::abs(ul) + std::abs(ur));
      if (c > ul - 1.0 + tol || c < ur - tol)
        throw EngineError("non-overcompressive fan entry: " +
                          detail::describe(sol, ev));
      RateSpec rate{curve, L.u, R.u, as_simple(L.v), as_simple(R.v)};
      out.push_back(detail::add_front(
          sol, FrontKind::DeltaShock, curve, L_id, R_id, P.t,
          TabulatedStrength{rate, P.t, gamma, {}}, TraceSplit{L.u, R.u}));
      break;
    }
    case ResolutionRule::ContactContinuation: {
      const Front e = sol.front(ev.incoming.front());
      if (e.kind != FrontKind::FanEdge)
        throw EngineError("delta contact leaving a fan through its right edge");
      const Region L = sol.region(L_id), R = sol.region(R_id);
      const double ul = std::get<ConstU>(L.u).u;
      VField strip;
      if (const auto* wc = std::get_if<WCurved>(&R.v))
        strip = WEdge{ul - 1.0, std::get<Line>(e.geometry), *wc, P};
      else
        strip = ConstV{value(R.v, P.t, P.x)};
      const int S = detail::add_region(sol, ConstU{ul}, strip);
      out.push_back(detail::add_front(sol, FrontKind::DeltaContact,
                                      Line{P, ul - 1.0}, L_id, S, P.t,
                                      ConstantStrength{gamma}, EvenSplit{}));
      out.push_back(detail::add_front(sol, FrontKind::FanEdge, e.geometry, S,
                                      R_id, P.t));
      break;
    }
    default: {
      const Region L = sol.region(L_id), R = sol.region(R_id);
      const State sl{std::get<ConstU>(L.u).u, value(L.v, P.t, P.x)};
      const State sr{std::get<ConstU>(R.u).u, value(R.v, P.t, P.x)};
      if (!std::isfinite(sl.v) || !std::isfinite(sr.v))
        throw EngineError("singular trace at " + detail::describe(sol, ev));
      auto fan = riemann::solve_grp(sl, sr, gamma, P);
      const bool l_const = std::holds_alternative<ConstV>(L.v);
      const bool r_const = std::holds_alternative<ConstV>(R.v);
      if ((!l_const && carries_atom(fan.fronts.front().kind) &&
           fan.fronts.front().kind == FrontKind::DeltaShock) ||
          (!r_const && fan.fronts.back().kind == FrontKind::DeltaShock))
        throw EngineError("growing atom next to a non-constant region");
      out = detail::install_fan(sol, fan, L_id, R_id);
      break;
    }
  }
  for (int id : ev.incoming) detail::terminate(sol, id, P.t);
  fr.erase(fr.begin() + lo, fr.begin() + lo + ev.incoming.size());
  fr.insert(fr.begin() + lo, out.begin(), out.end());
  ev.outgoing = out;
  sol.events.push_back(ev);
  sol.t_max_computed = std::max(sol.t_max_computed, P.t);
  return sol;
}

// Global solution: interactions are resolved until no pair of adjacent
// fronts meets again.
inline Solution run(const Scenario& sc) {
  Solution sol = initial_solution(sc);
  while (auto ev = next_event(sol, sol.t_max_computed)) {
    if (sol.interaction_count() >= kMaxEvents)
      throw EngineError("event budget exhausted");
    sol = resolve_event(std::move(sol), *ev);
  }
  sol.t_max_computed = std::max(sol.t_max_computed, sc.t_max);
  sol.complete = true;
  return sol;
}

// Solution of a single generalized Riemann problem centred at the origin.
// It is not a three-state scenario: the stored scenario only carries the two
// states (offset 0), and case_id is 0.
inline Solution riemann_solution(const State& left, const State& right,
                                 double gamma = 0) {
  Solution sol;
  sol.scenario = {left, right, right, 0.0, 10.0};
  detail::add_region(sol, ConstU{left.u}, ConstV{left.v});
  detail::add_region(sol, ConstU{right.u}, ConstV{right.v});
  const Point origin{0, 0};
  auto fan = riemann::solve_grp(left, right, gamma, origin);
  std::vector<int> ids;
  if (!fan.fronts.empty()) ids = detail::install_fan(sol, fan, 0, 1);
  sol.events.push_back({origin, {}, ids, ResolutionRule::Initial});
  sol.frontier = ids;
  sol.t_max_computed = sol.scenario.t_max;
  sol.complete = true;
  return sol;
}

}  // namespace interact
}  // namespace deltafront

#endif  // DELTAFRONT_INTERACT_HPP_
