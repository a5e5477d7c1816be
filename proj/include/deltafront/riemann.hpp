//  Copyright 2026 deltafront authors

#ifndef DELTAFRONT_RIEMANN_HPP_
#define DELTAFRONT_RIEMANN_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "deltafront/core.hpp"

namespace deltafront {
namespace riemann {

enum class WaveCase { Constant, RarefactionContact, ShockContact, DeltaShock };

inline const char* to_string(WaveCase c) {
  switch (c) {
    case WaveCase::Constant: return "Constant";
    case WaveCase::RarefactionContact: return "RarefactionContact";
    case WaveCase::ShockContact: return "ShockContact";
    case WaveCase::DeltaShock: return "DeltaShock";
  }
  return "?";
}

// The boundary u_L = u_R + 2 belongs to the delta branch.
inline WaveCase classify(double u_l, double u_r) {
  if (u_l == u_r) return WaveCase::Constant;
  if (u_r > u_l) return WaveCase::RarefactionContact;
  if (u_l >= u_r + 2.0) return WaveCase::DeltaShock;
  return WaveCase::ShockContact;
}

inline double rh_deficit(const State& left, const State& right, double speed) {
  return deficit(left, right, speed);
}

// Middle v of a contact+shock pair: zero deficit at speed (u_L + u_R)/2.
inline double v_star(double u_l, double u_r, double v_r) {
  const double den = 2.0 + u_r - u_l;
  if (den == 0.0 || 2.0 + u_l - u_r == 0.0)
    throw std::domain_error("v_star: degenerate denominator");
  return v_r * (2.0 + u_l - u_r) / den;
}

inline std::pair<double, double> split_strength(double alpha, double speed,
                                                double u_l, double u_r) {
  if (u_l == u_r)
    throw std::domain_error("split_strength: u_L == u_R, use the even split");
  return {alpha * (speed - u_r + 1.0) / (u_l - u_r),
          alpha * (u_l - 1.0 - speed) / (u_l - u_r)};
}

struct FanFront {
  FrontKind kind = FrontKind::Shock;
  CurveGeometry geometry;
  std::optional<StrengthLaw> strength;
  std::optional<SplitRule> split;
};

struct FanRegion {
  UField u;
  VField v;
};

// regions.size() == fronts.size() + 1; regions[k] lies left of fronts[k].
struct WaveFan {
  Point origin;
  std::vector<FanFront> fronts;
  std::vector<FanRegion> regions;
};

inline FanRegion constant_region(const State& s) {
  return {ConstU{s.u}, ConstV{s.v}};
}

// Generalized problem: two states plus an atom of mass gamma at the origin.
inline WaveFan solve_grp(const State& left, const State& right, double gamma,
                         const Point& origin) {
  WaveFan fan;
  fan.origin = origin;
  fan.regions.push_back(constant_region(left));
  const double ul = left.u, ur = right.u;

  // Line of slope u_L - 1 from the origin; carries the atom if there is one.
  auto contact = [&](double slope) {
    FanFront f;
    f.geometry = Line{origin, slope};
    if (gamma != 0.0) {
      f.kind = FrontKind::DeltaContact;
      f.strength = ConstantStrength{gamma};
      f.split = EvenSplit{};
    } else {
      f.kind = FrontKind::Contact;
    }
    return f;
  };

  switch (classify(ul, ur)) {
    case WaveCase::Constant:
      if (gamma != 0.0 || left.v != right.v) {
        fan.fronts.push_back(contact(ul - 1.0));
        fan.regions.push_back(constant_region(right));
      }
      break;
    case WaveCase::RarefactionContact: {
      const double v_mid = right.v * std::exp(ul - ur);
      fan.fronts.push_back(contact(ul - 1.0));
      fan.regions.push_back(constant_region({ul, v_mid}));
      fan.fronts.push_back({FrontKind::FanEdge, Line{origin, ul}, {}, {}});
      fan.regions.push_back({FanU{origin}, FanExpV{right.v, ur, origin}});
      fan.fronts.push_back({FrontKind::FanEdge, Line{origin, ur}, {}, {}});
      fan.regions.push_back(constant_region(right));
      break;
    }
    case WaveCase::ShockContact: {
      const double vs = v_star(ul, ur, right.v);
      fan.fronts.push_back(contact(ul - 1.0));
      fan.regions.push_back(constant_region({ul, vs}));
      fan.fronts.push_back(
          {FrontKind::Shock, Line{origin, 0.5 * (ul + ur)}, {}, {}});
      fan.regions.push_back(constant_region(right));
      break;
    }
    case WaveCase::DeltaShock: {
      const double c = 0.5 * (ul + ur);
      FanFront f;
      f.kind = FrontKind::DeltaShock;
      f.geometry = Line{origin, c};
      f.strength = AffineStrength{rh_deficit(left, right, c), gamma, origin.t};
      f.split = TraceSplit{ConstU{ul}, ConstU{ur}};
      fan.fronts.push_back(f);
      fan.regions.push_back(constant_region(right));
      break;
    }
  }
  return fan;
}

inline WaveFan solve_riemann(const State& left, const State& right,
                             const Point& origin) {
  return solve_grp(left, right, 0.0, origin);
}

}  // namespace riemann
}  // namespace deltafront

#endif  // DELTAFRONT_RIEMANN_HPP_
