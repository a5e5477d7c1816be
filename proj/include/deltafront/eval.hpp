//  Copyright 2026 deltafront authors

#ifndef DELTAFRONT_EVAL_HPP_
#define DELTAFRONT_EVAL_HPP_

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "deltafront/core.hpp"

namespace deltafront {
namespace eval {

struct Atom {
  double x;
  double alpha;
  double alpha0;
  double alpha1;
  int front_id;
};

struct Sample {
  double t = 0;
  std::vector<double> xs;
  std::vector<double> u;
  std::vector<double> v;  // regular part; +-inf marks a singular boundary
  std::vector<Atom> atoms;
};

inline std::vector<Atom> atoms_at(const Solution& sol, double t) {
  std::vector<Atom> out;
  for (const Front* f : sol.fronts_at(t)) {
    if (!f->strength) continue;
    auto [a0, a1] = f->split_at(t);
    out.push_back({f->position(t), f->alpha(t), a0, a1, f->id});
  }
  return out;
}

// Region containing x at time t; a point on a front belongs to its left side.
inline const Region& region_at(const Solution& sol,
                               const std::vector<const Front*>& ordered,
                               double t, double x) {
  if (ordered.empty()) return sol.region(0);
  const double tol = 1e-12 * (1.0 + std::abs(x));
  for (const Front* f : ordered)
    if (f->position(t) >= x - tol) return sol.region(f->left_region);
  return sol.region(ordered.back()->right_region);
}

inline const Region& region_at(const Solution& sol, double t, double x) {
  return region_at(sol, sol.fronts_at(t), t, x);
}

inline Sample sample(const Solution& sol, double t,
                     const std::vector<double>& xs) {
  if (!(t > 0)) throw std::invalid_argument("sample: t must be positive");
  Sample s;
  s.t = t;
  s.xs = xs;
  const auto ordered = sol.fronts_at(t);
  for (double x : xs) {
    const Region& r = region_at(sol, ordered, t, x);
    s.u.push_back(value(r.u, t, x));
    s.v.push_back(value(r.v, t, x));
  }
  s.atoms = atoms_at(sol, t);
  return s;
}

}  // namespace eval
}  // namespace deltafront

#endif  // DELTAFRONT_EVAL_HPP_
