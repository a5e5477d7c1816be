//  Copyright 2026 deltafront authors

#include <cmath>
#include <cstring>

#include <gtest/gtest.h>

#include "battery.hpp"
#include "deltafront/eval.hpp"
#include "deltafront/interact.hpp"

using namespace deltafront;

namespace {

const std::vector<battery::Entry>& all() {
  static const auto b = battery::load();
  return b;
}

}  // namespace

TEST(Sample, MergedDeltaAtTimeOne) {
  const Solution& sol = battery::find(all(), "case1").solution;
  const auto s = eval::sample(sol, 1, {-3, 0, 2.4, 2.5, 2.6, 7});
  EXPECT_EQ(s.u, (std::vector<double>{6, 6, 6, 6, 0, 0}));  // x = 5/2 resolves left
  ASSERT_EQ(s.atoms.size(), 1u);
  EXPECT_NEAR(s.atoms[0].x, 2.5, 1e-15);
  EXPECT_NEAR(s.atoms[0].alpha, 6, 1e-14);
  EXPECT_NEAR(s.atoms[0].alpha0 + s.atoms[0].alpha1, 6, 1e-14);
  // split from -c alpha + (uL - 1) a0 + (uR - 1) a1 = 0 with c = 3
  EXPECT_NEAR(s.atoms[0].alpha0, 4, 1e-14);
}

TEST(Atoms, BeforeMerge) {
  const Solution& sol = battery::find(all(), "case1").solution;
  const auto a = eval::atoms_at(sol, 0.25);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_NEAR(a[0].alpha, 0.75, 1e-15);
  EXPECT_NEAR(a[1].alpha, 0.75, 1e-15);
  EXPECT_LT(a[0].x, a[1].x);
}

TEST(Atoms, ContinuousAcrossEvents) {
  for (const auto& b : all())
    for (const Event& e : b.solution.events) {
      if (e.rule == ResolutionRule::Initial) continue;
      const double t = e.point.t, h = 1e-9 * (1 + t);
      const auto before = eval::atoms_at(b.solution, t - h);
      const auto after = eval::atoms_at(b.solution, t + h);
      double mb = 0, ma = 0;
      for (const auto& a : before) mb += a.alpha;
      for (const auto& a : after) ma += a.alpha;
      EXPECT_NEAR(mb, ma, 1e-7 * (1 + mb)) << b.name << ' ' << to_string(e.rule);
    }
}

TEST(Atoms, AtomOnShockContactPairConstant) {
  const Solution sol = interact::riemann_solution({3, 1}, {2, 1}, 5);
  for (double t : {0.1, 1.0, 100.0}) {
    const auto a = eval::atoms_at(sol, t);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].alpha, 5);
    EXPECT_NEAR(a[0].x, 2 * t, 1e-13);
  }
}

TEST(Sample, RejectsNonPositiveTime) {
  const Solution& sol = battery::find(all(), "case1").solution;
  EXPECT_THROW(eval::sample(sol, 0, {0}), std::invalid_argument);
  EXPECT_THROW(eval::sample(sol, -1, {0}), std::invalid_argument);
}

TEST(Sample, Pure) {
  for (const auto& b : all()) {
    std::vector<double> xs;
    for (int k = 0; k < 300; ++k) xs.push_back(-5 + k * 0.05);
    const auto a = eval::sample(b.solution, 2.7, xs), c = eval::sample(b.solution, 2.7, xs);
    ASSERT_EQ(a.v.size(), c.v.size());
    EXPECT_EQ(std::memcmp(a.u.data(), c.u.data(), a.u.size() * sizeof(double)), 0);
    EXPECT_EQ(std::memcmp(a.v.data(), c.v.data(), a.v.size() * sizeof(double)), 0);
  }
}

TEST(Sample, InitialDataLimit) {
  for (const auto& b : all()) {
    const Scenario& sc = b.solution.scenario;
    const double xa = std::min(0.0, sc.offset), xb = std::max(0.0, sc.offset);
    std::vector<double> xs;
    for (double x : {-4.0, -2.5, xa - 0.5, 0.5 * (xa + xb), xb + 0.5, 3.0, 6.0})
      if (std::abs(x) > 0.2 && std::abs(x - sc.offset) > 0.2) xs.push_back(x);
    const auto s = eval::sample(b.solution, 1e-3, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const State want = xs[i] < xa ? sc.left : xs[i] < xb ? sc.middle : sc.right;
      EXPECT_EQ(s.u[i], want.u) << b.name << " x=" << xs[i];
      EXPECT_EQ(s.v[i], want.v) << b.name << " x=" << xs[i];
    }
    EXPECT_TRUE(eval::atoms_at(b.solution, 1e-12).size() <= 2);
    for (const auto& a : eval::atoms_at(b.solution, 1e-12)) EXPECT_LT(std::abs(a.alpha), 1e-10);
  }
}

TEST(Sample, WRegionRisesTowardContact) {
  const Solution& sol = battery::find(all(), "case4iia").solution;
  const double t = 3;
  const Front* g1 = nullptr;
  const Front* g2 = nullptr;
  for (const Front& f : sol.fronts) {
    if (f.kind == FrontKind::DeltaContact) g1 = &f;
    if (f.kind == FrontKind::Shock) g2 = &f;
  }
  ASSERT_TRUE(g1 && g2);
  std::vector<double> xs;
  const double x0 = g1->position(t), x1 = g2->position(t);
  for (int k = 1; k < 50; ++k) xs.push_back(x0 + (x1 - x0) * k / 50);
  const auto s = eval::sample(sol, t, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_TRUE(std::isfinite(s.v[i]));
    if (i > 0) EXPECT_LT(s.v[i], s.v[i - 1]);
  }
  // On the contact itself the left constant state is reported; just right of it, +inf.
  const auto edge = eval::sample(sol, t, {x0});
  EXPECT_EQ(edge.v[0], sol.scenario.left.v);
  const Region& w = sol.region(g1->right_region);
  EXPECT_EQ(value(w.v, t, x0), kInf);
}

TEST(Sample, AtomsSortedByPosition) {
  for (const auto& b : all())
    for (double t : {0.1, 0.3, 1.0, 5.0}) {
      const auto a = eval::atoms_at(b.solution, t);
      for (std::size_t k = 1; k < a.size(); ++k) EXPECT_LE(a[k - 1].x, a[k].x);
    }
}
