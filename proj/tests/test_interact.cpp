//  Copyright 2026 deltafront authors

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "battery.hpp"
#include "deltafront/interact.hpp"

using namespace deltafront;
using interact::ScenarioError;

namespace {

const std::vector<battery::Entry>& all() {
  static const auto b = battery::load();
  return b;
}

std::vector<const Event*> interactions(const Solution& sol) {
  std::vector<const Event*> out;
  for (const Event& e : sol.events)
    if (e.rule != ResolutionRule::Initial) out.push_back(&e);
  return out;
}

void expect_event(const Event& e, ResolutionRule rule, double t, double x) {
  EXPECT_EQ(e.rule, rule) << to_string(e.rule);
  EXPECT_NEAR(e.point.t, t, 1e-12 * (1 + t));
  EXPECT_NEAR(e.point.x, x, 1e-12 * (1 + std::abs(x)));
}

std::string message(const Scenario& sc) {
  try {
    interact::validate_scenario(sc);
  } catch (const ScenarioError& e) {
    return e.what();
  }
  return "";
}

Scenario random_scenario(int cs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0, 1);
  const double u1 = -3 + 6 * U(rng), a = 0.1 + 3 * U(rng);
  double u0 = 0, u2 = 0, off = 0;
  switch (cs) {
    case 1: u0 = u1 + 2 + 3 * U(rng); u2 = u1 - 2 - 3 * U(rng); off = U(rng) < 0.5 ? -a : a; break;
    case 2: u0 = u1 + 2 + 3 * U(rng); u2 = u1 - 0.0005 - 1.998 * U(rng); off = -a; break;
    case 3: u2 = u1 - 2 - 3 * U(rng); u0 = u1 + 0.0005 + 1.998 * U(rng); off = a; break;
    case 4: u0 = u1 + 2 + 3 * U(rng); u2 = u1 + 0.001 + 6 * U(rng); off = -a; break;
    default: u2 = u1 - 2 - 3 * U(rng); u0 = u1 - 0.001 - 6 * U(rng); off = a; break;
  }
  return {{u0, -2 + 4 * U(rng)}, {u1, -2 + 4 * U(rng)}, {u2, -2 + 4 * U(rng)}, off, 10};
}

// Atom mass entering an event equals the mass leaving it.
void expect_conserved(const Solution& sol, const std::string& label) {
  for (const Event& e : sol.events) {
    if (e.rule == ResolutionRule::Initial) continue;
    double in = 0, out = 0;
    for (int id : e.incoming) {
      EXPECT_NEAR(sol.front(id).t_end, e.point.t, 0) << label;
      in += sol.front(id).alpha(e.point.t);
    }
    for (int id : e.outgoing) {
      EXPECT_NEAR(sol.front(id).t_begin, e.point.t, 0) << label;
      EXPECT_NEAR(sol.front(id).position(e.point.t), e.point.x,
                  1e-9 * (1 + std::abs(e.point.x))) << label << ' ' << to_string(e.rule);
      out += sol.front(id).alpha(e.point.t);
    }
    EXPECT_NEAR(in, out, 1e-10 * (1 + std::abs(in))) << label << ' ' << to_string(e.rule);
  }
}

}  // namespace

TEST(Validate, CaseIds) {
  EXPECT_EQ(interact::validate_scenario({{6, 1}, {3, 1}, {0, 1}, -1, 10}), 1);
  EXPECT_EQ(interact::validate_scenario({{6, 1}, {3, 1}, {0, 1}, 1, 10}), 1);
  EXPECT_EQ(interact::validate_scenario({{6, 1}, {2, 1}, {1, 1}, -1, 10}), 2);
  EXPECT_EQ(interact::validate_scenario({{4, 1}, {3, 1}, {0, 1}, 1, 10}), 3);
  EXPECT_EQ(interact::validate_scenario({{4, 1}, {1, 1}, {1.5, 1}, -1, 10}), 4);
  EXPECT_EQ(interact::validate_scenario({{-1, 1}, {4, 1}, {0, 1}, 1, 10}), 5);
}

TEST(Validate, Messages) {
  EXPECT_EQ(message({{1, 1}, {0, 1}, {2, 1}, -1, 10}), "u0 >= u1+2 violated");
  EXPECT_EQ(message({{0, 1}, {1, 1}, {0, 1}, 1, 10}), "u1 >= u2+2 violated");
  EXPECT_EQ(message({{4, 1}, {1, 1}, {1, 1}, -1, 10}), "u2 != u1 violated");
  EXPECT_EQ(message({{4, 1}, {4, 1}, {1, 1}, 1, 10}), "u0 != u1 violated");
  EXPECT_EQ(message({{4, 1}, {1, 1}, {2, 1}, 0, 10}), "offset != 0 violated");
  EXPECT_EQ(message({{4, 1}, {1, 1}, {2, 1}, -1, 0}), "t_max > 0 violated");
  EXPECT_EQ(message({{4, NAN}, {1, 1}, {2, 1}, -1, 10}), "non-finite scenario value");
  EXPECT_THROW(interact::run({{1, 1}, {0, 1}, {2, 1}, -1, 10}), ScenarioError);
}

TEST(Events, CaseOneMerge) {
  const Solution& sol = battery::find(all(), "case1").solution;
  const auto ev = interactions(sol);
  ASSERT_EQ(ev.size(), 1u);
  expect_event(*ev[0], ResolutionRule::MergeDeltas, 1.0 / 3, 0.5);
  const Front& m = sol.front(ev[0]->outgoing.at(0));
  EXPECT_EQ(m.kind, FrontKind::DeltaShock);
  EXPECT_NEAR(m.speed(1), 3, 1e-15);
  for (double t : {1.0 / 3, 1.0, 9.0}) EXPECT_NEAR(m.alpha(t), 2 + 6 * (t - 1.0 / 3), 1e-12);
}

TEST(Events, CaseTwo) {
  const Solution& sol = battery::find(all(), "case2").solution;
  const auto ev = interactions(sol);
  ASSERT_EQ(ev.size(), 2u);
  expect_event(*ev[0], ResolutionRule::DeltaCrossesContact, 1.0 / 3, 1.0 / 3);
  expect_event(*ev[1], ResolutionRule::ShockHitsDelta, 0.4, 0.6);
  const Front& mid = sol.front(ev[0]->outgoing.at(0));
  EXPECT_NEAR(mid.alpha(1.0 / 3), 4.0 / 3, 1e-12);
  EXPECT_NEAR(mid.alpha(0.4), 2, 1e-12);  // rate 10 against v* = 3
  const Front& last = sol.front(ev[1]->outgoing.at(0));
  EXPECT_NEAR(last.speed(1), 3.5, 1e-15);
  EXPECT_NEAR(last.alpha(2), 2 + 5 * 1.6, 1e-12);
}

TEST(Events, CaseThree) {
  const Solution& sol = battery::find(all(), "case3").solution;
  const auto ev = interactions(sol);
  ASSERT_EQ(ev.size(), 2u);
  expect_event(*ev[0], ResolutionRule::ShockHitsDelta, 0.5, 1.75);
  expect_event(*ev[1], ResolutionRule::DeltaCrossesContact, 0.75, 2.25);
  const Front& a = sol.front(ev[0]->outgoing.at(0));
  EXPECT_NEAR(a.alpha(0.5), 1.5, 1e-12);
  EXPECT_NEAR(a.alpha(0.75), 3, 1e-12);
  const Front& b = sol.front(ev[1]->outgoing.at(0));
  EXPECT_NEAR(b.alpha(4), 3 + 4 * 3.25, 1e-12);
}

TEST(Events, CaseFourEntryAndBreakdown) {
  for (const char* key : {"case4i_", "case4iia", "case4iib", "case4iic"}) {
    const Solution& sol = battery::find(all(), key).solution;
    const auto ev = interactions(sol);
    ASSERT_GE(ev.size(), 3u) << key;
    expect_event(*ev[0], ResolutionRule::DeltaCrossesContact, 0.4, 0);
    expect_event(*ev[1], ResolutionRule::DeltaEntersFan, 2.0 / 3, 2.0 / 3);
    const Front& f = sol.front(ev[1]->outgoing.at(0));
    ASSERT_TRUE(std::holds_alternative<SqrtCurve>(f.geometry));
    EXPECT_NEAR(std::get<SqrtCurve>(f.geometry).K, -std::sqrt(6.0), 1e-12);
  }
  const auto iia = interactions(battery::find(all(), "case4iia").solution);
  ASSERT_EQ(iia.size(), 3u);
  expect_event(*iia[2], ResolutionRule::BreakdownBifurcation, 1.5, 3);
}

TEST(Events, CaseFourExits) {
  auto ev = interactions(battery::find(all(), "case4i_").solution);
  ASSERT_EQ(ev.size(), 3u);
  expect_event(*ev[2], ResolutionRule::FrontExitsFan, 0.96, 1.44);
  const Solution& s1 = battery::find(all(), "case4i_").solution;
  EXPECT_NEAR(s1.front(ev[2]->outgoing.at(0)).speed(2), 2.75, 1e-15);

  for (auto [key, t, x] : {std::tuple{"case4iib", 24.0, 84.0}, {"case4iic", 8.0 / 3, 20.0 / 3}}) {
    const Solution& sol = battery::find(all(), key).solution;
    ev = interactions(sol);
    ASSERT_EQ(ev.size(), 4u);
    expect_event(*ev[2], ResolutionRule::BreakdownBifurcation, 1.5, 3);
    expect_event(*ev[3], ResolutionRule::FrontExitsFan, t, x);
    ASSERT_EQ(ev[3]->outgoing.size(), 2u);
    const Front& g3 = sol.front(ev[3]->outgoing[0]);
    const Front& g4 = sol.front(ev[3]->outgoing[1]);
    EXPECT_EQ(g3.kind, FrontKind::Contact);
    EXPECT_EQ(g4.kind, FrontKind::Shock);
    EXPECT_NEAR(g3.speed(t + 1), 3, 1e-15);
    const double u2 = sol.scenario.right.u;
    EXPECT_NEAR(g4.speed(t + 1), 0.5 * (4 + u2), 1e-15);
    // Γ4 leaves tangent to the curved shock.
    EXPECT_NEAR(g4.speed(t), sol.front(ev[3]->incoming[0]).speed(t), 1e-12);
  }
}

TEST(Events, CaseFive) {
  const double ts = 2;  // a^2 (u1 - u2) / 2 with a = 1
  for (const char* key : {"case5_bifurcation_u0_below", "case5_bifurcation_u0_above"}) {
    const Solution& sol = battery::find(all(), key).solution;
    const auto ev = interactions(sol);
    ASSERT_GE(ev.size(), 3u);
    expect_event(*ev[0], ResolutionRule::DeltaEntersFan, 0.5, 2);
    expect_event(*ev[1], ResolutionRule::BreakdownBifurcation, ts, 4);
    const double u0 = sol.scenario.left.u;
    const double tc = 2 * std::exp(2 - u0);  // Γ1 reaches the edge x = u0 t
    expect_event(*ev[2], ResolutionRule::ContactContinuation, tc, u0 * tc);
    const Front& g1 = sol.front(ev[2]->outgoing.at(0));
    EXPECT_EQ(g1.kind, FrontKind::DeltaContact);
    EXPECT_NEAR(g1.speed(tc + 1), u0 - 1, 1e-15);
  }
  const auto above = interactions(battery::find(all(), "case5_bifurcation_u0_above").solution);
  ASSERT_EQ(above.size(), 4u);
  expect_event(*above[3], ResolutionRule::FrontExitsFan, 8, 8);

  const auto none = interactions(battery::find(all(), "case5_no_bifurcation").solution);
  ASSERT_EQ(none.size(), 3u);
  expect_event(*none[1], ResolutionRule::FrontExitsFan, 8.0 / 9, 8.0 / 3);
  expect_event(*none[2], ResolutionRule::DeltaCrossesContact, 8.0 / 3, 16.0 / 3);
}

TEST(Events, BatteryConservesAtomMass) {
  for (const auto& b : all()) expect_conserved(b.solution, b.name);
}

TEST(Events, BatteryCaseIds) {
  for (const auto& b : all())
    EXPECT_EQ(b.solution.case_id, b.name[7] - '0') << b.name;
}

TEST(Events, ChronologicalAndComplete) {
  for (const auto& b : all()) {
    double prev = -1;
    for (const Event& e : b.solution.events) {
      EXPECT_GE(e.point.t, prev);
      prev = e.point.t;
    }
    EXPECT_TRUE(b.solution.complete);
    for (int id : b.solution.frontier) EXPECT_EQ(b.solution.front(id).t_end, kInf);
  }
}

class RandomScenarios : public ::testing::TestWithParam<int> {};

TEST_P(RandomScenarios, ResolveWithoutError) {
  const int cs = GetParam();
  std::mt19937_64 rng(100 + cs);
  int max_events = 0;
  for (int i = 0; i < 10000; ++i) {
    const Scenario sc = random_scenario(cs, rng);
    Solution sol;
    ASSERT_NO_THROW(sol = interact::run(sc)) << i;
    ASSERT_EQ(sol.case_id, cs);
    max_events = std::max(max_events, sol.interaction_count());
    if (i % 50 == 0) expect_conserved(sol, "random " + std::to_string(i));
    // Neighbouring fronts never cross after the last event.
    const double t = 2 * (sol.events.back().point.t + 1);
    const auto fr = sol.fronts_at(t);
    for (std::size_t k = 1; k < fr.size(); ++k)
      EXPECT_EQ(fr[k - 1]->right_region, fr[k]->left_region) << i;
  }
  EXPECT_LE(max_events, 8);
}

INSTANTIATE_TEST_SUITE_P(Cases, RandomScenarios, ::testing::Values(1, 2, 3, 4, 5));
