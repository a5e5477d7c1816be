//  Copyright 2026 deltafront authors
//
// deltafront solve | riemann | verify | oracle

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltafront/interact.hpp"
#include "deltafront/io.hpp"
#include "deltafront/riemann.hpp"
#include "deltafront/verify.hpp"

namespace df = deltafront;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitVerify = 3;

std::vector<double> parse_pair(const std::string& s, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw df::interact::ScenarioError(std::string("bad ") + what + ": " + s);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != 2) throw df::interact::ScenarioError(std::string("bad ") + what + ": " + s);
  return out;
}

std::string geometry_text(const df::CurveGeometry& g) {
  char buf[160];
  if (const auto* l = std::get_if<df::Line>(&g))
    std::snprintf(buf, sizeof buf, "line x = %.12g + %.12g (t - %.12g)", l->origin.x, l->slope,
                  l->origin.t);
  else if (const auto* s = std::get_if<df::SqrtCurve>(&g))
    std::snprintf(buf, sizeof buf, "sqrt x = %.12g + %.12g s + %.12g sqrt(s), s = t - %.12g",
                  s->center.x, s->u_k, s->K, s->center.t);
  else {
    const auto& c = std::get<df::LogCurve>(g);
    std::snprintf(buf, sizeof buf, "log x = %.12g + s (%.12g - log s), s = t - %.12g",
                  c.center.x, c.C, c.center.t);
  }
  return buf;
}

std::string strength_text(const df::StrengthLaw& law) {
  char buf[128];
  if (const auto* c = std::get_if<df::ConstantStrength>(&law))
    std::snprintf(buf, sizeof buf, "alpha = %.12g", c->gamma);
  else if (const auto* a = std::get_if<df::AffineStrength>(&law))
    std::snprintf(buf, sizeof buf, "alpha = %.12g (t - %.12g) + %.12g", a->s, a->t_ref, a->gamma);
  else
    std::snprintf(buf, sizeof buf, "alpha tabulated");
  return buf;
}

int cmd_solve(const std::string& file, double t_max, const std::string& grid,
              const std::string& window, const std::string& out, bool svg) {
  df::io::ScenarioFile f = df::io::parse_scenario(file);
  if (t_max > 0) f.scenario.t_max = t_max;
  if (!grid.empty()) {
    auto g = parse_pair(grid, "grid");
    f.nx = static_cast<int>(g[0]);
    f.nt = static_cast<int>(g[1]);
    if (f.nx < 2 || f.nt < 2) throw df::interact::ScenarioError("nx, nt >= 2 violated");
  }
  if (!window.empty()) {
    auto w = parse_pair(window, "window");
    if (!(w[0] < w[1])) throw df::interact::ScenarioError("x_min < x_max violated");
    f.window = std::pair{w[0], w[1]};
  }
  if (svg) f.outputs.svg = true;
  df::interact::validate_scenario(f.scenario);
  const df::Solution sol = df::interact::run(f.scenario);
  std::printf("case %d, %d interactions\n", sol.case_id, sol.interaction_count());
  for (const df::Event& e : sol.events)
    if (e.rule != df::ResolutionRule::Initial)
      std::printf("  %-21s t=%.15g x=%.15g\n", df::to_string(e.rule), e.point.t, e.point.x);
  for (const auto& p : df::io::emit(sol, f, out)) std::printf("wrote %s\n", p.c_str());
  return 0;
}

int cmd_riemann(const std::string& left, const std::string& right, double gamma) {
  auto l = parse_pair(left, "--left"), r = parse_pair(right, "--right");
  const df::State L{l[0], l[1]}, R{r[0], r[1]};
  std::printf("classify: %s\n", df::riemann::to_string(df::riemann::classify(L.u, R.u)));
  const auto fan = df::riemann::solve_grp(L, R, gamma, {0, 0});
  if (fan.fronts.empty()) std::printf("no waves\n");
  for (std::size_t k = 0; k < fan.fronts.size(); ++k) {
    const auto& ff = fan.fronts[k];
    std::printf("front %zu: %s, %s", k, df::to_string(ff.kind), geometry_text(ff.geometry).c_str());
    if (ff.strength) std::printf(", %s", strength_text(*ff.strength).c_str());
    std::printf("\n");
  }
  for (std::size_t k = 1; k + 1 < fan.regions.size(); ++k) {
    const auto& reg = fan.regions[k];
    if (const auto* cu = std::get_if<df::ConstU>(&reg.u)) {
      std::printf("region %zu: u = %.12g, v = %.12g\n", k, cu->u,
                  df::value(reg.v, 1.0, 0.0));
    } else {
      std::printf("region %zu: rarefaction fan\n", k);
    }
  }
  return 0;
}

int cmd_verify(const std::string& file, int tests, unsigned long long seed, double tol) {
  const df::io::ScenarioFile f = df::io::parse_scenario(file);
  const df::Solution sol = df::interact::run(f.scenario);
  const auto phis = df::verify::random_test_functions(sol, tests, seed);
  double worst = 0;
  for (const auto& phi : phis) worst = std::max(worst, df::verify::weak_residual(sol, phi).relative());
  const double t1 = std::min(f.scenario.t_max, 5.0);
  const auto win = df::io::auto_window(sol, t1);
  std::vector<double> ts;
  for (int k = 0; k <= 20; ++k) ts.push_back(t1 * k / 20);
  const double mass = df::verify::mass_balance(sol, win.first, win.second, ts).max_error();
  const bool ok = worst <= tol && mass <= 1e-8;
  std::printf("weak residual: max relative %.3e over %d test functions (tol %.1e)\n", worst,
              tests, tol);
  std::printf("mass balance: max error %.3e on [%g, %g], t in [0, %g]\n", mass, win.first,
              win.second, t1);
  std::printf("%s\n", ok ? "verified" : "FAILED");
  return ok ? 0 : kExitVerify;
}

int cmd_oracle(const std::string& file, int n) {
  const df::io::ScenarioFile f = df::io::parse_scenario(file);
  const df::Solution sol = df::interact::run(f.scenario);
  auto [t0, t1] = df::verify::fan_crossing_interval(sol);
  if (!std::isfinite(t1)) t1 = f.scenario.t_max;
  const auto run = df::verify::fan_approx_oracle(f.scenario, n, t1);
  const auto e = df::verify::compare(sol, run, t0, t1);
  std::printf("N=%d interval [%.12g, %.12g]\n", n, t0, t1);
  std::printf("trajectory sup error %.6e\nstrength sup error %.6e\n", e.trajectory, e.strength);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact front tracking with delta shocks"};
  app.require_subcommand(1);

  std::string file, grid, window, out = "out", left, right;
  double t_max = 0, gamma = 0, tol = 1e-6;
  bool svg = false;
  int tests = 200, n = 100;
  unsigned long long seed = 12345;

  auto* solve = app.add_subcommand("solve", "run a scenario and write outputs");
  solve->add_option("file", file, "scenario JSON")->required();
  solve->add_option("--t-max", t_max, "override t_max");
  solve->add_option("--grid", grid, "NX,NT");
  solve->add_option("--window", window, "X0,X1");
  solve->add_option("--out", out, "output directory");
  solve->add_flag("--svg", svg, "write diagram.svg");

  auto* riemann = app.add_subcommand("riemann", "solve one (generalized) Riemann problem");
  riemann->add_option("--left", left, "u,v")->required();
  riemann->add_option("--right", right, "u,v")->required();
  riemann->add_option("--atom", gamma, "initial atom mass");

  auto* verify = app.add_subcommand("verify", "weak-form and mass checks");
  verify->add_option("file", file, "scenario JSON")->required();
  verify->add_option("--tests", tests, "number of test functions");
  verify->add_option("--seed", seed, "seed");
  verify->add_option("--tol", tol, "relative residual tolerance");

  auto* oracle = app.add_subcommand("oracle", "compare against the N-shock approximation");
  oracle->add_option("file", file, "scenario JSON")->required();
  oracle->add_option("--n", n, "number of fan steps")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve) return cmd_solve(file, t_max, grid, window, out, svg);
    if (*riemann) return cmd_riemann(left, right, gamma);
    if (*verify) return cmd_verify(file, tests, seed, tol);
    if (*oracle) return cmd_oracle(file, n);
  } catch (const df::interact::ScenarioError& e) {
    std::cerr << "invalid scenario: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
