//  Copyright 2026 deltafront authors

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "battery.hpp"
#include "deltafront/io.hpp"

using namespace deltafront;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("deltafront_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string parse_error(const std::string& text) {
  try {
    io::parse_scenario_text(text);
  } catch (const interact::ScenarioError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Parse, Example) {
  const auto f = io::parse_scenario_text(R"({"states": [[6, 1], [3, 1], [0, 1]], "offset": -1})");
  EXPECT_EQ(f.scenario.left.u, 6);
  EXPECT_EQ(f.scenario.right.u, 0);
  EXPECT_EQ(f.scenario.offset, -1);
  EXPECT_EQ(f.scenario.t_max, 10);
  EXPECT_EQ(f.nx, 201);
  EXPECT_EQ(f.nt, 101);
  EXPECT_FALSE(f.window);
  EXPECT_EQ(interact::validate_scenario(f.scenario), 1);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error(R"({"states": [[3, 1], [3, 1], [0, 1]], "offset": -1})"), "u0 >= u1+2 violated");
  EXPECT_NE(parse_error("{not json"), "");
  EXPECT_NE(parse_error(R"({"states": [[6, 1], [3, 1]], "offset": -1})"), "");
  EXPECT_NE(parse_error(R"({"states": [[6, 1], [3, 1], [0, "a"]], "offset": -1})"), "");
  EXPECT_NE(parse_error(R"({"states": [[6, 1], [3, 1], [0, 1]]})"), "");
  EXPECT_EQ(parse_error(R"({"states": [[6, 1], [3, 1], [0, 1]], "offset": -1, "grid": [1, 5]})"),
            "nx, nt >= 2 violated");
  EXPECT_THROW(io::parse_scenario("/nonexistent/scenario.json"), interact::ScenarioError);
}

TEST(Parse, RoundTrip) {
  for (const auto& b : battery::load()) {
    const auto again = io::parse_scenario_text(io::serialize(b.file));
    EXPECT_TRUE(again == b.file) << b.name;
  }
  io::ScenarioFile f = io::parse_scenario_text(
      R"({"states": [[0.1, -0.3], [4.7, 1e-3], [0.2, 2]], "offset": 0.3, "t_max": 2.5,
          "grid": [11, 7], "window": [-1.5, 8], "outputs": {"svg": true, "atoms": false}})");
  EXPECT_TRUE(io::parse_scenario_text(io::serialize(f)) == f);
  EXPECT_TRUE(f.outputs.svg);
  EXPECT_FALSE(f.outputs.atoms);
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(io::fmt(0.1), "0.1");
  EXPECT_EQ(io::fmt(1.0 / 3), "0.3333333333333333");
  EXPECT_EQ(io::fmt(kInf), "inf");
  EXPECT_EQ(io::fmt(-kInf), "-inf");
  for (double x : {1.0 / 3, M_PI, 1e-300, 6.02e23}) EXPECT_EQ(std::stod(io::fmt(x)), x);
}

TEST(Emit, WritesSelectedFiles) {
  const auto all = battery::load();
  const auto& b = battery::find(all, "case1");
  const fs::path dir = scratch("emit");
  const auto files = io::emit(b.solution, b.file, dir);
  EXPECT_EQ(files.size(), 6u);
  for (const char* name : {"events.json", "fronts.csv", "u.csv", "v.csv", "atoms.csv", "diagram.svg"})
    EXPECT_TRUE(fs::exists(dir / name)) << name;
  const auto ev = io::json::parse(slurp(dir / "events.json"));
  EXPECT_EQ(ev["case"], 1);
  ASSERT_EQ(ev["events"].size(), 3u);
  EXPECT_EQ(ev["events"][2]["rule"], "MergeDeltas");
  EXPECT_NEAR(ev["events"][2]["t"].get<double>(), 1.0 / 3, 1e-15);
  EXPECT_NEAR(ev["events"][2]["x"].get<double>(), 0.5, 1e-15);

  std::istringstream u(slurp(dir / "u.csv"));
  std::string line;
  int rows = 0;
  while (std::getline(u, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), b.file.nx) << rows;
    ++rows;
  }
  EXPECT_EQ(rows, b.file.nt + 1);
  EXPECT_EQ(slurp(dir / "fronts.csv").rfind("front_id,kind,t,x,alpha,alpha0,alpha1\n", 0), 0u);
  fs::remove_all(dir);
}

TEST(Emit, AtomsHeaderOnlyWithoutDeltas) {
  const Solution sol = interact::riemann_solution({0, 1}, {1, 2});
  io::ScenarioFile f;
  f.scenario = sol.scenario;
  f.nx = 5;
  f.nt = 3;
  const fs::path dir = scratch("atoms");
  io::emit(sol, f, dir);
  EXPECT_EQ(slurp(dir / "atoms.csv"), "t,front_id,x,alpha,alpha0,alpha1\n");
  EXPECT_NE(slurp(dir / "fronts.csv").find("FanEdge,"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Emit, Deterministic) {
  for (const auto& b : battery::load()) {
    const fs::path a = scratch("det_a"), c = scratch("det_b");
    const auto fa = io::emit(b.solution, b.file, a);
    const auto again = interact::run(b.file.scenario);
    const auto fc = io::emit(again, b.file, c);
    ASSERT_EQ(fa.size(), fc.size());
    for (std::size_t k = 0; k < fa.size(); ++k)
      EXPECT_EQ(slurp(fa[k]), slurp(fc[k])) << b.name << ' ' << fa[k].filename();
    fs::remove_all(a);
    fs::remove_all(c);
  }
}

TEST(Emit, InitialRowIsInitialData) {
  const auto all = battery::load();
  const auto& b = battery::find(all, "case3");
  const auto win = io::auto_window(b.solution, b.file.scenario.t_max);
  const auto g = io::make_grid(1, 2, win, 9);
  std::istringstream in(io::field_csv(b.solution, g, 'u'));
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::stringstream rs(row);
  std::string cell;
  std::getline(rs, cell, ',');
  EXPECT_EQ(cell, "0");
  for (double x : g.xs) {
    std::getline(rs, cell, ',');
    EXPECT_EQ(std::stod(cell), io::initial_state(b.file.scenario, x).u);
  }
}

TEST(Svg, PolylinesTrackGeometry) {
  for (const auto& b : battery::load()) {
    const double t_max = b.file.scenario.t_max;
    const auto win = io::auto_window(b.solution, t_max);
    const std::string svg = io::diagram_svg(b.solution, t_max, win);
    const double W = 800, H = 600, m = 40;
    auto px = [&](double x) { return m + (x - win.first) / (win.second - win.first) * W; };
    auto t_of = [&](double py) { return (m + H - py) / H * t_max; };
    const std::regex poly(R"re(<polyline data-front="(\d+)"[^>]*points="([^"]*)")re");
    int n = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
      const Front& f = b.solution.front(std::stoi((*it)[1]));
      std::vector<std::pair<double, double>> pts;
      std::istringstream ps((*it)[2].str());
      std::string p;
      while (ps >> p) {
        const auto comma = p.find(',');
        pts.push_back({std::stod(p.substr(0, comma)), std::stod(p.substr(comma + 1))});
      }
      ASSERT_GE(pts.size(), 2u);
      double worst = 0;
      for (std::size_t k = 1; k < pts.size(); ++k)
        for (int j = 0; j <= 8; ++j) {
          const double w = j / 8.0;
          const double X = pts[k - 1].first + w * (pts[k].first - pts[k - 1].first);
          const double Y = pts[k - 1].second + w * (pts[k].second - pts[k - 1].second);
          const double t = std::clamp(t_of(Y), f.t_begin, std::min(f.t_end, t_max));
          worst = std::max(worst, std::abs(px(f.position(t)) - X));
        }
      EXPECT_LT(worst, 0.5) << b.name << " front " << f.id;
      ++n;
    }
    EXPECT_GT(n, 0);
    EXPECT_NE(svg.find("data-rule=\""), std::string::npos);
  }
}
