//  Copyright 2026 deltafront authors

#ifndef DELTAFRONT_IO_HPP_
#define DELTAFRONT_IO_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "deltafront/core.hpp"
#include "deltafront/eval.hpp"
#include "deltafront/interact.hpp"

namespace deltafront {
namespace io {

using nlohmann::json;

struct Outputs {
  bool events = true;
  bool fronts = true;
  bool fields = true;
  bool atoms = true;
  bool svg = false;

  bool operator==(const Outputs&) const = default;
};

struct ScenarioFile {
  Scenario scenario;
  int nx = 201;
  int nt = 101;
  std::optional<std::pair<double, double>> window;  // auto when empty
  Outputs outputs;
};

inline bool operator==(const ScenarioFile& a, const ScenarioFile& b) {
  auto st = [](const State& s) { return std::pair{s.u, s.v}; };
  const Scenario &p = a.scenario, &q = b.scenario;
  return st(p.left) == st(q.left) && st(p.middle) == st(q.middle) &&
         st(p.right) == st(q.right) && p.offset == q.offset && p.t_max == q.t_max &&
         a.nx == b.nx && a.nt == b.nt && a.window == b.window &&
         a.outputs == b.outputs;
}

// Shortest text that reads back to the same double; "inf"/"-inf" for
// singular values.
inline std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace detail {

inline double number(const json& j, const char* what) {
  if (!j.is_number()) throw interact::ScenarioError(std::string("malformed scenario: ") + what);
  return j.get<double>();
}

}  // namespace detail

inline ScenarioFile parse_scenario_json(const json& j) {
  using detail::number;
  if (!j.is_object()) throw interact::ScenarioError("malformed scenario: not an object");
  ScenarioFile f;
  const json& st = j.value("states", json());
  if (!st.is_array() || st.size() != 3)
    throw interact::ScenarioError("malformed scenario: states must hold three [u,v] pairs");
  State s[3];
  for (int k = 0; k < 3; ++k) {
    if (!st[k].is_array() || st[k].size() != 2)
      throw interact::ScenarioError("malformed scenario: states must hold three [u,v] pairs");
    s[k] = {number(st[k][0], "state u"), number(st[k][1], "state v")};
  }
  if (!j.contains("offset")) throw interact::ScenarioError("malformed scenario: offset missing");
  f.scenario = {s[0], s[1], s[2], number(j["offset"], "offset"), 10.0};
  if (j.contains("t_max")) f.scenario.t_max = number(j["t_max"], "t_max");
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() ||
        !g[1].is_number_integer())
      throw interact::ScenarioError("malformed scenario: grid must be [nx, nt]");
    f.nx = g[0].get<int>();
    f.nt = g[1].get<int>();
  }
  if (f.nx < 2 || f.nt < 2) throw interact::ScenarioError("nx, nt >= 2 violated");
  if (j.contains("window")) {
    const json& w = j["window"];
    if (!w.is_array() || w.size() != 2)
      throw interact::ScenarioError("malformed scenario: window must be [x_min, x_max]");
    f.window = std::pair{number(w[0], "window"), number(w[1], "window")};
    if (!(f.window->first < f.window->second))
      throw interact::ScenarioError("x_min < x_max violated");
  }
  if (j.contains("outputs")) {
    const json& o = j["outputs"];
    if (!o.is_object()) throw interact::ScenarioError("malformed scenario: outputs");
    f.outputs.events = o.value("events", f.outputs.events);
    f.outputs.fronts = o.value("fronts", f.outputs.fronts);
    f.outputs.fields = o.value("fields", f.outputs.fields);
    f.outputs.atoms = o.value("atoms", f.outputs.atoms);
    f.outputs.svg = o.value("svg", f.outputs.svg);
  }
  interact::validate_scenario(f.scenario);
  return f;
}

inline ScenarioFile parse_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw interact::ScenarioError(std::string("malformed scenario: ") + e.what());
  }
  return parse_scenario_json(j);
}

inline ScenarioFile parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw interact::ScenarioError("cannot read scenario " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

inline json to_json(const ScenarioFile& f) {
  const Scenario& s = f.scenario;
  json j;
  j["states"] = {{s.left.u, s.left.v}, {s.middle.u, s.middle.v}, {s.right.u, s.right.v}};
  j["offset"] = s.offset;
  j["t_max"] = s.t_max;
  j["grid"] = {f.nx, f.nt};
  if (f.window) j["window"] = {f.window->first, f.window->second};
  j["outputs"] = {{"events", f.outputs.events}, {"fronts", f.outputs.fronts},
                  {"fields", f.outputs.fields}, {"atoms", f.outputs.atoms},
                  {"svg", f.outputs.svg}};
  return j;
}

inline std::string serialize(const ScenarioFile& f) { return to_json(f).dump(2) + "\n"; }

// Window covering every front over [0, t_max], padded by a tenth.
inline std::pair<double, double> auto_window(const Solution& sol, double t_max) {
  double lo = std::min(0.0, sol.scenario.offset), hi = std::max(0.0, sol.scenario.offset);
  for (int k = 1; k <= 64; ++k) {
    const double t = t_max * k / 64;
    for (const Front* f : sol.fronts_at(t)) {
      lo = std::min(lo, f->position(t));
      hi = std::max(hi, f->position(t));
    }
  }
  const double pad = std::max(1.0, 0.1 * (hi - lo));
  return {lo - pad, hi + pad};
}

// Initial data, with a point on a jump taking the left state.
inline State initial_state(const Scenario& sc, double x) {
  const double xa = sc.offset < 0 ? sc.offset : 0.0;
  const double xb = sc.offset < 0 ? 0.0 : sc.offset;
  if (x <= xa) return sc.left;
  if (x <= xb) return sc.middle;
  return sc.right;
}

struct Grid {
  std::vector<double> ts;
  std::vector<double> xs;
};

inline Grid make_grid(double t_max, int nt, std::pair<double, double> window, int nx) {
  Grid g;
  for (int k = 0; k < nt; ++k) g.ts.push_back(t_max * k / (nt - 1));
  for (int k = 0; k < nx; ++k)
    g.xs.push_back(window.first + (window.second - window.first) * k / (nx - 1));
  return g;
}

inline json events_json(const Solution& sol) {
  json ev = json::array();
  for (const Event& e : sol.events)
    ev.push_back({{"t", e.point.t},
                  {"x", e.point.x},
                  {"rule", to_string(e.rule)},
                  {"incoming", e.incoming},
                  {"outgoing", e.outgoing}});
  return {{"case", sol.case_id}, {"events", ev}};
}

inline std::string fronts_csv(const Solution& sol, double t_max, int nt) {
  std::ostringstream os;
  os << "front_id,kind,t,x,alpha,alpha0,alpha1\n";
  for (const Front& f : sol.fronts) {
    const double t1 = std::min(f.t_end, t_max);
    if (!(t1 > f.t_begin)) continue;
    for (int k = 0; k < nt; ++k) {
      const double t = f.t_begin + (t1 - f.t_begin) * k / (nt - 1);
      os << f.id << ',' << to_string(f.kind) << ',' << fmt(t) << ',' << fmt(f.position(t));
      if (f.strength) {
        auto [a0, a1] = f.split_at(t);
        os << ',' << fmt(f.alpha(t)) << ',' << fmt(a0) << ',' << fmt(a1) << '\n';
      } else {
        os << ",,,\n";
      }
    }
  }
  return os.str();
}

// Rows are times, columns positions; `which` is 'u' or 'v'.
inline std::string field_csv(const Solution& sol, const Grid& g, char which) {
  std::ostringstream os;
  os << "t";
  for (double x : g.xs) os << ',' << fmt(x);
  os << '\n';
  for (double t : g.ts) {
    os << fmt(t);
    if (t == 0) {
      for (double x : g.xs) {
        const State s = initial_state(sol.scenario, x);
        os << ',' << fmt(which == 'u' ? s.u : s.v);
      }
    } else {
      const eval::Sample s = eval::sample(sol, t, g.xs);
      for (std::size_t i = 0; i < g.xs.size(); ++i)
        os << ',' << fmt(which == 'u' ? s.u[i] : s.v[i]);
    }
    os << '\n';
  }
  return os.str();
}

inline std::string atoms_csv(const Solution& sol, const Grid& g) {
  std::ostringstream os;
  os << "t,front_id,x,alpha,alpha0,alpha1\n";
  for (double t : g.ts) {
    if (t == 0) continue;
    for (const eval::Atom& a : eval::atoms_at(sol, t))
      os << fmt(t) << ',' << a.front_id << ',' << fmt(a.x) << ',' << fmt(a.alpha) << ','
         << fmt(a.alpha0) << ',' << fmt(a.alpha1) << '\n';
  }
  return os.str();
}

// x-t diagram, time upward. Front polylines are refined until every chord
// midpoint lies within a quarter pixel of the curve.
inline std::string diagram_svg(const Solution& sol, double t_max,
                               std::pair<double, double> window) {
  const double W = 800, H = 600, m = 40;
  auto px = [&](double x) { return m + (x - window.first) / (window.second - window.first) * W; };
  auto py = [&](double t) { return m + H - t / t_max * H; };
  std::ostringstream os;
  char buf[64];
  auto pt = [&](double t, double x) {
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", px(x), py(t));
    return std::string(buf);
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W + 2 * m << "\" height=\""
     << H + 2 * m << "\">\n";
  os << "<defs><clipPath id=\"plot\"><rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << W
     << "\" height=\"" << H << "\"/></clipPath></defs>\n";
  os << "<rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << W << "\" height=\"" << H
     << "\" fill=\"none\" stroke=\"#888\"/>\n";
  os << "<g clip-path=\"url(#plot)\" fill=\"none\">\n";
  for (const Front& f : sol.fronts) {
    const double t1 = std::min(f.t_end, t_max);
    if (!(t1 > f.t_begin)) continue;
    std::vector<double> ts;
    auto refine = [&](auto&& self, double a, double b, int depth) -> void {
      const double c = 0.5 * (a + b);
      const double dx = px(f.position(c)) - 0.5 * (px(f.position(a)) + px(f.position(b)));
      if (depth < 40 && std::abs(dx) > 0.25) {
        self(self, a, c, depth + 1);
        self(self, c, b, depth + 1);
      } else {
        ts.push_back(b);
      }
    };
    ts.push_back(f.t_begin);
    if (std::holds_alternative<Line>(f.geometry)) {
      ts.push_back(t1);
    } else {
      for (int k = 0; k < 16; ++k)
        refine(refine, f.t_begin + (t1 - f.t_begin) * k / 16,
               f.t_begin + (t1 - f.t_begin) * (k + 1) / 16, 0);
    }
    const char* style = "stroke=\"#000\" stroke-width=\"1.2\"";
    switch (f.kind) {
      case FrontKind::Shock: break;
      case FrontKind::Contact: style = "stroke=\"#000\" stroke-width=\"1\" stroke-dasharray=\"6,4\""; break;
      case FrontKind::DeltaShock: style = "stroke=\"#c00\" stroke-width=\"3\""; break;
      case FrontKind::DeltaContact: style = "stroke=\"#c00\" stroke-width=\"3\" stroke-dasharray=\"8,4\""; break;
      case FrontKind::FanEdge: style = "stroke=\"#06c\" stroke-width=\"1\" stroke-dasharray=\"1,3\""; break;
    }
    os << "<polyline data-front=\"" << f.id << "\" data-kind=\"" << to_string(f.kind) << "\" "
       << style << " points=\"";
    for (std::size_t k = 0; k < ts.size(); ++k)
      os << (k ? " " : "") << pt(ts[k], f.position(ts[k]));
    os << "\"/>\n";
  }
  os << "</g>\n";
  for (const Event& e : sol.events) {
    if (e.point.t > t_max) continue;
    std::snprintf(buf, sizeof buf, "%.3f\" cy=\"%.3f", px(e.point.x), py(e.point.t));
    os << "<circle cx=\"" << buf << "\" r=\"3\" fill=\"#000\" data-rule=\"" << to_string(e.rule)
       << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + p.string());
}

// Writes the selected outputs into `dir`; returns the files written.
inline std::vector<std::filesystem::path> emit(const Solution& sol, const ScenarioFile& f,
                                               const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const double t_max = f.scenario.t_max;
  const auto window = f.window ? *f.window : auto_window(sol, t_max);
  const Grid g = make_grid(t_max, f.nt, window, f.nx);
  std::vector<std::filesystem::path> out;
  auto put = [&](const char* name, const std::string& text) {
    write_file(dir / name, text);
    out.push_back(dir / name);
  };
  if (f.outputs.events) put("events.json", events_json(sol).dump(2) + "\n");
  if (f.outputs.fronts) put("fronts.csv", fronts_csv(sol, t_max, f.nt));
  if (f.outputs.fields) {
    put("u.csv", field_csv(sol, g, 'u'));
    put("v.csv", field_csv(sol, g, 'v'));
  }
  if (f.outputs.atoms) put("atoms.csv", atoms_csv(sol, g));
  if (f.outputs.svg) put("diagram.svg", diagram_svg(sol, t_max, window));
  return out;
}

}  // namespace io
}  // namespace deltafront

#endif  // DELTAFRONT_IO_HPP_
