#include <algorithm>
#include <array>
#include <cmath>

#include "fmt/format.h"
#include "trirealize/error.hpp"
#include "trirealize/oracle.hpp"
#include "trirealize/theorems.hpp"

namespace trirealize {

namespace {

using oracle::intersect;
using oracle::ray;

constexpr double kSumTol = 1e-9;

constexpr std::array<ScenarioKind, 8> kAll{
    ScenarioKind::MorleyClassic,       ScenarioKind::MorleyHexagon, ScenarioKind::BisectorHexagon,
    ScenarioKind::SemiMedian,          ScenarioKind::IncenterEquilateral,
    ScenarioKind::Quadriceptor,        ScenarioKind::CircleChords,  ScenarioKind::MorleyPartial,
};

double sind(double deg) { return std::sin(radians(deg)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ScenarioError(what);
}

void require_open_angle(double deg, const char* name) {
  require(deg > 0.0 && deg < 180.0, fmt::format("{} = {:.9g} must lie in (0, 180)", name, deg));
}

void require_triangle(double a, double b, double c) {
  require_open_angle(a, "A");
  require_open_angle(b, "B");
  require_open_angle(c, "C");
  require(std::abs(a + b + c - 180.0) <= kSumTol,
          fmt::format("triangle angles sum to {:.9g}, not 180", a + b + c));
}

Figure make_figure(std::string name, std::vector<std::string> labels,
                   const std::vector<std::array<std::string, 3>>& triangles) {
  return Figure::from_labels(std::move(name), std::move(labels), triangles);
}

Check check(std::string name, double measured, double expected, double deviation,
            double threshold = 1e-9) {
  return {std::move(name), measured, expected, deviation, threshold, false, false};
}

// Relative point-to-line distance.
Check incidence(std::string name, Vec2 q, const oracle::Line& line, double diameter) {
  const double d = oracle::distance_to_line(q, line) / diameter;
  return check(std::move(name), d, 0.0, d);
}

// --- Morley family -------------------------------------------------------

Figure morley_figure() {
  return make_figure("morley", {"A", "B", "C", "U", "V", "W"},
                     {{{"A", "B", "W"}},
                      {{"B", "C", "V"}},
                      {{"C", "A", "U"}},
                      {{"A", "W", "U"}},
                      {{"B", "V", "W"}},
                      {{"C", "U", "V"}},
                      {{"W", "V", "U"}}});
}

struct MorleyPoints {
  Vec2 a, b, c, u, v, w;
};

// Adjacent trisector intersections of the triangle with angles a, b at
// (0,0), (1,0). Trisectors at a ccw corner X with successor N are N - X
// rotated by one or two thirds of the angle.
MorleyPoints morley_points(double a, double b, double c) {
  MorleyPoints m;
  m.a = {0.0, 0.0};
  m.b = {1.0, 0.0};
  m.c = oracle::apex_from_angles(a, b);
  m.w = intersect(ray(m.a, m.b, a / 3.0), ray(m.b, m.c, 2.0 * b / 3.0));
  m.v = intersect(ray(m.b, m.c, b / 3.0), ray(m.c, m.a, 2.0 * c / 3.0));
  m.u = intersect(ray(m.c, m.a, c / 3.0), ray(m.a, m.b, 2.0 * a / 3.0));
  return m;
}

}  // namespace

std::span<const ScenarioKind> all_scenarios() { return kAll; }

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::MorleyClassic: return "morley_classic";
    case ScenarioKind::MorleyHexagon: return "morley_hexagon";
    case ScenarioKind::BisectorHexagon: return "bisector_hexagon";
    case ScenarioKind::SemiMedian: return "semi_median";
    case ScenarioKind::IncenterEquilateral: return "incenter_equilateral";
    case ScenarioKind::Quadriceptor: return "quadriceptor";
    case ScenarioKind::CircleChords: return "circle_chords";
    case ScenarioKind::MorleyPartial: return "morley_partial";
  }
  return "unknown";
}

std::optional<ScenarioKind> scenario_from_name(std::string_view name) {
  for (ScenarioKind kind : kAll) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

double Scenario::param(std::string_view name) const {
  for (const Param& p : params) {
    if (p.name == name) return p.value;
  }
  throw ScenarioError(fmt::format("scenario {} has no parameter '{}'", to_string(kind), name));
}

Scenario build_morley_classic(double a, double b, double c) {
  require_triangle(a, b, c);
  const MorleyPoints m = morley_points(a, b, c);
  Scenario s;
  s.kind = ScenarioKind::MorleyClassic;
  s.params = {{"A", a}, {"B", b}, {"C", c}};
  s.figure = morley_figure();
  s.oracle = {m.a, m.b, m.c, m.u, m.v, m.w};
  s.angles = oracle::measure(s.oracle, s.figure);
  s.map_source = MapSource::Measured;
  const double dev = oracle::equilateral_deviation(m.u, m.v, m.w);
  s.checks.push_back(check("inner side-ratio deviation", dev, 0.0, dev));
  return s;
}

Scenario build_morley_partial(double a, double b, double c) {
  require_triangle(a, b, c);
  const Vec2 pa{0.0, 0.0};
  const Vec2 pb{1.0, 0.0};
  const Vec2 pc = oracle::apex_from_angles(a, b);
  // Four trisectors give W (near AB) and U (near CA); V completes the
  // equilateral triangle W V U counterclockwise.
  const Vec2 w = intersect(ray(pa, pb, a / 3.0), ray(pb, pc, 2.0 * b / 3.0));
  const Vec2 u = intersect(ray(pc, pa, c / 3.0), ray(pa, pb, 2.0 * a / 3.0));
  const Vec2 v = w + rotate(u - w, -60.0);

  Scenario s;
  s.kind = ScenarioKind::MorleyPartial;
  s.params = {{"A", a}, {"B", b}, {"C", c}};
  s.figure = morley_figure();
  s.oracle = {pa, pb, pc, u, v, w};
  s.angles = oracle::measure(s.oracle, s.figure);
  s.map_source = MapSource::Measured;
  const double diam = oracle::max_distance(s.oracle);
  s.checks.push_back(incidence("V on B trisector nearest BC", v, ray(pb, pc, b / 3.0), diam));
  s.checks.push_back(incidence("V on C trisector nearest CB", v, ray(pc, pa, 2.0 * c / 3.0), diam));
  return s;
}

Scenario build_morley_hexagon(double A, double B, double G) {
  require_open_angle(A, "A");
  require_open_angle(B, "B");
  require_open_angle(G, "Gamma");
  const double sum = A + B + G;
  require(sum > 180.0, fmt::format("A + B + Gamma = {:.9g} must exceed 180", sum));
  const double delta = (720.0 - sum) / 3.0;
  const double a = A / 3.0;
  const double b = B / 3.0;
  const double c = G / 3.0;
  const double d = delta / 2.0;

  // Convention: inner equilateral triangle of unit side; every other length
  // follows from the sine rule in the ten sub-triangles.
  const double aw = sind(c + d - 30.0) / sind(a);
  const double au = sind(b + d - 30.0) / sind(a);
  const double bw = sind(c + d - 30.0) / sind(b);
  const double bv = sind(a + d - 30.0) / sind(b);
  const double cv = sind(a + d - 30.0) / sind(c);
  const double cu = sind(b + d - 30.0) / sind(c);
  const std::array<double, 6> sides{
      aw * sind(a + d) / sind(d), bw * sind(b + d) / sind(d), bv * sind(b + d) / sind(d),
      cv * sind(c + d) / sind(d), cu * sind(c + d) / sind(d), au * sind(a + d) / sind(d),
  };
  const std::array<double, 6> corner{A, delta, B, delta, G, delta};

  // Turtle walk A D1 B D2 C D3, turning left by the exterior angle.
  std::array<Vec2, 6> hex{};
  auto walk = [&](const std::array<double, 6>& len) {
    std::array<Vec2, 6> pts{};
    double heading = 0.0;
    Vec2 p{0.0, 0.0};
    for (std::size_t i = 0; i < 6; ++i) {
      pts[i] = p;
      p = p + len[i] * Vec2{std::cos(radians(heading)), std::sin(radians(heading))};
      heading += 180.0 - corner[(i + 1) % 6];
    }
    return std::pair{pts, p};
  };
  const auto [pts, end] = walk(sides);
  hex = pts;

  struct Inner {
    Vec2 u, v, w;
  };
  // Adjacent trisectors, with each angle measured from the drawn hexagon.
  auto trisect = [](const std::array<Vec2, 6>& h) {
    auto tri = [&](std::size_t i, bool toward_next) {
      const Vec2 x = h[i];
      const Vec2 next = h[(i + 1) % 6];
      const Vec2 prev = h[(i + 5) % 6];
      const double angle = oracle::angle_at(x, next, prev);
      return toward_next ? ray(x, next, angle / 3.0) : ray(x, prev, -angle / 3.0);
    };
    Inner in;
    in.w = intersect(tri(0, true), tri(2, false));
    in.v = intersect(tri(2, true), tri(4, false));
    in.u = intersect(tri(4, true), tri(0, false));
    return in;
  };
  const Inner inner = trisect(hex);

  Scenario s;
  s.kind = ScenarioKind::MorleyHexagon;
  s.params = {{"A", A}, {"B", B}, {"Gamma", G}};
  s.figure = make_figure("morley hexagon", {"A", "D1", "B", "D2", "C", "D3", "U", "V", "W"},
                         {{{"A", "D1", "W"}},
                          {{"D1", "B", "W"}},
                          {{"B", "D2", "V"}},
                          {{"D2", "C", "V"}},
                          {{"C", "D3", "U"}},
                          {{"D3", "A", "U"}},
                          {{"A", "W", "U"}},
                          {{"B", "V", "W"}},
                          {{"C", "U", "V"}},
                          {{"W", "V", "U"}}});
  s.oracle = {hex[0], hex[1], hex[2], hex[3], hex[4], hex[5], inner.u, inner.v, inner.w};
  s.angles = oracle::measure(s.oracle, s.figure);
  s.map_source = MapSource::Measured;
  s.notes.push_back("inner triangle taken from adjacent trisectors (W: A and B toward D1)");

  const double diam = oracle::max_distance(s.oracle);
  const double gap = norm(end) / diam;
  s.checks.push_back(check("hexagon closure gap", gap, 0.0, gap));
  const double dev = oracle::equilateral_deviation(inner.u, inner.v, inner.w);
  s.checks.push_back(check("inner side-ratio deviation", dev, 0.0, dev));
  s.checks.push_back(incidence("W on D1 bisector", inner.w, oracle::bisector(hex[1], hex[0], hex[2]), diam));
  s.checks.push_back(incidence("V on D2 bisector", inner.v, oracle::bisector(hex[3], hex[2], hex[4]), diam));
  s.checks.push_back(incidence("U on D3 bisector", inner.u, oracle::bisector(hex[5], hex[4], hex[0]), diam));

  // Other hexagons with the same angles: move the sides along the null space
  // of the closure map and redo the trisector construction.
  std::array<double, 6> dir{};
  for (std::size_t i = 0; i < 6; ++i) dir[i] = std::sin(1.7 * static_cast<double>(i) + 0.3);
  std::array<double, 6> heading{};
  for (std::size_t i = 1; i < 6; ++i) heading[i] = heading[i - 1] + 180.0 - corner[i];
  // Project out the two closure components with Gram-Schmidt.
  std::array<std::array<double, 6>, 2> basis{};
  for (std::size_t i = 0; i < 6; ++i) {
    basis[0][i] = std::cos(radians(heading[i]));
    basis[1][i] = std::sin(radians(heading[i]));
  }
  auto dotv = [](const std::array<double, 6>& x, const std::array<double, 6>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < 6; ++i) s += x[i] * y[i];
    return s;
  };
  const double k10 = dotv(basis[1], basis[0]) / dotv(basis[0], basis[0]);
  for (std::size_t i = 0; i < 6; ++i) basis[1][i] -= k10 * basis[0][i];
  for (const auto& e : basis) {
    const double k = dotv(dir, e) / dotv(e, e);
    for (std::size_t i = 0; i < 6; ++i) dir[i] -= k * e[i];
  }
  const double min_side = *std::min_element(sides.begin(), sides.end());
  const double dir_max = std::max(std::abs(*std::max_element(dir.begin(), dir.end())),
                                  std::abs(*std::min_element(dir.begin(), dir.end())));
  for (double frac : {0.05, 0.2}) {
    std::array<double, 6> moved{};
    for (std::size_t i = 0; i < 6; ++i) moved[i] = sides[i] + frac * min_side * dir[i] / dir_max;
    const auto [mp, mend] = walk(moved);
    double pdev = 0.0;
    try {
      const Inner mi = trisect(mp);
      pdev = oracle::equilateral_deviation(mi.u, mi.v, mi.w);
    } catch (const ScenarioError&) {
      pdev = INFINITY;
    }
    Check c = check(fmt::format("perturbed sides ({:g} of shortest) side-ratio deviation", frac),
                    pdev, 0.0, pdev);
    c.informational = true;
    s.checks.push_back(c);
  }
  return s;
}

Scenario build_bisector_hexagon(double alpha, double beta, double gamma, double delta) {
  require_open_angle(alpha, "alpha");
  require_open_angle(beta, "beta");
  require_open_angle(gamma, "gamma");
  require_open_angle(delta, "delta");
  require(std::abs(alpha + beta + gamma + 3.0 * delta - 720.0) <= kSumTol,
          "alpha + beta + gamma + 3 delta must equal 720");
  const std::array<double, 6> theta{alpha, delta, beta, delta, gamma, delta};

  // Hexagon circumscribed about the unit circle.
  std::array<Vec2, 6> hex{};
  double psi = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    if (i > 0) psi += (180.0 - theta[i - 1]) / 2.0 + (180.0 - theta[i]) / 2.0;
    hex[i] = (1.0 / sind(theta[i] / 2.0)) * oracle::on_unit_circle(psi);
  }
  std::array<oracle::Line, 6> bis{};
  for (std::size_t i = 0; i < 6; ++i) bis[i] = oracle::bisector(hex[i], hex[(i + 5) % 6], hex[(i + 1) % 6]);
  const Vec2 centre = intersect(bis[0], bis[2]);

  Scenario s;
  s.kind = ScenarioKind::BisectorHexagon;
  s.params = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}};
  s.figure = make_figure("bisector hexagon", {"A", "D1", "B", "D2", "C", "D3", "I"},
                         {{{"A", "D1", "I"}},
                          {{"D1", "B", "I"}},
                          {{"B", "D2", "I"}},
                          {{"D2", "C", "I"}},
                          {{"C", "D3", "I"}},
                          {{"D3", "A", "I"}}});
  std::vector<std::array<double, 3>> map;
  for (std::size_t i = 0; i < 6; ++i) {
    const double x = theta[i] / 2.0;
    const double y = theta[(i + 1) % 6] / 2.0;
    map.push_back({x, y, 180.0 - x - y});
  }
  s.angles = AngleAssignment(std::move(map));
  s.oracle = {hex[0], hex[1], hex[2], hex[3], hex[4], hex[5], centre};
  s.notes.push_back("hexagon drawn tangential (circumscribed about a circle)");

  const double diam = oracle::max_distance(s.oracle);
  double spread = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      try {
        spread = std::max(spread, norm(intersect(bis[i], bis[j]) - centre));
      } catch (const ScenarioError&) {
        // Opposite bisectors may be parallel to each other only when they
        // coincide through the centre; skip that pair.
      }
    }
  }
  s.checks.push_back(check("bisector concurrency spread", spread / diam, 0.0, spread / diam));
  return s;
}

Scenario build_semi_median(double alpha, double beta, double gamma, double delta) {
  require_triangle(alpha, beta, gamma);
  const double limit = std::min({alpha, beta, gamma}) / 2.0;
  require(delta > 0.0 && delta < limit,
          fmt::format("delta = {:.9g} must lie in (0, {:.9g})", delta, limit));

  // Split of angle X at the semi-median towards the apex on side YZ:
  // sin(part toward Y) / sin(part toward Z) = sin(Y - delta) / sin(Z - delta).
  auto split_toward_z = [&](double x, double y, double z) {
    const double k = sind(y - delta) / sind(z - delta);
    return degrees(std::atan2(std::sin(radians(x)), k + std::cos(radians(x))));
  };
  const double a_c = split_toward_z(alpha, beta, gamma);
  const double a_b = alpha - a_c;
  const double b_a = split_toward_z(beta, gamma, alpha);
  const double b_c = beta - b_a;
  const double c_b = split_toward_z(gamma, alpha, beta);
  const double c_a = gamma - c_b;
  for (double part : {a_b, a_c, b_a, b_c, c_a, c_b}) {
    require(part > 0.0, "semi-median split angle out of range");
  }

  const Vec2 A{0.0, 0.0};
  const Vec2 B{1.0, 0.0};
  const Vec2 C = oracle::apex_from_angles(alpha, beta);
  // Isosceles apexes with base angles delta on each side.
  const Vec2 oa = intersect(ray(B, C, delta), ray(C, B, -delta));
  const Vec2 ob = intersect(ray(A, C, -delta), ray(C, A, delta));
  const Vec2 oc = intersect(ray(A, B, delta), ray(B, A, -delta));
  const oracle::Line ma = oracle::through(A, oa);
  const oracle::Line mb = oracle::through(B, ob);
  const oracle::Line mc = oracle::through(C, oc);
  const Vec2 p = intersect(ma, mb);
  const Vec2 a0 = intersect(ma, oracle::through(B, C));
  const Vec2 b0 = intersect(mb, oracle::through(C, A));
  const Vec2 c0 = intersect(mc, oracle::through(A, B));

  Scenario s;
  s.kind = ScenarioKind::SemiMedian;
  s.params = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}};
  s.figure = make_figure("semi-medians", {"A", "B", "C", "P", "A0", "B0", "C0"},
                         {{{"A", "C0", "P"}},
                          {{"C0", "B", "P"}},
                          {{"B", "A0", "P"}},
                          {{"A0", "C", "P"}},
                          {{"C", "B0", "P"}},
                          {{"B0", "A", "P"}}});
  const std::array<std::array<double, 2>, 6> outer{{
      {a_b, 180.0 - alpha - c_a},
      {alpha + c_a, b_a},
      {b_c, 180.0 - beta - a_b},
      {beta + a_b, c_b},
      {c_a, 180.0 - gamma - b_c},
      {gamma + b_c, a_c},
  }};
  std::vector<std::array<double, 3>> map;
  for (const auto& o : outer) map.push_back({o[0], o[1], 180.0 - o[0] - o[1]});
  s.angles = AngleAssignment(std::move(map));
  s.oracle = {A, B, C, p, a0, b0, c0};

  const double diam = oracle::max_distance(s.oracle);
  s.checks.push_back(incidence("C semi-median through A/B crossing", p, mc, diam));
  const double log_gap = (std::log(sind(a_b)) + std::log(sind(b_c)) + std::log(sind(c_a))) -
                         (std::log(sind(a_c)) + std::log(sind(b_a)) + std::log(sind(c_b)));
  Check identity = check("split sine identity (log)", log_gap, 0.0, std::abs(log_gap), 1e-12);
  identity.fixed_threshold = true;
  s.checks.push_back(identity);
  const double foot = norm(b0 - 0.5 * (A + C)) / diam;
  Check median = check("B foot distance from AC midpoint", foot, 0.0, foot);
  median.informational = true;
  s.checks.push_back(median);
  return s;
}

Scenario build_incenter_equilateral(double a, double b, double c) {
  require_triangle(a, b, c);
  const Vec2 A{0.0, 0.0};
  const Vec2 B{1.0, 0.0};
  const Vec2 C = oracle::apex_from_angles(a, b);
  const Vec2 I = intersect(ray(A, B, a / 2.0), ray(B, A, -b / 2.0));
  const Vec2 P = intersect(ray(I, A, -(b / 2.0 + 60.0)), oracle::through(A, C));
  const Vec2 Q = intersect(ray(I, B, a / 2.0 + 60.0), oracle::through(B, C));
  const double tp = oracle::segment_parameter(P, A, C);
  const double tq = oracle::segment_parameter(Q, B, C);
  require(tp > 0.0 && tp < 1.0, "P falls outside segment AC");
  require(tq > 0.0 && tq < 1.0, "Q falls outside segment BC");

  Scenario s;
  s.kind = ScenarioKind::IncenterEquilateral;
  s.params = {{"A", a}, {"B", b}, {"C", c}};
  s.figure = make_figure("incenter equilateral", {"A", "B", "C", "I", "P", "Q"},
                         {{{"A", "B", "I"}},
                          {{"B", "Q", "I"}},
                          {{"Q", "C", "P"}},
                          {{"P", "A", "I"}},
                          {{"Q", "P", "I"}}});
  s.angles = AngleAssignment({
      {a / 2.0, b / 2.0, 90.0 + c / 2.0},
      {b / 2.0, 30.0 + c / 2.0, a / 2.0 + 60.0},
      {90.0 - c / 2.0, c, 90.0 - c / 2.0},
      {30.0 + c / 2.0, a / 2.0, b / 2.0 + 60.0},
      {60.0, 60.0, 60.0},
  });
  s.oracle = {A, B, C, I, P, Q};
  const double pq = norm(Q - P);
  const double ip = norm(P - I) / pq;
  const double qi = norm(I - Q) / pq;
  s.checks.push_back(check("|IP|/|PQ|", ip, 1.0, std::abs(ip - 1.0)));
  s.checks.push_back(check("|QI|/|PQ|", qi, 1.0, std::abs(qi - 1.0)));
  return s;
}

Scenario build_quadriceptor(double alpha, double beta, double gamma) {
  require(alpha > 0.0 && beta > 0.0 && gamma > 0.0, "quadriceptor angles must be positive");
  require(std::abs(alpha + beta + gamma - 45.0) <= kSumTol, "alpha + beta + gamma must equal 45");
  const Vec2 A{0.0, 0.0};
  const Vec2 B{1.0, 0.0};
  const Vec2 C = oracle::apex_from_angles(4.0 * alpha, 4.0 * beta);
  auto qa = [&](int k) { return ray(A, B, k * alpha); };
  auto qb = [&](int k) { return ray(B, A, -k * beta); };
  auto qc = [&](int k) { return ray(C, A, k * gamma); };
  const Vec2 P = intersect(qa(1), qb(1));
  const Vec2 Q = intersect(qb(3), qc(3));
  const Vec2 R = intersect(qc(1), qa(3));
  const Vec2 I = intersect(qa(2), qb(2));

  Scenario s;
  s.kind = ScenarioKind::Quadriceptor;
  s.params = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
  s.figure = make_figure("quadriceptors", {"A", "B", "C", "P", "Q", "R", "I"},
                         {{{"A", "B", "P"}},
                          {{"B", "C", "Q"}},
                          {{"C", "A", "R"}},
                          {{"A", "P", "I"}},
                          {{"P", "B", "I"}},
                          {{"B", "Q", "I"}},
                          {{"Q", "C", "I"}},
                          {{"C", "R", "I"}},
                          {{"R", "A", "I"}}});
  s.angles = AngleAssignment({
      {alpha, beta, gamma + 135.0},
      {beta, gamma, alpha + 135.0},
      {gamma, alpha, beta + 135.0},
      {alpha, beta + 90.0, gamma + 45.0},
      {alpha + 90.0, beta, gamma + 45.0},
      {beta, gamma + 90.0, alpha + 45.0},
      {beta + 90.0, gamma, alpha + 45.0},
      {gamma, alpha + 90.0, beta + 45.0},
      {gamma + 90.0, alpha, beta + 45.0},
  });
  s.oracle = {A, B, C, P, Q, R, I};
  s.checks.push_back(incidence("C bisector through I", I, qc(2), oracle::max_distance(s.oracle)));
  return s;
}

Scenario build_circle_chords(double alpha, double beta, double split) {
  require(alpha > 0.0 && alpha < beta && beta < 180.0, "need 0 < alpha < beta < 180");
  require(split > 0.0 && split < 1.0, "split must lie in (0, 1)");
  const double rest = 360.0 - alpha - beta;
  const double k1 = split * rest;
  const double k2 = rest - k1;
  require(k1 < 180.0 && k2 < 180.0,
          fmt::format("leftover arcs {:.9g} and {:.9g} must each be below 180", k1, k2));
  const Vec2 I{0.0, 0.0};
  const Vec2 F = oracle::on_unit_circle(90.0 - alpha / 2.0);
  const Vec2 E = oracle::on_unit_circle(90.0 + alpha / 2.0);
  const Vec2 C = oracle::on_unit_circle(90.0 + alpha / 2.0 + k1);
  const Vec2 D = oracle::on_unit_circle(90.0 + alpha / 2.0 + k1 + beta);
  const Vec2 P = intersect(oracle::through(E, C), oracle::through(F, D));

  Scenario s;
  s.kind = ScenarioKind::CircleChords;
  s.params = {{"alpha", alpha}, {"beta", beta}, {"split", split}};
  s.figure = make_figure("circle chords", {"P", "E", "C", "D", "F", "I"},
                         {{{"P", "E", "F"}},
                          {{"I", "F", "E"}},
                          {{"I", "E", "C"}},
                          {{"I", "C", "D"}},
                          {{"I", "D", "F"}}});
  s.angles = AngleAssignment({
      {(beta - alpha) / 2.0, (alpha + k1) / 2.0, (alpha + k2) / 2.0},
      {alpha, 90.0 - alpha / 2.0, 90.0 - alpha / 2.0},
      {k1, 90.0 - k1 / 2.0, 90.0 - k1 / 2.0},
      {beta, 90.0 - beta / 2.0, 90.0 - beta / 2.0},
      {k2, 90.0 - k2 / 2.0, 90.0 - k2 / 2.0},
  });
  s.oracle = {P, E, C, D, F, I};
  const double cpf = oracle::angle_at(P, C, F);
  const double expected = (beta - alpha) / 2.0;
  s.checks.push_back(check("angle CPF (degrees)", cpf, expected, std::abs(cpf - expected)));
  return s;
}

Scenario build_scenario(ScenarioKind kind, std::span<const Param> params) {
  auto get = [&](std::string_view name) {
    for (const Param& p : params) {
      if (p.name == name) return p.value;
    }
    throw ScenarioError(fmt::format("{} needs parameter '{}'", to_string(kind), name));
  };
  switch (kind) {
    case ScenarioKind::MorleyClassic: return build_morley_classic(get("A"), get("B"), get("C"));
    case ScenarioKind::MorleyPartial: return build_morley_partial(get("A"), get("B"), get("C"));
    case ScenarioKind::MorleyHexagon: return build_morley_hexagon(get("A"), get("B"), get("Gamma"));
    case ScenarioKind::BisectorHexagon:
      return build_bisector_hexagon(get("alpha"), get("beta"), get("gamma"), get("delta"));
    case ScenarioKind::SemiMedian:
      return build_semi_median(get("alpha"), get("beta"), get("gamma"), get("delta"));
    case ScenarioKind::IncenterEquilateral:
      return build_incenter_equilateral(get("A"), get("B"), get("C"));
    case ScenarioKind::Quadriceptor:
      return build_quadriceptor(get("alpha"), get("beta"), get("gamma"));
    case ScenarioKind::CircleChords:
      return build_circle_chords(get("alpha"), get("beta"), get("split"));
  }
  throw ScenarioError("unknown scenario");
}

}  // namespace trirealize
