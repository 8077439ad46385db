#include <cmath>
#include <random>

#include "doctest.h"
#include "random_figures.hpp"
#include "test_data.hpp"
#include "trirealize/conditions.hpp"
#include "trirealize/document.hpp"
#include "trirealize/error.hpp"
#include "trirealize/realizer.hpp"
#include "trirealize/svg.hpp"
#include "trirealize/theorems.hpp"

using namespace trirealize;

namespace {

const double kRoot3 = std::sqrt(3.0);

void near(Vec2 p, double x, double y, double eps = 1e-12) {
  CHECK(std::abs(p.x - x) < eps);
  CHECK(std::abs(p.y - y) < eps);
}

RealizeError::Kind realize_kind(const Figure& fig, const AngleAssignment& angles) {
  try {
    realize(fig, angles);
  } catch (const RealizeError& e) {
    return e.kind();
  }
  FAIL("realize did not throw");
  return RealizeError::Kind::Precondition;
}

}  // namespace

TEST_CASE("equilateral triangle in canonical pose") {
  const FigureDocument doc = read_document(data_path("single_triangle.json"));
  const Realization r = realize(doc.figure, *doc.angles);
  near(r.coords[0], 0.0, 0.0);
  near(r.coords[1], 1.0, 0.0);
  near(r.coords[2], 0.5, kRoot3 / 2.0);
  CHECK(r.warnings.empty());
}

TEST_CASE("incenter figure: equilateral outline, centre at the centroid") {
  const FigureDocument doc = read_document(data_path("incenter.json"));
  const Realization r = realize(doc.figure, *doc.angles);
  const Figure& f = doc.figure;
  near(r.coords[f.vertex("A")], 0.0, 0.0);
  near(r.coords[f.vertex("B")], 1.0, 0.0);
  near(r.coords[f.vertex("C")], 0.5, kRoot3 / 2.0);
  near(r.coords[f.vertex("I")], 0.5, kRoot3 / 6.0);
  CHECK(verify_convex(r, f));
}

TEST_CASE("Morley map realizes to the trisector construction") {
  const Scenario s = build_morley_classic(100, 40, 40);
  const Realization r = realize(s.figure, s.angles);
  CHECK(similarity_deviation(r.coords, s.oracle, s.figure) < 1e-9);
}

TEST_CASE("measure_angles") {
  const Figure tri = Figure::from_labels("t", {"A", "B", "C"}, {{{"A", "B", "C"}}});
  Realization eq;
  eq.coords = {{0, 0}, {1, 0}, {0.5, kRoot3 / 2.0}};
  const AngleAssignment m = measure_angles(eq, tri);
  for (int k = 0; k < 3; ++k) CHECK(m.at(0, k) == doctest::Approx(60.0).epsilon(1e-13));
  Realization right;
  right.coords = {{0, 0}, {1, 0}, {0, 1}};
  const AngleAssignment m2 = measure_angles(right, tri);
  CHECK(m2.at(0, 0) == doctest::Approx(90.0).epsilon(1e-13));
  CHECK(m2.at(0, 1) == doctest::Approx(45.0).epsilon(1e-13));
  CHECK(m2.at(0, 2) == doctest::Approx(45.0).epsilon(1e-13));
  Realization flat;
  flat.coords = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(measure_angles(flat, tri), RealizeError);
}

TEST_CASE("verify_convex") {
  const Figure tri = Figure::from_labels("t", {"A", "B", "C"}, {{{"A", "B", "C"}}});
  Realization r;
  r.coords = {{0, 0}, {3, 1}, {-1, 2}};
  CHECK(verify_convex(r, tri));

  const Figure dart = read_document(data_path("dart.json")).figure;
  Realization d;
  d.coords = {{0, 0}, {2, 0}, {2, 2}, {1.5, 0.5}};
  CHECK_FALSE(verify_convex(d, dart));
  d.coords[3] = {0.5, 1.5};
  CHECK(verify_convex(d, dart));
}

TEST_CASE("closure residuals") {
  const FigureDocument doc = read_document(data_path("incenter.json"));
  const VertexIndex i = doc.figure.vertex("I");
  const ClosureResidual exact = closure_residual(doc.figure, *doc.angles, i);
  CHECK(exact.worst() < 1e-12);
  CHECK_THROWS_AS(closure_residual(doc.figure, *doc.angles, doc.figure.vertex("A")), FigureError);

  // Products off by 1%: the joining segment misses by more than 0.1 degrees.
  const AngleAssignment skewed = testing::skew_sine_products(doc.figure, *doc.angles, i, 1.01);
  const ClosureResidual off = closure_residual(doc.figure, skewed, i);
  CHECK(off.residual_r > 0.1);
  CHECK(off.residual_s > 0.1);
  CHECK(std::abs(off.residual_r - off.residual_s) < 1e-9);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto drawn = testing::random_fan(rng, 3 + trial % 6, 2.0);
    CHECK(closure_residual(drawn.figure, drawn.angles, 0).worst() < 1e-9);
  }
}

TEST_CASE("realize refuses bad input") {
  const FigureDocument inc = read_document(data_path("incenter.json"));
  CHECK(realize_kind(inc.figure, AngleAssignment({{30, 30, 121}, {30, 30, 120}, {30, 30, 120}})) ==
        RealizeError::Kind::Precondition);
  const AngleAssignment skewed = testing::skew_sine_products(inc.figure, *inc.angles, inc.figure.vertex("I"), 1.01);
  CHECK(realize_kind(inc.figure, skewed) == RealizeError::Kind::Closure);
  const Figure tri = Figure::from_labels("t", {"A", "B", "C"}, {{{"A", "B", "C"}}});
  CHECK(realize_kind(tri, AngleAssignment({{1e-10, 90, 90 - 1e-10}})) == RealizeError::Kind::Degenerate);
  const FigureDocument dart = read_document(data_path("dart.json"));
  CHECK(realize_kind(dart.figure, *dart.angles) == RealizeError::Kind::Concave);
}

TEST_CASE("sliver triangle realizes with a conditioning warning") {
  const FigureDocument doc = read_document(data_path("near_degenerate.json"));
  const Realization r = realize(doc.figure, *doc.angles);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("ill-conditioned") != std::string::npos);
}

TEST_CASE("overlap detection") {
  const Figure two = Figure::from_labels("two", {"A", "B", "C", "D"},
                                         {{{"A", "B", "C"}}, {{"A", "C", "D"}}});
  Realization r;
  r.coords = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(overlapping_triangles(r, two).empty());
  r.coords[3] = {1.5, 0.2};  // D folded back over ABC
  const auto pairs = overlapping_triangles(r, two);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<TriangleIndex, TriangleIndex>{0, 1});
}

TEST_CASE("round trip, seed independence, area conservation, closure") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto drawn = testing::random_convex_triangulation(rng, 3 + trial % 6, trial % 8);
    const Figure& fig = drawn.figure;
    const Realization r = realize(fig, drawn.angles);
    CHECK(max_corner_difference(measure_angles(r, fig), drawn.angles) < 1e-7);
    CHECK(similarity_deviation(r.coords, drawn.coords, fig) < 1e-9);
    CHECK(r.coords[fig.triangle(0).at(2)].y > 0.0);

    for (TriangleIndex seed = 1; seed < fig.triangle_count(); ++seed) {
      const Realization other = realize(fig, drawn.angles, {1e-7, seed});
      CHECK(similarity_deviation(r.coords, other.coords, fig) < 1e-9);
    }
    const double a = total_triangle_area(r, fig);
    CHECK(std::abs(a - perimeter_area(r, fig)) < 1e-9 * a);

    const auto classes = classify_vertices(fig);
    for (VertexIndex v = 0; v < fig.vertex_count(); ++v) {
      if (classes[v] == VertexClass::Interior) {
        CHECK(closure_residual(fig, drawn.angles, v).worst() < 1e-9);
      }
    }
  }
}

TEST_CASE("perimeter cycle of the incenter figure") {
  const Figure f = read_document(data_path("incenter.json")).figure;
  const auto cycle = perimeter_cycle(f);
  CHECK(cycle == std::vector<VertexIndex>{0, 1, 2});
}

TEST_CASE("svg output is deterministic and complete") {
  const FigureDocument doc = read_document(data_path("incenter.json"));
  const Realization r = realize(doc.figure, *doc.angles);
  const std::string a = to_svg(r, doc.figure, &*doc.angles);
  CHECK(a == to_svg(r, doc.figure, &*doc.angles));
  CHECK(a.find("<polygon") != std::string::npos);
  CHECK(a.find(">I</text>") != std::string::npos);
  CHECK(a.find(">120</text>") != std::string::npos);
  std::size_t lines = 0;
  for (std::size_t pos = a.find("<line"); pos != std::string::npos; pos = a.find("<line", pos + 1)) ++lines;
  CHECK(lines == 3);
  const std::string plain = to_svg(r, doc.figure);
  CHECK(plain.find(">120</text>") == std::string::npos);
}
