#include <map>
#include <random>

#include "doctest.h"
#include "random_figures.hpp"
#include "test_data.hpp"
#include "trirealize/document.hpp"
#include "trirealize/error.hpp"
#include "trirealize/figure.hpp"
#include "trirealize/theorems.hpp"

using namespace trirealize;

namespace {

Figure figure_of(std::vector<std::string> labels,
                 const std::vector<std::array<std::string, 3>>& triangles) {
  return Figure::from_labels("test", std::move(labels), triangles);
}

}  // namespace

TEST_CASE("single-triangle document has three exterior vertices") {
  const FigureDocument doc = read_document(data_path("single_triangle.json"));
  CHECK(doc.figure.vertex_count() == 3);
  CHECK(doc.figure.triangle_count() == 1);
  for (VertexClass c : classify_vertices(doc.figure)) CHECK(c == VertexClass::Exterior);
  REQUIRE(doc.angles);
  CHECK(doc.angles->at(0, 2) == 60.0);
}

TEST_CASE("incenter document: closed fan of three at I") {
  const Figure fig = read_document(data_path("incenter.json")).figure;
  const VertexIndex i = fig.vertex("I");
  const Fan& fan = fig.fan(i);
  CHECK(fan.closed);
  CHECK(fan.corners.size() == 3);
  // Counterclockwise: each triangle's successor starts where it ends.
  for (std::size_t k = 0; k < 3; ++k) {
    const Corner c = fan.corners[k];
    const Corner d = fan.corners[(k + 1) % 3];
    CHECK(fig.triangle(c.triangle).prev(c.slot) == fig.triangle(d.triangle).next(d.slot));
  }
  const auto classes = classify_vertices(fig);
  CHECK(classes[i] == VertexClass::Interior);
  for (const char* label : {"A", "B", "C"}) CHECK(classes[fig.vertex(label)] == VertexClass::Exterior);
  CHECK(validate_structure(fig).ok());
}

TEST_CASE("disconnected document is rejected") {
  CHECK_THROWS_WITH_AS(read_document(data_path("disconnected.json")),
                       doctest::Contains("not edge-connected"), FigureError);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), FigureError);
  CHECK_THROWS_AS(parse_document("[]"), FigureError);
  CHECK_THROWS_AS(parse_document(R"({"vertices": ["A"]})"), FigureError);
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"vertices": ["A","A","B"], "triangles": [["A","B","A"]]})"),
      doctest::Contains("duplicate vertex label"), FigureError);
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"vertices": ["A","B","C"], "triangles": [["A","B","Z"]]})"),
      doctest::Contains("unknown vertex 'Z'"), FigureError);
  CHECK_THROWS_AS(
      parse_document(R"({"vertices": ["A","B","C"], "triangles": [["A","B"]]})"), FigureError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"vertices": ["A","B","C","D"],
        "triangles": [["A","B","C"], ["A","C","D"]], "angles": [[60,60,60]]})"),
                       doctest::Contains("missing angle value"), AngleError);
  CHECK_THROWS_AS(parse_document(R"({"vertices": ["A","B","C"],
        "triangles": [["A","B","C"]], "angles": [[60,60]]})"),
                  AngleError);
}

TEST_CASE("two disjoint fans at one vertex are reported") {
  const Figure fig = figure_of({"v", "a", "b", "c", "x"},
                               {{{"v", "a", "b"}}, {{"b", "a", "c"}}, {{"b", "c", "x"}}, {{"x", "c", "v"}}});
  const ValidationReport report = validate_structure(fig);
  CHECK(report.has(Violation::Kind::FanSplit));
  CHECK_THROWS_AS(fig.fan(fig.vertex("v")), FigureError);
}

TEST_CASE("edge shared by three triangles is reported") {
  const Figure fig = figure_of({"A", "B", "X", "Y", "Z"},
                               {{{"A", "B", "X"}}, {{"B", "A", "Y"}}, {{"A", "B", "Z"}}});
  CHECK(validate_structure(fig).has(Violation::Kind::EdgeMultiplicity));
}

TEST_CASE("orientation conflict and duplicates are reported") {
  const Figure flipped = figure_of({"A", "B", "C", "D"}, {{{"A", "B", "C"}}, {{"A", "B", "D"}}});
  CHECK(validate_structure(flipped).has(Violation::Kind::OrientationConflict));
  const Figure twice = figure_of({"A", "B", "C"}, {{{"A", "B", "C"}}, {{"B", "C", "A"}}});
  CHECK(validate_structure(twice).has(Violation::Kind::DuplicateTriangle));
  const Figure lonely = figure_of({"A", "B", "C", "Q"}, {{{"A", "B", "C"}}});
  CHECK(validate_structure(lonely).has(Violation::Kind::IsolatedVertex));
}

TEST_CASE("Morley topology has interior U, V, W") {
  const Figure fig = build_morley_classic(60, 60, 60).figure;
  CHECK(fig.triangle_count() == 7);
  const auto classes = classify_vertices(fig);
  for (const char* label : {"U", "V", "W"}) CHECK(classes[fig.vertex(label)] == VertexClass::Interior);
  for (const char* label : {"A", "B", "C"}) CHECK(classes[fig.vertex(label)] == VertexClass::Exterior);
}

TEST_CASE("describe_triangle names the corners") {
  const Figure fig = read_document(data_path("incenter.json")).figure;
  CHECK(fig.describe_triangle(1) == "T1 (B,C,I)");
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto drawn = testing::random_convex_triangulation(rng, 4 + trial % 5, trial % 4);
    const std::string text = serialize(drawn.figure, &drawn.angles);
    const FigureDocument back = parse_document(text);
    CHECK(back.figure == drawn.figure);
    REQUIRE(back.angles);
    CHECK(*back.angles == drawn.angles);
    CHECK(serialize(back.figure, &*back.angles) == text);
    CHECK(parse_figure(serialize(drawn.figure)) == drawn.figure);
  }
}

TEST_CASE("interior exactly when every edge through the vertex has two triangles") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto drawn = testing::random_convex_triangulation(rng, 3 + trial % 6, trial % 7);
    const Figure& fig = drawn.figure;
    const auto classes = classify_vertices(fig);
    for (VertexIndex v = 0; v < fig.vertex_count(); ++v) {
      std::map<VertexIndex, int> edge_use;
      for (const Corner& c : fig.incident(v)) {
        ++edge_use[fig.triangle(c.triangle).next(c.slot)];
        ++edge_use[fig.triangle(c.triangle).prev(c.slot)];
      }
      bool all_two = true;
      for (const auto& [w, n] : edge_use) all_two = all_two && n == 2;
      CHECK((classes[v] == VertexClass::Interior) == all_two);
    }
  }
}

TEST_CASE("every scenario figure is structurally valid") {
  for (ScenarioKind kind : all_scenarios()) {
    auto rng = trial_rng(1, 0);
    const Scenario s = build_scenario(kind, sample_params(kind, rng, false));
    INFO(to_string(kind));
    CHECK(validate_structure(s.figure).ok());
  }
}
