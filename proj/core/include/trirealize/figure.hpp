#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trirealize {

using VertexIndex = std::size_t;
using TriangleIndex = std::size_t;

// One angle of one triangle: the corner at `slot` (0..2) of `triangle`.
struct Corner {
  TriangleIndex triangle = 0;
  int slot = 0;

  friend bool operator==(const Corner&, const Corner&) = default;
};

// Corners are listed counterclockwise.
struct Triangle {
  std::array<VertexIndex, 3> corners{};

  VertexIndex at(int slot) const { return corners[static_cast<std::size_t>(slot)]; }
  // The corner following / preceding `slot` counterclockwise.
  VertexIndex next(int slot) const { return at((slot + 1) % 3); }
  VertexIndex prev(int slot) const { return at((slot + 2) % 3); }
  std::optional<int> slot_of(VertexIndex v) const;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Triangles around a vertex in counterclockwise order. For a ccw triangle
// (v, n, p) the successor in the fan is the triangle whose `n` equals this
// one's `p`. Closed fans start at their lowest triangle index.
struct Fan {
  std::vector<Corner> corners;
  bool closed = false;
};

enum class VertexClass { Interior, Exterior };

// Combinatorial convex simple triangulated figure. Immutable once built; fans
// are derived from shared-edge adjacency, never read from input.
class Figure {
 public:
  Figure() = default;

  // Throws FigureError on empty/duplicate labels, out-of-range indices or
  // triangles with repeated corners. Does not check the structural
  // invariants (see validate_structure).
  Figure(std::string name, std::vector<std::string> labels,
         std::vector<Triangle> triangles);

  // Same, with corners given by label.
  static Figure from_labels(std::string name, std::vector<std::string> labels,
                            const std::vector<std::array<std::string, 3>>& triangles);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }

  const std::string& label(VertexIndex v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexIndex> find(std::string_view label) const;
  // Throws FigureError for unknown labels.
  VertexIndex vertex(std::string_view label) const;

  const Triangle& triangle(TriangleIndex t) const { return triangles_.at(t); }
  std::span<const Triangle> triangles() const { return triangles_; }

  // Every corner sitting at v, in input triangle order.
  std::span<const Corner> incident(VertexIndex v) const { return incident_.at(v); }

  // All fan components at v. A structurally valid figure has exactly one.
  std::span<const Fan> fan_components(VertexIndex v) const { return fans_.at(v); }
  // The single fan at v; throws FigureError when v's triangles split into
  // several fans or v has none.
  const Fan& fan(VertexIndex v) const;

  std::string describe_triangle(TriangleIndex t) const;

  friend bool operator==(const Figure& a, const Figure& b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.triangles_ == b.triangles_;
  }

 private:
  void derive_incidence();

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<Corner>> incident_;
  std::vector<std::vector<Fan>> fans_;
};

struct Violation {
  enum class Kind {
    NotConnected,
    EdgeMultiplicity,
    OrientationConflict,
    DuplicateTriangle,
    FanSplit,
    IsolatedVertex,
  };
  Kind kind;
  std::string locus;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation::Kind kind) const;
};

std::string_view to_string(Violation::Kind kind);

// Reports every violated structural invariant; never throws.
ValidationReport validate_structure(const Figure& figure);

// Interior iff the fan at the vertex closes into a cycle.
std::vector<VertexClass> classify_vertices(const Figure& figure);

}  // namespace trirealize
