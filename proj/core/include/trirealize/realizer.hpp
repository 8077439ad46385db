#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trirealize/angles.hpp"
#include "trirealize/error.hpp"
#include "trirealize/figure.hpp"
#include "trirealize/geometry.hpp"

namespace trirealize {

// Angles the joining segment actually makes when an interior fan's last
// triangle is closed, against the assigned values (degrees).
struct ClosureResidual {
  VertexIndex vertex = 0;
  double residual_r = 0.0;
  double residual_s = 0.0;

  double worst() const { return residual_r > residual_s ? residual_r : residual_s; }
};

// Vertex coordinates in dimensionless plane units. After normalization the
// first edge of triangle 0 runs from (0,0) to (1,0) and its third corner lies
// in the upper half-plane.
struct Realization {
  std::vector<Vec2> coords;
  // Largest deviation of measured from assigned angles among triangles whose
  // three corners were already placed when they were reached.
  double max_closure_residual = 0.0;
  std::vector<std::string> warnings;
};

class RealizeError : public Error {
 public:
  enum class Kind { Precondition, Closure, Concave, Degenerate };

  RealizeError(Kind kind, const std::string& what, double residual = 0.0)
      : Error(what), kind_(kind), residual_(residual) {}

  Kind kind() const { return kind_; }
  double residual() const { return residual_; }

 private:
  Kind kind_;
  double residual_;
};

struct RealizeOptions {
  // Closure tolerance in degrees.
  double tol = 1e-7;
  // Triangle to start from; the result is normalized either way.
  std::optional<TriangleIndex> seed;
};

// Builds coordinates from an angle assignment: seed triangle, then every
// interior fan, then the remaining (exterior) triangles, placing each new
// vertex from a placed edge and its two base angles.
Realization realize(const Figure& figure, const AngleAssignment& angles,
                    const RealizeOptions& options = {});

// Lays out the fan at interior vertex v on its own, leaving the last
// triangle to be closed by joining the two outer vertices already placed.
// Throws FigureError when v is not interior.
ClosureResidual closure_residual(const Figure& figure, const AngleAssignment& angles,
                                 VertexIndex v);

// Corner angles in degrees. Throws RealizeError(Degenerate) for collapsed
// triangles.
AngleAssignment measure_angles(const Realization& realization, const Figure& figure);

// Boundary edges (carried by one triangle) in counterclockwise order as a
// vertex cycle. Throws FigureError when they do not form one closed cycle.
std::vector<VertexIndex> perimeter_cycle(const Figure& figure);

// True when the perimeter turns counterclockwise (or straight) everywhere and
// winds exactly once. Cross-product sign tests use relative tolerance 1e-9.
bool verify_convex(const Realization& realization, const Figure& figure);

// Pairs of triangles whose interiors overlap with positive area.
std::vector<std::pair<TriangleIndex, TriangleIndex>> overlapping_triangles(
    const Realization& realization, const Figure& figure);

double total_triangle_area(const Realization& realization, const Figure& figure);
double perimeter_area(const Realization& realization, const Figure& figure);
double diameter(std::span<const Vec2> coords);

// Similarity transform taking triangle 0's first edge to (0,0)-(1,0).
std::vector<Vec2> canonical_pose(std::span<const Vec2> coords, const Figure& figure);

// Max vertex distance between two coordinate sets after both are put in
// canonical pose, divided by the canonical diameter.
double similarity_deviation(std::span<const Vec2> a, std::span<const Vec2> b,
                            const Figure& figure);

}  // namespace trirealize
