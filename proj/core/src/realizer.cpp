#include "trirealize/realizer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "fmt/format.h"
#include "trirealize/conditions.hpp"

namespace trirealize {

namespace {

constexpr double kDegenerateAngle = 1e-9;
constexpr double kDegenerateArea = 1e-12;
constexpr double kConvexityTol = 1e-9;
constexpr double kConditioningAngle = 1.0;

// The point c left of a->b seeing angle alpha at a and beta at b; the side
// |ac| follows from the sine rule.
Vec2 place_apex(Vec2 a, Vec2 b, double alpha, double beta) {
  const double base = norm(b - a);
  const double side = base * std::sin(radians(beta)) / std::sin(radians(alpha + beta));
  return a + side * rotate((b - a) / base, alpha);
}

std::array<double, 3> corner_angles(Vec2 a, Vec2 b, Vec2 c) {
  return {angle_between(b - a, c - a), angle_between(c - b, a - b), angle_between(a - c, b - c)};
}

class Builder {
 public:
  Builder(const Figure& figure, const AngleAssignment& angles, double tol)
      : figure_(figure), angles_(angles), tol_(tol),
        placed_(figure.vertex_count()), done_(figure.triangle_count(), false) {}

  void seed(TriangleIndex t) {
    const Triangle& tri = figure_.triangle(t);
    placed_[tri.at(0)] = Vec2{0.0, 0.0};
    placed_[tri.at(1)] = Vec2{1.0, 0.0};
    realize_triangle(t);
  }

  bool done(TriangleIndex t) const { return done_[t]; }

  bool all_done() const { return std::all_of(done_.begin(), done_.end(), [](bool d) { return d; }); }

  // Walks the fan at v counterclockwise from a realized triangle, realizing
  // each triangle it reaches. Returns whether anything new was realized.
  bool complete_fan(VertexIndex v) {
    const Fan& fan = figure_.fan(v);
    const std::size_t n = fan.corners.size();
    std::size_t start = n;
    bool pending = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (done_[fan.corners[i].triangle]) {
        if (start == n) start = i;
      } else {
        pending = true;
      }
    }
    if (start == n || !pending) return false;
    for (std::size_t k = 1; k < n; ++k) {
      const TriangleIndex t = fan.corners[(start + k) % n].triangle;
      if (!done_[t]) realize_triangle(t);
    }
    return true;
  }

  // Lowest-index unrealized triangle sharing an edge with a realized one.
  std::optional<TriangleIndex> next_frontier_triangle() const {
    for (TriangleIndex t = 0; t < figure_.triangle_count(); ++t) {
      if (done_[t]) continue;
      const Triangle& tri = figure_.triangle(t);
      int known = 0;
      for (VertexIndex v : tri.corners) known += placed_[v].has_value() ? 1 : 0;
      if (known >= 2) return t;
    }
    return std::nullopt;
  }

  void realize_triangle(TriangleIndex t) {
    const Triangle& tri = figure_.triangle(t);
    int missing = -1;
    int known = 0;
    for (int k = 0; k < 3; ++k) {
      if (placed_[tri.at(k)]) {
        ++known;
      } else {
        missing = k;
      }
    }
    if (known == 3) {
      close_triangle(t);
    } else if (known == 2) {
      const int ka = (missing + 1) % 3;
      const int kb = (missing + 2) % 3;
      placed_[tri.at(missing)] =
          place_apex(*placed_[tri.at(ka)], *placed_[tri.at(kb)], angles_.at(t, ka), angles_.at(t, kb));
    } else {
      throw Error("internal: " + figure_.describe_triangle(t) + " reached with one placed corner");
    }
    done_[t] = true;
  }

  std::vector<Vec2> coordinates() const {
    std::vector<Vec2> coords;
    coords.reserve(placed_.size());
    for (VertexIndex v = 0; v < placed_.size(); ++v) {
      if (!placed_[v]) {
        throw RealizeError(RealizeError::Kind::Precondition,
                           "vertex '" + figure_.label(v) + "' was never placed");
      }
      coords.push_back(*placed_[v]);
    }
    return coords;
  }

  double max_closure() const { return max_closure_; }

 private:
  void close_triangle(TriangleIndex t) {
    const Triangle& tri = figure_.triangle(t);
    const auto measured = corner_angles(*placed_[tri.at(0)], *placed_[tri.at(1)], *placed_[tri.at(2)]);
    double residual = 0.0;
    for (int k = 0; k < 3; ++k) {
      residual = std::max(residual, std::abs(measured[static_cast<std::size_t>(k)] - angles_.at(t, k)));
    }
    max_closure_ = std::max(max_closure_, residual);
    if (residual > tol_) {
      throw RealizeError(RealizeError::Kind::Closure,
                         fmt::format("closing {} misses its assigned angles by {:.9g} degrees",
                                     figure_.describe_triangle(t), residual),
                         residual);
    }
  }

  const Figure& figure_;
  const AngleAssignment& angles_;
  double tol_;
  std::vector<std::optional<Vec2>> placed_;
  std::vector<bool> done_;
  double max_closure_ = 0.0;
};

}  // namespace

Realization realize(const Figure& figure, const AngleAssignment& angles,
                    const RealizeOptions& options) {
  require_total(figure, angles);
  for (TriangleIndex t = 0; t < figure.triangle_count(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const double a = angles.at(t, k);
      if (!(a > kDegenerateAngle && a < 180.0 - kDegenerateAngle)) {
        throw RealizeError(RealizeError::Kind::Degenerate,
                           fmt::format("angle {:.9g} at {} corner {} is within {:g} of 0 or 180",
                                       a, figure.describe_triangle(t), k, kDegenerateAngle));
      }
    }
  }
  const ConditionReport pi = check_pi(figure, angles, options.tol);
  if (!pi.passed()) {
    throw RealizeError(RealizeError::Kind::Precondition,
                       "angle sum of " + pi.violations.front().locus.name + " is not 180",
                       pi.worst_residual());
  }

  const auto classes = classify_vertices(figure);
  Builder builder(figure, angles, options.tol);
  const TriangleIndex seed = options.seed.value_or(0);
  if (seed >= figure.triangle_count()) {
    throw RealizeError(RealizeError::Kind::Precondition, "seed triangle out of range");
  }
  builder.seed(seed);

  while (!builder.all_done()) {
    bool progress = false;
    for (VertexIndex v = 0; v < figure.vertex_count(); ++v) {
      if (classes[v] == VertexClass::Interior && builder.complete_fan(v)) progress = true;
    }
    if (progress) continue;
    auto t = builder.next_frontier_triangle();
    if (!t) {
      throw RealizeError(RealizeError::Kind::Precondition,
                         "figure is not edge-connected; some triangles are unreachable");
    }
    builder.realize_triangle(*t);
  }

  Realization result;
  result.coords = builder.coordinates();
  result.max_closure_residual = builder.max_closure();

  const double diam = diameter(result.coords);
  for (TriangleIndex t = 0; t < figure.triangle_count(); ++t) {
    const Triangle& tri = figure.triangle(t);
    const double area = 0.5 * orient(result.coords[tri.at(0)], result.coords[tri.at(1)],
                                     result.coords[tri.at(2)]);
    if (area < kDegenerateArea * diam * diam) {
      throw RealizeError(RealizeError::Kind::Degenerate,
                         fmt::format("{} has signed area {:.9g} (figure diameter {:.9g})",
                                     figure.describe_triangle(t), area, diam));
    }
  }
  if (!verify_convex(result, figure)) {
    throw RealizeError(RealizeError::Kind::Concave, "realized perimeter is not convex");
  }
  for (const auto& [i, j] : overlapping_triangles(result, figure)) {
    result.warnings.push_back(figure.describe_triangle(i) + " overlaps " +
                              figure.describe_triangle(j));
  }
  double smallest = 180.0;
  for (const auto& triple : angles.values()) {
    smallest = std::min({smallest, triple[0], triple[1], triple[2]});
  }
  if (smallest < kConditioningAngle) {
    result.warnings.push_back(
        fmt::format("ill-conditioned: smallest angle {:.9g} degrees; max closure residual {:.9g}",
                    smallest, result.max_closure_residual));
  }
  result.coords = canonical_pose(result.coords, figure);
  return result;
}

ClosureResidual closure_residual(const Figure& figure, const AngleAssignment& angles,
                                 VertexIndex v) {
  require_total(figure, angles);
  if (classify_vertices(figure)[v] != VertexClass::Interior) {
    throw FigureError("vertex '" + figure.label(v) + "' is not interior");
  }
  const Fan& fan = figure.fan(v);
  const std::size_t n = fan.corners.size();
  std::map<VertexIndex, Vec2> at;
  at[v] = Vec2{0.0, 0.0};
  {
    const Corner first = fan.corners.front();
    at[figure.triangle(first.triangle).next(first.slot)] = Vec2{1.0, 0.0};
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Corner c = fan.corners[i];
    const Triangle& tri = figure.triangle(c.triangle);
    const int next_slot = (c.slot + 1) % 3;
    at[tri.prev(c.slot)] = place_apex(at[v], at[tri.next(c.slot)], angles[c],
                                      angles.at(c.triangle, next_slot));
  }
  const Corner last = fan.corners.back();
  const Triangle& tri = figure.triangle(last.triangle);
  const Vec2 p = at.at(tri.next(last.slot));
  const Vec2 q = at.at(tri.prev(last.slot));
  const double r = angle_between(at[v] - p, q - p);
  const double s = angle_between(at[v] - q, p - q);
  return {v, std::abs(r - angles.at(last.triangle, (last.slot + 1) % 3)),
          std::abs(s - angles.at(last.triangle, (last.slot + 2) % 3))};
}

AngleAssignment measure_angles(const Realization& realization, const Figure& figure) {
  std::vector<std::array<double, 3>> values;
  values.reserve(figure.triangle_count());
  for (TriangleIndex t = 0; t < figure.triangle_count(); ++t) {
    const Triangle& tri = figure.triangle(t);
    const Vec2 a = realization.coords.at(tri.at(0));
    const Vec2 b = realization.coords.at(tri.at(1));
    const Vec2 c = realization.coords.at(tri.at(2));
    const double longest = std::max({norm(b - a), norm(c - b), norm(a - c)});
    if (std::abs(orient(a, b, c)) <= kDegenerateArea * longest * longest) {
      throw RealizeError(RealizeError::Kind::Degenerate,
                         figure.describe_triangle(t) + " is degenerate");
    }
    values.push_back(corner_angles(a, b, c));
  }
  return AngleAssignment(std::move(values));
}

std::vector<VertexIndex> perimeter_cycle(const Figure& figure) {
  std::map<std::pair<VertexIndex, VertexIndex>, int> undirected;
  for (const Triangle& tri : figure.triangles()) {
    for (int k = 0; k < 3; ++k) ++undirected[std::minmax(tri.at(k), tri.next(k))];
  }
  std::map<VertexIndex, VertexIndex> successor;
  std::size_t boundary_edges = 0;
  for (const Triangle& tri : figure.triangles()) {
    for (int k = 0; k < 3; ++k) {
      const VertexIndex a = tri.at(k);
      const VertexIndex b = tri.next(k);
      if (undirected[std::minmax(a, b)] != 1) continue;
      ++boundary_edges;
      if (!successor.emplace(a, b).second) {
        throw FigureError("boundary is not a single closed cycle (pinched at '" + figure.label(a) +
                          "')");
      }
    }
  }
  if (successor.empty()) throw FigureError("figure has no boundary edges");
  std::vector<VertexIndex> cycle;
  const VertexIndex start = successor.begin()->first;
  VertexIndex cur = start;
  do {
    cycle.push_back(cur);
    auto it = successor.find(cur);
    if (it == successor.end() || cycle.size() > boundary_edges) {
      throw FigureError("boundary is not a single closed cycle");
    }
    cur = it->second;
  } while (cur != start);
  if (cycle.size() != boundary_edges) throw FigureError("boundary is not a single closed cycle");
  return cycle;
}

bool verify_convex(const Realization& realization, const Figure& figure) {
  const auto cycle = perimeter_cycle(figure);
  const std::size_t n = cycle.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 prev = realization.coords.at(cycle[(i + n - 1) % n]);
    const Vec2 cur = realization.coords.at(cycle[i]);
    const Vec2 next = realization.coords.at(cycle[(i + 1) % n]);
    const Vec2 e1 = cur - prev;
    const Vec2 e2 = next - cur;
    const double scale = norm(e1) * norm(e2);
    if (scale == 0.0) return false;
    if (cross(e1, e2) / scale < -kConvexityTol) return false;
    turning += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  return std::abs(turning - 2.0 * std::numbers::pi) < 1e-6;
}

std::vector<std::pair<TriangleIndex, TriangleIndex>> overlapping_triangles(
    const Realization& realization, const Figure& figure) {
  const double eps = kConvexityTol * diameter(realization.coords);
  const std::size_t nt = figure.triangle_count();
  std::vector<std::array<Vec2, 3>> pts(nt);
  for (TriangleIndex t = 0; t < nt; ++t) {
    for (int k = 0; k < 3; ++k) pts[t][static_cast<std::size_t>(k)] = realization.coords.at(figure.triangle(t).at(k));
  }
  auto separated_along = [&](const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b, Vec2 axis) {
    double amin = dot(a[0], axis), amax = amin, bmin = dot(b[0], axis), bmax = bmin;
    for (std::size_t k = 1; k < 3; ++k) {
      amin = std::min(amin, dot(a[k], axis));
      amax = std::max(amax, dot(a[k], axis));
      bmin = std::min(bmin, dot(b[k], axis));
      bmax = std::max(bmax, dot(b[k], axis));
    }
    return std::min(amax, bmax) - std::max(amin, bmin) <= eps;
  };
  std::vector<std::pair<TriangleIndex, TriangleIndex>> result;
  for (TriangleIndex i = 0; i < nt; ++i) {
    for (TriangleIndex j = i + 1; j < nt; ++j) {
      bool separated = false;
      for (const auto* tri : {&pts[i], &pts[j]}) {
        for (std::size_t k = 0; k < 3 && !separated; ++k) {
          const Vec2 edge = (*tri)[(k + 1) % 3] - (*tri)[k];
          separated = separated_along(pts[i], pts[j], unit(Vec2{-edge.y, edge.x}));
        }
      }
      if (!separated) result.emplace_back(i, j);
    }
  }
  return result;
}

double total_triangle_area(const Realization& realization, const Figure& figure) {
  double area = 0.0;
  for (const Triangle& tri : figure.triangles()) {
    area += 0.5 * orient(realization.coords.at(tri.at(0)), realization.coords.at(tri.at(1)),
                         realization.coords.at(tri.at(2)));
  }
  return area;
}

double perimeter_area(const Realization& realization, const Figure& figure) {
  const auto cycle = perimeter_cycle(figure);
  double twice = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    twice += cross(realization.coords.at(cycle[i]),
                   realization.coords.at(cycle[(i + 1) % cycle.size()]));
  }
  return 0.5 * twice;
}

double diameter(std::span<const Vec2> coords) {
  double best = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = i + 1; j < coords.size(); ++j) best = std::max(best, norm(coords[i] - coords[j]));
  }
  return best;
}

std::vector<Vec2> canonical_pose(std::span<const Vec2> coords, const Figure& figure) {
  using C = std::complex<double>;
  const Triangle& tri = figure.triangle(0);
  const C origin(coords[tri.at(0)].x, coords[tri.at(0)].y);
  const C axis = C(coords[tri.at(1)].x, coords[tri.at(1)].y) - origin;
  std::vector<Vec2> out;
  out.reserve(coords.size());
  for (const Vec2 p : coords) {
    const C z = (C(p.x, p.y) - origin) / axis;
    out.push_back({z.real(), z.imag()});
  }
  return out;
}

double similarity_deviation(std::span<const Vec2> a, std::span<const Vec2> b,
                            const Figure& figure) {
  const auto ca = canonical_pose(a, figure);
  const auto cb = canonical_pose(b, figure);
  double worst = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) worst = std::max(worst, norm(ca[i] - cb[i]));
  return worst / diameter(ca);
}

}  // namespace trirealize
