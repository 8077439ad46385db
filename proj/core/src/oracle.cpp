#include "trirealize/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "trirealize/error.hpp"

namespace trirealize::oracle {

Vec2 intersect(const Line& l, const Line& m) {
  // Cramer's rule on l.point + s l.direction = m.point + t m.direction.
  const double det = cross(l.direction, m.direction);
  const double scale = norm(l.direction) * norm(m.direction);
  if (std::abs(det) <= 1e-14 * scale) throw ScenarioError("construction lines are parallel");
  const double s = cross(m.point - l.point, m.direction) / det;
  return l.point + s * l.direction;
}

Line ray(Vec2 from, Vec2 toward, double deg) { return {from, rotate(toward - from, deg)}; }

Line through(Vec2 a, Vec2 b) { return {a, b - a}; }

double distance_to_line(Vec2 q, const Line& line) {
  return std::abs(cross(line.direction, q - line.point)) / norm(line.direction);
}

double segment_parameter(Vec2 q, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  return dot(q - a, d) / dot(d, d);
}

double angle_at(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 u = b - a;
  const Vec2 v = c - a;
  return degrees(std::atan2(std::abs(cross(u, v)), dot(u, v)));
}

Vec2 apex_from_angles(double angle_a, double angle_b) {
  const Vec2 a{0.0, 0.0};
  const Vec2 b{1.0, 0.0};
  return intersect(ray(a, b, angle_a), ray(b, a, -angle_b));
}

Line bisector(Vec2 x, Vec2 p, Vec2 n) { return {x, unit(p - x) + unit(n - x)}; }

Vec2 on_unit_circle(double deg) { return {std::cos(radians(deg)), std::sin(radians(deg))}; }

AngleAssignment measure(std::span<const Vec2> coords, const Figure& figure) {
  std::vector<std::array<double, 3>> values;
  for (const Triangle& tri : figure.triangles()) {
    const Vec2 a = coords[tri.at(0)];
    const Vec2 b = coords[tri.at(1)];
    const Vec2 c = coords[tri.at(2)];
    values.push_back({angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b)});
  }
  return AngleAssignment(std::move(values));
}

double max_distance(std::span<const Vec2> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) best = std::max(best, norm(points[i] - points[j]));
  }
  return best;
}

double equilateral_deviation(Vec2 a, Vec2 b, Vec2 c) {
  const double s1 = norm(b - a);
  const double s2 = norm(c - b);
  const double s3 = norm(a - c);
  return std::max({s1, s2, s3}) / std::min({s1, s2, s3}) - 1.0;
}

}  // namespace trirealize::oracle
