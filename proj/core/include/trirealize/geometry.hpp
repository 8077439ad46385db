#pragma once

#include <cmath>
#include <numbers>

namespace trirealize {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(Vec2 a) { return a / norm(a); }

constexpr double radians(double degrees) { return degrees * (std::numbers::pi / 180.0); }
constexpr double degrees(double radians) { return radians * (180.0 / std::numbers::pi); }

// Counterclockwise rotation by an angle in degrees.
inline Vec2 rotate(Vec2 v, double deg) {
  const double c = std::cos(radians(deg));
  const double s = std::sin(radians(deg));
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Twice the signed area; positive when a, b, c turn counterclockwise.
constexpr double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

// Unsigned angle between two directions, in degrees within [0, 180].
inline double angle_between(Vec2 u, Vec2 v) {
  return degrees(std::atan2(std::abs(cross(u, v)), dot(u, v)));
}

}  // namespace trirealize
