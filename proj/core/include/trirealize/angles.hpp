#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "trirealize/figure.hpp"

namespace trirealize {

// Angle sizes in degrees, one triple per triangle aligned with corner slots.
class AngleAssignment {
 public:
  AngleAssignment() = default;
  // Throws AngleError on non-finite values.
  explicit AngleAssignment(std::vector<std::array<double, 3>> values);

  std::size_t triangle_count() const { return values_.size(); }
  std::span<const std::array<double, 3>> values() const { return values_; }

  double at(TriangleIndex t, int slot) const {
    return values_.at(t)[static_cast<std::size_t>(slot)];
  }
  double operator[](Corner c) const { return at(c.triangle, c.slot); }
  void set(Corner c, double degrees);

  friend bool operator==(const AngleAssignment&, const AngleAssignment&) = default;

 private:
  std::vector<std::array<double, 3>> values_;
};

// Throws AngleError("missing angle value ...") unless every triangle of the
// figure has a triple.
void require_total(const Figure& figure, const AngleAssignment& angles);

// Largest per-corner absolute difference; both must cover the same triangles.
double max_corner_difference(const AngleAssignment& a, const AngleAssignment& b);

}  // namespace trirealize
