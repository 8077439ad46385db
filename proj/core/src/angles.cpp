#include "trirealize/angles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trirealize/error.hpp"

namespace trirealize {

AngleAssignment::AngleAssignment(std::vector<std::array<double, 3>> values)
    : values_(std::move(values)) {
  for (std::size_t t = 0; t < values_.size(); ++t) {
    for (double a : values_[t]) {
      if (!std::isfinite(a)) {
        throw AngleError("triangle " + std::to_string(t) + " has a non-finite angle");
      }
    }
  }
}

void AngleAssignment::set(Corner c, double degrees) {
  if (!std::isfinite(degrees)) throw AngleError("non-finite angle");
  values_.at(c.triangle)[static_cast<std::size_t>(c.slot)] = degrees;
}

void require_total(const Figure& figure, const AngleAssignment& angles) {
  if (angles.triangle_count() < figure.triangle_count()) {
    throw AngleError("missing angle value for " +
                     figure.describe_triangle(angles.triangle_count()));
  }
  if (angles.triangle_count() > figure.triangle_count()) {
    throw AngleError("angle assignment has " + std::to_string(angles.triangle_count()) +
                     " triples for " + std::to_string(figure.triangle_count()) + " triangles");
  }
}

double max_corner_difference(const AngleAssignment& a, const AngleAssignment& b) {
  if (a.triangle_count() != b.triangle_count()) {
    throw AngleError("assignments cover different triangle counts");
  }
  double worst = 0.0;
  for (std::size_t t = 0; t < a.triangle_count(); ++t) {
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(a.at(t, k) - b.at(t, k)));
  }
  return worst;
}

}  // namespace trirealize
