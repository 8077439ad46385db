#pragma once

#include <string>

#include "trirealize/angles.hpp"
#include "trirealize/figure.hpp"
#include "trirealize/realizer.hpp"

namespace trirealize {

// Standalone SVG drawing of a realization: perimeter polygon, interior edges,
// vertex labels and, when angles is non-null, per-corner angle annotations.
// Output is byte-identical for identical inputs.
std::string to_svg(const Realization& realization, const Figure& figure,
                   const AngleAssignment* angles = nullptr);

}  // namespace trirealize
