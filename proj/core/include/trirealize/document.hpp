#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trirealize/angles.hpp"
#include "trirealize/figure.hpp"

namespace trirealize {

// A figure document: JSON object with "name", "vertices", counterclockwise
// "triangles" and an optional "angles" block aligned with the triangles.
struct FigureDocument {
  Figure figure;
  std::optional<AngleAssignment> angles;
};

// Throws FigureError for malformed documents, duplicate or unknown labels
// and structurally invalid figures; AngleError for a misaligned angles block.
FigureDocument parse_document(std::string_view text);
Figure parse_figure(std::string_view text);

FigureDocument read_document(const std::string& path);

// Canonical serialization; parse_document(serialize(f, a)) reproduces f and a.
std::string serialize(const Figure& figure, const AngleAssignment* angles = nullptr);

}  // namespace trirealize
