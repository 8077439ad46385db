#pragma once

#include <string>
#include <vector>

#include "trirealize/conditions.hpp"
#include "trirealize/figure.hpp"
#include "trirealize/patterns.hpp"
#include "trirealize/realizer.hpp"
#include "trirealize/theorems.hpp"

namespace trirealize {

// Structured (JSON) serializations. Reals carry 9 significant digits; key
// order is fixed, so output is stable for fixed inputs.
std::string to_json(const Figure& figure, const Verdict& verdict);
std::string to_json(const Realization& realization, const Figure& figure);
std::string to_json(const std::vector<PatternClass>& classes);
std::string to_json(const VerificationReport& report);
std::string to_json(const std::vector<VerificationReport>& reports);

std::string_view to_string(MapSource source);

}  // namespace trirealize
