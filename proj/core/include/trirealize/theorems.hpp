#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trirealize/angles.hpp"
#include "trirealize/conditions.hpp"
#include "trirealize/figure.hpp"
#include "trirealize/geometry.hpp"

namespace trirealize {

enum class ScenarioKind {
  MorleyClassic,
  MorleyHexagon,
  BisectorHexagon,
  SemiMedian,
  IncenterEquilateral,
  Quadriceptor,
  CircleChords,
  MorleyPartial,
};

std::span<const ScenarioKind> all_scenarios();
std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> scenario_from_name(std::string_view name);

struct Param {
  std::string name;
  double value = 0.0;
};

// One oracle-side conclusion. `deviation` is compared against `threshold`;
// a non-fixed threshold follows the campaign tolerance. Informational checks
// are reported but never fail a trial.
struct Check {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double deviation = 0.0;
  double threshold = 1e-9;
  bool fixed_threshold = false;
  bool informational = false;

  bool passed() const { return informational || deviation < threshold; }
};

enum class MapSource { ClosedForm, Measured };

struct Scenario {
  ScenarioKind kind = ScenarioKind::MorleyClassic;
  std::vector<Param> params;
  Figure figure;
  AngleAssignment angles;
  MapSource map_source = MapSource::ClosedForm;
  // Oracle coordinates aligned with the figure's vertices.
  std::vector<Vec2> oracle;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  double param(std::string_view name) const;
};

// Builders throw ScenarioError outside their parameter domains (angle sums
// are checked to 1e-9 degrees).
Scenario build_morley_classic(double a, double b, double c);
// The trisector-adjacent inner vertex V near side BC is constructed from
// four trisectors and an equilateral triangle.
Scenario build_morley_partial(double a, double b, double c);
Scenario build_morley_hexagon(double a, double b, double g);
Scenario build_bisector_hexagon(double alpha, double beta, double gamma, double delta);
Scenario build_semi_median(double alpha, double beta, double gamma, double delta);
Scenario build_incenter_equilateral(double a, double b, double c);
Scenario build_quadriceptor(double alpha, double beta, double gamma);
// split in (0,1) divides the arcs left over by the two chords.
Scenario build_circle_chords(double alpha, double beta, double split = 0.5);

// Parameters for one trial, drawn from the scenario's domain. Without
// stress, draws stay 5 degrees inside the domain boundaries.
std::vector<Param> sample_params(ScenarioKind kind, std::mt19937_64& rng, bool stress);
Scenario build_scenario(ScenarioKind kind, std::span<const Param> params);

// Per-trial generator: mt19937_64 seeded with splitmix64(seed + index).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);
// Uniform in [lo, hi) from the top 53 bits of one draw.
double uniform(std::mt19937_64& rng, double lo, double hi);

struct VerificationOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  // Defaults to 1e-9, or 1e-6 under stress.
  std::optional<double> tol;
  bool stress = false;
  unsigned threads = 1;
};

struct TrialResult {
  std::size_t index = 0;
  std::vector<Param> params;
  bool built = false;
  std::string error;
  MapSource map_source = MapSource::ClosedForm;
  bool realizable = false;
  bool pairing = false;
  std::string failed_conditions;
  bool realized = false;
  double similarity_deviation = 0.0;  // realizer vs oracle, fraction of diameter
  double roundtrip_deviation = 0.0;   // measure(realize(map)) vs map, degrees
  double oracle_map_deviation = 0.0;  // oracle measurement vs map, degrees
  std::vector<Check> checks;
  bool passed = false;
};

struct VerificationReport {
  ScenarioKind scenario = ScenarioKind::MorleyClassic;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool stress = false;
  std::vector<TrialResult> results;

  std::size_t passed_trials() const;
  bool all_passed() const { return passed_trials() == trials; }
  // Largest non-informational deviation (checks and realizer comparison)
  // over trials that built.
  double max_deviation() const;
};

constexpr double kRoundtripTolerance = 1e-7;

VerificationReport run_verification(ScenarioKind kind, const VerificationOptions& options = {});

}  // namespace trirealize
