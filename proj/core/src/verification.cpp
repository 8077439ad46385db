#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "fmt/format.h"
#include "trirealize/error.hpp"
#include "trirealize/oracle.hpp"
#include "trirealize/realizer.hpp"
#include "trirealize/theorems.hpp"

namespace trirealize {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Triangle angles, uniform on the simplex, each at least `margin`.
std::array<double, 3> triangle_angles(std::mt19937_64& rng, double margin) {
  const double free = 180.0 - 3.0 * margin;
  double u = uniform(rng, 0.0, 1.0);
  double v = uniform(rng, 0.0, 1.0);
  if (u > v) std::swap(u, v);
  const double a = margin + free * u;
  const double b = margin + free * (v - u);
  return {a, b, 180.0 - a - b};
}

std::string join_failed(const Verdict& verdict) {
  std::string out;
  for (const auto& report : verdict.reports) {
    if (report.passed()) continue;
    if (!out.empty()) out += ",";
    out += to_string(report.condition);
  }
  return out;
}

void evaluate(const Scenario& scenario, TrialResult& r, double tol);

TrialResult run_trial(ScenarioKind kind, std::size_t index, const VerificationOptions& options,
                      double tol) {
  TrialResult r;
  r.index = index;
  auto rng = trial_rng(options.seed, index);
  r.params = sample_params(kind, rng, options.stress);
  Scenario scenario;
  try {
    scenario = build_scenario(kind, r.params);
  } catch (const Error& e) {
    r.error = std::string("build: ") + e.what();
    return r;
  }
  r.built = true;
  r.map_source = scenario.map_source;

  try {
    evaluate(scenario, r, tol);
  } catch (const Error& e) {
    r.error = std::string("verify: ") + e.what();
    r.passed = false;
  }
  return r;
}

void evaluate(const Scenario& scenario, TrialResult& r, double tol) {
  const Tolerances tolerances =
      scenario.map_source == MapSource::Measured ? Tolerances::measured() : Tolerances{};
  const Verdict verdict = realizability_verdict(scenario.figure, scenario.angles, tolerances);
  r.realizable = verdict.realizable;
  r.pairing = verdict.report(Condition::Pairing).passed();
  r.failed_conditions = join_failed(verdict);

  const AngleAssignment from_oracle = oracle::measure(scenario.oracle, scenario.figure);
  r.oracle_map_deviation = max_corner_difference(from_oracle, scenario.angles);

  try {
    const Realization realization = realize(scenario.figure, scenario.angles);
    r.realized = true;
    r.similarity_deviation =
        similarity_deviation(realization.coords, scenario.oracle, scenario.figure);
    r.roundtrip_deviation =
        max_corner_difference(measure_angles(realization, scenario.figure), scenario.angles);
  } catch (const Error& e) {
    r.error = std::string("realize: ") + e.what();
  }

  r.checks = scenario.checks;
  for (Check& c : r.checks) {
    if (!c.fixed_threshold) c.threshold = tol;
  }
  r.passed = r.realizable && r.realized && r.similarity_deviation < tol &&
             r.roundtrip_deviation < kRoundtripTolerance &&
             r.oracle_map_deviation < kRoundtripTolerance &&
             std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed(); });
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed + index));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::vector<Param> sample_params(ScenarioKind kind, std::mt19937_64& rng, bool stress) {
  const double margin = stress ? 0.5 : 5.0;
  switch (kind) {
    case ScenarioKind::MorleyClassic:
    case ScenarioKind::MorleyPartial:
    case ScenarioKind::IncenterEquilateral: {
      const auto t = triangle_angles(rng, margin);
      return {{"A", t[0]}, {"B", t[1]}, {"C", t[2]}};
    }
    case ScenarioKind::MorleyHexagon: {
      // Angle sum kept inside (180 + margin, 360 - margin).
      for (;;) {
        const double a = uniform(rng, margin, 180.0 - margin);
        const double b = uniform(rng, margin, 180.0 - margin);
        const double g = uniform(rng, margin, 180.0 - margin);
        const double sum = a + b + g;
        if (sum > 180.0 + margin && sum < 360.0 - margin) return {{"A", a}, {"B", b}, {"Gamma", g}};
      }
    }
    case ScenarioKind::BisectorHexagon: {
      for (;;) {
        const double a = uniform(rng, margin, 180.0 - margin);
        const double b = uniform(rng, margin, 180.0 - margin);
        const double g = uniform(rng, margin, 180.0 - margin);
        const double delta = (720.0 - a - b - g) / 3.0;
        if (delta >= margin && delta <= 180.0 - margin) {
          return {{"alpha", a}, {"beta", b}, {"gamma", g}, {"delta", delta}};
        }
      }
    }
    case ScenarioKind::SemiMedian: {
      const double floor = stress ? 0.2 : 5.0;
      const auto t = triangle_angles(rng, 4.0 * floor);
      const double hi = std::min({t[0], t[1], t[2]}) / 2.0 - floor;
      return {{"alpha", t[0]}, {"beta", t[1]}, {"gamma", t[2]}, {"delta", uniform(rng, floor, hi)}};
    }
    case ScenarioKind::Quadriceptor: {
      for (;;) {
        const double a = uniform(rng, margin, 45.0 - 2.0 * margin);
        const double b = uniform(rng, margin, 45.0 - 2.0 * margin);
        const double g = 45.0 - a - b;
        if (g >= margin) return {{"alpha", a}, {"beta", b}, {"gamma", g}};
      }
    }
    case ScenarioKind::CircleChords: {
      const double a = uniform(rng, margin, 180.0 - 3.0 * margin);
      const double b = uniform(rng, a + margin, 180.0 - margin);
      // Both leftover arcs stay below 180 degrees.
      const double rest = 360.0 - a - b;
      const double lo = std::max(0.0, 1.0 - 180.0 / rest);
      const double hi = std::min(1.0, 180.0 / rest);
      const double pad = (stress ? 0.02 : 0.1) * (hi - lo);
      const double split = uniform(rng, lo + pad, hi - pad);
      return {{"alpha", a}, {"beta", b}, {"split", split}};
    }
  }
  throw ScenarioError("unknown scenario");
}

std::size_t VerificationReport::passed_trials() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const TrialResult& r) { return r.passed; }));
}

double VerificationReport::max_deviation() const {
  double worst = 0.0;
  for (const TrialResult& r : results) {
    if (!r.built) continue;
    worst = std::max(worst, r.similarity_deviation);
    for (const Check& c : r.checks) {
      if (!c.informational) worst = std::max(worst, c.deviation);
    }
  }
  return worst;
}

VerificationReport run_verification(ScenarioKind kind, const VerificationOptions& options) {
  VerificationReport report;
  report.scenario = kind;
  report.trials = options.trials;
  report.seed = options.seed;
  report.stress = options.stress;
  report.tol = options.tol.value_or(options.stress ? 1e-6 : 1e-9);
  report.results.resize(options.trials);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads,
                                                           static_cast<unsigned>(options.trials)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < options.trials; ++i) {
      report.results[i] = run_trial(kind, i, options, report.tol);
    }
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < options.trials; i = next++) {
        report.results[i] = run_trial(kind, i, options, report.tol);
      }
    });
  }
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace trirealize
