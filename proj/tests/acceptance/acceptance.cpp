// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--known-failure N]...
// A criterion listed with --known-failure still prints its FAIL line but does
// not make the exit status non-zero.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fmt/format.h"
#include "random_figures.hpp"
#include "trirealize/conditions.hpp"
#include "trirealize/error.hpp"
#include "trirealize/patterns.hpp"
#include "trirealize/realizer.hpp"
#include "trirealize/theorems.hpp"

using namespace trirealize;

namespace {

// Tolerances and budgets, one block per criterion.
constexpr double kCensusSeconds = 1.0;

constexpr std::size_t kNecessityDraws = 200;
constexpr double kAngleSumResidual = 1e-7;
constexpr double kSineLogResidual = 1e-10;
constexpr double kNecessitySeconds = 5.0;

constexpr std::size_t kSufficiencyDraws = 50;
constexpr double kRoundTripDegrees = 1e-7;
constexpr double kSimilarity = 1e-9;

constexpr std::size_t kClosureFans = 200;
constexpr double kClosureExact = 1e-9;
constexpr double kSkewRatio = 1.01;
constexpr double kClosureSkewed = 0.05;
constexpr double kFanMinAngle = 15.0;
// Residual level at which the realizer itself reports a closure failure.
constexpr double kClosureVerdict = 1e-7;

constexpr std::size_t kCampaignTrials = 100;
constexpr double kCampaignTol = 1e-9;
constexpr double kMorleySeconds = 2.0;
constexpr double kMorleyLimitOffset = 1e-6;
constexpr double kMorleyLimitTol = 1e-6;

constexpr std::size_t kPatternFans = 1000;

constexpr std::size_t kPerturbations = 100;
constexpr double kPerturbDegrees = 1e-3;

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome census() {
  const auto start = std::chrono::steady_clock::now();
  const auto three = enumerate_patterns(3);
  const auto four = enumerate_patterns(4);
  const double elapsed = seconds_since(start);

  std::vector<std::string> rows;
  for (const auto& c : three) rows.push_back(c.canonical.str());
  // The published listing writes XX YZ ZY, which is AA BC CB after renaming.
  const std::vector<std::string> table{"AA BB CC", "AA BC CB", "AB BC CA", "AB CA BC"};
  std::map<std::string, int> sig;
  for (const auto& c : four) ++sig[c.signature];

  const bool ok3 = rows == table;
  const bool ok4 = four.size() == 10 && sig["ssss"] == 1 && sig["sdsd"] == 1 && sig["sddd"] == 2 &&
                   sig["dddd"] == 6 && sig.size() == 4;
  std::string breakdown;
  for (const auto& [s, count] : sig) breakdown += fmt::format(" {}={}", s, count);
  return {ok3 && ok4 && elapsed < kCensusSeconds,
          fmt::format("n=3 {} classes{}; n=4 {} classes,{} (want ssss=1 sdsd=1 sddd=2 dddd=6); {:.3f}s",
                      three.size(), ok3 ? " matching the published rows" : " NOT matching the published rows", four.size(),
                      breakdown, elapsed)};
}

Outcome necessity() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  std::size_t failures = 0;
  double worst_sum = 0.0;
  double worst_log = 0.0;
  for (std::size_t i = 0; i < kNecessityDraws; ++i) {
    const auto drawn = testing::random_convex_triangulation(rng, 3 + i % 10, i % 12);
    const auto pi = check_pi(drawn.figure, drawn.angles, kAngleSumResidual);
    const auto two_pi = check_two_pi(drawn.figure, drawn.angles, kAngleSumResidual);
    const auto sine = check_sine_rotation(drawn.figure, drawn.angles, kSineLogResidual);
    if (!pi.passed() || !two_pi.passed() || !sine.passed()) ++failures;
    // Residuals of passing checks are not recorded; probe the worst directly.
    const auto pi0 = check_pi(drawn.figure, drawn.angles, 0.0);
    for (const auto& v : pi0.violations) worst_sum = std::max(worst_sum, std::abs(v.residual));
    const auto sine0 = check_sine_rotation(drawn.figure, drawn.angles, 0.0);
    for (const auto& v : sine0.violations) worst_log = std::max(worst_log, std::abs(v.residual));
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < kNecessitySeconds,
          fmt::format("{} triangulations, {} failures; worst pi residual {:.3g} deg, worst sine log {:.3g}; {:.3f}s",
                      kNecessityDraws, failures, worst_sum, worst_log, elapsed)};
}

Outcome sufficiency() {
  std::size_t failures = 0;
  double worst_round = 0.0;
  double worst_sim = 0.0;
  for (ScenarioKind kind : {ScenarioKind::BisectorHexagon, ScenarioKind::Quadriceptor}) {
    for (std::size_t i = 0; i < kSufficiencyDraws; ++i) {
      auto rng = trial_rng(kSeed, i);
      const Scenario s = build_scenario(kind, sample_params(kind, rng, false));
      try {
        const Realization r = realize(s.figure, s.angles);
        const double round = max_corner_difference(measure_angles(r, s.figure), s.angles);
        const double sim = similarity_deviation(r.coords, s.oracle, s.figure);
        worst_round = std::max(worst_round, round);
        worst_sim = std::max(worst_sim, sim);
        if (round >= kRoundTripDegrees || sim >= kSimilarity) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  return {failures == 0, fmt::format("{} draws each of bisector_hexagon, quadriceptor; {} failures; "
                                     "worst round trip {:.3g} deg, worst similarity {:.3g}",
                                     kSufficiencyDraws, failures, worst_round, worst_sim)};
}

Outcome closure() {
  std::mt19937_64 rng(kSeed + 4);
  std::size_t exact_fail = 0;
  std::size_t skew_fail = 0;
  std::size_t disagreements = 0;
  double worst_exact = 0.0;
  double least_skewed = INFINITY;
  for (std::size_t i = 0; i < kClosureFans; ++i) {
    const auto drawn = testing::random_fan(rng, 3 + i % 8, kFanMinAngle);
    const double exact = closure_residual(drawn.figure, drawn.angles, 0).worst();
    worst_exact = std::max(worst_exact, exact);
    if (exact >= kClosureExact) ++exact_fail;
    const bool sine_ok = check_sine_rotation(drawn.figure, drawn.angles).passed();
    if (sine_ok != (exact < kClosureVerdict)) ++disagreements;

    const std::size_t step = i % drawn.figure.triangle_count();
    const AngleAssignment skewed = testing::skew_sine_products(drawn.figure, drawn.angles, 0, kSkewRatio, step);
    const double off = closure_residual(drawn.figure, skewed, 0).worst();
    least_skewed = std::min(least_skewed, off);
    if (off <= kClosureSkewed) ++skew_fail;
    const bool skewed_ok = check_sine_rotation(drawn.figure, skewed).passed();
    if (skewed_ok != (off < kClosureVerdict)) ++disagreements;
  }
  return {exact_fail == 0 && skew_fail == 0 && disagreements == 0,
          fmt::format("{} fans: worst exact residual {:.3g} deg, least 1%-skewed residual {:.3g} deg; "
                      "{} disagreements between checker and residual",
                      kClosureFans, worst_exact, least_skewed, disagreements)};
}

std::string campaign_line(const VerificationReport& r) {
  return fmt::format("{} {}/{} max dev {:.3g}", to_string(r.scenario), r.passed_trials(), r.trials,
                     r.max_deviation());
}

Outcome morley() {
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport r = run_verification(ScenarioKind::MorleyClassic, {kCampaignTrials, kSeed, kCampaignTol});
  const double elapsed = seconds_since(start);
  return {r.all_passed() && r.max_deviation() < kCampaignTol && elapsed < kMorleySeconds,
          fmt::format("{}; {:.3f}s", campaign_line(r), elapsed)};
}

Vec2 in_frame(Vec2 a, Vec2 b, Vec2 p) {
  const Vec2 d = b - a;
  const Vec2 q = p - a;
  const double n2 = d.x * d.x + d.y * d.y;
  return {(q.x * d.x + q.y * d.y) / n2, (q.y * d.x - q.x * d.y) / n2};
}

Outcome morley_hexagon() {
  const VerificationReport r = run_verification(ScenarioKind::MorleyHexagon, {kCampaignTrials, kSeed, kCampaignTol});
  bool domain_ok = true;
  for (const TrialResult& t : r.results) {
    double sum = 0.0;
    for (const Param& p : t.params) sum += p.value;
    domain_ok = domain_ok && sum > 185.0 && sum < 355.0;
  }

  // Triangle limit: compare against classic Morley on (A, B, 180 - A - B).
  double limit_dev = 0.0;
  std::mt19937_64 rng(kSeed + 6);
  for (int i = 0; i < 20; ++i) {
    const double a = uniform(rng, 10.0, 120.0);
    const double b = uniform(rng, 10.0, 160.0 - a);
    const double g = 180.0 - a - b;
    const Scenario hex = build_morley_hexagon(a, b, g + kMorleyLimitOffset);
    const Scenario tri = build_morley_classic(a, b, g);
    for (const char* label : {"C", "U", "V", "W"}) {
      const Vec2 h = in_frame(hex.oracle[hex.figure.vertex("A")], hex.oracle[hex.figure.vertex("B")],
                              hex.oracle[hex.figure.vertex(label)]);
      const Vec2 t = in_frame(tri.oracle[tri.figure.vertex("A")], tri.oracle[tri.figure.vertex("B")],
                              tri.oracle[tri.figure.vertex(label)]);
      limit_dev = std::max(limit_dev, norm(h - t));
    }
  }
  return {r.all_passed() && domain_ok && limit_dev < kMorleyLimitTol,
          fmt::format("{} (documented side-length convention); limit at sum 180+{:g}: {:.3g}",
                      campaign_line(r), kMorleyLimitOffset, limit_dev)};
}

Outcome campaigns() {
  bool ok = true;
  std::string detail;
  for (ScenarioKind kind : {ScenarioKind::BisectorHexagon, ScenarioKind::IncenterEquilateral,
                            ScenarioKind::CircleChords, ScenarioKind::MorleyPartial, ScenarioKind::SemiMedian}) {
    const VerificationReport r = run_verification(kind, {kCampaignTrials, kSeed, kCampaignTol});
    ok = ok && r.all_passed() && r.max_deviation() < kCampaignTol;
    detail += (detail.empty() ? "" : "; ") + campaign_line(r);
  }
  return {ok, detail};
}

Outcome pairing_implies_sine() {
  std::mt19937_64 rng(kSeed + 8);
  std::size_t counterexamples = 0;
  std::size_t pairing_failures = 0;
  for (std::size_t i = 0; i < kPatternFans; ++i) {
    const PatternFan fan = testing::random_pattern_fan(rng, 3 + i % 6);
    const bool pairing = check_pairing(fan.figure, fan.angles).passed();
    if (!pairing) ++pairing_failures;
    if (pairing && !check_sine_rotation(fan.figure, fan.angles).passed()) ++counterexamples;
  }
  return {counterexamples == 0 && pairing_failures == 0,
          fmt::format("{} pattern fans, {} counterexamples", kPatternFans, counterexamples)};
}

Outcome perturbation() {
  std::size_t silent = 0;
  std::size_t total = 0;
  std::string detail;
  for (ScenarioKind kind : all_scenarios()) {
    std::size_t scenario_silent = 0;
    for (std::size_t i = 0; i < kPerturbations; ++i) {
      auto rng = trial_rng(kSeed + 9, i);
      const Scenario s = build_scenario(kind, sample_params(kind, rng, false));
      const Tolerances tol = s.map_source == MapSource::Measured ? Tolerances::measured() : Tolerances{};
      const auto classes = classify_vertices(s.figure);

      std::vector<TriangleIndex> candidates;
      for (TriangleIndex t = 0; t < s.figure.triangle_count(); ++t) {
        for (int k = 0; k < 3; ++k) {
          if (classes[s.figure.triangle(t).at(k)] == VertexClass::Interior) {
            candidates.push_back(t);
            break;
          }
        }
      }
      const TriangleIndex t = candidates[rng() % candidates.size()];
      const int k = static_cast<int>(rng() % 3);
      const int j = (k + 1 + static_cast<int>(rng() % 2)) % 3;
      const double sign = (rng() & 1) ? 1.0 : -1.0;

      AngleAssignment bent = s.angles;
      bent.set({t, k}, bent.at(t, k) + sign * kPerturbDegrees);
      bent.set({t, j}, bent.at(t, j) - sign * kPerturbDegrees);
      // Silent means the verdict still certifies the perturbed map.
      if (realizability_verdict(s.figure, bent, tol).realizable) ++scenario_silent;
      ++total;
    }
    silent += scenario_silent;
    detail += fmt::format("{}{} {}", detail.empty() ? "" : ", ", to_string(kind), scenario_silent);
  }
  return {silent == 0, fmt::format("{} perturbations, {} silent acceptances ({})", total, silent, detail)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-failure" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--known-failure N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pattern census", census},
      {"necessity on random triangulations", necessity},
      {"sufficiency round trip", sufficiency},
      {"last-triangle closure", closure},
      {"Morley classic", morley},
      {"Morley hexagon", morley_hexagon},
      {"theorem campaigns", campaigns},
      {"pairing implies sine-rotation", pairing_implies_sine},
      {"perturbation sensitivity", perturbation},
  };

  int status = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i + 1);
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool tolerated = !o.pass && known.count(number) > 0;
    std::cout << fmt::format("criterion {} {}: {}{} - {}\n", number, criteria[i].first, o.pass ? "PASS" : "FAIL",
                             tolerated ? " (known)" : "", o.detail);
    if (!o.pass && !tolerated) status = 1;
  }
  return status;
}
