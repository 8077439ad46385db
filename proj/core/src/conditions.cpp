#include "trirealize/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "fmt/format.h"
#include "trirealize/error.hpp"
#include "trirealize/geometry.hpp"

namespace trirealize {

std::string_view to_string(Condition condition) {
  switch (condition) {
    case Condition::PiSum: return "pi-sum";
    case Condition::TwoPi: return "two-pi";
    case Condition::SineRotation: return "sine-rotation";
    case Condition::Pairing: return "pairing";
  }
  return "unknown";
}

std::string_view to_string(Certificate certificate) {
  switch (certificate) {
    case Certificate::TheoremOne: return "realizability theorem";
    case Certificate::PairingCorollary: return "pairing corollary";
  }
  return "unknown";
}

double ConditionReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& v : violations) worst = std::max(worst, std::abs(v.residual));
  return worst;
}

namespace {

Locus vertex_locus(const Figure& figure, VertexIndex v) {
  return {Locus::Kind::Vertex, v, figure.label(v)};
}

std::vector<VertexIndex> interior_vertices(const Figure& figure) {
  const auto classes = classify_vertices(figure);
  std::vector<VertexIndex> result;
  for (VertexIndex v = 0; v < figure.vertex_count(); ++v) {
    if (classes[v] == VertexClass::Interior) result.push_back(v);
  }
  return result;
}

}  // namespace

std::vector<FanStep> fan_walk(const Figure& figure, VertexIndex v) {
  const Fan& fan = figure.fan(v);
  const std::size_t n = fan.corners.size();
  std::vector<FanStep> steps;
  steps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Clockwise: reverse of the stored counterclockwise order.
    const Corner c = fan.corners[(n - i) % n];
    steps.push_back({c, {c.triangle, (c.slot + 2) % 3}, {c.triangle, (c.slot + 1) % 3}});
  }
  return steps;
}

double angle_sum_at(const Figure& figure, const AngleAssignment& angles, VertexIndex v) {
  double sum = 0.0;
  for (const Corner& c : figure.incident(v)) sum += angles[c];
  return sum;
}

ConditionReport check_pi(const Figure& figure, const AngleAssignment& angles, double tol) {
  require_total(figure, angles);
  ConditionReport report{Condition::PiSum, {}};
  for (TriangleIndex t = 0; t < figure.triangle_count(); ++t) {
    const double sum = angles.at(t, 0) + angles.at(t, 1) + angles.at(t, 2);
    const double residual = sum - 180.0;
    if (std::abs(residual) > tol) {
      report.violations.push_back({{Locus::Kind::Triangle, t, figure.describe_triangle(t)},
                                   residual,
                                   fmt::format("angle sum {:.9g}", sum)});
    }
  }
  return report;
}

ConditionReport check_two_pi(const Figure& figure, const AngleAssignment& angles, double tol) {
  require_total(figure, angles);
  ConditionReport report{Condition::TwoPi, {}};
  const auto classes = classify_vertices(figure);
  for (VertexIndex v = 0; v < figure.vertex_count(); ++v) {
    const double sum = angle_sum_at(figure, angles, v);
    if (classes[v] == VertexClass::Interior) {
      const double residual = sum - 360.0;
      if (std::abs(residual) > tol) {
        report.violations.push_back({vertex_locus(figure, v), residual,
                                     fmt::format("interior angle sum {:.9g} != 360", sum)});
      }
    } else if (sum > 180.0 + tol) {
      report.violations.push_back({vertex_locus(figure, v), sum - 180.0,
                                   fmt::format("exterior angle sum {:.9g} > 180", sum)});
    }
  }
  return report;
}

ConditionReport check_sine_rotation(const Figure& figure, const AngleAssignment& angles,
                                    double tol) {
  require_total(figure, angles);
  ConditionReport report{Condition::SineRotation, {}};
  auto log_sine = [&](Corner c) {
    const double a = angles[c];
    if (!(a > 0.0 && a < 180.0)) {
      throw AngleError(fmt::format("angle {:.9g} at {} corner {} is outside (0, 180)", a,
                                   figure.describe_triangle(c.triangle), c.slot));
    }
    return std::log(std::sin(radians(a)));
  };
  for (VertexIndex v : interior_vertices(figure)) {
    double log_odd = 0.0;
    double log_even = 0.0;
    for (const FanStep& step : fan_walk(figure, v)) {
      log_odd += log_sine(step.odd);
      log_even += log_sine(step.even);
    }
    const double residual = log_odd - log_even;
    // |P_odd - P_even| / max(P_odd, P_even) expressed through the log gap.
    const double relative = -std::expm1(-std::abs(residual));
    if (relative > tol) {
      report.violations.push_back(
          {vertex_locus(figure, v), residual,
           fmt::format("sine products differ by relative {:.9g}", relative)});
    }
  }
  return report;
}

ConditionReport check_pairing(const Figure& figure, const AngleAssignment& angles, double tol) {
  require_total(figure, angles);
  ConditionReport report{Condition::Pairing, {}};
  for (VertexIndex v : interior_vertices(figure)) {
    std::vector<double> odd;
    std::vector<double> even;
    for (const FanStep& step : fan_walk(figure, v)) {
      odd.push_back(angles[step.odd]);
      even.push_back(angles[step.even]);
    }
    // Sorted greedy matching is optimal for one-dimensional multisets.
    std::sort(odd.begin(), odd.end());
    std::sort(even.begin(), even.end());
    double worst = 0.0;
    std::size_t worst_at = 0;
    for (std::size_t i = 0; i < odd.size(); ++i) {
      const double gap = std::abs(odd[i] - even[i]);
      if (gap > worst) {
        worst = gap;
        worst_at = i;
      }
    }
    if (worst > tol) {
      report.violations.push_back(
          {vertex_locus(figure, v), worst,
           fmt::format("odd/even multisets differ: {:.9g} vs {:.9g}", odd[worst_at],
                       even[worst_at])});
    }
  }
  return report;
}

Verdict realizability_verdict(const Figure& figure, const AngleAssignment& angles,
                              const Tolerances& tol) {
  Verdict verdict;
  verdict.reports[0] = check_pi(figure, angles, tol.pi);
  verdict.reports[1] = check_two_pi(figure, angles, tol.two_pi);
  verdict.reports[2] = check_sine_rotation(figure, angles, tol.sine_log);
  verdict.reports[3] = check_pairing(figure, angles, tol.pairing);
  verdict.realizable =
      verdict.reports[0].passed() && verdict.reports[1].passed() && verdict.reports[2].passed();
  verdict.via = verdict.realizable && verdict.reports[3].passed() ? Certificate::PairingCorollary
                                                                  : Certificate::TheoremOne;
  return verdict;
}

}  // namespace trirealize
