#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "trirealize/angles.hpp"
#include "trirealize/figure.hpp"

namespace trirealize {

enum class Condition { PiSum, TwoPi, SineRotation, Pairing };
std::string_view to_string(Condition condition);

struct Locus {
  enum class Kind { Triangle, Vertex };
  Kind kind = Kind::Triangle;
  std::size_t index = 0;
  std::string name;  // "T2 (A,B,C)" or the vertex label
};

struct ConditionViolation {
  Locus locus;
  double residual = 0.0;
  std::string detail;
};

struct ConditionReport {
  Condition condition = Condition::PiSum;
  std::vector<ConditionViolation> violations;

  bool passed() const { return violations.empty(); }
  // Largest |residual| among violations, 0 when passed.
  double worst_residual() const;
};

// Absolute tolerances in degrees for the angle-sum and pairing checks, and a
// relative (log-sine) tolerance for the sine-rotation check.
struct Tolerances {
  double pi = 1e-9;
  double two_pi = 1e-9;
  double sine_log = 1e-9;
  double pairing = 1e-9;

  // For maps measured from floating-point coordinates.
  static Tolerances measured() { return {1e-7, 1e-7, 1e-9, 1e-7}; }
};

enum class Certificate { TheoremOne, PairingCorollary };
std::string_view to_string(Certificate certificate);

struct Verdict {
  bool realizable = false;
  Certificate via = Certificate::TheoremOne;
  // PiSum, TwoPi, SineRotation, Pairing in that order.
  std::array<ConditionReport, 4> reports;

  const ConditionReport& report(Condition c) const {
    return reports[static_cast<std::size_t>(c)];
  }
};

// One triangle of an interior fan, walked clockwise. `odd` sits at the end
// of the shared edge the walk enters through, `even` at the end of the edge
// it leaves through.
struct FanStep {
  Corner center;
  Corner odd;
  Corner even;
};

// Clockwise walk of the fan at v starting from its lowest-index triangle.
std::vector<FanStep> fan_walk(const Figure& figure, VertexIndex v);

// Sum of the angles assigned at v.
double angle_sum_at(const Figure& figure, const AngleAssignment& angles, VertexIndex v);

// Each triangle's three angles sum to 180 within tol; residual = sum - 180.
ConditionReport check_pi(const Figure& figure, const AngleAssignment& angles, double tol = 1e-9);

// Interior vertices sum to 360, exterior ones to at most 180 (+tol).
ConditionReport check_two_pi(const Figure& figure, const AngleAssignment& angles,
                             double tol = 1e-9);

// Around each interior vertex, the products of the sines of the odd and even
// angles agree; compared as log-sine sums, residual = log P_odd - log P_even.
// Throws AngleError when a participating angle lies outside (0, 180).
ConditionReport check_sine_rotation(const Figure& figure, const AngleAssignment& angles,
                                    double tol = 1e-9);

// odd(v) and even(v) are equal multisets within tol at every interior vertex.
ConditionReport check_pairing(const Figure& figure, const AngleAssignment& angles,
                              double tol = 1e-9);

Verdict realizability_verdict(const Figure& figure, const AngleAssignment& angles,
                              const Tolerances& tol = {});

}  // namespace trirealize
