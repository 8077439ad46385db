#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "trirealize/angles.hpp"
#include "trirealize/figure.hpp"

namespace trirealize {

// Circular sequence of ordered letter pairs around an interior vertex. Pair i
// names the letters of the odd and even angle of the i-th triangle of a
// clockwise fan walk; equal letters mean equal angles. Each letter occurs
// exactly once as a first element and once as a second element.
class PairingPattern {
 public:
  // Throws PatternError when the occurrence rule is broken.
  explicit PairingPattern(std::vector<std::array<char, 2>> pairs);
  // "AB BC CA": whitespace-separated two-letter groups of uppercase letters.
  static PairingPattern parse(std::string_view text);
  // Pair i is (x_i, x_sigma(i)) with x_i the first letter of pair i.
  static PairingPattern from_permutation(const std::vector<std::size_t>& sigma);

  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::array<char, 2>>& pairs() const { return pairs_; }
  std::string str() const;

  // The permutation sigma described above.
  std::vector<std::size_t> permutation() const;
  // Letters renamed A, B, C, ... in order of first appearance.
  PairingPattern normalized() const;
  // Rotation by k pairs (pair k becomes pair 0).
  PairingPattern rotated(std::size_t k) const;
  // The string read backwards: pair order reversed, each pair swapped.
  PairingPattern reversed() const;
  // 's' where a pair's two letters agree, 'd' elsewhere.
  std::string signature() const;

  friend bool operator==(const PairingPattern&, const PairingPattern&) = default;

 private:
  std::vector<std::array<char, 2>> pairs_;
};

struct PatternClass {
  PairingPattern canonical;
  std::string signature;  // of the canonical form
  std::size_t members = 0;
};

// Every pattern on n pairs, grouped under rotation, reversal and letter
// renaming. Sorted by signature ('s' before 'd'), then canonical string.
// Throws PatternError unless 2 <= n <= 8.
std::vector<PatternClass> enumerate_patterns(std::size_t n);

// Canonical form is the lexicographically least normalized string over the
// pattern's orbit; members counts the distinct normalized patterns in it.
PatternClass classify_pattern(const PairingPattern& pattern);

// One non-central angle of a pattern fan: step `step` of the clockwise walk,
// odd or even.
struct AngleRole {
  std::size_t step = 0;
  bool odd = true;

  friend bool operator==(const AngleRole&, const AngleRole&) = default;
};

struct AngleEquality {
  AngleRole first;
  AngleRole second;
  char letter = 'A';
};

struct PatternConstraints {
  std::size_t n = 0;
  std::vector<AngleEquality> equalities;  // one per letter, in letter order
  // Sum of the letter values forced by the angle-sum conditions: the 2n
  // non-central angles carry 180n - 360 degrees, each letter twice.
  double letter_sum = 0.0;
};

PatternConstraints pattern_to_constraints(const PairingPattern& pattern);

struct PatternFan {
  Figure figure;
  AngleAssignment angles;
};

// A fan of n triangles around vertex "O" whose odd/even angles follow the
// pattern, with letter_values[i] the size of the i-th letter of the
// normalized pattern. Throws PatternError when the values do not sum to
// letter_sum or leave a non-positive central angle.
PatternFan pattern_fan(const PairingPattern& pattern, const std::vector<double>& letter_values);

}  // namespace trirealize
