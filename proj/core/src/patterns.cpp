#include "trirealize/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fmt/format.h"
#include "trirealize/conditions.hpp"
#include "trirealize/error.hpp"

namespace trirealize {

PairingPattern::PairingPattern(std::vector<std::array<char, 2>> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw PatternError("pattern has no pairs");
  std::map<char, int> first;
  std::map<char, int> second;
  for (const auto& p : pairs_) {
    for (char c : p) {
      if (!std::isupper(static_cast<unsigned char>(c))) {
        throw PatternError(fmt::format("pattern letter '{}' is not an uppercase letter", c));
      }
    }
    ++first[p[0]];
    ++second[p[1]];
  }
  for (const auto& [letter, count] : first) {
    if (count != 1) throw PatternError(fmt::format("letter {} leads {} pairs", letter, count));
    if (second[letter] != 1) {
      throw PatternError(fmt::format("letter {} must close exactly one pair", letter));
    }
  }
  for (const auto& [letter, count] : second) {
    if (count != 1 || !first.count(letter)) {
      throw PatternError(fmt::format("letter {} must lead and close exactly one pair", letter));
    }
  }
}

PairingPattern PairingPattern::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::array<char, 2>> pairs;
  std::string token;
  while (in >> token) {
    if (token.size() != 2) throw PatternError("pattern groups must have two letters: '" + token + "'");
    pairs.push_back({token[0], token[1]});
  }
  return PairingPattern(std::move(pairs));
}

PairingPattern PairingPattern::from_permutation(const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  if (n == 0 || n > 26) throw PatternError("permutation size out of range");
  std::vector<bool> seen(n, false);
  for (std::size_t s : sigma) {
    if (s >= n || seen[s]) throw PatternError("not a permutation");
    seen[s] = true;
  }
  std::vector<std::array<char, 2>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) {
    pairs[i] = {static_cast<char>('A' + i), static_cast<char>('A' + sigma[i])};
  }
  return PairingPattern(std::move(pairs)).normalized();
}

std::string PairingPattern::str() const {
  std::string out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += ' ';
    out += pairs_[i][0];
    out += pairs_[i][1];
  }
  return out;
}

std::vector<std::size_t> PairingPattern::permutation() const {
  std::map<char, std::size_t> leads;
  for (std::size_t i = 0; i < pairs_.size(); ++i) leads[pairs_[i][0]] = i;
  std::vector<std::size_t> sigma(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) sigma[i] = leads.at(pairs_[i][1]);
  return sigma;
}

PairingPattern PairingPattern::normalized() const {
  std::map<char, char> rename;
  auto name = [&](char c) {
    auto [it, inserted] = rename.emplace(c, static_cast<char>('A' + rename.size()));
    return it->second;
  };
  auto pairs = pairs_;
  for (auto& p : pairs) {
    p[0] = name(p[0]);
    p[1] = name(p[1]);
  }
  return PairingPattern(std::move(pairs));
}

PairingPattern PairingPattern::rotated(std::size_t k) const {
  auto pairs = pairs_;
  std::rotate(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(k % pairs.size()), pairs.end());
  return PairingPattern(std::move(pairs));
}

PairingPattern PairingPattern::reversed() const {
  std::vector<std::array<char, 2>> pairs(pairs_.rbegin(), pairs_.rend());
  for (auto& p : pairs) std::swap(p[0], p[1]);
  return PairingPattern(std::move(pairs));
}

std::string PairingPattern::signature() const {
  std::string sig;
  for (const auto& p : pairs_) sig += p[0] == p[1] ? 's' : 'd';
  return sig;
}

namespace {

std::set<std::string> orbit(const PairingPattern& pattern) {
  std::set<std::string> members;
  for (const PairingPattern& base : {pattern, pattern.reversed()}) {
    for (std::size_t k = 0; k < base.size(); ++k) members.insert(base.rotated(k).normalized().str());
  }
  return members;
}

bool class_order(const PatternClass& a, const PatternClass& b) {
  // 's' sorts before 'd'.
  if (a.signature != b.signature) return a.signature > b.signature;
  return a.canonical.str() < b.canonical.str();
}

}  // namespace

PatternClass classify_pattern(const PairingPattern& pattern) {
  const auto members = orbit(pattern);
  PairingPattern canonical = PairingPattern::parse(*members.begin());
  std::string signature = canonical.signature();
  return {std::move(canonical), std::move(signature), members.size()};
}

std::vector<PatternClass> enumerate_patterns(std::size_t n) {
  if (n < 2 || n > 8) {
    throw PatternError(fmt::format("pattern size {} out of range (2..8)", n));
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::map<std::string, PatternClass> classes;
  std::set<std::string> assigned;
  do {
    const PairingPattern raw = PairingPattern::from_permutation(sigma);
    if (assigned.count(raw.str())) continue;
    PatternClass cls = classify_pattern(raw);
    for (const auto& member : orbit(raw)) assigned.insert(member);
    classes.emplace(cls.canonical.str(), std::move(cls));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<PatternClass> result;
  result.reserve(classes.size());
  for (auto& [key, cls] : classes) result.push_back(std::move(cls));
  std::sort(result.begin(), result.end(), class_order);
  return result;
}

PatternConstraints pattern_to_constraints(const PairingPattern& pattern) {
  const PairingPattern norm = pattern.normalized();
  const std::size_t n = norm.size();
  PatternConstraints constraints;
  constraints.n = n;
  constraints.letter_sum = 90.0 * static_cast<double>(n) - 180.0;
  std::map<char, AngleRole> odd_at;
  std::map<char, AngleRole> even_at;
  for (std::size_t i = 0; i < n; ++i) {
    odd_at[norm.pairs()[i][0]] = {i, true};
    even_at[norm.pairs()[i][1]] = {i, false};
  }
  for (const auto& [letter, role] : odd_at) {
    constraints.equalities.push_back({role, even_at.at(letter), letter});
  }
  return constraints;
}

PatternFan pattern_fan(const PairingPattern& pattern, const std::vector<double>& letter_values) {
  const PatternConstraints constraints = pattern_to_constraints(pattern);
  const PairingPattern norm = pattern.normalized();
  const std::size_t n = norm.size();
  if (n < 3) throw PatternError("a closed fan needs at least three triangles");
  if (letter_values.size() != n) {
    throw PatternError(fmt::format("expected {} letter values, got {}", n, letter_values.size()));
  }
  const double sum = std::accumulate(letter_values.begin(), letter_values.end(), 0.0);
  if (std::abs(sum - constraints.letter_sum) > 1e-9) {
    throw PatternError(
        fmt::format("letter values sum to {:.9g}, need {:.9g}", sum, constraints.letter_sum));
  }

  std::vector<std::string> labels{"O"};
  for (std::size_t i = 0; i < n; ++i) labels.push_back(fmt::format("P{}", i));
  std::vector<Triangle> triangles;
  for (std::size_t i = 0; i < n; ++i) triangles.push_back({{0, 1 + i, 1 + (i + 1) % n}});
  Figure figure("pattern " + norm.str(), std::move(labels), std::move(triangles));

  auto value = [&](char letter) { return letter_values[static_cast<std::size_t>(letter - 'A')]; };
  std::vector<std::array<double, 3>> values(n);
  const auto walk = fan_walk(figure, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const FanStep& step = walk[j];
    auto& triple = values[step.center.triangle];
    const double odd = value(norm.pairs()[j][0]);
    const double even = value(norm.pairs()[j][1]);
    const double central = 180.0 - odd - even;
    if (!(odd > 0.0 && even > 0.0 && central > 0.0)) {
      throw PatternError(fmt::format("step {} leaves central angle {:.9g}", j, central));
    }
    triple[static_cast<std::size_t>(step.odd.slot)] = odd;
    triple[static_cast<std::size_t>(step.even.slot)] = even;
    triple[static_cast<std::size_t>(step.center.slot)] = central;
  }
  return {std::move(figure), AngleAssignment(std::move(values))};
}

}  // namespace trirealize
