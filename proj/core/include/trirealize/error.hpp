#pragma once

#include <stdexcept>
#include <string>

namespace trirealize {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed document or structurally invalid figure.
class FigureError : public Error {
 public:
  using Error::Error;
};

// Missing, misshapen or out-of-range angle values.
class AngleError : public Error {
 public:
  using Error::Error;
};

class PatternError : public Error {
 public:
  using Error::Error;
};

// Scenario parameter outside its domain, or an oracle construction that has
// no solution (parallel rays, point off its segment).
class ScenarioError : public Error {
 public:
  using Error::Error;
};

}  // namespace trirealize
