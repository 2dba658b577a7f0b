#pragma once

#include <stdexcept>
#include <string>

namespace uavplan {

// Malformed or unknown input (bad ids, unparsable files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file that could not be parsed.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// A problem-level constraint is violated, e.g. a leg speed outside [v_min, v_max].
class ConstraintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query lies outside the domain of an interpolation table.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A resource limit refused the request (instance too large for the exact search).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uavplan
