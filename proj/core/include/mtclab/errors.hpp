#pragma once

#include <stdexcept>
#include <string>

namespace mtclab {

/// Malformed or inconsistent input data (bad permutation, index out of range,
/// parse failure, conductor mismatch).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the supported setting, e.g. a nonabelian invertible group.
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interval certification did not reach the requested width.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data contradicts a proven theorem; the input must be corrupted.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mtclab
