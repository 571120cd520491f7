#pragma once

#include <stdexcept>
#include <string>

namespace tscomp {

/// Input series has no usable structure (e.g. constant series where a
/// variance-normalized statistic is requested).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear system's pivot fell below the singularity threshold.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A compressed representation does not cover the requested index range.
class CoverageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// CSV ingestion failure; the message names the offending row when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares fit could not be performed (rank deficiency, too few rows).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational model evaluated too close to its denominator root.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tscomp
