#pragma once

#include <stdexcept>
#include <string>

namespace levywn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters, malformed input, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Adaptive quadrature did not reach its tolerance.
class QuadratureDivergence : public Error {
 public:
  using Error::Error;
};

// No decision can be certified from the available metadata.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class UnsupportedCombination : public Error {
 public:
  using Error::Error;
};

// The sampler has no jump-size generator for this measure.
class UnsupportedMeasure : public Error {
 public:
  using Error::Error;
};

// Truncation of an unbounded support would exceed the configured budget.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// ρ(f/λ) is infinite for every λ > 0.
class NoFiniteModular : public Error {
 public:
  using Error::Error;
};

}  // namespace levywn
