#pragma once

#include <limits>
#include <string>
#include <utility>

namespace levywn {

// A nonnegative quantity that may be +inf. An infinite value always carries
// the reason it diverges.
struct Extended {
  double value = 0.0;
  std::string divergence;

  static Extended finite(double v) { return {v, {}}; }
  static Extended infinite(std::string reason) {
    return {std::numeric_limits<double>::infinity(), std::move(reason)};
  }

  bool is_finite() const { return value < std::numeric_limits<double>::infinity(); }
};

// Sum of two extended values; the first divergence reason wins.
Extended operator+(const Extended& a, const Extended& b);
Extended operator*(double scale, const Extended& a);

}  // namespace levywn
