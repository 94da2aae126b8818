#pragma once

#include <complex>
#include <utility>
#include <variant>
#include <vector>

namespace levywn {

// +a with probability p, -a with probability 1 - p.
struct TwoPoint {
  double a = 1.0;
  double p = 0.5;
};

struct GaussianJumps {
  double mean = 0.0;
  double variance = 1.0;
};

struct UniformJumps {
  double lo = -1.0;
  double hi = 1.0;
};

struct DiscreteJumps {
  std::vector<double> values;
  std::vector<double> probs;
};

using JumpDistribution = std::variant<TwoPoint, GaussianJumps, UniformJumps, DiscreteJumps>;

void validate(const JumpDistribution& d);
bool is_symmetric(const JumpDistribution& d);

std::complex<double> characteristic_function(const JumpDistribution& d, double xi);

// P(|X| > r), r >= 0.
double prob_beyond(const JumpDistribution& d, double r);
// E[|X|^q 1{|X| <= r}].
double small_moment(const JumpDistribution& d, double q, double r);
// E[|X|^p 1{|X| > r}].
double large_moment(const JumpDistribution& d, double p, double r);
// E[X 1{|X| <= r}].
double truncated_mean(const JumpDistribution& d, double r);

// Law of aX.
JumpDistribution scaled(const JumpDistribution& d, double a);
// Law of -X.
JumpDistribution reflected(const JumpDistribution& d);

// Lower and upper bound of |X| over the support (upper is +inf for Gaussian).
std::pair<double, double> magnitude_range(const JumpDistribution& d);

}  // namespace levywn
