#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "levywn/errors.hpp"
#include "levywn/levy_triplet.hpp"

namespace levywn {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_complex_near(ComplexValue got, ComplexValue want, double tol) {
  EXPECT_NEAR(got.real(), want.real(), tol);
  EXPECT_NEAR(got.imag(), want.imag(), tol);
}

// One-sided exponential jumps of rate 1: ν(dx) = e^{-x} dx on x > 0.
LevyMeasure exponential_jumps() {
  GenericDensity g;
  g.density = [](double x) { return x > 0.0 ? std::exp(-x) : 0.0; };
  g.origin_exponent = -1.0;
  g.tail = ExponentialTail{1.0};
  return g;
}

std::vector<LevyTriplet> sample_triplets() {
  return {
      {0.0, 2.0, ZeroMeasure{}},
      {0.7, 0.0, ZeroMeasure{}},
      {0.0, 0.0, StableTail{0.5, 1.0}},
      {0.0, 0.0, StableTail{1.0, 1.0 / kPi}},
      {0.3, 0.5, StableTail{1.5, 2.0}},
      {0.0, 0.0, GeneralizedLaplace{1.0, 2.0}},
      {0.0, 0.0, GeneralizedLaplace{0.4, 0.5}},
      {0.0, 0.0, CompoundPoisson{1.0, TwoPoint{1.0, 0.5}}},
      {0.2, 0.0, CompoundPoisson{2.0, TwoPoint{1.5, 0.8}}},
      {0.0, 0.0, CompoundPoisson{1.0, GaussianJumps{0.5, 0.3}}},
      {0.0, 0.0, CompoundPoisson{0.5, UniformJumps{-0.2, 3.0}}},
      {0.0, 0.0, CompoundPoisson{1.0, DiscreteJumps{{-2.0, 0.5, 4.0}, {0.2, 0.5, 0.3}}}},
      {1.0, 0.0, FiniteDiscrete{{{2.0, 1.0}, {-0.5, 0.3}}}},
      {0.0, 0.0, exponential_jumps()},
  };
}

TEST(LevyExponent, GaussianOnly) {
  expect_complex_near(levy_exponent({0.0, 2.0, ZeroMeasure{}}, 3.0), {-9.0, 0.0}, 1e-14);
}

TEST(LevyExponent, PureDrift) {
  expect_complex_near(levy_exponent({1.0, 0.0, ZeroMeasure{}}, 2.0), {0.0, 2.0}, 1e-14);
}

TEST(LevyExponent, CauchyNormalization) {
  const LevyTriplet t{0.0, 0.0, StableTail{1.0, 1.0 / kPi}};
  expect_complex_near(levy_exponent(t, 1.0), {-1.0, 0.0}, 1e-14);
}

TEST(LevyExponent, CauchyByDirectQuadratureOfTheDensity) {
  // Oracle: ∫(cos x - 1)/(π x²) dx = -1 evaluated through the generic density route.
  GenericDensity g;
  g.density = [](double x) { return 1.0 / (kPi * x * x); };
  g.origin_exponent = 1.0;
  g.tail = PowerLawTail{1.0};
  g.symmetric = true;
  expect_complex_near(levy_exponent({0.0, 0.0, g}, 1.0), {-1.0, 0.0}, 1e-8);
}

TEST(LevyExponent, StableClosedFormMatchesQuadratureRoute) {
  for (double alpha : {0.3, 0.5, 1.2, 1.5, 1.9}) {
    GenericDensity g;
    g.density = [alpha](double x) { return std::pow(std::abs(x), -1.0 - alpha); };
    g.origin_exponent = alpha;
    g.tail = PowerLawTail{alpha};
    g.symmetric = true;
    for (double xi : {0.1, 1.0, 7.0}) {
      const double closed = levy_exponent({0.0, 0.0, StableTail{alpha, 1.0}}, xi).real();
      const double numeric = levy_exponent({0.0, 0.0, g}, xi).real();
      EXPECT_NEAR(numeric, closed, 1e-7 * std::abs(closed)) << "alpha=" << alpha << " xi=" << xi;
    }
  }
}

TEST(LevyExponent, LaplaceClosedFormMatchesQuadratureRoute) {
  GenericDensity g;
  g.density = [](double x) { return std::exp(-std::abs(x)) / std::abs(x); };
  g.origin_exponent = 0.0;
  g.tail = ExponentialTail{1.0};
  g.symmetric = true;
  for (double xi : {0.01, 0.5, 3.0, 40.0}) {
    const double closed = -std::log1p(xi * xi);
    EXPECT_NEAR(levy_exponent({0.0, 0.0, GeneralizedLaplace{1.0, 2.0}}, xi).real(), closed, 1e-13);
    EXPECT_NEAR(levy_exponent({0.0, 0.0, g}, xi).real(), closed, 1e-8 * std::abs(closed));
  }
}

TEST(LevyExponent, AsymmetricExponentialJumps) {
  // CP with Exp(1) jumps: λ(φ(ξ) - 1) - iξ E[X 1{X <= 1}], E[X 1{X<=1}] = 1 - 2/e.
  const double m1 = 1.0 - 2.0 / std::numbers::e;
  for (double xi : {-4.0, -0.3, 0.2, 1.0, 9.0}) {
    const ComplexValue want = 1.0 / ComplexValue(1.0, -xi) - 1.0 - ComplexValue(0.0, xi * m1);
    expect_complex_near(levy_exponent({0.0, 0.0, exponential_jumps()}, xi), want, 1e-8);
  }
}

TEST(LevyExponent, CompoundPoissonMatchesQuadratureRoute) {
  const JumpDistribution g = GaussianJumps{0.5, 0.3};
  GenericDensity dens;
  dens.density = [](double x) { return std::exp(-0.5 * (x - 0.5) * (x - 0.5) / 0.3) / std::sqrt(2 * kPi * 0.3); };
  dens.tail = CompactSupport{25.0};
  dens.breakpoints = {0.5};
  for (double xi : {-2.0, 0.4, 3.0}) {
    expect_complex_near(levy_exponent({0.0, 0.0, dens}, xi), levy_exponent({0.0, 0.0, CompoundPoisson{1.0, g}}, xi),
                        1e-8);
  }
}

TEST(LevyExponent, ZeroAndConjugateSymmetry) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (const auto& t : sample_triplets()) {
    EXPECT_EQ(levy_exponent(t, 0.0), ComplexValue(0.0, 0.0));
    for (int k = 0; k < 8; ++k) {
      const double xi = u(gen);
      const ComplexValue a = levy_exponent(t, xi);
      const ComplexValue b = levy_exponent(t, -xi);
      EXPECT_NEAR(a.real(), b.real(), 1e-9 * (1.0 + std::abs(a)));
      EXPECT_NEAR(a.imag(), -b.imag(), 1e-9 * (1.0 + std::abs(a)));
      if (is_symmetric(t)) EXPECT_NEAR(a.imag(), 0.0, 1e-12 * (1.0 + std::abs(a)));
    }
  }
}

TEST(LevyExponent, IndependentSumIsAdditive) {
  const auto ts = sample_triplets();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& a = ts[i];
    const auto& b = ts[(i + 5) % ts.size()];
    const LevyTriplet s = sum_independent(a, b);
    for (double xi : {-3.0, 0.25, 1.0, 6.0}) {
      const ComplexValue want = levy_exponent(a, xi) + levy_exponent(b, xi);
      const ComplexValue got = levy_exponent(s, xi);
      EXPECT_NEAR(std::abs(got - want), 0.0, 1e-9 * std::abs(want) + 1e-12);
    }
  }
}

TEST(TripletAlgebra, SymmetrizeDropsDrift) {
  const auto s = symmetrize({3.0, 1.0, ZeroMeasure{}});
  EXPECT_EQ(s.gamma, 0.0);
  EXPECT_EQ(s.sigma2, 1.0);
  EXPECT_TRUE(s.nu.holds<ZeroMeasure>());
}

TEST(TripletAlgebra, SymmetrizedMeasuresAreSymmetric) {
  for (const auto& t : sample_triplets()) {
    if (t.nu.holds<GenericDensity>()) continue;
    const auto s = symmetrize(t);
    EXPECT_TRUE(is_symmetric(s)) << t.nu.kind_name();
    for (double xi : {0.5, 2.0}) {
      const double want = 0.5 * (levy_exponent({0.0, 0.0, t.nu}, xi).real() +
                                 levy_exponent({0.0, 0.0, t.nu}, -xi).real());
      EXPECT_NEAR(levy_exponent({0.0, 0.0, s.nu}, xi).real(), want, 1e-12 * (1.0 + std::abs(want)));
    }
  }
}

TEST(TripletAlgebra, OppositeDriftsCancel) {
  const auto s = sum_independent({1.0, 1.0, ZeroMeasure{}}, {-1.0, 0.0, ZeroMeasure{}});
  EXPECT_EQ(s.gamma, 0.0);
  EXPECT_EQ(s.sigma2, 1.0);
  EXPECT_TRUE(s.nu.holds<ZeroMeasure>());
}

TEST(TripletAlgebra, SameFamilySumsStayClosed) {
  const auto s = sum_independent({0.0, 0.0, StableTail{1.2, 1.0}}, {0.0, 0.0, StableTail{1.2, 0.5}});
  ASSERT_TRUE(s.nu.holds<StableTail>());
  EXPECT_DOUBLE_EQ(s.nu.get_if<StableTail>()->c, 1.5);
  EXPECT_THROW(sum_independent({0.0, 0.0, StableTail{1.2, 1.0}}, {0.0, 0.0, GeneralizedLaplace{}},
                               SumPolicy::ClosedOnly),
               UnsupportedCombination);
  EXPECT_TRUE(sum_independent({0.0, 0.0, StableTail{1.2, 1.0}}, {0.0, 0.0, GeneralizedLaplace{}})
                  .nu.holds<MeasureSum>());
}

TEST(TripletAlgebra, GaussianRescaling) {
  const auto r = rescale_amplitude({0.0, 1.5, ZeroMeasure{}}, -3.0);
  EXPECT_EQ(r.gamma, 0.0);
  EXPECT_DOUBLE_EQ(r.sigma2, 13.5);
}

TEST(TripletAlgebra, RescaledExponentIsDilatedExponent) {
  for (const auto& t : sample_triplets()) {
    for (double a : {-2.5, -0.3, 0.5, 4.0}) {
      const auto r = rescale_amplitude(t, a);
      for (double xi : {-1.7, 0.6, 2.0}) {
        const ComplexValue want = levy_exponent(t, a * xi);
        EXPECT_NEAR(std::abs(levy_exponent(r, xi) - want), 0.0, 1e-8 * (1.0 + std::abs(want)))
            << t.nu.kind_name() << " a=" << a << " xi=" << xi;
      }
    }
  }
}

TEST(GeneralizedMoment, DiscreteFiniteSum) {
  const LevyMeasure nu = FiniteDiscrete{{{2.0, 0.5}, {-2.0, 0.5}}};
  EXPECT_DOUBLE_EQ(generalized_moment(nu, 1.0, 2.0).value, 2.0);
}

TEST(GeneralizedMoment, StablePowerIntegrals) {
  for (double alpha : {0.5, 1.0, 1.5}) {
    for (double p : {0.0, 0.5 * alpha}) {
      const double c = 1.3;
      const double want = 2.0 * c * (1.0 / (2.0 - alpha) + 1.0 / (alpha - p));
      EXPECT_NEAR(generalized_moment(StableTail{alpha, c}, p, 2.0).value, want, 1e-13 * want);
    }
    const auto at_alpha = generalized_moment(StableTail{alpha, 1.0}, alpha, 2.0);
    EXPECT_FALSE(at_alpha.is_finite());
    EXPECT_FALSE(at_alpha.divergence.empty());
  }
}

TEST(GeneralizedMoment, LaplaceAgainstDirectIntegration) {
  // m_{1,2} for τ=1, σ²=2: 2∫_1^∞ e^{-x}dx + 2∫_0^1 x e^{-x} dx = 2/e + 2(1 - 2/e).
  const double want = 2.0 / std::numbers::e + 2.0 * (1.0 - 2.0 / std::numbers::e);
  EXPECT_NEAR(generalized_moment(GeneralizedLaplace{1.0, 2.0}, 1.0, 2.0).value, want, 1e-13);
  EXPECT_FALSE(generalized_moment(GeneralizedLaplace{1.0, 2.0}, 1.0, 0.0).is_finite());
}

TEST(GeneralizedMoment, LevyConditionHoldsForEveryFamily) {
  for (const auto& t : sample_triplets()) {
    const auto m = generalized_moment(t.nu, 0.0, 2.0);
    EXPECT_TRUE(m.is_finite()) << t.nu.kind_name();
  }
}

TEST(GeneralizedMoment, GenericDensityWithoutTailIsInconclusive) {
  GenericDensity g;
  g.density = [](double x) { return std::exp(-x * x); };
  EXPECT_THROW(generalized_moment(g, 1.0, 2.0), Inconclusive);
  EXPECT_THROW(pruitt_index(g), Inconclusive);
}

TEST(GeneralizedMoment, GenericPowerTailDivergence) {
  GenericDensity g;
  g.density = [](double x) { return std::pow(std::abs(x), -2.5); };
  g.origin_exponent = 1.5;
  g.tail = PowerLawTail{1.5};
  EXPECT_FALSE(generalized_moment(g, 1.5, 2.0).is_finite());
  EXPECT_FALSE(generalized_moment(g, 0.0, 1.5).is_finite());
  EXPECT_NEAR(generalized_moment(g, 1.0, 2.0).value, 2.0 * (1.0 / 0.5 + 1.0 / 0.5), 1e-8);
}

TEST(Indices, StableBothEqualAlpha) {
  for (double alpha : {0.5, 1.5}) {
    EXPECT_EQ(pruitt_index(StableTail{alpha, 1.0}), alpha);
    EXPECT_EQ(blumenthal_getoor_index(StableTail{alpha, 1.0}), alpha);
  }
}

TEST(Indices, FamilyConventions) {
  EXPECT_EQ(pruitt_index(CompoundPoisson{1.0, GaussianJumps{0.0, 1.0}}), 2.0);
  EXPECT_EQ(pruitt_index(ZeroMeasure{}), 2.0);
  EXPECT_EQ(blumenthal_getoor_index(ZeroMeasure{}), 0.0);
  EXPECT_EQ(blumenthal_getoor_index(CompoundPoisson{3.0, UniformJumps{0.0, 1.0}}), 0.0);
  EXPECT_EQ(blumenthal_getoor_index(GeneralizedLaplace{1.0, 2.0}), 0.0);
  MeasureSum s{{StableTail{0.7, 1.0}, StableTail{1.6, 1.0}}};
  EXPECT_EQ(pruitt_index(s), 0.7);
  EXPECT_EQ(blumenthal_getoor_index(s), 1.6);
}

TEST(Asymmetry, SymmetricMeasureWithoutDriftVanishes) {
  for (double xi : {0.1, 1.0, 30.0})
    EXPECT_EQ(asymmetry_functional({0.0, 0.0, StableTail{1.1, 1.0}}, xi), 0.0);
}

TEST(Asymmetry, PureDrift) { EXPECT_DOUBLE_EQ(asymmetry_functional({2.0, 0.0, ZeroMeasure{}}, 3.0), 6.0); }

TEST(Asymmetry, AtomInsideShiftedBand) {
  const LevyTriplet t{0.0, 0.0, FiniteDiscrete{{{2.0, 1.0}}}};
  EXPECT_DOUBLE_EQ(asymmetry_functional(t, 0.25), 0.5);
  EXPECT_DOUBLE_EQ(asymmetry_functional(t, 1.0), 0.0);
}

TEST(Validation, RejectsMalformedMeasures) {
  EXPECT_THROW(validate(LevyTriplet{0.0, -1.0, ZeroMeasure{}}), InvalidArgument);
  EXPECT_THROW(validate(LevyMeasure(StableTail{2.0, 1.0})), InvalidArgument);
  EXPECT_THROW(validate(LevyMeasure(FiniteDiscrete{{{0.0, 1.0}}})), InvalidArgument);
  EXPECT_THROW(validate(LevyMeasure(CompoundPoisson{1.0, DiscreteJumps{{1.0}, {0.4}}})), InvalidArgument);
  GenericDensity g;
  g.density = [](double) { return 1.0; };
  g.origin_exponent = 2.0;
  EXPECT_THROW(validate(LevyMeasure(g)), InvalidArgument);
}

}  // namespace
}  // namespace levywn
