#include <gtest/gtest.h>

#include <cmath>

#include "levywn/domain.hpp"
#include "levywn/errors.hpp"

namespace levywn {
namespace {

using Kind = DomainDescriptor::Kind;

const LevyTriplet kGauss{0.0, 1.0, ZeroMeasure{}};
const LevyTriplet kDrift{1.0, 0.0, ZeroMeasure{}};
const LevyTriplet kDriftGauss{0.5, 2.0, ZeroMeasure{}};
const LevyTriplet kLaplace{0.0, 0.0, GeneralizedLaplace{1.0, 2.0}};
const LevyTriplet kPoisson{0.0, 0.0, CompoundPoisson{1.0, GaussianJumps{0.0, 1.0}}};

LevyTriplet stable(double alpha) { return {0.0, 0.0, StableTail{alpha, 1.0}}; }

TEST(Classify, TableRows) {
  for (double p : {0.0, 0.7, 2.0}) {
    EXPECT_EQ(classify_domain(kGauss, p).kind, Kind::L2);
    EXPECT_EQ(classify_domain(kDrift, p).kind, Kind::L1);
    EXPECT_EQ(classify_domain(kDriftGauss, p).kind, Kind::L1capL2);
    EXPECT_EQ(classify_domain(kPoisson, p), DomainDescriptor::lp(p, 2.0));
  }
  EXPECT_EQ(classify_domain(kLaplace, 0.0).kind, Kind::LlogPinf);
  EXPECT_EQ(classify_domain(kLaplace, 0.0).pinf, 2.0);
  EXPECT_EQ(classify_domain(kLaplace, 1.0), DomainDescriptor::lp(1.0, 2.0));
  EXPECT_EQ(classify_domain(stable(1.5), 0.5), DomainDescriptor::lp(1.5, 1.5));
  EXPECT_EQ(classify_domain(stable(1.5), 0.5).kind, Kind::Lalpha);
  EXPECT_EQ(classify_domain(stable(1.5), 1.7).kind, Kind::Trivial);
  EXPECT_EQ(classify_domain(stable(1.5), 1.5).kind, Kind::Trivial);
  EXPECT_EQ(classify_domain({0.0, 0.0, ZeroMeasure{}}, 1.0).kind, Kind::All);
}

TEST(Classify, IntersectionsAndUnknown) {
  // Gaussian part on top of a stable noise: L^2 ∩ L^α.
  EXPECT_EQ(classify_domain({0.0, 1.0, StableTail{1.0, 1.0}}, 0.0), DomainDescriptor::lp(2.0, 1.0));
  // Drift on Laplace: L^1 ∩ L^{log,2} = L^{1,1}.
  EXPECT_EQ(classify_domain({1.0, 0.0, GeneralizedLaplace{1.0, 1.0}}, 0.0), DomainDescriptor::lp(1.0, 1.0));
  // A Gaussian part dominates the logarithmic large side of Laplace.
  EXPECT_EQ(classify_domain({0.0, 1.0, GeneralizedLaplace{1.0, 1.0}}, 0.0).kind, Kind::L2);
  EXPECT_EQ(classify_domain({0.0, 0.0, CompoundPoisson{1.0, GaussianJumps{1.0, 1.0}}}, 0.0).kind, Kind::Unknown);
  const LevyMeasure sum = add(StableTail{0.8, 1.0}, GeneralizedLaplace{1.0, 1.0});
  EXPECT_EQ(classify_domain({0.0, 0.0, sum}, 0.0), DomainDescriptor::lp(0.8, 0.8));
  EXPECT_THROW(classify_domain(kGauss, 2.5), InvalidArgument);
}

TEST(Membership, SpecExamples) {
  const TestFunction box1 = Indicator{Box{{0.0}, {1.0}}};
  const TestFunction box2 = Indicator{Box{{0.0, 0.0}, {1.0, 1.0}}};
  for (const auto& t : {kGauss, kDrift, kLaplace, kPoisson, stable(0.5), LevyTriplet{0.3, 0.2, CompoundPoisson{1.0, UniformJumps{0.0, 2.0}}}}) {
    EXPECT_EQ(is_member(t, 0.0, box1).status, MembershipStatus::Member);
    EXPECT_EQ(is_member(t, 0.0, box2).status, MembershipStatus::Member);
  }
  const auto g = is_member(kGauss, 0.0, TestFunction(PowerLawFamily{0.5, 1.0, 1}));
  EXPECT_EQ(g.status, MembershipStatus::NotMember);
  EXPECT_FALSE(g.reason.empty());
  EXPECT_EQ(is_member(stable(1.0), 0.0, TestFunction(PowerLawFamily{0.5, 2.0, 1})).status, MembershipStatus::Member);
  EXPECT_EQ(is_member(kGauss, 0.0, TestFunction(PowerLawFamily{0.4, 2.0, 1})).status, MembershipStatus::Member);
}

TEST(Membership, InvalidInputIsInconclusive) {
  const auto v = is_member(kGauss, 3.0, TestFunction(Indicator{Box{{0.0}, {1.0}}}));
  EXPECT_EQ(v.status, MembershipStatus::Inconclusive);
}

TEST(Membership, NumericMatchesClosedFormOverPowerLawGrid) {
  const std::vector<LevyTriplet> rows{kGauss, kDriftGauss, stable(0.5), stable(1.0), stable(1.5), kLaplace, kPoisson};
  int compared = 0;
  for (const auto& t : rows) {
    for (double p : {0.0, 0.25}) {
      for (std::size_t d : {1u, 2u}) {
        for (int i = 1; i <= 8; ++i) {
          for (int j = 1; j <= 8; ++j) {
            const TestFunction f = PowerLawFamily{0.25 * i, 0.25 * j + 0.1, d};
            const auto closed = is_member_closed_form(t, p, f);
            ASSERT_TRUE(closed);
            const auto numeric = is_member_numeric(t, p, f);
            ASSERT_NE(numeric.status, MembershipStatus::Inconclusive)
                << t.nu.kind_name() << " p=" << p << " d=" << d << " " << i << "," << j << numeric.reason;
            EXPECT_EQ(closed->status, numeric.status)
                << t.nu.kind_name() << " p=" << p << " d=" << d << " " << 0.25 * i << "," << 0.25 * j + 0.1
                << ": " << closed->reason << " | " << numeric.reason;
            ++compared;
          }
        }
      }
    }
  }
  EXPECT_GT(compared, 1000);
}

TEST(Membership, OUAndIndicatorPaths) {
  const TestFunction ou = OUKernel{1.5};
  for (const auto& t : {kGauss, kDriftGauss, stable(1.2), kLaplace, kPoisson}) {
    const auto closed = is_member_closed_form(t, 0.0, ou);
    ASSERT_TRUE(closed);
    EXPECT_EQ(closed->status, MembershipStatus::Member);
    const auto numeric = is_member_numeric(t, 0.0, ou);
    EXPECT_EQ(numeric.status, MembershipStatus::Member) << numeric.reason;
    ASSERT_TRUE(numeric.modular_value);
  }
  // Gaussian: ∫ σ² e^{-2θu} du = σ²/(2θ).
  EXPECT_NEAR(*is_member_numeric(kGauss, 0.0, ou).modular_value, 1.0 / 3.0, 1e-10);
}

TEST(Membership, AffineInvariance) {
  const std::vector<TestFunction> fs{
      TestFunction(PowerLawFamily{0.3, 1.2, 1}), TestFunction(PowerLawFamily{0.6, 0.8, 1}),
      TestFunction(OUKernel{1.0}), TestFunction(Indicator{Box{{0.0}, {2.0}}, 3.0}),
      TestFunction(MollifiedIndicator{Box{{0.0}, {1.0}}, 4.0})};
  for (const auto& t : {kGauss, stable(1.2), kLaplace, kPoisson}) {
    for (const auto& f : fs) {
      const auto base = is_member_numeric(t, 0.0, f).status;
      ASSERT_NE(base, MembershipStatus::Inconclusive);
      for (const auto& g : {f.shifted({2.5}), f.dilated(-3.0), f.dilated(0.1), f.scaled(-7.0), f.scaled(1e-3)}) {
        EXPECT_EQ(is_member_numeric(t, 0.0, g).status, base) << t.nu.kind_name() << " " << f.kind_name();
        EXPECT_EQ(is_member(t, 0.0, g).status, base);
      }
    }
  }
}

TEST(Membership, MonotoneInOrder) {
  for (const auto& t : {kLaplace, kPoisson, stable(1.6)}) {
    for (int i = 1; i <= 8; ++i) {
      for (int j = 1; j <= 8; ++j) {
        const TestFunction f = PowerLawFamily{0.25 * i, 0.25 * j + 0.1, 1};
        if (is_member(t, 1.5, f).status == MembershipStatus::Member)
          EXPECT_EQ(is_member(t, 0.5, f).status, MembershipStatus::Member);
      }
    }
  }
}

TEST(Membership, UniversalInclusion) {
  for (double p : {0.0, 0.5, 1.0}) {
    const auto [inner, outer] = universal_bounds(p);
    for (const auto& t : {kGauss, kLaplace, kPoisson, LevyTriplet{0.0, 0.0, CompoundPoisson{2.0, TwoPoint{1.5, 0.5}}}}) {
      for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
          const TestFunction f = PowerLawFamily{0.3 * i, 0.3 * j + 0.05, 1};
          const auto v = is_member(t, p, f).status;
          if (descriptor_modular(inner, f).is_finite()) {
            EXPECT_EQ(v, MembershipStatus::Member);
          }
          if (v == MembershipStatus::Member) {
            EXPECT_TRUE(descriptor_modular(outer, f).is_finite());
          }
        }
      }
    }
  }
}

TEST(UniversalBounds, Examples) {
  auto b = universal_bounds(0.0);
  EXPECT_EQ(b.first, DomainDescriptor::lp(2.0, 0.0));
  EXPECT_EQ(b.second, DomainDescriptor::lp(0.0, 2.0));
  b = universal_bounds(2.0);
  EXPECT_EQ(b.first.kind, Kind::L2);
  EXPECT_EQ(b.second.kind, Kind::L2);
  b = universal_bounds(1.0);
  EXPECT_EQ(b.first, DomainDescriptor::lp(2.0, 1.0));
  EXPECT_EQ(b.second, DomainDescriptor::lp(1.0, 2.0));
}

TEST(Reduction, Examples) {
  auto r = reduction_split({0.0, 1.0, StableTail{1.0, 1.0}}, 0.0);
  EXPECT_TRUE(r.gaussian_condition);
  EXPECT_TRUE(r.asymmetry_trivial);
  EXPECT_EQ(classify_domain(r.symmetric_core, 0.0).kind, Kind::L1);

  r = reduction_split(kDrift, 0.0);
  EXPECT_FALSE(r.gaussian_condition);
  EXPECT_FALSE(r.asymmetry_trivial);
  const TestFunction f = TestFunction(OUKernel{2.0}).scaled(3.0);
  EXPECT_NEAR(asymmetry_modular(kDrift, f).value, 1.5, 1e-10);
  EXPECT_FALSE(asymmetry_modular(kDrift, TestFunction(PowerLawFamily{0.5, 0.9, 1})).is_finite());
}

TEST(Reduction, AgreesWithDirectVerdict) {
  const std::vector<LevyTriplet> ts{{0.0, 1.0, StableTail{1.0, 1.0}}, {2.0, 0.0, GeneralizedLaplace{1.0, 2.0}},
                                    {1.0, 1.0, ZeroMeasure{}}, {0.0, 0.5, CompoundPoisson{1.0, TwoPoint{1.0, 0.5}}}};
  for (const auto& t : ts) {
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        const TestFunction f = PowerLawFamily{0.3 * i, 0.3 * j + 0.05, 1};
        EXPECT_EQ(is_member_by_reduction(t, 0.0, f).status, is_member(t, 0.0, f).status);
      }
    }
  }
}

TEST(Reduction, AsymmetricNoiseKeepsThreeConditions) {
  const LevyTriplet t{0.3, 0.0, CompoundPoisson{1.0, GaussianJumps{1.0, 1.0}}};
  const auto v = is_member_by_reduction(t, 0.0, TestFunction(Indicator{Box{{0.0}, {1.0}}, 2.0}));
  EXPECT_EQ(v.status, MembershipStatus::Member);
  const auto w = is_member_by_reduction(t, 0.0, TestFunction(PowerLawFamily{0.3, 2.0, 1}));
  EXPECT_EQ(w.status, MembershipStatus::Inconclusive);
}

}  // namespace
}  // namespace levywn
