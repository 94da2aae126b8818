#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "levywn/errors.hpp"
#include "levywn/orlicz.hpp"

namespace levywn {
namespace {

TestFunction unit_box(double c = 1.0) { return TestFunction(Indicator{Box{{0.0}, {1.0}}, c}); }

TEST(Modular, IndicatorExamples) {
  EXPECT_DOUBLE_EQ(modular(PhiFunction::rho(2, 2), unit_box()).value, 1.0);
  EXPECT_DOUBLE_EQ(modular(PhiFunction::rho(1, 1), TestFunction(Indicator{Box{{0.0}, {2.0}}, 3.0})).value, 6.0);
  // ρ_{log,2}(3) = 1 + log 3 on a unit box.
  EXPECT_NEAR(modular(PhiFunction::rho_log(2), unit_box(3.0)).value, 1.0 + std::log(3.0), 1e-15);
}

TEST(Modular, PowerLawFiniteIffExponentConditions) {
  const double p0s[] = {0.5, 1.0, 2.0};
  const double pinfs[] = {0.5, 1.0, 2.0};
  for (std::size_t d : {1u, 2u}) {
    const double dd = static_cast<double>(d);
    for (double p0 : p0s) {
      for (double pinf : pinfs) {
        for (int i = 1; i <= 9; ++i) {
          for (int j = 1; j <= 9; ++j) {
            const double alpha = 0.3 * i;
            const double beta = 0.3 * j;
            const TestFunction f = PowerLawFamily{alpha, beta, d};
            const bool finite = alpha < dd / p0 && beta > dd / pinf;
            EXPECT_EQ(modular(PhiFunction::rho(p0, pinf), f).is_finite(), finite)
                << d << " " << p0 << " " << pinf << " " << alpha << " " << beta;
          }
        }
      }
    }
  }
}

TEST(FNorm, CubeRootLaw) {
  for (double c : {0.1, 1.0, 2.0, 8.0, 100.0}) {
    const auto r = f_norm(PhiFunction::rho(2, 2), unit_box(c));
    EXPECT_NEAR(r.value, std::cbrt(c * c), 1e-9 * std::max(1.0, r.value)) << c;
    EXPECT_LE(r.modular_at_value, r.value);
  }
  EXPECT_NEAR(f_norm(PhiFunction::rho(2, 2), unit_box(8.0)).value, 4.0, 1e-10);
}

TEST(FNorm, ClassicalLpScaling) {
  // For ρ_{p,p}: ρ(f/λ) = ‖f‖_p^p / λ^p = λ, so λ^{p+1} = ‖f‖_p^p.
  for (double p : {1.0, 1.5, 2.0}) {
    const TestFunction f = TestFunction(OUKernel{0.7}).scaled(3.0);
    const double lp = modular(PhiFunction::rho(p, p), f).value;
    const double lambda = f_norm(PhiFunction::rho(p, p), f).value;
    EXPECT_NEAR(std::pow(lambda, p + 1.0), lp, 1e-9 * lp);
  }
}

TEST(FNorm, ZeroAndNullSequences) {
  EXPECT_EQ(f_norm(PhiFunction::rho(2, 2), unit_box(0.0)).value, 0.0);
  EXPECT_GT(f_norm(PhiFunction::rho(2, 2), unit_box(1e-6)).value, 0.0);
  for (const auto& rho : {PhiFunction::rho(1, 2), PhiFunction::rho_log(2)}) {
    const TestFunction f = PowerLawFamily{0.4, 3.0, 1};
    double prev_norm = INFINITY;
    double prev_mod = INFINITY;
    for (double k : {1.0, 10.0, 100.0, 1e4, 1e6}) {
      const TestFunction fk = f.scaled(1.0 / k);
      const double n = f_norm(rho, fk).value;
      const double m = modular(rho, fk).value;
      EXPECT_LT(n, prev_norm);
      EXPECT_LT(m, prev_mod);
      prev_norm = n;
      prev_mod = m;
    }
    EXPECT_LT(prev_norm, 1e-2);
    EXPECT_LT(prev_mod, 1e-4);
  }
}

TEST(FNorm, InfiniteModular) {
  EXPECT_THROW(f_norm(PhiFunction::rho(2, 2), TestFunction(PowerLawFamily{0.6, 2.0, 1})), NoFiniteModular);
  EXPECT_THROW(f_norm(PhiFunction::custom([](double x) { return std::abs(x); }, {}), unit_box()),
               PreconditionViolated);
}

TEST(Modular, Solidity) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> shrink(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> fv(12), gv(12);
    for (std::size_t i = 0; i < fv.size(); ++i) {
      fv[i] = u(gen);
      gv[i] = fv[i] * shrink(gen) * (i % 2 ? 1.0 : -1.0);
    }
    const Box box{{0.0, 0.0}, {2.0, 3.0}};
    const TestFunction f = GridSampled{box, {3, 4}, fv};
    const TestFunction g = GridSampled{box, {3, 4}, gv};
    for (const auto& rho : {PhiFunction::rho(1, 2), PhiFunction::rho_log(1), PhiFunction::rho(0.5, 0.5)})
      EXPECT_LE(modular(rho, g).value, modular(rho, f).value * (1 + 1e-15));
  }
}

TEST(Delta2, Examples) {
  const auto grid = log_grid(-6, 6, 1201);
  EXPECT_NEAR(delta2_constant(PhiFunction::rho(2, 2), grid), 4.0, 1e-12);
  EXPECT_NEAR(delta2_constant(PhiFunction::rho(1, 2), grid), 4.0, 1e-12);
  EXPECT_LE(delta2_constant(PhiFunction::rho_log(2), grid), 4.0);
  EXPECT_THROW(delta2_constant(PhiFunction::rho(2, 2), log_grid(-2, 2, 10)), InvalidArgument);
  for (double p0 : {0.0, 0.5, 1.0, 1.5, 2.0})
    for (double pinf : {0.25, 0.5, 1.0, 1.5, 2.0}) {
      const auto rho = PhiFunction::rho(p0, pinf);
      EXPECT_LE(delta2_constant(rho, grid), *rho.delta2_bound() + 1e-9);
    }
}

TEST(Embedding, Examples) {
  const auto grid = log_grid(-6, 6, 241);
  auto e = embedding_holds(PhiFunction::rho(2, 2), PhiFunction::rho(1, 2), grid);
  EXPECT_TRUE(e.holds);
  EXPECT_NEAR(e.constant, 1.0, 1e-12);
  EXPECT_TRUE(embedding_holds(PhiFunction::rho(1, 1), PhiFunction::rho(1, 2), grid).holds);
  e = embedding_holds(PhiFunction::rho(1, 2), PhiFunction::rho(2, 2), grid);
  EXPECT_FALSE(e.holds);
  EXPECT_GT(e.witness, 1e5);
  // The same verdicts without growth data.
  auto opaque = [](const PhiFunction& r) { return PhiFunction::custom([r](double x) { return r(x); }, {}); };
  EXPECT_TRUE(embedding_holds(opaque(PhiFunction::rho(2, 2)), opaque(PhiFunction::rho(1, 2)), grid).holds);
  EXPECT_FALSE(embedding_holds(opaque(PhiFunction::rho(1, 2)), opaque(PhiFunction::rho(2, 2)), grid).holds);
}

TEST(Lp0Zero, Membership) {
  EXPECT_DOUBLE_EQ(lp0_zero_modular(1.0, unit_box(0.5)).value, 1.0);
  EXPECT_DOUBLE_EQ(lp0_zero_modular(1.0, unit_box(3.0)).value, 3.0);
  EXPECT_FALSE(lp0_zero_modular(1.0, TestFunction(OUKernel{1.0})).is_finite());
  EXPECT_FALSE(lp0_zero_modular(2.0, TestFunction(PowerLawFamily{0.1, 5.0, 1})).is_finite());
  EXPECT_TRUE(lp0_zero_modular(2.0, TestFunction(Bump{2})).is_finite());
}

}  // namespace
}  // namespace levywn
