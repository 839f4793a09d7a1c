#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tropdegen;
using namespace tropdegen::testing;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Closed form for f = z1 + z2 on the polycircle: the two terms have moduli
// e^{-1/rho} and e^{-sqrt2/rho}, maximal when aligned.
double two_term_closed_form(double rho) { return std::exp(-1.0) * std::pow(1.0 + std::exp(-(kSqrt2 - 1.0) / rho), rho); }

ComplexLaurentPoly z1_plus_z2() { return poly2({{{1, 0}, 1.0}, {{0, 1}, 1.0}}); }

}  // namespace

TEST(MonomialValuation, RejectsNonPositiveWeights) {
  EXPECT_THROW(MonomialValuation({1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(MonomialValuation({-1.0}), std::invalid_argument);
  EXPECT_THROW(MonomialValuation({std::nan("")}), std::invalid_argument);
}

TEST(MonomialValue, Examples) {
  const MonomialValuation a({1.0, kSqrt2});
  EXPECT_NEAR(monomial_value(a, poly2({{{3, 0}, 1.0}, {{0, 2}, 5.0}})), 2 * kSqrt2, 1e-15);
  EXPECT_EQ(monomial_value(a, ComplexLaurentPoly::constant(2, 7.0)), 0.0);
  EXPECT_EQ(monomial_value(MonomialValuation({1, 1}), poly2({{{1, 1}, 1.0}, {{2, 0}, 1.0}})), 2.0);
}

TEST(MonomialValue, ZeroIsInfinite) {
  EXPECT_EQ(monomial_value(MonomialValuation({1, 1}), ComplexLaurentPoly(2)), std::numeric_limits<double>::infinity());
}

TEST(MonomialValue, NegativeExponentThrows) {
  EXPECT_THROW(monomial_value(MonomialValuation({1, 1}), ComplexLaurentPoly::monomial({1, -1})), std::domain_error);
}

TEST(SectionPoint, Validates) {
  EXPECT_THROW(SectionPoint({1.0, 1.0}, 1.5), std::invalid_argument);
  EXPECT_THROW(SectionPoint({1.0, 1.0}, -0.1), std::invalid_argument);
  EXPECT_THROW(SectionPoint({1.0, 0.0}, 0.5), std::invalid_argument);
}

TEST(HybridSeminorm, Examples) {
  EXPECT_NEAR(hybrid_seminorm(SectionPoint({1.0, 1.0}, 1.0), line_poly()), 3.0, 1e-15);
  EXPECT_EQ(hybrid_seminorm(SectionPoint({1.0, 1.0}, 0.0), line_poly()), 1.0);
  for (double rho : {1.0, 0.5, 0.1}) {
    // |f(eta)| is rounding noise of order 1e-16, raised to the power rho.
    EXPECT_LT(hybrid_seminorm(SectionPoint({omega(), omega() * omega()}, rho), line_poly()), std::pow(1e-15, rho));
  }
}

TEST(HybridSeminorm, TrivialBranchIsExact) {
  // f(eta) is a tiny but nonzero number; rho = 0 still gives exactly 1.
  const auto f = poly2({{{1, 0}, 1.0}, {{0, 0}, -1.0}});
  EXPECT_EQ(hybrid_seminorm(SectionPoint({Complex(1.0 + 1e-15, 0.0), 1.0}, 0.0), f), 1.0);
  EXPECT_EQ(hybrid_seminorm(SectionPoint({1.0, 1.0}, 0.0), f), 0.0);
}

TEST(HybridBaseNorm, Examples) {
  EXPECT_EQ(hybrid_base_norm(0.5), 1.0);
  EXPECT_EQ(hybrid_base_norm(3.0), 3.0);
  EXPECT_EQ(hybrid_base_norm(0.0), 0.0);
}

TEST(LambdaOf, Examples) {
  EXPECT_EQ(lambda_of(SectionPoint({1.0, 2.0}, 0.25)), 0.25);
  EXPECT_EQ(lambda_of(MonomialPoint{MonomialValuation({1.0, kSqrt2})}), 0.0);
}

TEST(LambdaOf, LogSeminormOfE) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int i = 0; i < 100; ++i) {
    const SectionPoint p({std::polar(u(rng) * 3, u(rng)), std::polar(u(rng), -u(rng))}, u(rng));
    EXPECT_NEAR(std::log(hybrid_seminorm(p, ComplexLaurentPoly::constant(2, std::exp(1.0)))), lambda_of(p), 1e-14);
  }
}

TEST(PolycircleSup, TwoTermsMatchesClosedForm) {
  const MonomialValuation a({1.0, kSqrt2});
  EXPECT_NEAR(polycircle_sup(z1_plus_z2(), a, 0.05), two_term_closed_form(0.05), 1e-3);
  for (double rho : {0.2, 0.1, 0.05, 0.02}) {
    EXPECT_NEAR(polycircle_sup(z1_plus_z2(), a, rho), two_term_closed_form(rho), 1e-6) << rho;
  }
}

TEST(PolycircleSup, Constant) {
  for (double rho : {1.0, 0.3, 0.01}) {
    EXPECT_NEAR(polycircle_sup(ComplexLaurentPoly::constant(2, Complex(0, 4)), MonomialValuation({1, 2}), rho),
                std::pow(4.0, rho), 1e-14);
  }
}

TEST(PolycircleSup, SingleMonomial) {
  EXPECT_NEAR(polycircle_sup(ComplexLaurentPoly::monomial({1, 1}), MonomialValuation({1, 1}), 0.1), std::exp(-2.0),
              1e-15);
}

TEST(PolycircleSup, ThreeVariables) {
  const ComplexLaurentPoly f(3, {{{1, 0, 0}, 1.0}, {{0, 0, 1}, 1.0}});
  EXPECT_NEAR(polycircle_sup(f, MonomialValuation({1, 2, 3}), 0.05, 16), std::exp(-1.0), 1e-3);
}

TEST(PolycircleSup, UnderflowGuard) {
  EXPECT_THROW(polycircle_sup(z1_plus_z2(), MonomialValuation({1.0, kSqrt2}), 0.001), std::domain_error);
}

TEST(PolycircleSup, RejectsBadInput) {
  EXPECT_THROW(polycircle_sup(z1_plus_z2(), MonomialValuation({1.0, kSqrt2}), 0.0), std::invalid_argument);
  EXPECT_THROW(polycircle_sup(ComplexLaurentPoly::monomial({-1, 0}), MonomialValuation({1, 1}), 0.1),
               std::domain_error);
}

TEST(PolycircleSup, Deterministic) {
  const auto f = poly2({{{1, 0}, 2.0}, {{0, 1}, -1.0}, {{1, 1}, 3.0}});
  const MonomialValuation a({1.0, kSqrt2});
  EXPECT_EQ(polycircle_sup(f, a, 0.1, 32, 5), polycircle_sup(f, a, 0.1, 32, 5));
}

TEST(PolycircleReport, TwoTermsConverges) {
  const auto r = polycircle_limit_report(z1_plus_z2(), MonomialValuation({1.0, kSqrt2}), {0.2, 0.1, 0.05, 0.02});
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_LE(r.rows.back().abs_error, 0.01);
  EXPECT_TRUE(r.errors_non_increasing());
  for (const auto& row : r.rows) EXPECT_NEAR(row.target, std::exp(-1.0), 1e-15);
}

TEST(PolycircleReport, ConstantDominates) {
  const auto f = poly2({{{0, 0}, 3.0}, {{1, 0}, 1.0}});
  const auto r = polycircle_limit_report(f, MonomialValuation({1.0, kSqrt2}), {0.2, 0.1, 0.05, 0.02});
  for (const auto& row : r.rows) {
    EXPECT_NEAR(row.sup, std::pow(3.0 + std::exp(-1.0 / row.rho), row.rho), 1e-9);
    EXPECT_EQ(row.target, 1.0);
  }
  EXPECT_TRUE(r.errors_non_increasing());
}

TEST(PolycircleReport, MonomialHasZeroError) {
  const auto r = polycircle_limit_report(ComplexLaurentPoly::monomial({2, 1}), MonomialValuation({1.0, kSqrt2}),
                                         {0.2, 0.1, 0.05});
  for (const auto& row : r.rows) EXPECT_LE(row.abs_error, 1e-15);
}

TEST(PolycircleReport, RhoListMustDecrease) {
  EXPECT_THROW(polycircle_limit_report(z1_plus_z2(), MonomialValuation({1, 1}), {0.1, 0.2}), std::invalid_argument);
  EXPECT_THROW(polycircle_limit_report(z1_plus_z2(), MonomialValuation({1, 1}), {0.1, -0.2}), std::invalid_argument);
}

TEST(PolycircleReport, MonotonicityCheck) {
  PolycircleReport r;
  r.rows = {{0.2, 0, 0, 0.5}, {0.1, 0, 0, 0.1}, {0.05, 0, 0, 0.105}, {0.02, 0, 0, 0.2}};
  EXPECT_FALSE(r.errors_non_increasing());
  r.rows.pop_back();
  EXPECT_TRUE(r.errors_non_increasing());
}

TEST(HybridProperties, ValuationIsMultiplicative) {
  std::mt19937_64 rng(43);
  const MonomialValuation a({1.0, kSqrt2});
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(rng, 4, 3);
    const auto g = random_poly(rng, 4, 3);
    EXPECT_NEAR(monomial_value(a, multiply(f, g)), monomial_value(a, f) + monomial_value(a, g), 1e-9);
  }
}

TEST(HybridProperties, ValuationIsUltrametric) {
  std::mt19937_64 rng(47);
  const MonomialValuation a({1.0, kSqrt2});
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(rng, 4, 3);
    const auto g = random_poly(rng, 4, 3);
    const auto s = f + g;
    if (s.is_zero()) continue;
    EXPECT_GE(monomial_value(a, s), std::min(monomial_value(a, f), monomial_value(a, g)) - 1e-9);
  }
}

TEST(HybridProperties, SeminormIsMultiplicative) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(rng, 4, 3);
    const auto g = random_poly(rng, 4, 3);
    const std::vector<Complex> eta{std::polar(u(rng), u(rng)), std::polar(u(rng), -u(rng))};
    for (double rho : {1.0, 0.4, 0.05}) {
      const SectionPoint p(eta, rho);
      const double lhs = hybrid_seminorm(p, multiply(f, g));
      const double rhs = hybrid_seminorm(p, f) * hybrid_seminorm(p, g);
      EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, rhs));
    }
    const SectionPoint p0(eta, 0.0);
    EXPECT_EQ(hybrid_seminorm(p0, multiply(f, g)), hybrid_seminorm(p0, f) * hybrid_seminorm(p0, g));
  }
}
