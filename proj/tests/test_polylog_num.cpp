#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polydist/errors.hpp"
#include "polydist/polylog_num.hpp"

using namespace polydist;

namespace {

const Alphabet kL1{1, Flavor::standard};
const Alphabet kL2{2, Flavor::standard};

/// Plain partial sum of Σ z^m/m^k with enough terms for |z| ≤ 0.7.
Complex naive_li(int k, Complex z) {
  Complex sum(0, 0);
  Complex p = z;
  for (int m = 1; m < 400; ++m) {
    sum += p / std::pow(static_cast<double>(m), k);
    p *= z;
  }
  return sum;
}

}  // namespace

TEST(LiClassical, Examples) {
  EXPECT_EQ(li_classical(3, {0, 0}), Complex(0, 0));
  EXPECT_NEAR(li_classical(2, {-1, 0}).real(), -std::numbers::pi * std::numbers::pi / 12, 1e-13);
  EXPECT_NEAR(li_classical(2, {0.5, 0}).real(), 0.58224052646501250590, 1e-13);
  EXPECT_NEAR(li_classical(2, {1, 0}).real(), std::numbers::pi * std::numbers::pi / 6, 1e-13);
  EXPECT_NEAR(li_classical(4, {1, 0}).real(), std::pow(std::numbers::pi, 4) / 90, 1e-13);
  EXPECT_THROW(li_classical(1, {1, 0}), DomainError);
  EXPECT_THROW(li_classical(2, {1.1, 0}), DomainError);
}

TEST(LiClassical, BothRegimesAgreeWithPartialSums) {
  for (int k = 1; k <= 5; ++k) {
    for (Complex z : {Complex(0.3, 0.1), Complex(-0.45, 0.2), Complex(0.55, -0.3), Complex(0, 0.7), Complex(-0.69, 0)}) {
      EXPECT_LT(std::abs(li_classical(k, z) - naive_li(k, z)), 1e-13) << k << " " << z;
    }
  }
  // Unit circle: Li_2(e^{iθ}) has real part π²/6 − θ(2π − θ)/4 for 0 ≤ θ ≤ 2π.
  for (double theta : {0.5, 1.0, 2.0, 3.0}) {
    const double want = std::numbers::pi * std::numbers::pi / 6 - theta * (2 * std::numbers::pi - theta) / 4;
    EXPECT_NEAR(li_classical(2, std::polar(1.0, theta)).real(), want, 1e-12) << theta;
  }
}

TEST(MplSeries, Examples) {
  const Word y(kL1, {Letter::y(0)});
  EXPECT_NEAR(std::abs(mpl_series({y, {0.5, 0}}) - Complex(-std::log(2.0), 0)), 0, 1e-14);
  for (int k = 1; k <= 5; ++k) {
    std::vector<Letter> letters{Letter::y(0)};
    letters.insert(letters.end(), static_cast<std::size_t>(k - 1), Letter::x());
    const Complex z(0.2, -0.4);
    EXPECT_LT(std::abs(mpl_series({Word(kL1, letters), z}) + li_classical(k, z)), 1e-13);
  }
  const Word w = Word::parse("n=2,std:Y0.X");
  EXPECT_LT(std::abs(mpl_series({w, {0.4, 0}}) - iterint_quadrature({w, {0.4, 0}}).value), 1e-9);
  EXPECT_THROW(mpl_series({Word::parse("n=1,std:X.Y0"), {0.3, 0}}), DomainError);
  EXPECT_THROW(mpl_series({y, {1.0, 0}}), DomainError);
}

TEST(MplSeries, YOnlyWordsAreDividedPowers) {
  // Li_{Y^k}(z) = log(1 − z)^k / k! at level 1.
  const Complex z(-0.35, 0.25);
  std::vector<Letter> letters;
  double fact = 1;
  for (int k = 1; k <= 4; ++k) {
    letters.push_back(Letter::y(0));
    fact *= k;
    EXPECT_LT(std::abs(mpl_series({Word(kL1, letters), z}) - std::pow(std::log(1.0 - z), k) / fact), 1e-13);
  }
}

TEST(MplSeries, RootOfUnityDecoration) {
  // Li_{Y_1 X}(z) at level 2 is −Li_2(−z).
  const Word w(kL2, {Letter::y(1), Letter::x()});
  const Complex z(0.3, 0.2);
  EXPECT_LT(std::abs(mpl_series({w, z}) + li_classical(2, -z)), 1e-13);
}

TEST(Quadrature, Examples) {
  const Word y(kL1, {Letter::y(0)});
  const auto r = iterint_quadrature({y, {0.5, 0}});
  EXPECT_NEAR(r.value.real(), -std::log(2.0), 1e-8);
  EXPECT_NEAR(r.value.imag(), 0, 1e-8);
  EXPECT_THROW(iterint_quadrature({Word::parse("n=1,std:X.Y0"), {0.3, 0}}), DomainError);
  EXPECT_THROW(iterint_quadrature({y, {1.0, 0}}, 0.05, 1e-3), DomainError);
}

TEST(NumericReports, Calibration) {
  const auto rep = verify_numeric_calibration();
  EXPECT_TRUE(rep.passed()) << rep.to_json().dump(2);
}

TEST(NumericReports, DistributionExamples) {
  const Word yx(kL1, {Letter::y(0), Letter::x()});
  EXPECT_TRUE(verify_numeric_distribution(1, 2, {0.5, 0}, {yx}).passed());
  // Li_2(1/4) = 2(Li_2(1/2) + Li_2(−1/2)), checked here without the engine.
  EXPECT_NEAR(li_classical(2, {0.25, 0}).real(),
              2 * (li_classical(2, {0.5, 0}).real() + li_classical(2, {-0.5, 0}).real()), 1e-13);
  const Word yxx(kL1, {Letter::y(0), Letter::x(), Letter::x()});
  EXPECT_TRUE(verify_numeric_distribution(1, 3, {0.3, 0.2}, {yxx}).passed());
  const auto level2 = verify_numeric_distribution(2, 2, {0.45, -0.2}, default_numeric_words(2));
  EXPECT_TRUE(level2.passed()) << level2.to_json().dump(2);
  EXPECT_GE(level2.checks(), 5U);
}

TEST(NumericReports, IdentityViolationIsDetected) {
  // Dropping one lift breaks the relation well above the tolerance.
  const Word yx(kL1, {Letter::y(0), Letter::x()});
  const Complex z(0.5, 0);
  const Complex lhs = mpl_series({yx, z * z});
  const Complex partial = 2.0 * mpl_series({Word(kL2, {Letter::y(0), Letter::x()}), z});
  EXPECT_GT(std::abs(lhs - partial), 1e-3);
}

TEST(NumericReports, CrossOracle) {
  const auto rep = verify_cross_oracle(20, 5);
  EXPECT_TRUE(rep.passed()) << rep.to_json().dump(2);
  EXPECT_EQ(rep.checks(), 20U);
}

TEST(NumericReports, ResidualTracksTolerance) {
  // Looser series tolerance gives a larger, still bounded, deviation.
  const Word w(kL1, {Letter::y(0), Letter::x(), Letter::x()});
  const Complex z(0.6, 0.1);
  const Complex exact = mpl_series({w, z, 1e-15});
  for (double tol : {1e-4, 1e-7, 1e-10}) {
    const auto r = mpl_series_detail({w, z, tol});
    EXPECT_LE(std::abs(r.value - exact), tol);
    EXPECT_LE(r.error_bound, tol);
  }
}
