#include <gtest/gtest.h>

#include <random>

#include "polydist/errors.hpp"
#include "polydist/measures.hpp"
#include "polydist/symbolic.hpp"

using namespace polydist;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

FiniteMeasure random_measure(std::mt19937_64& rng, unsigned long ell, int m, Rational offset) {
  FiniteMeasure mu = FiniteMeasure::zero(ell, m, std::move(offset));
  std::uniform_int_distribution<long> d(-50, 50);
  for (std::size_t a = 0; a < mu.cells(); ++a) mu[a] = d(rng);
  return mu;
}

}  // namespace

TEST(Measures, MomentExamples) {
  const FiniteMeasure uniform(3, 1, Rational(0), ints({1, 1, 1}));
  EXPECT_EQ(moment(uniform, 1).residue(1), 0);  // total mass 3
  EXPECT_EQ(moment(uniform, 2).residue(1), 0);
  const FiniteMeasure point(5, 2, Rational(0), [] {
    std::vector<mpz_class> v(25, 0);
    v[2] = 1;
    return v;
  }());
  EXPECT_EQ(moment(point, 3).residue(2), 4);
  EXPECT_EQ(moment(point, 1).residue(2), 1);
  EXPECT_THROW(FiniteMeasure(3, 2, Rational(0), ints({1, 2})), DomainError);
}

TEST(Measures, PushforwardExamples) {
  std::mt19937_64 rng(7);
  const FiniteMeasure mu = random_measure(rng, 3, 2, Rational(0));
  EXPECT_EQ(pushforward_mul(mu, 1), mu);

  // ℓ=3, m=2, o=1/2, n=2: the cell b receives the value at a ≡ (b−1)·2^{-1} mod 9.
  const FiniteMeasure half = random_measure(rng, 3, 2, Rational(1, 2));
  const FiniteMeasure pushed = pushforward_mul(half, 2);
  ASSERT_EQ(pushed.level(), 2);
  for (long b = 0; b < 9; ++b) {
    const long a = (((b - 1) * 5) % 9 + 9) % 9;
    EXPECT_EQ(pushed[static_cast<std::size_t>(b)], half[static_cast<std::size_t>(a)]) << b;
  }

  // ℓ=2, m=3, o=1/2, n=2 drops to level 2; compare with brute-force preimages.
  const FiniteMeasure two = random_measure(rng, 2, 3, Rational(1, 2));
  const FiniteMeasure p2 = pushforward_mul(two, 2);
  ASSERT_EQ(p2.level(), 2);
  for (long b = 0; b < 4; ++b) {
    mpz_class want = 0;
    for (long a = 0; a < 8; ++a) {
      if ((1 + 2 * a) % 4 == b) want += two[static_cast<std::size_t>(a)];
    }
    EXPECT_EQ(p2[static_cast<std::size_t>(b)], want) << b;
  }
  EXPECT_EQ(p2.total_mass(), two.total_mass());
  EXPECT_THROW(pushforward_mul(FiniteMeasure::zero(3, 2, Rational(1, 3)), 2), DomainError);
  EXPECT_THROW(pushforward_mul(FiniteMeasure::zero(2, 1, Rational(0)), 4), DomainError);
}

TEST(Measures, PushforwardAdditiveAndNatural) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteMeasure a = random_measure(rng, 3, 3, Rational(1, 2));
    const FiniteMeasure b = random_measure(rng, 3, 3, Rational(1, 2));
    EXPECT_EQ(pushforward_mul(a + b, 2), pushforward_mul(a, 2) + pushforward_mul(b, 2));
    EXPECT_EQ(pushforward_mul(a.coarsen(2), 2), pushforward_mul(a, 2).coarsen(2));
  }
}

TEST(Measures, MomentOfPushforwardScalesByPower) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteMeasure mu = random_measure(rng, 5, 2, Rational(2, 3));
    const FiniteMeasure pushed = pushforward_mul(mu, 3);
    for (int k = 1; k <= 8; ++k) {
      // Σ_a (3(2/3 + a))^{k−1} μ(a), summed directly.
      Rational want(0);
      for (std::size_t a = 0; a < mu.cells(); ++a) {
        want += Rational(2 + 3 * static_cast<long>(a)).pow(k - 1) * Rational(mu[a]);
      }
      EXPECT_TRUE(moment(pushed, k).congruent(rational_to_padic(want, 5, 2), 2)) << k;
    }
  }
}

TEST(Measures, TranslateChi) {
  const std::vector<Rational> chi{Rational(1), Rational(2), Rational(-3)};
  EXPECT_EQ(translate_chi(chi, Rational(0), 3), chi);
  auto ring = SymbolRing::make({"s", "t", "x1", "x2", "x3", "x4", "x5", "x6"});
  const auto s = SymbolicPoly::symbol(ring, "s");
  const auto t = SymbolicPoly::symbol(ring, "t");
  std::vector<SymbolicPoly> x;
  for (int i = 1; i <= 6; ++i) x.push_back(SymbolicPoly::symbol(ring, "x" + std::to_string(i)));
  EXPECT_EQ(translate_chi(x, s, 2)[1], x[1] + s * x[0]);
  EXPECT_EQ(translate_chi(translate_chi(x, s, 6), t, 6), translate_chi(x, s + t, 6));
  EXPECT_THROW(translate_chi(x, s, 7), DomainError);
}

TEST(Measures, Json) {
  const FiniteMeasure mu(3, 1, Rational(1, 2), ints({4, -1, 7}));
  const auto j = mu.to_json();
  EXPECT_EQ(j.dump(), R"({"ell":3,"m":1,"offset":"1/2","values":[4,-1,7]})");
  EXPECT_EQ(FiniteMeasure::from_json(j), mu);
}

TEST(Thm72, PassesAndNegativeControlFails) {
  Thm72Options o;
  o.trials = 10;
  EXPECT_TRUE(verify_thm72(o).passed());
  o.n = 1;
  EXPECT_TRUE(verify_thm72(o).passed());
  o.n = 2;
  o.corrupt = true;
  const auto bad = verify_thm72(o);
  EXPECT_FALSE(bad.passed());
  EXPECT_NE(bad.failures().front().detail.find("trial 0"), std::string::npos);
}

TEST(Thm72, Deterministic) {
  Thm72Options o;
  o.trials = 5;
  o.seed = 99;
  EXPECT_EQ(verify_thm72(o).to_json(false).dump(), verify_thm72(o).to_json(false).dump());
}

TEST(Bernoulli, Examples) {
  EXPECT_TRUE(bernoulli_congruence_check(9, 5).passed());
  const auto one = bernoulli_congruence_check(9, 1);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.details().at("T"), "0");
  for (long c = 1; c < 16; c += 2) EXPECT_TRUE(bernoulli_congruence_check(8, c).passed()) << c;
  EXPECT_THROW(bernoulli_congruence_check(9, 3), DomainError);
  EXPECT_THROW(bernoulli_congruence_check(9, 4), DomainError);
}
