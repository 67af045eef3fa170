#include <gtest/gtest.h>

#include "polydist/errors.hpp"
#include "polydist/lie.hpp"

using namespace polydist;

namespace {

using Q = NCSeries<Rational>;
using S = NCSeries<SymbolicPoly>;
const Alphabet kL1{1, Flavor::standard};

Q x(std::size_t d) { return Q::letter(kL1, d, Letter::x()); }
Q y(std::size_t d) { return Q::letter(kL1, d, Letter::y(0)); }
Word w1(const char* letters) { return Word::parse_letters(kL1, letters); }

}  // namespace

TEST(Lie, AdPowExamples) {
  EXPECT_EQ(ad_pow(1, 3), y(3));
  EXPECT_EQ(ad_pow(2, 3), x(3) * y(3) - y(3) * x(3));
  EXPECT_EQ(ad_pow(3, 3), x(3) * x(3) * y(3) - x(3) * y(3) * x(3) * Rational(2) + y(3) * x(3) * x(3));
  EXPECT_THROW(ad_pow(4, 3), DomainError);
  // ad(X)^{m}(Y) = [X, ad(X)^{m-1}(Y)]
  for (std::size_t m = 1; m < 7; ++m) {
    const Q prev = ad_pow(m, 7);
    ASSERT_EQ(ad_pow(m + 1, 7), x(7) * prev - prev * x(7));
  }
}

TEST(Lie, BchExamples) {
  EXPECT_EQ(bch(x(4), Q(kL1, 4)), x(4));
  EXPECT_EQ(bch(x(2), y(2)), x(2) + y(2) + (x(2) * y(2) - y(2) * x(2)) * Rational(1, 2));
  EXPECT_THROW(bch(x(3) + Q::one(kL1, 3), y(3)), DomainError);

  auto ring = SymbolRing::make({"alpha", "l1"});
  const auto alpha = SymbolicPoly::symbol(ring, "alpha");
  const auto l1 = SymbolicPoly::symbol(ring, "l1");
  const S sx = lift_series<SymbolicPoly>(x(3), ring) * alpha;
  const S sy = lift_series<SymbolicPoly>(y(3), ring) * l1;
  const S got = bch(sx, sy).modulo(Quotient::iy);
  S want = sx + (lift_series<SymbolicPoly>(ad_pow(1, 3), ring) +
                 lift_series<SymbolicPoly>(ad_pow(2, 3), ring) * (alpha * Rational(1, 2)) +
                 lift_series<SymbolicPoly>(ad_pow(3, 3), ring) * (alpha * alpha * Rational(1, 12))) *
                    l1;
  EXPECT_EQ(got, want.modulo(Quotient::iy));
}

TEST(Lie, BchInverseAndAssociativity) {
  auto ring = SymbolRing::make({"a", "b", "c", "d", "e", "f"});
  auto sym = [&](const char* n) { return SymbolicPoly::symbol(ring, n); };
  const std::size_t d = 6;
  auto lift = [&](const Q& q) { return lift_series<SymbolicPoly>(q.truncated(d), ring); };
  const S A = lift(x(d)) * sym("a") + lift(y(d)) * sym("b");
  const S B = lift(x(d)) * sym("c") + lift(ad_pow(2, d)) * sym("d");
  const S C = lift(y(d)) * sym("e") + lift(ad_pow(3, d)) * sym("f");
  EXPECT_TRUE(bch(A, -A).is_zero());
  EXPECT_EQ(bch(bch(A, B), C), bch(A, bch(B, C)));
}

TEST(Lie, ReduceModIdeals) {
  EXPECT_TRUE(reduce_mod_ideal(x(4) * y(4) * x(4) * y(4), Quotient::iy).is_zero());
  EXPECT_EQ(reduce_mod_ideal(x(4) * y(4) + y(4) * x(4), Quotient::jy), y(4) * x(4));
  EXPECT_EQ(reduce_mod_ideal(x(4) * x(4) * x(4), Quotient::iy), x(4) * x(4) * x(4));
  const Alphabet l2{2, Flavor::standard};
  EXPECT_THROW(reduce_mod_ideal(Q::letter(l2, 3, Letter::x()), Quotient::jy), DomainError);
}

TEST(Lie, PolylogPartExamples) {
  const auto p = polylog_part(x(4) * Rational(3) + ad_pow(2, 4), 4);
  EXPECT_EQ(p.x_coeff, Rational(3));
  ASSERT_EQ(p.depth(), 4U);
  EXPECT_EQ(p.c(1), Rational(0));
  EXPECT_EQ(p.c(2), Rational(1));
  EXPECT_EQ(p.c(3), Rational(0));
  EXPECT_EQ(polylog_part(ad_pow(3, 4) * Rational(5), 4).c(3), Rational(5));
  EXPECT_THROW(polylog_part(x(3) * y(3) + y(3) * x(3), 3), NotLieError);
  // Words with two Y's are invisible modulo I_Y.
  EXPECT_NO_THROW(polylog_part(x(3) + y(3) * y(3), 3));
}

TEST(Lie, PolylogPartRoundTrip) {
  auto ring = SymbolRing::make({"c0", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"});
  for (std::size_t depth = 1; depth <= 8; ++depth) {
    PolylogPart<SymbolicPoly> part{SymbolicPoly::symbol(ring, "c0"), {}};
    for (std::size_t m = 1; m <= depth; ++m) part.y_coeffs.push_back(SymbolicPoly::variable(ring, m));
    const auto back = polylog_part(rebuild_lie(part, depth), depth);
    ASSERT_EQ(back.x_coeff, part.x_coeff);
    ASSERT_EQ(back.y_coeffs, part.y_coeffs);
  }
}

TEST(Lie, MultiYPolylogPart) {
  const Alphabet l3{3, Flavor::tilde};
  Q lam = Q::letter(l3, 4, Letter::x()) * Rational(2) + ad_pow(1, 4, l3, 2) + ad_pow(3, 4, l3, 1) * Rational(7);
  const auto part = multi_polylog_part(lam, 4);
  EXPECT_EQ(part.x_coeff, Rational(2));
  EXPECT_EQ(part.y_coeffs[2][0], Rational(1));
  EXPECT_EQ(part.y_coeffs[1][2], Rational(7));
  EXPECT_EQ(part.y_coeffs[0][0], Rational(0));
}

TEST(Lie, BetaSeries) {
  const auto b = beta_series(8);
  EXPECT_EQ(b[0], Rational(1));
  EXPECT_EQ(b[1], Rational(-1, 2));
  EXPECT_EQ(b[2], Rational(1, 12));
  const auto bn = bernoulli_numbers(8);
  EXPECT_EQ(bn[2], Rational(1, 6));
  EXPECT_EQ(bn[4], Rational(-1, 30));
  EXPECT_EQ(bn[3], Rational(0));
  // (e^t − 1)/t = Σ t^k/(k+1)!
  GenSeries<Rational> g({}, 8);
  for (std::size_t k = 0; k <= 8; ++k) g[k] = factorial(static_cast<long>(k + 1)).inverse();
  EXPECT_EQ(b * g, GenSeries<Rational>::constant({}, 8, Rational(1)));
  EXPECT_EQ(g.reciprocal(), b);
}

TEST(Lie, BernoulliPolynomials) {
  auto ring = SymbolRing::make({"T"});
  const auto t = SymbolicPoly::symbol(ring, "T");
  EXPECT_EQ(bernoulli_poly(2, ring, "T"), t * t - t + SymbolicPoly(ring, Rational(1, 6)));
  EXPECT_EQ(bernoulli_poly_value(2, Rational(1, 2)), Rational(-1, 12));
  for (int k = 1; k <= 8; ++k) {
    const auto bk = bernoulli_poly(k, ring, "T");
    const auto shifted = bk.substitute("T", t + SymbolicPoly(ring, 1));
    ASSERT_EQ(shifted - bk, t.pow(static_cast<unsigned>(k - 1)) * Rational(k));
    ASSERT_EQ(bk.substitute("T", Rational(0)).constant_value(), bernoulli_numbers(8)[static_cast<std::size_t>(k)]);
  }
}

TEST(Lie, GenSeriesOperations) {
  auto ring = SymbolRing::make({"a"});
  const auto a = SymbolicPoly::symbol(ring, "a");
  const auto e = exp_series<SymbolicPoly>(ring, 6, a);
  const auto e_neg = exp_series<SymbolicPoly>(ring, 6, -a);
  EXPECT_EQ(e * e_neg, GenSeries<SymbolicPoly>::constant(ring, 6, SymbolicPoly(ring, 1)));
  const auto b = beta_series<SymbolicPoly>(ring, 6, a);
  EXPECT_EQ(b, lift_gen(beta_series(6), ring).scale_argument(a));
}

TEST(Lie, ApplyToAdMatchesConjugation) {
  // e^{ad X}(Y) = e^X Y e^{−X}
  const std::size_t d = 6;
  GenSeries<Rational> f({}, d);
  for (std::size_t k = 0; k <= d; ++k) f[k] = factorial(static_cast<long>(k)).inverse();
  EXPECT_EQ(apply_to_ad(f, kL1, d), exp_of(x(d)) * y(d) * exp_of(-x(d)));
}

TEST(Lie, StarFormulaModJY) {
  // For g = exp(λ), λ = c X + Σ ℓ_k ad(X)^{k−1}(Y): coeff of YX^{m−1} in log g is
  // −Σ_k (B_k/k!) c^k d_{m−k} where −d_{i+1} is the YX^i coefficient of g.
  const std::size_t dmax = 8;
  std::vector<std::string> names{"c"};
  for (std::size_t k = 1; k <= dmax; ++k) names.push_back("l" + std::to_string(k));
  auto ring = SymbolRing::make(names);
  const auto c = SymbolicPoly::symbol(ring, "c");
  std::vector<std::vector<SymbolicPoly>> ys(1);
  for (std::size_t k = 1; k <= dmax; ++k) ys[0].push_back(SymbolicPoly::variable(ring, k));
  const S lambda = rebuild_lie(c, ys, kL1, dmax, Quotient::none).modulo(Quotient::jy);
  const S g = exp_of(lambda);
  const S logg = log_of(g);
  const auto bern = bernoulli_numbers(dmax);
  std::vector<SymbolicPoly> d(dmax + 1);
  std::vector<Letter> yx{Letter::y(0)};
  for (std::size_t i = 0; i < dmax; ++i) {
    d[i + 1] = -g.coefficient(Word(kL1, yx));
    yx.push_back(Letter::x());
  }
  yx.assign(1, Letter::y(0));
  std::vector<Letter> xs;
  for (std::size_t m = 1; m <= dmax; ++m) {
    xs.push_back(Letter::x());
    ASSERT_EQ(g.coefficient(Word(kL1, xs)), c.pow(static_cast<unsigned>(m)) * factorial(static_cast<long>(m)).inverse());
    SymbolicPoly star(ring, 0);
    for (std::size_t k = 0; k < m; ++k) {
      star -= c.pow(static_cast<unsigned>(k)) * d[m - k] * (bern[k] / factorial(static_cast<long>(k)));
    }
    ASSERT_EQ(logg.coefficient(Word(kL1, yx)), star) << "m=" << m;
    yx.push_back(Letter::x());
  }
}
