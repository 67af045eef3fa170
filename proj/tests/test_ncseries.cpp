#include <random>

#include <gtest/gtest.h>

#include "polydist/errors.hpp"
#include "polydist/ncseries.hpp"

using namespace polydist;

namespace {

using Q = NCSeries<Rational>;
const Alphabet kL1{1, Flavor::standard};
const Alphabet kL2{2, Flavor::standard};

Q x(std::size_t d, Alphabet a = kL1) { return Q::letter(a, d, Letter::x()); }
Q y(std::size_t d, std::uint32_t i = 0, Alphabet a = kL1) { return Q::letter(a, d, Letter::y(i)); }
Q one(std::size_t d, Alphabet a = kL1) { return Q::one(a, d); }
Word w1(const char* letters) { return Word::parse_letters(kL1, letters); }

Q random_series(std::mt19937_64& rng, Alphabet a, std::size_t d, bool zero_constant) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  Q s(a, d);
  for (const auto& w : all_words(a, d)) {
    if (w.empty() && zero_constant) continue;
    if (num(rng) % 2 == 0) s.add_term(w, Rational(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST(NCSeries, ProductExamples) {
  const Q p = (one(3) + x(3)) * (one(3) + y(3));
  EXPECT_EQ(p, one(3) + x(3) + y(3) + x(3) * y(3));
  const Q geom = one(3) - x(3) + x(3) * x(3) - x(3) * x(3) * x(3);
  EXPECT_EQ((one(3) + x(3)) * geom, one(3));
  EXPECT_FALSE(x(3) * y(3) == y(3) * x(3));
  EXPECT_THROW(x(3) * x(3, kL2), AlphabetMismatchError);
}

TEST(NCSeries, TruncationIsMinDegree) {
  const Q p = x(5) * x(2);
  EXPECT_EQ(p.degree(), 2U);
  EXPECT_EQ(p.coefficient(w1("X.X")), Rational(1));
  EXPECT_THROW(p.coefficient(w1("X.X.X")), DomainError);
}

TEST(NCSeries, ExpLogExamples) {
  const Q e = exp_of(x(3));
  EXPECT_EQ(e, one(3) + x(3) + x(3) * x(3) * Rational(1, 2) + x(3) * x(3) * x(3) * Rational(1, 6));
  EXPECT_EQ(e.coefficient(w1("X.X")), Rational(1, 2));
  EXPECT_EQ(one(3).coefficient(Word(kL1)), Rational(1));
  EXPECT_EQ(log_of(exp_of(y(5))), y(5));
  const Q z = log_of(exp_of(x(2)) * exp_of(y(2)));
  EXPECT_EQ(z, x(2) + y(2) + (x(2) * y(2) - y(2) * x(2)) * Rational(1, 2));
  EXPECT_EQ(log_of(exp_of(x(4)) * exp_of(y(4))).coefficient(w1("Y.X")), Rational(-1, 2));
  EXPECT_THROW(exp_of(one(3)), DomainError);
  EXPECT_THROW(log_of(one(3) * Rational(2)), DomainError);
}

TEST(NCSeries, ExpLogRoundTripFuzz) {
  std::mt19937_64 rng(21);
  for (std::size_t d = 1; d <= 8; ++d) {
    const std::size_t trials = d <= 5 ? 10 : 2;
    for (std::size_t t = 0; t < trials; ++t) {
      const Alphabet a = d <= 5 ? kL2 : kL1;
      const Q s = random_series(rng, a, d, true);
      ASSERT_EQ(log_of(exp_of(s)), s) << "d=" << d;
      const Q g = s + one(d, a);
      ASSERT_EQ(exp_of(log_of(g)), g) << "d=" << d;
    }
  }
}

TEST(NCSeries, QuotientsAreMonomialIdeals) {
  Q s = x(4) * y(4) * x(4) * y(4) + x(4) * x(4) * x(4);
  EXPECT_EQ(s.modulo(Quotient::iy), x(4) * x(4) * x(4));
  EXPECT_EQ((x(4) * y(4) + y(4) * x(4)).modulo(Quotient::jy), y(4) * x(4));
  EXPECT_THROW(Q(kL2, 3, {}, Quotient::jy), DomainError);
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    const Q a = random_series(rng, kL2, 5, false), b = random_series(rng, kL2, 5, false);
    ASSERT_EQ((a * b).modulo(Quotient::iy), a.modulo(Quotient::iy) * b.modulo(Quotient::iy));
  }
}

TEST(NCSeries, MorphismExamples) {
  const std::size_t d = 3;
  const AlgebraMorphism phi(kL2, kL1, d, {x(d) * Rational(2), y(d), y(d)});
  const Q s = Q::monomial(Word::parse("n=2,std:X.Y1"), d, {}, Rational(1));
  EXPECT_EQ(apply_morphism(phi, s), x(d) * y(d) * Rational(2));

  std::mt19937_64 rng(23);
  const Q r = random_series(rng, kL2, 4, false);
  EXPECT_EQ(apply_morphism(AlgebraMorphism::identity(kL2, 4), r), r);

  const Q conj = exp_of(x(2)) * y(2) * exp_of(-x(2));
  const AlgebraMorphism psi(kL2, kL1, 2, {x(2), y(2), conj});
  const Q img = apply_morphism(psi, Q::letter(kL2, 2, Letter::y(1)));
  EXPECT_EQ(img, y(2) + x(2) * y(2) - y(2) * x(2));
  EXPECT_THROW(apply_morphism(psi, x(2)), AlphabetMismatchError);
}

TEST(NCSeries, MorphismIsMultiplicativeAndCommutesWithExp) {
  const std::size_t d = 6;
  const Q conj = exp_of(x(d)) * y(d) * exp_of(-x(d));
  const AlgebraMorphism phi(kL2, kL1, d, {x(d) * Rational(2), y(d), conj});
  std::mt19937_64 rng(24);
  for (int i = 0; i < 3; ++i) {
    const Q a = random_series(rng, kL2, d, false);
    const Q b = random_series(rng, kL2, d, false);
    ASSERT_EQ(apply_morphism(phi, a * b), apply_morphism(phi, a) * apply_morphism(phi, b));
    const Q s = random_series(rng, kL2, d, true);
    ASSERT_EQ(apply_morphism(phi, exp_of(s)), exp_of(apply_morphism(phi, s)));
  }
}

TEST(NCSeries, CompositionOfMorphisms) {
  const std::size_t d = 5;
  const Alphabet l4{4, Flavor::standard};
  std::vector<Q> inner_images{x(d, kL2) * Rational(2)};
  for (std::uint32_t j = 0; j < 4; ++j) inner_images.push_back(y(d, j % 2, kL2) + x(d, kL2) * y(d, j % 2, kL2));
  const AlgebraMorphism inner(l4, kL2, d, inner_images);
  const AlgebraMorphism outer(kL2, kL1, d, {x(d) * Rational(3), y(d), y(d) * x(d) + y(d)});
  const AlgebraMorphism both = compose(outer, inner);
  std::mt19937_64 rng(25);
  const Q s = random_series(rng, l4, 4, false);
  EXPECT_EQ(apply_morphism(both, s), apply_morphism(outer, apply_morphism(inner, s)));
}

TEST(NCSeries, SymbolicCoefficients) {
  auto ring = SymbolRing::make({"a", "b"});
  using S = NCSeries<SymbolicPoly>;
  const auto a = SymbolicPoly::symbol(ring, "a");
  const auto b = SymbolicPoly::symbol(ring, "b");
  const S sx = S::letter(kL1, 3, Letter::x(), ring) * a;
  const S sy = S::letter(kL1, 3, Letter::y(0), ring) * b;
  const S z = log_of(exp_of(sx) * exp_of(sy));
  EXPECT_EQ(z.coefficient(w1("X.Y")), a * b * Rational(1, 2));
  EXPECT_EQ(z.coefficient(w1("X.X.Y")), a * a * b * Rational(1, 12));
}
