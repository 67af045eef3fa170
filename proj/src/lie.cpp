#include "polydist/lie.hpp"

namespace polydist {

std::vector<Rational> bernoulli_numbers(std::size_t n) {
  // Σ_{j=0}^{k} C(k+1, j) B_j = 0 for k ≥ 1.
  std::vector<Rational> b{Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    for (std::size_t j = 0; j < k; ++j) acc += binomial(static_cast<long>(k + 1), static_cast<long>(j)) * b[j];
    b.push_back(-acc / Rational(static_cast<long>(k + 1)));
  }
  return b;
}

SymbolicPoly bernoulli_poly(int k, const SymbolicPoly::Context& ring, std::string_view variable) {
  if (k < 0) throw DomainError("Bernoulli polynomial index must be non-negative");
  const auto b = bernoulli_numbers(static_cast<std::size_t>(k));
  const SymbolicPoly t = SymbolicPoly::symbol(ring, variable);
  SymbolicPoly out(ring, Rational(0));
  for (int j = 0; j <= k; ++j) {
    out += t.pow(static_cast<unsigned>(k - j)) * (binomial(k, j) * b[static_cast<std::size_t>(j)]);
  }
  return out;
}

SymbolicPoly bernoulli_poly(int k) { return bernoulli_poly(k, SymbolRing::make({"T"}), "T"); }

Rational bernoulli_poly_value(int k, const Rational& x) {
  const auto b = bernoulli_numbers(static_cast<std::size_t>(k));
  Rational out(0);
  for (int j = 0; j <= k; ++j) out += binomial(k, j) * b[static_cast<std::size_t>(j)] * x.pow(k - j);
  return out;
}

NCSeries<Rational> ad_pow(std::size_t m, std::size_t degree, Alphabet alphabet, std::uint32_t y_index) {
  if (m == 0) throw DomainError("ad_pow index starts at 1");
  if (m > degree) throw DomainError("ad_pow(" + std::to_string(m) + ") exceeds truncation degree " +
                                    std::to_string(degree));
  NCSeries<Rational> out(alphabet, degree);
  const std::size_t e = m - 1;
  for (std::size_t j = 0; j <= e; ++j) {
    std::vector<Letter> letters(e - j, Letter::x());
    letters.push_back(Letter::y(y_index));
    letters.insert(letters.end(), j, Letter::x());
    const Rational c = binomial(static_cast<long>(e), static_cast<long>(j)) * Rational(j % 2 == 0 ? 1 : -1);
    out.add_term(Word(alphabet, std::move(letters)), c);
  }
  return out;
}

}  // namespace polydist
