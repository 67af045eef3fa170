#include "polydist/geometry.hpp"

#include "polydist/errors.hpp"

namespace polydist {

namespace {

using Q = NCSeries<Rational>;

Q conjugate_by_exp(const Q& y, const Q& x, const Rational& k) {
  if (k.is_zero()) return y;
  return exp_of(x * k) * y * exp_of(x * (-k));
}

}  // namespace

std::string PathLabel::to_string() const {
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty()) out += "·";
    out += a;
  }
  return out.empty() ? "γ" : out;
}

AlgebraMorphism pi_morphism(std::uint32_t r, std::uint32_t n, Flavor flavor, std::size_t degree) {
  if (r == 0 || n == 0) throw DomainError("pi_morphism needs r, n ≥ 1");
  const Alphabet source{r * n, flavor};
  const Alphabet target{r, flavor};
  const Q x = Q::letter(target, degree, Letter::x());
  std::vector<Q> images{x * Rational(static_cast<long>(n))};
  for (std::uint32_t j = 0; j < r * n; ++j) {
    const std::uint32_t i = j % r;
    const Q y = Q::letter(target, degree, Letter::y(i));
    if (flavor == Flavor::tilde) {
      images.push_back(y);
    } else {
      images.push_back(conjugate_by_exp(y, x, Rational(static_cast<long>(j / r))));
    }
  }
  return {source, target, degree, std::move(images)};
}

AlgebraMorphism j_zeta_morphism(std::uint32_t n, std::uint32_t s, Flavor flavor, std::size_t degree) {
  if (n == 0 || s >= n) throw DomainError("j_zeta_morphism needs 0 ≤ s < n");
  const Alphabet source{n, flavor};
  const Alphabet target{1, flavor};
  const Q x = Q::letter(target, degree, Letter::x());
  const Q y = Q::letter(target, degree, Letter::y(0));
  std::vector<Q> images{x};
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i != s) {
      images.emplace_back(target, degree);
    } else if (flavor == Flavor::tilde || s == 0) {
      images.push_back(y);
    } else {
      images.push_back(conjugate_by_exp(y, x, Rational(1)));
    }
  }
  return {source, target, degree, std::move(images)};
}

PathLabel j_zeta_path(std::uint32_t n, std::uint32_t s, Flavor flavor) {
  const std::string zeta = "ζ=e^(-2πi·" + std::to_string(s) + "/" + std::to_string(n) + ")";
  const std::string conj = flavor == Flavor::tilde ? "ε" : "δ";
  return PathLabel{{conj + "[" + zeta + "]", "j[" + zeta + "](γ)"}};
}

PathLabel pi_path(std::uint32_t r, std::uint32_t n) {
  return PathLabel{{"π[" + std::to_string(r * n) + "→" + std::to_string(r) + "](γ)"}};
}

NCSeries<SymbolicPoly> galois_twist_delta(std::uint32_t s, std::uint32_t n, Flavor flavor,
                                          const SymbolicPoly::Context& ring, std::size_t degree,
                                          std::string_view chi_symbol) {
  if (n == 0 || s >= n) throw DomainError("galois_twist_delta needs 0 ≤ s < n");
  const Alphabet level1{1, flavor};
  NCSeries<SymbolicPoly> out(level1, degree, ring);
  if (flavor == Flavor::tilde || s == 0) return out;
  const SymbolicPoly chi = SymbolicPoly::symbol(ring, chi_symbol);
  const SymbolicPoly coeff = (chi - SymbolicPoly(ring, 1)) * Rational(static_cast<long>(s), static_cast<long>(n));
  out.add_term(Word(level1, {Letter::x()}), coeff);
  return out;
}

}  // namespace polydist
