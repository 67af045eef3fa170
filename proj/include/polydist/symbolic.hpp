#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polydist/rational.hpp"

namespace polydist {

/// Ordered registry of commuting symbol names. Symbols are fixed at
/// construction; lookups of unregistered names fail.
class SymbolRing {
 public:
  explicit SymbolRing(std::vector<std::string> names);

  static std::shared_ptr<const SymbolRing> make(std::vector<std::string> names) {
    return std::make_shared<const SymbolRing>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownSymbolError for unregistered names.
  std::size_t index(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Sparse commutative monomial: sorted (symbol index, exponent) pairs with positive exponents.
class Monomial {
 public:
  using Power = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Power> powers);
  static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1);

  const std::vector<Power>& powers() const { return powers_; }
  std::uint32_t degree() const;
  std::uint32_t exponent_of(std::uint32_t index) const;
  bool is_one() const { return powers_.empty(); }
  /// This monomial with the given symbol removed.
  Monomial without(std::uint32_t index) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded order: lower total degree first, then lexicographic on the powers.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<Power> powers_;
};

/// Multivariate polynomial with rational coefficients over a SymbolRing.
///
/// A default-constructed polynomial is the zero constant with no ring bound;
/// unbound constants combine with any ring. Two bound operands must share
/// the same ring, otherwise RingMismatchError is thrown.
class SymbolicPoly {
 public:
  using Context = std::shared_ptr<const SymbolRing>;
  using Terms = std::map<Monomial, Rational>;

  SymbolicPoly() = default;
  SymbolicPoly(Context ring, const Rational& constant);

  static SymbolicPoly symbol(const Context& ring, std::string_view name);
  static SymbolicPoly variable(const Context& ring, std::size_t index);
  static SymbolicPoly from_rational(const Context& ring, const Rational& q) { return {ring, q}; }

  const Context& context() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  /// Only valid when is_constant(); throws DomainError otherwise.
  Rational constant_value() const;
  std::set<std::uint32_t> variables() const;
  std::uint32_t degree_in(std::uint32_t index) const;
  std::uint32_t total_degree() const;
  /// Part of the polynomial multiplying symbol^power exactly, with the symbol removed.
  SymbolicPoly coefficient_in(std::uint32_t index, std::uint32_t power) const;

  /// Only nonzero constants are invertible.
  SymbolicPoly inverse() const;

  SymbolicPoly substitute(std::string_view name, const SymbolicPoly& value) const;
  SymbolicPoly substitute(std::string_view name, const Rational& value) const;
  SymbolicPoly substitute(std::uint32_t index, const SymbolicPoly& value) const;
  /// Ring homomorphism into `target`: symbol i is sent to images[i].
  SymbolicPoly map_to(const Context& target, const std::vector<SymbolicPoly>& images) const;
  /// Evaluates at a full rational assignment (one value per registered symbol).
  Rational evaluate(const std::vector<Rational>& values) const;

  SymbolicPoly& operator+=(const SymbolicPoly& other);
  SymbolicPoly& operator-=(const SymbolicPoly& other);
  SymbolicPoly& operator*=(const SymbolicPoly& other);
  SymbolicPoly& operator*=(const Rational& scalar);
  /// this += other * scalar, in place.
  SymbolicPoly& add_scaled(const SymbolicPoly& other, const Rational& scalar);

  friend SymbolicPoly operator+(SymbolicPoly a, const SymbolicPoly& b) { return a += b; }
  friend SymbolicPoly operator-(SymbolicPoly a, const SymbolicPoly& b) { return a -= b; }
  friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b);
  friend SymbolicPoly operator*(SymbolicPoly a, const Rational& s) { return a *= s; }
  friend SymbolicPoly operator*(const Rational& s, SymbolicPoly a) { return a *= s; }
  SymbolicPoly operator-() const;
  SymbolicPoly pow(unsigned exponent) const;

  friend bool operator==(const SymbolicPoly& a, const SymbolicPoly& b);

  /// Deterministic rendering, highest graded monomial first, e.g. "-1/48*chi^2 + 1/48".
  std::string to_string() const;

 private:
  const Context& joined(const SymbolicPoly& other) const;
  void add_term(const Monomial& m, const Rational& c);

  Context ring_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SymbolicPoly& p) { return os << p.to_string(); }

}  // namespace polydist
