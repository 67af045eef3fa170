#pragma once

#include <ostream>
#include <string>

#include <gmpxx.h>

#include "polydist/rational.hpp"

namespace polydist {

/// Prime and absolute precision shared by a family of ℓ-adic residues.
struct PadicField {
  unsigned long prime = 2;
  int precision = 1;
  friend bool operator==(const PadicField&, const PadicField&) = default;
};

/// Fixed-precision ℓ-adic number ℓ^{-v}·u, u ∈ ℤ/ℓ^N.
///
/// The residue u is always reduced into [0, ℓ^N). The value is known modulo
/// ℓ^{N-v}: addition aligns to the larger shift, multiplication adds shifts.
/// Precision is absolute and never renormalized, so congruences are stated
/// modulo a fixed power of ℓ.
class PadicScaled {
 public:
  using Context = PadicField;

  PadicScaled() = default;
  PadicScaled(PadicField field, int shift, const mpz_class& unit);

  static PadicScaled from_integer(const PadicField& field, const mpz_class& value);
  static PadicScaled from_rational(const PadicField& field, const Rational& q);

  const PadicField& context() const { return field_; }
  unsigned long prime() const { return field_.prime; }
  int precision() const { return field_.precision; }
  int shift() const { return shift_; }
  const mpz_class& unit() const { return unit_; }
  /// Exponent j such that the value is known modulo ℓ^j.
  int absolute_precision() const { return field_.precision - shift_; }

  bool is_zero() const;
  PadicScaled inverse() const;

  /// True when this − other ≡ 0 mod ℓ^j; j must not exceed either operand's absolute precision.
  bool congruent(const PadicScaled& other, int j) const;
  /// Integral representative modulo ℓ^j; requires shift ≤ 0 after clearing exact ℓ-factors.
  mpz_class residue(int j) const;

  PadicScaled& operator+=(const PadicScaled& other);
  PadicScaled& operator-=(const PadicScaled& other);
  PadicScaled& operator*=(const PadicScaled& other);
  PadicScaled& operator*=(const Rational& scalar);

  friend PadicScaled operator+(PadicScaled a, const PadicScaled& b) { return a += b; }
  friend PadicScaled operator-(PadicScaled a, const PadicScaled& b) { return a -= b; }
  friend PadicScaled operator*(PadicScaled a, const PadicScaled& b) { return a *= b; }
  friend PadicScaled operator*(PadicScaled a, const Rational& s) { return a *= s; }
  PadicScaled operator-() const;

  /// Equality of values at the common absolute precision.
  friend bool operator==(const PadicScaled& a, const PadicScaled& b);

  std::string to_string() const;

 private:
  void check_field(const PadicScaled& other) const;
  mpz_class modulus() const;

  PadicField field_;
  int shift_ = 0;
  mpz_class unit_ = 0;
};

/// ℓ-adic image of a rational: shift = ℓ-valuation deficit of q, residue exact mod ℓ^N.
PadicScaled rational_to_padic(const Rational& q, unsigned long prime, int precision);

/// Inverse of a modulo m (gcd(a, m) = 1), in [0, m).
mpz_class inverse_mod(const mpz_class& a, const mpz_class& m);

inline std::ostream& operator<<(std::ostream& os, const PadicScaled& p) { return os << p.to_string(); }

}  // namespace polydist
