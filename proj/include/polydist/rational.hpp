#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polydist {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  /// The field of rationals carries no runtime data; every Rational lives in the same ring.
  struct Context {
    friend bool operator==(const Context&, const Context&) = default;
  };

  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Parses "a", "-a/b" (whitespace not allowed).
  static Rational parse(std::string_view text);

  static Rational from_rational(const Context&, const Rational& q) { return q; }
  Context context() const { return {}; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;
  Rational pow(int exponent) const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  mpq_class value_{0};
};

/// Binomial coefficient C(n, k) as an exact rational (0 outside 0 <= k <= n).
Rational binomial(long n, long k);

/// n! as an exact rational.
Rational factorial(long n);

/// ℓ-adic valuation of a nonzero integer.
int valuation(const mpz_class& value, unsigned long prime);

}  // namespace polydist
