#include "polydist/rational.hpp"

#include <utility>

#include "polydist/errors.hpp"

namespace polydist {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw NonInvertibleError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw NonInvertibleError("rational with zero denominator");
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw NonInvertibleError("inverse of rational zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw NonInvertibleError("division by rational zero");
  value_ /= other.value_;
  return *this;
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

int valuation(const mpz_class& value, unsigned long prime) {
  if (value == 0) throw DomainError("valuation of zero");
  mpz_class v = value;
  int count = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), prime) != 0) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), prime);
    ++count;
  }
  return count;
}

}  // namespace polydist
