#include "polydist/padic.hpp"

#include <algorithm>
#include <sstream>

#include "polydist/errors.hpp"

namespace polydist {

namespace {

mpz_class prime_power(unsigned long prime, int exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), prime, static_cast<unsigned long>(std::max(exponent, 0)));
  return out;
}

mpz_class reduce(const mpz_class& value, const mpz_class& modulus) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw NonInvertibleError(a.get_str() + " is not invertible modulo " + m.get_str());
  }
  return reduce(out, m);
}

PadicScaled::PadicScaled(PadicField field, int shift, const mpz_class& unit) : field_(field), shift_(shift) {
  if (field_.prime < 2 || field_.precision < 1) throw DomainError("invalid ℓ-adic field parameters");
  unit_ = reduce(unit, modulus());
}

mpz_class PadicScaled::modulus() const { return prime_power(field_.prime, field_.precision); }

PadicScaled PadicScaled::from_integer(const PadicField& field, const mpz_class& value) {
  return {field, 0, value};
}

PadicScaled PadicScaled::from_rational(const PadicField& field, const Rational& q) {
  if (q.is_zero()) return {field, 0, 0};
  mpz_class num = q.numerator();
  mpz_class den = q.denominator();
  const int vn = valuation(num, field.prime);
  const int vd = valuation(den, field.prime);
  const int deficit = vd - vn;
  const mpz_class mod = prime_power(field.prime, field.precision);
  if (deficit <= 0) {
    // ℓ-integral: reduce num·den^{-1}; den is an ℓ-unit here.
    return {field, 0, num * inverse_mod(den, mod)};
  }
  // Lowest terms force vn = 0, so ℓ^deficit·q = num / den_unit with den_unit an ℓ-unit.
  mpz_class den_unit;
  mpz_divexact(den_unit.get_mpz_t(), den.get_mpz_t(), prime_power(field.prime, vd).get_mpz_t());
  return {field, deficit, num * inverse_mod(den_unit, mod)};
}

PadicScaled rational_to_padic(const Rational& q, unsigned long prime, int precision) {
  return PadicScaled::from_rational(PadicField{prime, precision}, q);
}

void PadicScaled::check_field(const PadicScaled& other) const {
  if (!(field_ == other.field_)) throw RingMismatchError("ℓ-adic operands differ in prime or precision");
}

bool PadicScaled::is_zero() const { return unit_ == 0; }

PadicScaled PadicScaled::inverse() const {
  if (unit_ == 0 || mpz_divisible_ui_p(unit_.get_mpz_t(), field_.prime) != 0) {
    throw NonInvertibleError("ℓ-adic residue " + to_string() + " is not a unit");
  }
  return {field_, -shift_, inverse_mod(unit_, modulus())};
}

PadicScaled& PadicScaled::operator+=(const PadicScaled& other) {
  check_field(other);
  const int shift = std::max(shift_, other.shift_);
  unit_ = reduce(unit_ * prime_power(field_.prime, shift - shift_) +
                     other.unit_ * prime_power(field_.prime, shift - other.shift_),
                 modulus());
  shift_ = shift;
  return *this;
}

PadicScaled& PadicScaled::operator-=(const PadicScaled& other) { return *this += -other; }

PadicScaled& PadicScaled::operator*=(const PadicScaled& other) {
  check_field(other);
  unit_ = reduce(unit_ * other.unit_, modulus());
  shift_ += other.shift_;
  return *this;
}

PadicScaled& PadicScaled::operator*=(const Rational& scalar) { return *this *= from_rational(field_, scalar); }

PadicScaled PadicScaled::operator-() const { return {field_, shift_, -unit_}; }

bool PadicScaled::congruent(const PadicScaled& other, int j) const {
  check_field(other);
  const PadicScaled diff = *this - other;
  if (j > diff.absolute_precision()) {
    throw DomainError("congruence modulo ℓ^" + std::to_string(j) + " exceeds the available precision ℓ^" +
                      std::to_string(diff.absolute_precision()));
  }
  const int needed = j + diff.shift_;
  if (needed <= 0) return true;
  return mpz_divisible_p(diff.unit_.get_mpz_t(), prime_power(field_.prime, needed).get_mpz_t()) != 0;
}

mpz_class PadicScaled::residue(int j) const {
  if (j > absolute_precision()) throw DomainError("residue requested beyond the available precision");
  const mpz_class target = prime_power(field_.prime, j);
  if (shift_ <= 0) return reduce(unit_ * prime_power(field_.prime, -shift_), target);
  const mpz_class scale = prime_power(field_.prime, shift_);
  if (mpz_divisible_p(unit_.get_mpz_t(), scale.get_mpz_t()) == 0) {
    throw DomainError("ℓ-adic value " + to_string() + " is not integral");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), unit_.get_mpz_t(), scale.get_mpz_t());
  return reduce(q, target);
}

bool operator==(const PadicScaled& a, const PadicScaled& b) {
  a.check_field(b);
  const int j = std::min(a.absolute_precision(), b.absolute_precision());
  return a.congruent(b, j);
}

std::string PadicScaled::to_string() const {
  std::ostringstream os;
  if (shift_ != 0) os << field_.prime << "^" << -shift_ << "*";
  os << unit_.get_str() << " (mod " << field_.prime << "^" << field_.precision << ")";
  return os.str();
}

}  // namespace polydist
