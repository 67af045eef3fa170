#pragma once

#include <concepts>

#include "polydist/padic.hpp"
#include "polydist/rational.hpp"
#include "polydist/symbolic.hpp"

namespace polydist {

/// Commutative coefficient ring usable by NCSeries and GenSeries. Each ring
/// carries a runtime Context (symbol registry, ℓ-adic field, or nothing) and
/// can embed rationals.
template <class R>
concept CoefficientRing = requires(R a, const R& b, const Rational& q, const typename R::Context& ctx) {
  { R::from_rational(ctx, q) } -> std::same_as<R>;
  { b.context() };
  { b.is_zero() } -> std::convertible_to<bool>;
  { a += b };
  { a -= b };
  { b * b } -> std::convertible_to<R>;
  { b * q } -> std::convertible_to<R>;
  { -b } -> std::convertible_to<R>;
  { b == b } -> std::convertible_to<bool>;
};

template <CoefficientRing R>
void add_scaled(R& acc, const R& value, const Rational& scalar) {
  acc += value * scalar;
}

inline void add_scaled(SymbolicPoly& acc, const SymbolicPoly& value, const Rational& scalar) {
  acc.add_scaled(value, scalar);
}

inline void add_scaled(Rational& acc, const Rational& value, const Rational& scalar) {
  if (!scalar.is_zero()) acc += value * scalar;
}

template <CoefficientRing R>
std::string ring_to_string(const R& value) {
  return value.to_string();
}

}  // namespace polydist
