#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "polydist/errors.hpp"
#include "polydist/padic.hpp"
#include "polydist/rational.hpp"
#include "polydist/report.hpp"
#include "polydist/ring.hpp"

namespace polydist {

/// ℤ-valued measure on o + ℤ_ℓ sampled at level m: values[a] is the mass of o + a + ℓ^m ℤ_ℓ.
class FiniteMeasure {
 public:
  FiniteMeasure(unsigned long ell, int level, Rational offset, std::vector<mpz_class> values);

  static FiniteMeasure zero(unsigned long ell, int level, Rational offset);

  unsigned long ell() const { return ell_; }
  int level() const { return level_; }
  const Rational& offset() const { return offset_; }
  const std::vector<mpz_class>& values() const { return values_; }
  mpz_class& operator[](std::size_t a) { return values_.at(a); }
  const mpz_class& operator[](std::size_t a) const { return values_.at(a); }
  std::size_t cells() const { return values_.size(); }
  mpz_class total_mass() const;

  /// Sums cells into level m' ≤ m.
  FiniteMeasure coarsen(int level) const;

  FiniteMeasure& operator+=(const FiniteMeasure& other);
  friend FiniteMeasure operator+(FiniteMeasure a, const FiniteMeasure& b) { return a += b; }
  friend bool operator==(const FiniteMeasure&, const FiniteMeasure&) = default;

  nlohmann::json to_json() const;
  static FiniteMeasure from_json(const nlohmann::json& j);

 private:
  unsigned long ell_;
  int level_;
  Rational offset_;
  std::vector<mpz_class> values_;
};

/// Σ_a (o + a)^{k−1} μ(cell a), exact modulo ℓ^m.
PadicScaled moment(const FiniteMeasure& mu, int k);

/// [n]_* μ on ℤ_ℓ at level m − v_ℓ(n); needs n·o ∈ ℤ.
FiniteMeasure pushforward_mul(const FiniteMeasure& mu, unsigned long n);

/// 𝝌̃_k = Σ_{i<k} C(k−1,i) shift^{k−1−i} χ̃_{i+1} for k = 1..K.
template <CoefficientRing R>
std::vector<R> translate_chi(const std::vector<R>& chi, const R& shift, std::size_t depth) {
  if (chi.size() < depth) throw DomainError("translate_chi needs at least K values");
  std::vector<R> out;
  for (std::size_t k = 1; k <= depth; ++k) {
    R acc = R::from_rational(shift.context(), Rational(0));
    R power = R::from_rational(shift.context(), Rational(1));
    for (std::size_t i = k; i-- > 0;) {
      acc += power * chi[i] * binomial(static_cast<long>(k - 1), static_cast<long>(i));
      power = power * shift;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

struct Thm72Options {
  unsigned long ell = 3;
  int level = 3;
  unsigned long n = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  int max_k = 6;
  /// Negative control: perturb one cell of the pushed-forward measure in the first trial.
  bool corrupt = false;
};

VerificationReport verify_thm72(const Thm72Options& options);
VerificationReport bernoulli_congruence_check(long q, long c);
/// Every admissible c in [1, 2q).
VerificationReport bernoulli_congruence_sweep(long q);

}  // namespace polydist
