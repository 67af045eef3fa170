#pragma once

#include <string>
#include <vector>

#include "polydist/geometry.hpp"
#include "polydist/lie.hpp"
#include "polydist/report.hpp"

namespace polydist {

/// χ̃_m from ρ and ℓi_1..ℓi_m (li[k−1] = ℓi_k):
///   χ̃_m = (−1)^{m+1}(m−1)! Σ_{k=1}^m ρ^{m−k} ℓi_k / (m+1−k)!
template <CoefficientRing R>
R chi_from_li(const R& rho, const std::vector<R>& li, std::size_t m) {
  if (m == 0 || li.size() < m) throw DomainError("chi_from_li needs at least m polylog values");
  R acc = R::from_rational(rho.context(), Rational(0));
  R power = R::from_rational(rho.context(), Rational(1));
  for (std::size_t k = m; k >= 1; --k) {
    acc += power * li[k - 1] * factorial(static_cast<long>(m + 1 - k)).inverse();
    power = power * rho;
  }
  const Rational sign = m % 2 == 1 ? Rational(1) : Rational(-1);
  return acc * (sign * factorial(static_cast<long>(m - 1)));
}

/// ℓi_m from ρ and χ̃_1..χ̃_m:
///   ℓi_m = (−1)^{m+1} Σ_{k=0}^{m−1} (B_k/k!)(−ρ)^k χ̃_{m−k} / (m−k−1)!
template <CoefficientRing R>
R li_from_chi(const R& rho, const std::vector<R>& chi, std::size_t m) {
  if (m == 0 || chi.size() < m) throw DomainError("li_from_chi needs at least m character values");
  const auto bern = bernoulli_numbers(m);
  R acc = R::from_rational(rho.context(), Rational(0));
  R power = R::from_rational(rho.context(), Rational(1));
  const R neg_rho = -rho;
  for (std::size_t k = 0; k < m; ++k) {
    acc += power * chi[m - k - 1] *
           (bern[k] / (factorial(static_cast<long>(k)) * factorial(static_cast<long>(m - k - 1))));
    power = power * neg_rho;
  }
  return m % 2 == 1 ? acc : -acc;
}

template <CoefficientRing R>
std::vector<R> chi_from_li(const R& rho, const std::vector<R>& li) {
  std::vector<R> out;
  for (std::size_t m = 1; m <= li.size(); ++m) out.push_back(chi_from_li(rho, li, m));
  return out;
}

template <CoefficientRing R>
std::vector<R> li_from_chi(const R& rho, const std::vector<R>& chi) {
  std::vector<R> out;
  for (std::size_t m = 1; m <= chi.size(); ++m) out.push_back(li_from_chi(rho, chi, m));
  return out;
}

/// exp(−λ) for λ = ρX + Σ_m ℓi_m ad(X)^{m−1}(Y) with ℓi = li_from_chi(ρ, chi), modulo I_Y.
NCSeries<SymbolicPoly> group_like_from_chi(const SymbolicPoly& rho, const std::vector<SymbolicPoly>& chi,
                                           std::size_t degree);

/// Symbols of the inhomogeneous level-n setting: χ, ρ = ρ_z and χ̃_k(ζ_n^j z) for 0 ≤ j < n, 1 ≤ k ≤ K.
class SymbolicGaloisDatum {
 public:
  SymbolicGaloisDatum(std::uint32_t n, std::size_t depth);

  const SymbolicPoly::Context& ring() const { return ring_; }
  std::uint32_t n() const { return n_; }
  std::size_t depth() const { return depth_; }

  SymbolicPoly chi() const { return SymbolicPoly::symbol(ring_, "chi"); }
  SymbolicPoly rho() const { return SymbolicPoly::symbol(ring_, "rho"); }
  /// χ̃_k(ζ_n^j z).
  SymbolicPoly chit(std::uint32_t j, std::size_t k) const;
  std::vector<SymbolicPoly> chit_list(std::uint32_t j) const;
  static std::string chit_name(std::uint32_t j, std::size_t k);
  /// L₀(ζ_n^j z) = ρ + (j/n)(χ − 1).
  SymbolicPoly l0(std::uint32_t j) const;
  /// L^{(j)}(t) = Σ_k χ̃_k(ζ_n^j z)/(k−1)! · t^{k−1}.
  GenSeries<SymbolicPoly> l_series(std::uint32_t j) const;

 private:
  std::uint32_t n_;
  std::size_t depth_;
  SymbolicPoly::Context ring_;
};

/// χ̃_k(zⁿ) for k ≤ K as derived by pushing the level-n associator through π_{n,1}.
std::vector<SymbolicPoly> inhomogeneous_pushforward_chi(const SymbolicGaloisDatum& datum);

/// The multipliers c_k with 𝝌̃_k(zⁿ) = c_k Σ_ζ 𝝌̃_k(ζz), read off the homogeneous push-forward.
std::vector<Rational> homogeneous_multipliers(std::uint32_t n, std::size_t depth);

enum class BchCandidate { part_ii, part_i_printed, part_i_alternative };
std::string_view bch_candidate_name(BchCandidate c);

VerificationReport verify_formal_distribution(std::uint32_t r, std::uint32_t n, std::size_t degree, Flavor flavor);
VerificationReport verify_bch_polylog(std::size_t degree);
VerificationReport verify_conversions(std::size_t depth);
VerificationReport verify_prop41ii(std::size_t degree);
VerificationReport verify_inhomogeneous_pipeline(std::uint32_t n, std::size_t depth);
VerificationReport verify_homogeneous_polylog(std::uint32_t n, std::size_t depth);
VerificationReport derive_section8(std::size_t k_max);

/// Soulé input χ̃_{2k}(→10) = B_{2k}/(2·2k)·(χ^{2k} − 1) as a polynomial in chi.
SymbolicPoly soule_value(std::size_t two_k, const SymbolicPoly& chi);

/// Symbolic degree cap: POLYDIST_MAX_DEGREE if set, else 10.
std::size_t max_symbolic_degree();
void check_degree(std::size_t degree);

}  // namespace polydist
