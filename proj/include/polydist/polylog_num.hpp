#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "polydist/report.hpp"
#include "polydist/words.hpp"

namespace polydist {

using Complex = std::complex<double>;

/// Which end of a word is integrated first along 0 → z.
///   first_letter_first: Li_{a1…ak}(z) = ∫_{0<t1<…<tk<z} ω_{a1}(t1)…ω_{ak}(tk)
/// with ω_X = dt/t and ω_{Y_i} = dt/(t − ζ_n^i), ζ_n = e^{2πi/n}.
enum class Orientation { first_letter_first, last_letter_first };

struct MPLQuery {
  Word word;
  Complex z;
  double tol = 1e-13;
  std::size_t max_terms = 1'000'000;
};

struct NumericValue {
  Complex value;
  double error_bound = 0;
  std::size_t terms = 0;
};

/// Σ_{m≥1} z^m/m^k for |z| ≤ 1, (k, z) ≠ (1, 1), with total error ≤ tol.
Complex li_classical(int k, Complex z, double tol = 1e-14);

/// Li_w(z) on the straight path from the tangential base point at 0, by nested power series.
NumericValue mpl_series_detail(const MPLQuery& q, Orientation orientation = Orientation::first_letter_first);
Complex mpl_series(const MPLQuery& q, Orientation orientation = Orientation::first_letter_first);

/// Li_w(z) by integrating the iterated-integral ODE along [ε·z, z] and extrapolating ε → 0.
/// Rejects words that need regularization and paths closer than min_distance to a puncture.
NumericValue iterint_quadrature(const MPLQuery& q, double epsilon = 0.05, double min_distance = 1e-3);

/// Word whose iterated integral from 0 converges in the given orientation.
bool convergent_at_zero(const Word& w, Orientation orientation = Orientation::first_letter_first);

/// Y X^{k−1} at level r for k = 1..5 when r = 1; otherwise the two-Y words of length ≤ 3 beginning with Y.
std::vector<Word> default_numeric_words(std::uint32_t r);

VerificationReport verify_numeric_calibration(double tol = 1e-10);
VerificationReport verify_numeric_distribution(std::uint32_t r, std::uint32_t n, Complex z, const std::vector<Word>& words,
                                               double tol = 1e-10);
VerificationReport verify_cross_oracle(std::size_t count = 20, std::uint64_t seed = 1, double tol = 1e-8);

}  // namespace polydist
