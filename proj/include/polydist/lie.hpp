#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydist/errors.hpp"
#include "polydist/ncseries.hpp"

namespace polydist {

/// One-variable power series a_0 + a_1 t + ... + a_D t^D over R.
template <CoefficientRing R>
class GenSeries {
 public:
  using Context = typename R::Context;

  GenSeries() = default;
  GenSeries(Context context, std::size_t degree)
      : context_(std::move(context)), coeffs_(degree + 1, R::from_rational(context_, Rational(0))) {}
  GenSeries(Context context, std::vector<R> coeffs) : context_(std::move(context)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("GenSeries needs at least one coefficient");
  }

  static GenSeries constant(const Context& context, std::size_t degree, const R& value) {
    GenSeries g(context, degree);
    g.coeffs_[0] = value;
    return g;
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Context& context() const { return context_; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  R& operator[](std::size_t k) { return coeffs_.at(k); }

  GenSeries truncated(std::size_t degree) const {
    GenSeries out(context_, std::min(degree, this->degree()));
    for (std::size_t k = 0; k <= out.degree(); ++k) out.coeffs_[k] = coeffs_[k];
    return out;
  }

  GenSeries& operator+=(const GenSeries& other) {
    *this = truncated(other.degree());
    for (std::size_t k = 0; k <= degree(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
  }
  GenSeries& operator-=(const GenSeries& other) {
    *this = truncated(other.degree());
    for (std::size_t k = 0; k <= degree(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
  }
  friend GenSeries operator+(GenSeries a, const GenSeries& b) { return a += b; }
  friend GenSeries operator-(GenSeries a, const GenSeries& b) { return a -= b; }
  friend GenSeries operator*(const GenSeries& a, const GenSeries& b) {
    GenSeries out(a.context_, std::min(a.degree(), b.degree()));
    for (std::size_t i = 0; i <= out.degree(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= out.degree(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  friend GenSeries operator*(GenSeries a, const R& s) {
    for (auto& c : a.coeffs_) c = c * s;
    return a;
  }
  friend GenSeries operator*(GenSeries a, const Rational& s)
    requires(!std::same_as<R, Rational>)
  {
    for (auto& c : a.coeffs_) c = c * s;
    return a;
  }
  GenSeries operator-() const {
    GenSeries out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  /// f(c·t).
  GenSeries scale_argument(const R& c) const {
    GenSeries out(*this);
    R power = R::from_rational(context_, Rational(1));
    for (std::size_t k = 1; k <= degree(); ++k) {
      power = power * c;
      out.coeffs_[k] = out.coeffs_[k] * power;
    }
    return out;
  }

  /// 1/f; the constant term must be invertible in R.
  GenSeries reciprocal() const {
    if (coeffs_[0].is_zero()) throw NonInvertibleError("power series with zero constant term");
    const R inv0 = coeffs_[0].inverse();
    GenSeries out(context_, degree());
    out.coeffs_[0] = inv0;
    for (std::size_t k = 1; k <= degree(); ++k) {
      R acc = R::from_rational(context_, Rational(0));
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
      out.coeffs_[k] = -(acc * inv0);
    }
    return out;
  }

  friend bool operator==(const GenSeries& a, const GenSeries& b) {
    const std::size_t d = std::min(a.degree(), b.degree());
    for (std::size_t k = 0; k <= d; ++k) {
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k <= degree(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + ring_to_string(coeffs_[k]) + ")*t^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  Context context_{};
  std::vector<R> coeffs_;
};

template <CoefficientRing R>
GenSeries<R> lift_gen(const GenSeries<Rational>& g, const typename R::Context& context) {
  GenSeries<R> out(context, g.degree());
  for (std::size_t k = 0; k <= g.degree(); ++k) out[k] = R::from_rational(context, g[k]);
  return out;
}

inline GenSeries<SymbolicPoly> lift_gen(const GenSeries<Rational>& g, const SymbolicPoly::Context& context) {
  return lift_gen<SymbolicPoly>(g, context);
}

/// B_0, ..., B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(std::size_t n);

/// e^{a t} truncated at degree D.
template <CoefficientRing R>
GenSeries<R> exp_series(const typename R::Context& context, std::size_t degree, const R& a) {
  GenSeries<R> g(context, degree);
  R power = R::from_rational(context, Rational(1));
  for (std::size_t k = 0; k <= degree; ++k) {
    g[k] = power * factorial(static_cast<long>(k)).inverse();
    power = power * a;
  }
  return g;
}

/// β(a t) = a t / (e^{a t} − 1) = Σ B_n a^n t^n / n!.
template <CoefficientRing R>
GenSeries<R> beta_series(const typename R::Context& context, std::size_t degree, const R& a) {
  const auto bern = bernoulli_numbers(degree);
  GenSeries<R> g(context, degree);
  R power = R::from_rational(context, Rational(1));
  for (std::size_t k = 0; k <= degree; ++k) {
    g[k] = power * (bern[k] / factorial(static_cast<long>(k)));
    power = power * a;
  }
  return g;
}

inline GenSeries<Rational> beta_series(std::size_t degree) { return beta_series<Rational>({}, degree, Rational(1)); }

/// Bernoulli polynomial B_k(T) = Σ_j C(k,j) B_j T^{k−j} in the named variable of ring.
SymbolicPoly bernoulli_poly(int k, const SymbolicPoly::Context& ring, std::string_view variable);
/// B_k(T) over a fresh one-symbol ring {T}.
SymbolicPoly bernoulli_poly(int k);
Rational bernoulli_poly_value(int k, const Rational& x);

/// ad(X)^{m−1}(Y_s) = Σ_j (−1)^j C(m−1,j) X^{m−1−j} Y_s X^j, truncated at D.
NCSeries<Rational> ad_pow(std::size_t m, std::size_t degree, Alphabet alphabet = {}, std::uint32_t y_index = 0);

template <CoefficientRing R>
NCSeries<R> ad_pow(std::size_t m, std::size_t degree, Alphabet alphabet, std::uint32_t y_index,
                   const typename R::Context& context) {
  return lift_series<R>(ad_pow(m, degree, alphabet, y_index), context);
}

/// (f(ad X))(Y_s) = Σ_k f_k ad(X)^k(Y_s), truncated at D.
template <CoefficientRing R>
NCSeries<R> apply_to_ad(const GenSeries<R>& f, Alphabet alphabet, std::size_t degree, std::uint32_t y_index = 0,
                        Quotient quotient = Quotient::none) {
  NCSeries<R> out(alphabet, degree, f.context(), quotient);
  for (std::size_t k = 0; k < degree && k <= f.degree(); ++k) {
    if (f[k].is_zero()) continue;
    const NCSeries<Rational> basis = ad_pow(k + 1, degree, alphabet, y_index);
    for (const auto& [w, q] : basis.terms()) out.accumulate(w, f[k], q);
  }
  return out;
}

/// S ⊕ T = log(e^S e^T), computed by definition, truncated at D.
template <CoefficientRing R>
NCSeries<R> bch(const NCSeries<R>& s, const NCSeries<R>& t, std::optional<std::size_t> degree = std::nullopt) {
  const std::size_t d = degree.value_or(std::min(s.degree(), t.degree()));
  if (!s.constant_term().is_zero() || !t.constant_term().is_zero()) {
    throw DomainError("bch operands must have zero constant term");
  }
  return log_of(exp_of(s.truncated(d)) * exp_of(t.truncated(d)));
}

template <CoefficientRing R>
NCSeries<R> reduce_mod_ideal(const NCSeries<R>& s, Quotient which) {
  return s.modulo(which);
}

/// c_0 X + Σ_m c_m ad(X)^{m−1}(Y) modulo I_Y.
template <CoefficientRing R>
struct PolylogPart {
  R x_coeff;
  std::vector<R> y_coeffs;  // c_1..c_K stored at index 0..K-1

  std::size_t depth() const { return y_coeffs.size(); }
  const R& c(std::size_t m) const { return y_coeffs.at(m - 1); }
  /// Σ_m c_m t^{m−1}.
  GenSeries<R> generating(const typename R::Context& context) const {
    GenSeries<R> g(context, depth() == 0 ? 0 : depth() - 1);
    for (std::size_t m = 1; m <= depth(); ++m) g[m - 1] = y_coeffs[m - 1];
    return g;
  }
};

/// The level-n variant: one coefficient family per Y_s, sharing the X-coefficient.
template <CoefficientRing R>
struct MultiPolylogPart {
  R x_coeff;
  std::vector<std::vector<R>> y_coeffs;  // [s][m-1]
};

template <CoefficientRing R>
NCSeries<R> rebuild_lie(const R& x_coeff, const std::vector<std::vector<R>>& y_coeffs, Alphabet alphabet,
                        std::size_t degree, Quotient quotient = Quotient::iy) {
  NCSeries<R> out(alphabet, degree, x_coeff.context(), quotient);
  if (degree >= 1) out.add_term(Word(alphabet, {Letter::x()}), x_coeff);
  for (std::size_t s = 0; s < y_coeffs.size(); ++s) {
    for (std::size_t m = 1; m <= y_coeffs[s].size() && m <= degree; ++m) {
      if (y_coeffs[s][m - 1].is_zero()) continue;
      const NCSeries<Rational> basis = ad_pow(m, degree, alphabet, static_cast<std::uint32_t>(s));
      for (const auto& [w, q] : basis.terms()) {
        out.accumulate(w, y_coeffs[s][m - 1], q);
      }
    }
  }
  return out;
}

template <CoefficientRing R>
NCSeries<R> rebuild_lie(const PolylogPart<R>& part, std::size_t degree, Alphabet alphabet = {}) {
  return rebuild_lie(part.x_coeff, std::vector<std::vector<R>>{part.y_coeffs}, alphabet, degree);
}

/// Reads off c_{s,m} = (−1)^{m−1}·coeff(Y_s X^{m−1}) for every Y_s and checks that λ mod I_Y, up to
/// degree K, is exactly c_0 X + Σ c_{s,m} ad(X)^{m−1}(Y_s). Throws NotLieError naming the offending word.
template <CoefficientRing R>
MultiPolylogPart<R> multi_polylog_part(const NCSeries<R>& lambda, std::size_t depth) {
  if (depth > lambda.degree()) throw DomainError("polylog depth exceeds the truncation degree");
  const Alphabet a = lambda.alphabet();
  MultiPolylogPart<R> part;
  part.x_coeff = depth >= 1 ? lambda.coefficient(Word(a, {Letter::x()})) : lambda.zero();
  part.y_coeffs.assign(a.level, {});
  for (std::uint32_t s = 0; s < a.level; ++s) {
    std::vector<Letter> letters{Letter::y(s)};
    for (std::size_t m = 1; m <= depth; ++m) {
      const R c = lambda.coefficient(Word(a, letters));
      part.y_coeffs[s].push_back((m % 2 == 1) ? c : -c);
      letters.push_back(Letter::x());
    }
  }
  const NCSeries<R> rebuilt = rebuild_lie(part.x_coeff, part.y_coeffs, a, depth);
  NCSeries<R> residual = lambda.truncated(depth).modulo(Quotient::iy);
  residual -= rebuilt;
  if (!residual.is_zero()) {
    const auto& [w, c] = *residual.terms().begin();
    throw NotLieError("series is not c0 X + Σ c_m ad(X)^{m-1}(Y) modulo I_Y: residual " + ring_to_string(c) +
                      " at word " + w.to_string());
  }
  return part;
}

template <CoefficientRing R>
PolylogPart<R> polylog_part(const NCSeries<R>& lambda, std::size_t depth) {
  if (lambda.alphabet().level != 1) throw AlphabetMismatchError("polylog_part expects a level-1 series");
  auto multi = multi_polylog_part(lambda, depth);
  return {multi.x_coeff, std::move(multi.y_coeffs[0])};
}

}  // namespace polydist
