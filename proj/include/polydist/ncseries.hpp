#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polydist/errors.hpp"
#include "polydist/ring.hpp"
#include "polydist/words.hpp"

namespace polydist {

/// Monomial ideal the series lives modulo. Products of filtered series stay
/// exact because each ideal is spanned by the words it kills.
///   iy: words with two or more Y letters (any indices)
///   jy: ⟨XY, Y²⟩ at level 1, i.e. only X^i and Y X^i survive
enum class Quotient { none, iy, jy };

bool quotient_keeps(Quotient q, const Word& w);

/// Degree-truncated non-commutative power series over R.
template <CoefficientRing R>
class NCSeries {
 public:
  using Ring = R;
  using Context = typename R::Context;
  using Terms = std::map<Word, R>;

  NCSeries() = default;
  NCSeries(Alphabet alphabet, std::size_t degree, Context context = {}, Quotient quotient = Quotient::none)
      : alphabet_(alphabet), degree_(degree), context_(std::move(context)), quotient_(quotient) {
    if (quotient_ == Quotient::jy && alphabet_.level != 1) {
      throw DomainError("the ideal J_Y is only defined at level 1");
    }
  }

  static NCSeries constant(Alphabet alphabet, std::size_t degree, const Context& context, const R& value) {
    NCSeries s(alphabet, degree, context);
    s.add_term(Word(alphabet), value);
    return s;
  }
  static NCSeries one(Alphabet alphabet, std::size_t degree, const Context& context = {}) {
    return constant(alphabet, degree, context, R::from_rational(context, Rational(1)));
  }
  static NCSeries monomial(const Word& w, std::size_t degree, const Context& context, const R& value) {
    NCSeries s(w.alphabet(), degree, context);
    s.add_term(w, value);
    return s;
  }
  static NCSeries letter(Alphabet alphabet, std::size_t degree, Letter l, const Context& context = {}) {
    return monomial(Word(alphabet, {l}), degree, context, R::from_rational(context, Rational(1)));
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t degree() const { return degree_; }
  const Context& context() const { return context_; }
  Quotient quotient() const { return quotient_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  R zero() const { return R::from_rational(context_, Rational(0)); }

  R coefficient(const Word& w) const {
    if (w.size() > degree_) {
      throw DomainError("word " + w.to_string() + " exceeds truncation degree " + std::to_string(degree_));
    }
    const auto it = terms_.find(w);
    return it == terms_.end() ? zero() : it->second;
  }
  R constant_term() const { return coefficient(Word(alphabet_)); }

  void add_term(const Word& w, const R& value) {
    if (w.size() > degree_ || value.is_zero() || !quotient_keeps(quotient_, w)) return;
    check_alphabet(w.alphabet());
    auto [it, inserted] = terms_.try_emplace(w, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Adds value·scalar at w without forming the intermediate product.
  void accumulate(const Word& w, const R& value, const Rational& scalar) {
    if (w.size() > degree_ || scalar.is_zero() || value.is_zero() || !quotient_keeps(quotient_, w)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      check_alphabet(w.alphabet());
      terms_.emplace(w, value * scalar);
      return;
    }
    polydist::add_scaled(it->second, value, scalar);
    if (it->second.is_zero()) terms_.erase(it);
  }

  NCSeries truncated(std::size_t degree) const {
    NCSeries out(alphabet_, std::min(degree, degree_), context_, quotient_);
    for (const auto& [w, c] : terms_) out.add_term(w, c);
    return out;
  }

  NCSeries modulo(Quotient q) const {
    NCSeries out(alphabet_, degree_, context_, q);
    for (const auto& [w, c] : terms_) out.add_term(w, c);
    return out;
  }

  /// Homogeneous component of total degree d.
  NCSeries component(std::size_t d) const {
    NCSeries out(alphabet_, degree_, context_, quotient_);
    for (const auto& [w, c] : terms_) {
      if (w.size() == d) out.terms_.emplace(w, c);
    }
    return out;
  }

  NCSeries& operator+=(const NCSeries& other) {
    merge_shape(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }
  NCSeries& operator-=(const NCSeries& other) {
    merge_shape(other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
  }
  NCSeries& operator*=(const R& scalar) {
    Terms kept;
    for (auto& [w, c] : terms_) {
      R v = c * scalar;
      if (!v.is_zero()) kept.emplace(w, std::move(v));
    }
    terms_ = std::move(kept);
    return *this;
  }
  NCSeries& operator*=(const Rational& scalar)
    requires(!std::same_as<R, Rational>)
  {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c = c * scalar;
    return *this;
  }

  friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
  friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
  friend NCSeries operator*(NCSeries a, const R& s) { return a *= s; }
  friend NCSeries operator*(NCSeries a, const Rational& s)
    requires(!std::same_as<R, Rational>)
  {
    return a *= s;
  }
  NCSeries operator-() const {
    NCSeries out(*this);
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
  }

  friend NCSeries operator*(const NCSeries& a, const NCSeries& b) {
    a.check_compatible(b);
    NCSeries out(a.alphabet_, std::min(a.degree_, b.degree_), a.joined_context(b), joined_quotient(a, b));
    for (const auto& [wa, ca] : a.terms_) {
      if (wa.size() > out.degree_) break;
      for (const auto& [wb, cb] : b.terms_) {
        if (wa.size() + wb.size() > out.degree_) break;
        out.add_term(wa.concat(wb), ca * cb);
      }
    }
    return out;
  }

  /// Equality of coefficients on the common truncation.
  friend bool operator==(const NCSeries& a, const NCSeries& b) {
    if (a.alphabet_ != b.alphabet_) return false;
    const std::size_t d = std::min(a.degree_, b.degree_);
    auto differs = [d](const NCSeries& p, const NCSeries& q) {
      for (const auto& [w, c] : p.terms_) {
        if (w.size() > d) break;
        const auto it = q.terms_.find(w);
        if (it == q.terms_.end() ? !c.is_zero() : !(it->second == c)) return true;
      }
      return false;
    };
    return !differs(a, b) && !differs(b, a);
  }

  /// Converts every coefficient through f into another ring.
  template <CoefficientRing S, class F>
  NCSeries<S> map_coefficients(const typename S::Context& context, F&& f) const {
    NCSeries<S> out(alphabet_, degree_, context, quotient_);
    for (const auto& [w, c] : terms_) out.add_term(w, f(c));
    return out;
  }

  /// Deterministic text form: "coef*word" terms in canonical word order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << ring_to_string(c) << ")*" << w.letters_string();
    }
    return os.str();
  }

 private:
  template <CoefficientRing>
  friend class NCSeries;

  void check_alphabet(const Alphabet& a) const {
    if (a != alphabet_) throw AlphabetMismatchError("word alphabet differs from series alphabet");
  }
  void check_compatible(const NCSeries& other) const {
    if (alphabet_ != other.alphabet_) {
      throw AlphabetMismatchError("series over different alphabets (level or flavor)");
    }
  }
  Context joined_context(const NCSeries& other) const {
    if constexpr (std::same_as<R, SymbolicPoly>) {
      if (context_ && other.context_ && context_ != other.context_) {
        throw RingMismatchError("series over different symbol rings");
      }
      return context_ ? context_ : other.context_;
    } else {
      if (!(context_ == other.context_)) throw RingMismatchError("series over different coefficient rings");
      return context_;
    }
  }
  static Quotient joined_quotient(const NCSeries& a, const NCSeries& b) {
    if (a.quotient_ == Quotient::jy || b.quotient_ == Quotient::jy) return Quotient::jy;
    if (a.quotient_ == Quotient::iy || b.quotient_ == Quotient::iy) return Quotient::iy;
    return Quotient::none;
  }
  void merge_shape(const NCSeries& other) {
    check_compatible(other);
    context_ = joined_context(other);
    quotient_ = joined_quotient(*this, other);
    if (other.degree_ < degree_) *this = truncated(other.degree_);
    if (quotient_ != Quotient::none) *this = modulo(quotient_);
  }

  Alphabet alphabet_;
  std::size_t degree_ = 0;
  Context context_{};
  Quotient quotient_ = Quotient::none;
  Terms terms_;
};

/// Embeds a rational series into R.
template <CoefficientRing R>
NCSeries<R> lift_series(const NCSeries<Rational>& s, const typename R::Context& context) {
  return s.template map_coefficients<R>(context, [&](const Rational& q) { return R::from_rational(context, q); });
}

template <CoefficientRing R>
NCSeries<R> exp_of(const NCSeries<R>& s) {
  if (!s.constant_term().is_zero()) throw DomainError("exp_of needs a series with zero constant term");
  NCSeries<R> result = NCSeries<R>::one(s.alphabet(), s.degree(), s.context()).modulo(s.quotient());
  NCSeries<R> power = result;
  for (std::size_t k = 1; k <= s.degree(); ++k) {
    power = power * s;
    power *= Rational(1, static_cast<long>(k));
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

template <CoefficientRing R>
NCSeries<R> log_of(const NCSeries<R>& g) {
  const R one = R::from_rational(g.context(), Rational(1));
  if (!(g.constant_term() == one)) throw DomainError("log_of needs a series with constant term 1");
  NCSeries<R> u = g - NCSeries<R>::one(g.alphabet(), g.degree(), g.context());
  NCSeries<R> result(g.alphabet(), g.degree(), g.context(), g.quotient());
  NCSeries<R> power = NCSeries<R>::one(g.alphabet(), g.degree(), g.context()).modulo(g.quotient());
  for (std::size_t k = 1; k <= g.degree(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    const long sign = (k % 2 == 1) ? 1 : -1;
    NCSeries<R> term = power;
    term *= Rational(sign, static_cast<long>(k));
    result += term;
  }
  return result;
}

/// Continuous algebra map defined by rational images of the source letters.
/// Letter images must have zero constant term.
class AlgebraMorphism {
 public:
  AlgebraMorphism(Alphabet source, Alphabet target, std::size_t degree, std::vector<NCSeries<Rational>> images);

  static AlgebraMorphism identity(Alphabet alphabet, std::size_t degree);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  std::size_t degree() const { return degree_; }
  const NCSeries<Rational>& image(Letter l) const { return images_.at(l.code()); }
  const std::vector<NCSeries<Rational>>& images() const { return images_; }

 private:
  Alphabet source_;
  Alphabet target_;
  std::size_t degree_;
  std::vector<NCSeries<Rational>> images_;
};

/// Images of every word of degree ≤ D under φ, built prefix by prefix and cached.
class MorphismImageCache {
 public:
  MorphismImageCache(const AlgebraMorphism& phi, std::size_t degree, Quotient quotient);
  const NCSeries<Rational>& image(const Word& w);

 private:
  const AlgebraMorphism& phi_;
  std::size_t degree_;
  Quotient quotient_;
  std::map<Word, NCSeries<Rational>> cache_;
};

template <CoefficientRing R>
NCSeries<R> apply_morphism(const AlgebraMorphism& phi, const NCSeries<R>& s) {
  if (s.alphabet() != phi.source()) throw AlphabetMismatchError("series alphabet is not the morphism source");
  const std::size_t degree = std::min(s.degree(), phi.degree());
  if (s.quotient() == Quotient::jy) throw DomainError("morphisms do not preserve the ideal J_Y");
  // Letter images never lower the Y-count, so I_Y carries over.
  const Quotient q = s.quotient();
  MorphismImageCache cache(phi, degree, q);
  NCSeries<R> out(phi.target(), degree, s.context(), q);
  for (const auto& [u, c] : s.terms()) {
    if (u.size() > degree) break;
    for (const auto& [w, scalar] : cache.image(u).terms()) out.accumulate(w, c, scalar);
  }
  return out;
}

/// outer ∘ inner.
AlgebraMorphism compose(const AlgebraMorphism& outer, const AlgebraMorphism& inner);

}  // namespace polydist
