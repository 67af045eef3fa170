#include "polydist/symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "polydist/errors.hpp"

namespace polydist {

SymbolRing::SymbolRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw DomainError("duplicate symbol '" + names_[i] + "'");
  }
}

std::optional<std::size_t> SymbolRing::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SymbolRing::index(std::string_view name) const {
  const auto found = find(name);
  if (!found) throw UnknownSymbolError("unknown symbol '" + std::string(name) + "'");
  return *found;
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<Power> powers) : powers_(std::move(powers)) {
  std::sort(powers_.begin(), powers_.end());
  std::vector<Power> merged;
  for (const auto& [var, e] : powers_) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == var) {
      merged.back().second += e;
    } else {
      merged.emplace_back(var, e);
    }
  }
  powers_ = std::move(merged);
}

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.powers_.emplace_back(index, exponent);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& p : powers_) d += p.second;
  return d;
}

std::uint32_t Monomial::exponent_of(std::uint32_t index) const {
  for (const auto& [var, e] : powers_) {
    if (var == index) return e;
  }
  return 0;
}

Monomial Monomial::without(std::uint32_t index) const {
  Monomial m;
  for (const auto& p : powers_) {
    if (p.first != index) m.powers_.push_back(p);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.powers_.reserve(a.powers_.size() + b.powers_.size());
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() && j != b.powers_.end()) {
    if (i->first < j->first) {
      out.powers_.push_back(*i++);
    } else if (j->first < i->first) {
      out.powers_.push_back(*j++);
    } else {
      out.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.powers_.insert(out.powers_.end(), i, a.powers_.end());
  out.powers_.insert(out.powers_.end(), j, b.powers_.end());
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a.powers_ < b.powers_;
}

// ---------------------------------------------------------------------------

SymbolicPoly::SymbolicPoly(Context ring, const Rational& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

SymbolicPoly SymbolicPoly::symbol(const Context& ring, std::string_view name) {
  if (!ring) throw UnknownSymbolError("symbol '" + std::string(name) + "' requested without a ring");
  return variable(ring, ring->index(name));
}

SymbolicPoly SymbolicPoly::variable(const Context& ring, std::size_t index) {
  if (!ring || index >= ring->size()) throw UnknownSymbolError("symbol index out of range");
  SymbolicPoly p;
  p.ring_ = ring;
  p.terms_.emplace(Monomial::variable(static_cast<std::uint32_t>(index)), Rational(1));
  return p;
}

bool SymbolicPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational SymbolicPoly::constant_term() const {
  const auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SymbolicPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string());
  return constant_term();
}

std::set<std::uint32_t> SymbolicPoly::variables() const {
  std::set<std::uint32_t> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& p : m.powers()) out.insert(p.first);
  }
  return out;
}

std::uint32_t SymbolicPoly::degree_in(std::uint32_t index) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(index));
  return d;
}

std::uint32_t SymbolicPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

SymbolicPoly SymbolicPoly::coefficient_in(std::uint32_t index, std::uint32_t power) const {
  SymbolicPoly out;
  out.ring_ = ring_;
  for (const auto& [m, c] : terms_) {
    if (m.exponent_of(index) == power) out.add_term(m.without(index), c);
  }
  return out;
}

SymbolicPoly SymbolicPoly::inverse() const {
  if (!is_constant() || is_zero()) {
    throw NonInvertibleError("polynomial is not an invertible constant: " + to_string());
  }
  return {ring_, constant_term().inverse()};
}

SymbolicPoly SymbolicPoly::substitute(std::string_view name, const SymbolicPoly& value) const {
  if (!ring_) throw UnknownSymbolError("substitution into an unbound constant");
  return substitute(static_cast<std::uint32_t>(ring_->index(name)), value);
}

SymbolicPoly SymbolicPoly::substitute(std::string_view name, const Rational& value) const {
  return substitute(name, SymbolicPoly(ring_, value));
}

SymbolicPoly SymbolicPoly::substitute(std::uint32_t index, const SymbolicPoly& value) const {
  joined(value);
  std::vector<SymbolicPoly> powers{SymbolicPoly(ring_, Rational(1))};
  SymbolicPoly out;
  out.ring_ = ring_;
  for (const auto& [m, c] : terms_) {
    const auto e = m.exponent_of(index);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    SymbolicPoly rest;
    rest.ring_ = ring_;
    rest.terms_.emplace(m.without(index), c);
    out += rest * powers[e];
  }
  return out;
}

SymbolicPoly SymbolicPoly::map_to(const Context& target, const std::vector<SymbolicPoly>& images) const {
  if (ring_ && images.size() != ring_->size()) {
    throw DomainError("map_to needs one image per registered symbol");
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, SymbolicPoly> cache;
  auto power_of = [&](std::uint32_t var, std::uint32_t e) -> const SymbolicPoly& {
    auto it = cache.find({var, e});
    if (it != cache.end()) return it->second;
    SymbolicPoly p = images.at(var).pow(e);
    p.ring_ = target;
    return cache.emplace(std::make_pair(var, e), std::move(p)).first->second;
  };
  SymbolicPoly out(target, Rational(0));
  for (const auto& [m, c] : terms_) {
    SymbolicPoly term(target, c);
    for (const auto& [var, e] : m.powers()) term *= power_of(var, e);
    out += term;
  }
  return out;
}

Rational SymbolicPoly::evaluate(const std::vector<Rational>& values) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [var, e] : m.powers()) t *= values.at(var).pow(static_cast<int>(e));
    total += t;
  }
  return total;
}

const SymbolicPoly::Context& SymbolicPoly::joined(const SymbolicPoly& other) const {
  if (ring_ && other.ring_ && ring_ != other.ring_) {
    throw RingMismatchError("symbolic operands belong to different symbol rings");
  }
  return ring_ ? ring_ : other.ring_;
}

void SymbolicPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolicPoly& SymbolicPoly::operator+=(const SymbolicPoly& other) {
  ring_ = joined(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SymbolicPoly& SymbolicPoly::operator-=(const SymbolicPoly& other) {
  ring_ = joined(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SymbolicPoly& SymbolicPoly::add_scaled(const SymbolicPoly& other, const Rational& scalar) {
  ring_ = joined(other);
  if (scalar.is_zero()) return *this;
  for (const auto& [m, c] : other.terms_) add_term(m, c * scalar);
  return *this;
}

SymbolicPoly& SymbolicPoly::operator*=(const SymbolicPoly& other) {
  *this = *this * other;
  return *this;
}

SymbolicPoly& SymbolicPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b) {
  SymbolicPoly out;
  out.ring_ = a.joined(b);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (b.is_constant()) {
    SymbolicPoly r(a);
    r.ring_ = out.ring_;
    return r *= b.constant_term();
  }
  if (a.is_constant()) {
    SymbolicPoly r(b);
    r.ring_ = out.ring_;
    return r *= a.constant_term();
  }
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

SymbolicPoly SymbolicPoly::operator-() const {
  SymbolicPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SymbolicPoly SymbolicPoly::pow(unsigned exponent) const {
  SymbolicPoly result(ring_, Rational(1));
  SymbolicPoly base(*this);
  while (exponent > 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const SymbolicPoly& a, const SymbolicPoly& b) {
  a.joined(b);
  return a.terms_ == b.terms_;
}

std::string SymbolicPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    if (m.is_one()) {
      os << mag;
      continue;
    }
    bool need_star = false;
    if (!mag.is_one()) {
      os << mag;
      need_star = true;
    }
    for (const auto& [var, e] : m.powers()) {
      if (need_star) os << "*";
      os << (ring_ ? ring_->name(var) : "s" + std::to_string(var));
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace polydist
