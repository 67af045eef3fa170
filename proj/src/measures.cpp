#include "polydist/measures.hpp"

#include <numeric>
#include <random>

#include "polydist/errors.hpp"
#include "polydist/lie.hpp"

namespace polydist {

namespace {

mpz_class power_of(unsigned long ell, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), ell, static_cast<unsigned long>(e));
  return out;
}

std::size_t cell_count(unsigned long ell, int level) {
  if (level < 0) throw DomainError("measure level must be non-negative");
  return power_of(ell, level).get_ui();
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Σ_a (o + a)^{k−1} μ(a) as an exact rational.
Rational moment_exact(const FiniteMeasure& mu, int k) {
  if (k < 1) throw DomainError("moment index starts at 1");
  Rational acc(0);
  for (std::size_t a = 0; a < mu.cells(); ++a) {
    if (mu[a] == 0) continue;
    acc += (mu.offset() + Rational(static_cast<long>(a))).pow(k - 1) * Rational(mu[a]);
  }
  return acc;
}

}  // namespace

FiniteMeasure::FiniteMeasure(unsigned long ell, int level, Rational offset, std::vector<mpz_class> values)
    : ell_(ell), level_(level), offset_(std::move(offset)), values_(std::move(values)) {
  if (ell < 2) throw DomainError("measure prime must be at least 2");
  if (values_.size() != cell_count(ell, level)) {
    throw DomainError("measure at level " + std::to_string(level) + " needs exactly ℓ^m = " +
                      std::to_string(cell_count(ell, level)) + " values");
  }
}

FiniteMeasure FiniteMeasure::zero(unsigned long ell, int level, Rational offset) {
  return {ell, level, std::move(offset), std::vector<mpz_class>(cell_count(ell, level), 0)};
}

mpz_class FiniteMeasure::total_mass() const {
  mpz_class out = 0;
  for (const auto& v : values_) out += v;
  return out;
}

FiniteMeasure FiniteMeasure::coarsen(int level) const {
  if (level > level_ || level < 0) throw DomainError("can only coarsen to a level between 0 and m");
  FiniteMeasure out = zero(ell_, level, offset_);
  for (std::size_t a = 0; a < cells(); ++a) out.values_[a % out.cells()] += values_[a];
  return out;
}

FiniteMeasure& FiniteMeasure::operator+=(const FiniteMeasure& other) {
  if (ell_ != other.ell_ || level_ != other.level_ || !(offset_ == other.offset_)) {
    throw DomainError("adding measures with different prime, level or offset");
  }
  for (std::size_t a = 0; a < cells(); ++a) values_[a] += other.values_[a];
  return *this;
}

nlohmann::json FiniteMeasure::to_json() const {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : values_) {
    if (v.fits_slong_p()) {
      vals.push_back(v.get_si());
    } else {
      vals.push_back(v.get_str());
    }
  }
  return {{"ell", ell_}, {"m", level_}, {"offset", offset_.to_string()}, {"values", vals}};
}

FiniteMeasure FiniteMeasure::from_json(const nlohmann::json& j) {
  std::vector<mpz_class> values;
  for (const auto& v : j.at("values")) {
    values.emplace_back(v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>()));
  }
  const Rational offset = j.contains("offset") ? Rational::parse(j.at("offset").get<std::string>()) : Rational(0);
  return {j.at("ell").get<unsigned long>(), j.at("m").get<int>(), offset, std::move(values)};
}

PadicScaled moment(const FiniteMeasure& mu, int k) {
  return rational_to_padic(moment_exact(mu, k), mu.ell(), mu.level());
}

FiniteMeasure pushforward_mul(const FiniteMeasure& mu, unsigned long n) {
  if (n == 0) throw DomainError("push-forward needs n ≥ 1");
  const Rational no = mu.offset() * Rational(static_cast<long>(n));
  if (!no.is_integer()) throw DomainError("n·offset must be an integer for [n] to map the coset onto ℤ_ℓ");
  const int target_level = mu.level() - valuation(mpz_class(n), mu.ell());
  if (target_level < 0) throw DomainError("push-forward target level would be negative");
  FiniteMeasure out = FiniteMeasure::zero(mu.ell(), target_level, Rational(0));
  const mpz_class modulus = power_of(mu.ell(), target_level);
  for (std::size_t a = 0; a < mu.cells(); ++a) {
    const mpz_class image = mod_floor(no.numerator() + mpz_class(n) * mpz_class(static_cast<unsigned long>(a)), modulus);
    out[image.get_ui()] += mu[a];
  }
  return out;
}

VerificationReport verify_thm72(const Thm72Options& o) {
  if (o.n == 0 || o.max_k < 1) throw DomainError("verify_thm72 needs n ≥ 1 and K ≥ 1");
  VerificationReport rep("thm7.2", {{"ell", o.ell},
                                    {"m", o.level},
                                    {"n", o.n},
                                    {"trials", o.trials},
                                    {"seed", o.seed},
                                    {"K", o.max_k},
                                    {"corrupt", o.corrupt}});
  const int target_level = o.level - valuation(mpz_class(o.n), o.ell);
  if (target_level < 1) throw DomainError("ℓ-adic valuation of n leaves no precision at level m");
  rep.note("target_level", target_level);
  const long bound = static_cast<long>(power_of(o.ell, o.level).get_si());

  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    std::seed_seq seq{o.seed, static_cast<std::uint64_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> draw(-bound, bound);
    std::vector<FiniteMeasure> kappa;
    FiniteMeasure total = FiniteMeasure::zero(o.ell, target_level, Rational(0));
    for (unsigned long s = 0; s < o.n; ++s) {
      FiniteMeasure mu = FiniteMeasure::zero(o.ell, o.level, Rational(static_cast<long>(s), static_cast<long>(o.n)));
      for (std::size_t a = 0; a < mu.cells(); ++a) mu[a] = draw(rng);
      total += pushforward_mul(mu, o.n);
      kappa.push_back(std::move(mu));
    }
    if (o.corrupt && trial == 0) total[0] += 1;

    const std::string where = "trial " + std::to_string(trial);
    mpz_class mass = 0;
    for (const auto& mu : kappa) mass += mu.total_mass();
    rep.check(total.total_mass() == mass, "total mass preserved", where);

    for (int k = 1; k <= o.max_k; ++k) {
      Rational rhs(0);
      for (const auto& mu : kappa) rhs += moment_exact(mu, k);
      rhs *= Rational(static_cast<long>(o.n)).pow(k - 1);
      const PadicScaled lhs = moment(total, k);
      const PadicScaled want = rational_to_padic(rhs, o.ell, target_level);
      rep.check(lhs.congruent(want, target_level), "moment k=" + std::to_string(k) + " ≡ n^{k-1} Σ_s moments",
                where + ", k=" + std::to_string(k) + ": " + lhs.to_string() + " vs " + want.to_string());
    }

    // Offset translation of the moments agrees with moments of the translated measure.
    for (const auto& mu : kappa) {
      const FiniteMeasure at_zero(mu.ell(), mu.level(), Rational(0), mu.values());
      std::vector<Rational> base;
      std::vector<Rational> direct;
      for (int k = 1; k <= o.max_k; ++k) {
        base.push_back(moment_exact(at_zero, k));
        direct.push_back(moment_exact(mu, k));
      }
      rep.check(translate_chi(base, mu.offset(), static_cast<std::size_t>(o.max_k)) == direct,
                "translate_chi matches the translated measure", where + ", offset " + mu.offset().to_string());
    }
  }
  rep.finish();
  return rep;
}

VerificationReport bernoulli_congruence_check(long q, long c) {
  if (q < 1) throw DomainError("q must be positive");
  const long two_q = 2 * q;
  if (c % 2 == 0 || std::gcd(c, two_q) != 1) {
    throw DomainError("c must be odd and coprime to 2q");
  }
  VerificationReport rep("bernoulli8", {{"q", q}, {"c", c}});
  const mpz_class cbar = inverse_mod(mpz_class(c), mpz_class(two_q));
  const long cb = cbar.get_si();
  auto frac = [two_q](long m) { return Rational(((m % two_q) + two_q) % two_q, two_q); };
  auto bracket = [two_q](long m) { return ((m % two_q) + two_q) % two_q; };

  Rational t(0);
  const Rational c2(c * c);
  for (long b = 0; b < q; ++b) {
    const long m1 = 1 + 2 * cb * b;
    const long m2 = 2 * b + c;
    t += (c2 * bernoulli_poly_value(2, frac(m1)) - bernoulli_poly_value(2, frac(m2))) * Rational(q, 2);
    for (long m : {m1, m2}) {
      if (m % two_q == 0) continue;
      rep.check(bracket(m) + bracket(-m) == two_q, "<m> + <-m> = 2q", "m=" + std::to_string(m));
    }
  }
  const Rational scaled = (t + (c2 - Rational(1)) / Rational(24)) * Rational(48) / Rational(q);
  rep.check(scaled.is_integer(), "T + (c^2-1)/24 ∈ (q/48)ℤ", "48(T + (c^2-1)/24)/q = " + scaled.to_string());
  rep.note("T", t.to_string());
  rep.note("quotient", scaled.to_string());
  rep.finish();
  return rep;
}

VerificationReport bernoulli_congruence_sweep(long q) {
  VerificationReport rep("bernoulli8", {{"q", q}, {"c", "all"}});
  std::size_t count = 0;
  for (long c = 1; c < 2 * q; ++c) {
    if (c % 2 == 0 || std::gcd(c, 2 * q) != 1) continue;
    rep.absorb(bernoulli_congruence_check(q, c), "c=" + std::to_string(c) + ": ");
    ++count;
  }
  rep.note("admissible_c", count);
  rep.finish();
  return rep;
}

}  // namespace polydist
