#include "polydist/polylog_num.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "polydist/errors.hpp"
#include "polydist/lie.hpp"

namespace polydist {

namespace {

constexpr double kPi = std::numbers::pi;

struct KahanSum {
  Complex sum{0, 0};
  Complex carry{0, 0};
  void add(Complex v) {
    const Complex y = v - carry;
    const Complex t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

Complex root_of_unity(std::uint32_t n, std::uint32_t i) { return std::polar(1.0, 2 * kPi * i / n); }

nlohmann::json pair(Complex c) { return nlohmann::json::array({c.real(), c.imag()}); }

std::vector<Letter> ordered_letters(const Word& w, Orientation o) {
  std::vector<Letter> letters = w.letters();
  if (o == Orientation::last_letter_first) std::reverse(letters.begin(), letters.end());
  return letters;
}

/// Power-series coefficients of the iterated integral, c[0..terms].
std::vector<Complex> series_coefficients(const std::vector<Letter>& letters, std::uint32_t level, std::size_t terms) {
  std::vector<Complex> c(terms + 1, Complex(0, 0));
  c[0] = 1;
  std::vector<Complex> next(terms + 1);
  for (const Letter l : letters) {
    next.assign(terms + 1, Complex(0, 0));
    if (l.is_x()) {
      for (std::size_t m = 1; m <= terms; ++m) next[m] = c[m] / static_cast<double>(m);
    } else {
      const Complex inv = 1.0 / root_of_unity(level, l.y_index());
      Complex g(0, 0);
      for (std::size_t m = 0; m < terms; ++m) {
        g = (g + c[m]) * inv;
        next[m + 1] = -g / static_cast<double>(m + 1);
      }
    }
    c.swap(next);
  }
  return c;
}

Complex evaluate(const std::vector<Complex>& c, Complex z) {
  KahanSum sum;
  Complex power(1, 0);
  for (const Complex& a : c) {
    sum.add(a * power);
    power *= z;
  }
  return sum.sum;
}

/// ζ(s) for integer s ≥ 2 via Euler–Maclaurin with N = 16 and 12 correction terms.
double zeta_value(int s) {
  constexpr int kN = 16;
  double sum = 0;
  for (int m = kN - 1; m >= 1; --m) sum += std::pow(static_cast<double>(m), -s);
  sum += std::pow(static_cast<double>(kN), 1 - s) / (s - 1) + 0.5 * std::pow(static_cast<double>(kN), -s);
  const auto bern = bernoulli_numbers(24);
  double rising = s;  // s(s+1)…(s+2j−2)
  for (int j = 1; j <= 12; ++j) {
    sum += bern[static_cast<std::size_t>(2 * j)].to_double() / factorial(2 * j).to_double() * rising *
           std::pow(static_cast<double>(kN), -s - 2 * j + 1);
    rising *= static_cast<double>(s + 2 * j - 1) * (s + 2 * j);
  }
  return sum;
}

/// Li_k(e^μ) = μ^{k−1}/(k−1)!·(H_{k−1} − log(−μ)) + Σ_{j≠k−1} ζ(k−j) μ^j/j!, |μ| < 2π.
Complex li_log_expansion(int k, Complex mu, double tol) {
  const double r = std::abs(mu) / (2 * kPi);
  if (r >= 0.75) throw DomainError("log expansion of Li_k needs |log z| < 1.5π");
  std::size_t top = static_cast<std::size_t>(k);
  const double scale = 4 * std::pow(std::abs(mu), k - 1) / (1 - r);
  while (scale * std::pow(r, static_cast<double>(top) - k + 1) > tol / 2) ++top;
  const auto bern = bernoulli_numbers(top + 2);
  KahanSum sum;
  Complex power(1, 0);
  double fact = 1;
  for (std::size_t j = 0; j <= top; ++j) {
    if (j > 0) {
      power *= mu;
      fact *= static_cast<double>(j);
    }
    const int arg = k - static_cast<int>(j);
    if (arg == 1) {
      double harmonic = 0;
      for (int i = 1; i < k; ++i) harmonic += 1.0 / i;
      sum.add(power / fact * (harmonic - std::log(-mu)));
      continue;
    }
    double z;
    if (arg >= 2) {
      z = zeta_value(arg);
    } else if (arg == 0) {
      z = -0.5;
    } else {
      const auto n = static_cast<std::size_t>(-arg);
      z = (n % 2 == 0) ? 0.0 : -bern[n + 1].to_double() / static_cast<double>(n + 1);
    }
    if (z != 0.0) sum.add(power / fact * z);
  }
  return sum.sum;
}

std::string complex_text(Complex c) {
  std::ostringstream os;
  os.precision(17);
  os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

}  // namespace

Complex li_classical(int k, Complex z, double tol) {
  if (k < 1) throw DomainError("li_classical needs k ≥ 1");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const double az = std::abs(z);
  if (az > 1 + 1e-15) throw DomainError("li_classical is defined here for |z| ≤ 1");
  if (z == Complex(0, 0)) return {0, 0};
  if (k == 1) {
    if (std::abs(z - 1.0) == 0) throw DomainError("Li_1 diverges at z = 1");
    return -std::log(1.0 - z);
  }
  if (az <= 0.5) {
    KahanSum sum;
    Complex power = z;
    for (std::size_t m = 1;; ++m) {
      sum.add(power / std::pow(static_cast<double>(m), k));
      const double tail = std::pow(az, static_cast<double>(m + 1)) /
                          (std::pow(static_cast<double>(m + 1), k) * (1 - az));
      if (tail <= tol / 2) break;
      power *= z;
    }
    return sum.sum;
  }
  if (std::abs(z - 1.0) == 0) return {zeta_value(k), 0};
  return li_log_expansion(k, std::log(z), tol);
}

bool convergent_at_zero(const Word& w, Orientation orientation) {
  if (w.empty()) return true;
  const auto letters = ordered_letters(w, orientation);
  return letters.front().is_y();
}

NumericValue mpl_series_detail(const MPLQuery& q, Orientation orientation) {
  if (q.word.alphabet().flavor != Flavor::standard) throw DomainError("numerics use the standard letters");
  if (!convergent_at_zero(q.word, orientation)) {
    throw DomainError("word " + q.word.to_string() + " needs regularization at the base point");
  }
  const double az = std::abs(q.z);
  if (az >= 1) throw DomainError("mpl_series needs |z| < 1");
  if (q.word.empty()) return {{1, 0}, 0, 0};
  if (az == 0) return {{0, 0}, 0, 0};
  // Every coefficient has modulus ≤ 1, so the tail after M terms is ≤ |z|^{M+1}/(1 − |z|).
  const double target = q.tol / 2;
  auto m = static_cast<std::size_t>(std::ceil(std::log(target * (1 - az)) / std::log(az)));
  m = std::max<std::size_t>(m, q.word.size());
  if (m > q.max_terms) throw DomainError("series needs more than max_terms terms");
  const auto c = series_coefficients(ordered_letters(q.word, orientation), q.word.alphabet().level, m);
  const double tail = std::pow(az, static_cast<double>(m + 1)) / (1 - az);
  const double rounding = 1e-16 * static_cast<double>((m + 1) * (q.word.size() + 1));
  return {evaluate(c, q.z), tail + rounding, m};
}

Complex mpl_series(const MPLQuery& q, Orientation orientation) { return mpl_series_detail(q, orientation).value; }

NumericValue iterint_quadrature(const MPLQuery& q, double epsilon, double min_distance) {
  namespace odeint = boost::numeric::odeint;
  if (!convergent_at_zero(q.word)) {
    throw DomainError("word " + q.word.to_string() + " starts with dz/z: the integral diverges at the base point");
  }
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("ε must lie in (0, 1)");
  const std::uint32_t level = q.word.alphabet().level;
  const Complex z = q.z;
  if (q.word.empty()) return {{1, 0}, 0, 0};
  if (z == Complex(0, 0)) return {{0, 0}, 0, 0};
  std::vector<Complex> punctures;
  for (std::uint32_t i = 0; i < level; ++i) {
    const Complex p = root_of_unity(level, i);
    const double s = std::clamp((p * std::conj(z)).real() / std::norm(z), 0.0, 1.0);
    if (std::abs(p - s * z) < min_distance) throw DomainError("path passes too close to a puncture");
    punctures.push_back(p);
  }
  const auto& letters = q.word.letters();
  const std::size_t k = letters.size();

  // F_0 = 1, F_j' = F_{j−1}·ω_{a_j}(s z)·z along s ∈ [ε, 1].
  using State = std::vector<double>;
  auto system = [&](const State& x, State& dxdt, double s) {
    dxdt.assign(x.size(), 0.0);
    for (std::size_t j = 1; j <= k; ++j) {
      const Complex prev(x[2 * (j - 1)], x[2 * (j - 1) + 1]);
      const Letter l = letters[j - 1];
      const Complex w = l.is_x() ? Complex(1.0 / s, 0) : z / (s * z - punctures[l.y_index()]);
      const Complex d = prev * w;
      dxdt[2 * j] = d.real();
      dxdt[2 * j + 1] = d.imag();
    }
  };
  // Starting values at s = ε from a short local expansion; its truncation error is O(ε^{P+1}).
  constexpr std::size_t kLocalOrder = 8;
  const auto run = [&](double eps) {
    State x(2 * (k + 1), 0.0);
    x[0] = 1;
    std::vector<Letter> prefix;
    for (std::size_t j = 1; j <= k; ++j) {
      prefix.push_back(letters[j - 1]);
      const Complex v = evaluate(series_coefficients(prefix, level, kLocalOrder), eps * z);
      x[2 * j] = v.real();
      x[2 * j + 1] = v.imag();
    }
    auto stepper = odeint::make_controlled(1e-14, 1e-14, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_adaptive(stepper, system, x, eps, 1.0, 1e-3);
    return Complex(x[2 * k], x[2 * k + 1]);
  };
  const double factor = std::pow(2.0, static_cast<double>(kLocalOrder + 1));
  const Complex v0 = run(epsilon);
  const Complex v1 = run(epsilon / 2);
  const Complex v2 = run(epsilon / 4);
  const Complex r1 = (factor * v1 - v0) / (factor - 1);
  const Complex r2 = (factor * v2 - v1) / (factor - 1);
  return {r2, std::abs(r2 - r1) + 1e-12, 3};
}

std::vector<Word> default_numeric_words(std::uint32_t r) {
  const Alphabet a{r, Flavor::standard};
  std::vector<Word> out;
  if (r == 1) {
    std::vector<Letter> letters{Letter::y(0)};
    for (int k = 1; k <= 5; ++k) {
      out.emplace_back(a, letters);
      letters.push_back(Letter::x());
    }
    return out;
  }
  for (const Word& w : all_words(a, 3)) {
    if (w.y_count() == 2 && w[0].is_y()) out.push_back(w);
  }
  return out;
}

VerificationReport verify_numeric_calibration(double tol) {
  VerificationReport rep("numeric.calibration", {{"tol", tol}});
  rep.note("orientation", "first letter integrated first, nearest the base point 0; Li_{Y X^{k-1}} = -Li_k");
  const std::vector<Complex> samples{{0.5, 0},    {-0.3, 0},   {0.3, 0.2}, {0.1, 0},   {-0.7, 0},
                                     {0.6, -0.4}, {0, 0.8},    {-0.5, 0.5}, {0.25, 0.6}, {0.9, 0}};
  const Alphabet a{1, Flavor::standard};
  for (int k = 1; k <= 5; ++k) {
    std::vector<Letter> letters{Letter::y(0)};
    letters.insert(letters.end(), static_cast<std::size_t>(k - 1), Letter::x());
    const Word w(a, letters);
    for (const Complex z : samples) {
      const Complex series = mpl_series({w, z, tol / 100});
      const Complex classical = li_classical(k, z, tol / 100);
      const double dev = std::abs(series + classical);
      rep.check(dev < tol, "Li_{YX^{k-1}} = -Li_k",
                "k=" + std::to_string(k) + ", z=" + complex_text(z) + ", deviation " + std::to_string(dev));
      // The reversed orientation starts these words with dz/z and is not convergent at 0.
      if (k >= 2) rep.check(!convergent_at_zero(w, Orientation::last_letter_first), "reversed orientation rejected", w.to_string());
    }
  }
  const Complex li2 = li_classical(2, {-1, 0}, 1e-14);
  const double dev = std::abs(li2 - Complex(-kPi * kPi / 12, 0));
  rep.check(dev < 1e-12, "Li_2(-1) = -π²/12", "deviation " + std::to_string(dev));
  rep.note("li2_minus_one", pair(li2));

  // Shuffle: Li_Y · Li_Y = 2 Li_{YY} at level 1.
  const Word y(a, {Letter::y(0)});
  const Word yy(a, {Letter::y(0), Letter::y(0)});
  for (const Complex z : samples) {
    const Complex ly = mpl_series({y, z, tol / 100});
    const Complex lyy = mpl_series({yy, z, tol / 100});
    rep.check(std::abs(ly * ly - 2.0 * lyy) < tol, "shuffle Li_Y^2 = 2 Li_YY", complex_text(z));
  }
  rep.finish();
  return rep;
}

VerificationReport verify_numeric_distribution(std::uint32_t r, std::uint32_t n, Complex z, const std::vector<Word>& words,
                                               double tol) {
  if (r == 0 || n == 0) throw DomainError("numeric distribution needs r, n ≥ 1");
  if (std::abs(z) >= 1) throw DomainError("numeric distribution needs |z| < 1");
  nlohmann::json word_names = nlohmann::json::array();
  for (const auto& w : words) word_names.push_back(w.to_string());
  VerificationReport rep("thm2.3.numeric",
                         {{"r", r}, {"n", n}, {"z", pair(z)}, {"tol", tol}, {"words", word_names}});
  rep.note("orientation", "first letter integrated first, nearest the base point 0");
  const Complex zn = std::pow(z, static_cast<int>(n));
  double worst = 0;
  nlohmann::json values = nlohmann::json::array();
  for (const Word& w : words) {
    if (w.alphabet() != Alphabet{r, Flavor::standard}) throw AlphabetMismatchError("word is not over the level-r alphabet");
    const auto lifts = enumerate_lifts(w, n);
    const double each = tol / (1000.0 * static_cast<double>(lifts.size() + 1));
    const Complex lhs = mpl_series({w, zn, each});
    KahanSum sum;
    for (const Word& u : lifts) sum.add(mpl_series({u, z, each}));
    const Complex rhs = sum.sum * std::pow(static_cast<double>(n), static_cast<double>(wt_x(w)));
    const double dev = std::abs(lhs - rhs);
    worst = std::max(worst, dev);
    values.push_back({{"word", w.to_string()}, {"lhs", pair(lhs)}, {"rhs", pair(rhs)}, {"deviation", dev}});
    rep.check(dev < tol, "Li_w(z^n) = n^{wt_X(w)} Σ_u Li_u(z)",
              w.to_string() + ": deviation " + std::to_string(dev));
  }
  rep.note("values", values);
  rep.note("max_deviation", worst);
  rep.finish();
  return rep;
}

VerificationReport verify_cross_oracle(std::size_t count, std::uint64_t seed, double tol) {
  VerificationReport rep("numeric.cross_oracle", {{"count", count}, {"seed", seed}, {"tol", tol}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> level_d(1, 3);
  std::uniform_int_distribution<std::size_t> length_d(1, 5);
  std::uniform_real_distribution<double> radius_d(0.05, 0.6);
  std::uniform_real_distribution<double> angle_d(-kPi, kPi);
  double worst = 0;
  nlohmann::json queries = nlohmann::json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t level = level_d(rng);
    const std::size_t length = length_d(rng);
    std::uniform_int_distribution<std::uint32_t> y_d(0, level - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Letter> letters{Letter::y(y_d(rng))};
    std::size_t ys = 1;
    while (letters.size() < length) {
      if (ys < 3 && coin(rng) == 1) {
        letters.push_back(Letter::y(y_d(rng)));
        ++ys;
      } else {
        letters.push_back(Letter::x());
      }
    }
    const Word w(Alphabet{level, Flavor::standard}, letters);
    const Complex z = std::polar(radius_d(rng), angle_d(rng));
    const Complex series = mpl_series({w, z, 1e-14});
    const auto quad = iterint_quadrature({w, z});
    const double dev = std::abs(series - quad.value);
    worst = std::max(worst, dev);
    queries.push_back({{"word", w.to_string()}, {"z", pair(z)}, {"deviation", dev}, {"quadrature_error", quad.error_bound}});
    rep.check(dev < tol, "series = quadrature", w.to_string() + " at " + complex_text(z) + ": " + std::to_string(dev));
  }
  rep.note("queries", queries);
  rep.note("max_deviation", worst);
  rep.finish();
  return rep;
}

}  // namespace polydist
