#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "polydist/distrib.hpp"
#include "polydist/errors.hpp"
#include "polydist/measures.hpp"
#include "polydist/polylog_num.hpp"

#ifndef POLYDIST_VERSION
#define POLYDIST_VERSION "0.0.0"
#endif

using namespace polydist;

namespace {

struct RunConfig {
  std::string selector;
  bool all = false;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> depth;
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> n;
  std::optional<unsigned long> ell;
  std::optional<int> level;
  std::optional<long> q;
  std::optional<long> c;
  std::size_t trials = 100;
  std::size_t count = 20;
  std::uint64_t seed = 1;
  std::string z = "0.5,0";
  double tol = 1e-10;
  std::vector<std::string> words;
  std::string out;
  unsigned jobs = 0;
  bool corrupt = false;
  std::string flavor = "tilde";
};

struct Job {
  std::string label;
  std::function<VerificationReport()> run;
};

constexpr std::size_t kDefaultDegree = 8;
constexpr std::size_t kDefaultDepth = 6;

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0, im = 0;
  char sep = 0;
  if (!(in >> re)) throw DomainError("cannot parse --z '" + text + "', expected re,im");
  if (in >> sep) {
    if (sep != ',' || !(in >> im)) throw DomainError("cannot parse --z '" + text + "', expected re,im");
  }
  if (in >> sep) throw DomainError("trailing characters in --z '" + text + "'");
  return {re, im};
}

std::vector<Word> parse_words(const RunConfig& cfg, std::uint32_t r) {
  std::vector<Word> out;
  for (const auto& text : cfg.words) {
    Word w = text.find(':') != std::string::npos ? Word::parse(text)
                                                 : Word::parse_letters(Alphabet{r, Flavor::standard}, text);
    if (w.alphabet().level != r) {
      throw AlphabetMismatchError("word " + w.to_string() + " is not at level r=" + std::to_string(r));
    }
    out.push_back(std::move(w));
  }
  return out;
}

Job formal_job(std::uint32_t r, std::uint32_t n, std::size_t d, Flavor f) {
  return {f == Flavor::tilde ? "thm6.3" : "prop3.4", [=] { return verify_formal_distribution(r, n, d, f); }};
}

Job numeric_distribution_job(std::uint32_t r, std::uint32_t n, Complex z, std::vector<Word> words, double tol) {
  if (words.empty()) words = default_numeric_words(r);
  return {"numeric.distribution", [=] { return verify_numeric_distribution(r, n, z, words, tol); }};
}

Job thm72_job(unsigned long ell, int level, unsigned long n, const RunConfig& cfg) {
  Thm72Options o;
  o.ell = ell;
  o.level = level;
  o.n = n;
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.max_k = static_cast<int>(cfg.depth.value_or(kDefaultDepth));
  o.corrupt = cfg.corrupt;
  return {"thm7.2", [o] { return verify_thm72(o); }};
}

std::vector<Job> symbolic_suite(const RunConfig& cfg) {
  const auto deg = [&](std::size_t fallback) { return cfg.degree.value_or(fallback); };
  const std::size_t k = cfg.depth.value_or(kDefaultDepth);
  std::vector<Job> jobs;
  for (auto [r, n] : {std::pair{1U, 2U}, {1U, 3U}, {2U, 2U}, {1U, 4U}}) jobs.push_back(formal_job(r, n, deg(6), Flavor::tilde));
  for (auto [r, n] : {std::pair{1U, 2U}, {1U, 3U}}) jobs.push_back(formal_job(r, n, deg(5), Flavor::standard));
  jobs.push_back({"lemma5.3", [d = deg(6)] { return verify_bch_polylog(d); }});
  jobs.push_back({"prop4.1", [d = deg(8)] { return verify_prop41ii(d); }});
  for (std::uint32_t n : {2U, 3U}) jobs.push_back({"thm5.1", [=] { return verify_inhomogeneous_pipeline(n, k); }});
  for (std::uint32_t n : {2U, 3U}) jobs.push_back({"thm6.5", [=] { return verify_homogeneous_polylog(n, k); }});
  jobs.push_back({"section8", [] { return derive_section8(3); }});
  return jobs;
}

std::vector<Job> measures_suite(const RunConfig& cfg) {
  std::vector<Job> jobs;
  for (auto [ell, m, n] : {std::tuple{3UL, 3, 2UL}, {3UL, 2, 3UL}, {2UL, 4, 2UL}, {5UL, 2, 2UL}}) {
    jobs.push_back(thm72_job(ell, m, n, cfg));
  }
  for (long q : {8L, 9L, 16L, 27L}) jobs.push_back({"bernoulli8", [q] { return bernoulli_congruence_sweep(q); }});
  return jobs;
}

std::vector<Job> numeric_suite(const RunConfig& cfg) {
  std::vector<Job> jobs;
  jobs.push_back({"numeric.calibration", [tol = cfg.tol] { return verify_numeric_calibration(tol); }});
  for (std::uint32_t n : {2U, 3U}) {
    for (Complex z : {Complex(0.5, 0), Complex(-0.3, 0), Complex(0.3, 0.2)}) {
      jobs.push_back(numeric_distribution_job(1, n, z, {}, cfg.tol));
    }
  }
  jobs.push_back(numeric_distribution_job(2, 2, Complex(0.3, 0.2), {}, cfg.tol));
  jobs.push_back({"numeric.cross_oracle", [seed = cfg.seed] { return verify_cross_oracle(20, seed, 1e-8); }});
  return jobs;
}

std::vector<Job> verify_jobs(const RunConfig& cfg) {
  if (cfg.all) return symbolic_suite(cfg);
  const std::uint32_t r = cfg.r.value_or(1);
  const std::size_t d = cfg.degree.value_or(kDefaultDegree);
  const std::size_t k = cfg.depth.value_or(kDefaultDepth);
  const std::string& s = cfg.selector;
  if (s == "thm6.3") return {formal_job(r, cfg.n.value_or(2), d, Flavor::tilde)};
  if (s == "prop3.4") return {formal_job(r, cfg.n.value_or(2), d, Flavor::standard)};
  if (s == "formal") return {formal_job(r, cfg.n.value_or(2), d, parse_flavor(cfg.flavor))};
  if (s == "lemma5.3") return {{s, [d] { return verify_bch_polylog(d); }}};
  if (s == "prop4.1") return {{s, [d] { return verify_prop41ii(d); }}};
  if (s == "conversions") return {{s, [k] { return verify_conversions(k); }}};
  if (s == "thm5.1") return {{s, [n = cfg.n.value_or(2), k] { return verify_inhomogeneous_pipeline(n, k); }}};
  if (s == "thm6.5") return {{s, [n = cfg.n.value_or(2), k] { return verify_homogeneous_polylog(n, k); }}};
  if (s == "section8") return {{s, [k = cfg.depth.value_or(3)] { return derive_section8(k); }}};
  throw CLI::ValidationError("verify", "unknown selector '" + s + "'");
}

std::vector<Job> numeric_jobs(const RunConfig& cfg) {
  if (cfg.all) return numeric_suite(cfg);
  const std::string& s = cfg.selector;
  if (s == "calibration") return {{s, [tol = cfg.tol] { return verify_numeric_calibration(tol); }}};
  if (s == "distribution") {
    const std::uint32_t r = cfg.r.value_or(1);
    return {numeric_distribution_job(r, cfg.n.value_or(2), parse_complex(cfg.z), parse_words(cfg, r), cfg.tol)};
  }
  if (s == "cross") {
    return {{s, [seed = cfg.seed, count = cfg.count] { return verify_cross_oracle(count, seed, 1e-8); }}};
  }
  throw CLI::ValidationError("numeric", "unknown selector '" + s + "'");
}

std::vector<Job> measures_jobs(const RunConfig& cfg) {
  if (cfg.all) return measures_suite(cfg);
  const std::string& s = cfg.selector;
  if (s == "thm7.2") return {thm72_job(cfg.ell.value_or(3), cfg.level.value_or(3), cfg.n.value_or(2), cfg)};
  if (s == "bernoulli") {
    const long q = cfg.q.value_or(9);
    if (cfg.c) return {{s, [q, c = *cfg.c] { return bernoulli_congruence_check(q, c); }}};
    return {{s, [q] { return bernoulli_congruence_sweep(q); }}};
  }
  throw CLI::ValidationError("measures", "unknown selector '" + s + "'");
}

struct Outcome {
  std::optional<VerificationReport> report;
  std::string error;
};

std::vector<Outcome> run_pool(const std::vector<Job>& jobs, unsigned workers) {
  std::vector<Outcome> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i].report.emplace(jobs[i].run());
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
    }
  };
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int run(const std::vector<Job>& jobs, const RunConfig& cfg) {
  const auto outcomes = run_pool(jobs, cfg.jobs);
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.out << " for writing\n";
      return 2;
    }
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;
  std::size_t passed = 0, failed = 0, errors = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (!o.report) {
      ++errors;
      std::cerr << "error: " << jobs[i].label << ": " << o.error << "\n";
      os << nlohmann::json{{"statement", jobs[i].label}, {"status", "error"}, {"error", o.error}}.dump() << "\n";
      continue;
    }
    auto j = o.report->to_json();
    j["version"] = POLYDIST_VERSION;
    os << j.dump() << "\n";
    (o.report->passed() ? passed : failed) += 1;
  }
  os.flush();
  std::cerr << "polydist " << POLYDIST_VERSION << ": " << passed << "/" << outcomes.size() << " statements passed";
  if (errors > 0) std::cerr << ", " << errors << " errored";
  std::cerr << "\n";
  if (errors > 0) return 2;
  return failed == 0 ? 0 : 1;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("selector", cfg.selector, "statement to check");
  cmd->add_flag("--all", cfg.all, "run every statement of this group with acceptance parameters");
  cmd->add_option("-D,--degree", cfg.degree, "truncation degree (default 8)");
  cmd->add_option("-K,--depth", cfg.depth, "polylog depth / moment bound (default 6)");
  cmd->add_option("--r", cfg.r, "base level r (default 1)");
  cmd->add_option("--n", cfg.n, "covering degree n (default 2)");
  cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str();
  cmd->add_option("--out", cfg.out, "write NDJSON reports here instead of stdout");
  cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware concurrency)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polylogarithm distribution relation verifier"};
  app.set_version_flag("--version", POLYDIST_VERSION);
  app.require_subcommand(1);
  RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "exact symbolic checks: thm6.3 prop3.4 formal lemma5.3 prop4.1 conversions "
                                               "thm5.1 thm6.5 section8");
  add_common(verify, cfg);
  verify->add_option("--flavor", cfg.flavor, "std or tilde, for the 'formal' selector")->capture_default_str();

  auto* numeric = app.add_subcommand("numeric", "complex checks: calibration distribution cross");
  add_common(numeric, cfg);
  numeric->add_option("--z", cfg.z, "evaluation point re,im")->capture_default_str();
  numeric->add_option("--word", cfg.words, "word such as Y0.X or n=2,std:Y1.Y0 (repeatable)");
  numeric->add_option("--count", cfg.count, "random queries for 'cross'")->capture_default_str();

  auto* measures = app.add_subcommand("measures", "finite-level measures: thm7.2 bernoulli");
  add_common(measures, cfg);
  measures->add_option("--ell", cfg.ell, "prime ell (default 3)");
  measures->add_option("--level", cfg.level, "level m (default 3)");
  measures->add_option("--trials", cfg.trials, "random measures per case")->capture_default_str();
  measures->add_flag("--corrupt", cfg.corrupt, "perturb the push-forward (negative control)");
  measures->add_option("--q", cfg.q, "modulus for 'bernoulli' (default 9)");
  measures->add_option("--c", cfg.c, "single c for 'bernoulli' (default: every admissible c)");

  auto* all = app.add_subcommand("all", "the complete acceptance suite");
  add_common(all, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<Job> jobs;
    if (all->parsed()) {
      cfg.all = true;
      for (auto* group : {&symbolic_suite, &measures_suite, &numeric_suite}) {
        auto part = (*group)(cfg);
        jobs.insert(jobs.end(), part.begin(), part.end());
      }
    } else {
      if (!cfg.all && cfg.selector.empty()) throw CLI::ValidationError("selector", "give a selector or --all");
      if (verify->parsed()) jobs = verify_jobs(cfg);
      if (numeric->parsed()) jobs = numeric_jobs(cfg);
      if (measures->parsed()) jobs = measures_jobs(cfg);
    }
    return run(jobs, cfg);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
