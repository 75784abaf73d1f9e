// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <path-to-symcont>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "random_cases.hpp"
#include "symcont/analysis.hpp"
#include "symcont/spec_io.hpp"
#include "symcont/zoo.hpp"

using namespace symcont;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

struct CommandResult {
  int status = -1;
  std::string out;
};

CommandResult run_command(const std::string& command) {
  CommandResult r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 65536> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe.release());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome zoo_reproduction(const std::string& cli) {
  const auto start = Clock::now();
  const CommandResult r = run_command("'" + cli + "' zoo --all --format json");
  const double took = seconds_since(start);
  if (r.status != 0) return {false, "exit status " + std::to_string(r.status)};
  const auto j = nlohmann::json::parse(r.out);
  std::set<std::string> examples;
  std::size_t mismatches = 0;
  for (const auto& row : j["zoo"]["rows"]) {
    examples.insert(row["example"].get<std::string>());
    mismatches += !row["match"].get<bool>();
  }
  std::size_t witnessed = 0;
  for (const auto& rel : j["zoo"]["relations"]) witnessed += rel["witnessed"].get<bool>();
  const bool pass = took < 60 && examples.size() == 12 && mismatches == 0 && j["zoo"]["allMatch"] == true &&
                    witnessed == 5;
  return {pass, std::to_string(examples.size()) + " entries, " + std::to_string(j["zoo"]["rows"].size()) +
                    " rows, " + std::to_string(mismatches) + " mismatches, relations " + std::to_string(witnessed) +
                    "/5 witnessed, " + fmt_seconds(took)};
}

Outcome midpoint_exclusion() {
  const auto start = Clock::now();
  const MidpointReport primes = midpoint_exclusion_primes(1000);
  const MidpointReport naturals = midpoint_contrast_naturals(1000);
  const double took = seconds_since(start);
  std::set<long long> hit;
  for (const auto& v : naturals.violations) {
    if (v.second == 0 && v.midpoint == QuadExt(make_rational(1, 2 * v.first))) hit.insert(v.first);
  }
  bool every = true;
  for (long long n = 1; n <= 500; ++n) every = every && hit.count(n);
  const bool pass = primes.holds() && primes.pairs_checked > 13000 && every && took < 10;
  return {pass, std::to_string(primes.pairs_checked) + " prime pairs, " + std::to_string(primes.violations.size()) +
                    " violations; contrast hits " + std::to_string(hit.size()) + " of n <= 500; " +
                    fmt_seconds(took)};
}

Outcome modulus_inequality() {
  std::mt19937_64 rng(20240601);
  const AnalysisConfig config;
  std::size_t failures = 0, checks = 0, oracle_mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const cases::FiniteCase c = cases::random_finite(rng);
    for (const auto& delta : config.delta_schedule) {
      const QuadExt sym = sym_oscillation(c.domain, c.domain, c.function, delta, config).oscillation;
      const QuadExt uc = uc_oscillation(c.domain, c.function, delta * QuadExt(2), config).oscillation;
      ++checks;
      failures += uc < sym;
      oracle_mismatches += sym != oracle::omega_sym(c.sample, delta) ||
                           uc != oracle::omega_uc(c.sample, delta * QuadExt(2));
    }
  }
  return {failures == 0 && oracle_mismatches == 0,
          std::to_string(checks) + " (domain, delta) checks, " + std::to_string(failures) + " failures, " +
              std::to_string(oracle_mismatches) + " disagreements with brute force"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  const AnalysisConfig config;
  std::size_t disagree = 0, with_pairs = 0;
  for (int i = 0; i < 200; ++i) {
    const cases::FiniteCase c = cases::random_finite(rng);
    const Verdict v = classify(c.domain, c.function, config)[3];
    const bool oracle_usc = oracle::usc_holds(c.sample);
    const bool proven = v.status == Status::Proven && v.certificate.has_value();
    disagree += proven != oracle_usc;
    with_pairs += !oracle::omega_sym(c.sample, QuadExt(1000)).is_zero();
  }
  return {disagree == 0, "200 domains (" + std::to_string(with_pairs) + " with oscillating symmetric pairs), " +
                             std::to_string(disagree) + " disagreements"};
}

Outcome staircase_checks() {
  const StaircaseProofReport proof = verify_staircase_proof({StaircaseVariant::A, 500}, 500);
  const auto rows = verify_staircase_witness(500);
  std::size_t bad = 0;
  for (const auto& r : rows) bad += !r.ok();
  const bool pass = proof.rows.size() == 500 && proof.all_pass() && rows.size() == 500 && bad == 0;
  std::string detail = "variant A: " + std::to_string(proof.rows.size()) + " blocks, ";
  detail += proof.all_pass() ? "all checks pass" : "first failure at k = " + std::to_string(*proof.first_failure());
  detail += "; variant B: " + std::to_string(rows.size() - bad) + " of " + std::to_string(rows.size()) +
            " witness pairs with midpoint in block and oscillation 2";
  return {pass, detail};
}

Outcome interval_decision() {
  const AnalysisConfig config;
  const DomainSpec df = DomainSpec::interval_union({IntervalPiece::closed(QuadExt(0), QuadExt(1)),
                                                    IntervalPiece::closed(QuadExt(2), QuadExt(3))});
  const FuncSpec f = FuncSpec::piecewise(
      {{DomainSpec::interval_union({IntervalPiece::closed(QuadExt(0), QuadExt(1))}), Identity{}},
       {DomainSpec::interval_union({IntervalPiece::closed(QuadExt(2), QuadExt(3))}), Affine{QuadExt(1), QuadExt(-2)}}});
  const DomainSpec dg = DomainSpec::interval_union({IntervalPiece::open(QuadExt(0), QuadExt(1)),
                                                    IntervalPiece::open(QuadExt(1), QuadExt(2))});
  const FuncSpec g = FuncSpec::piecewise(
      {{DomainSpec::interval_union({IntervalPiece::open(QuadExt(0), QuadExt(1))}), Const{QuadExt(1)}},
       {DomainSpec::interval_union({IntervalPiece::open(QuadExt(1), QuadExt(2))}), Const{QuadExt(2)}}});
  const auto vf = classify(df, f, config);
  const auto vg = classify(dg, g, config);
  const auto decided = [](const Verdict& v, Status s) {
    return v.status == s && v.certificate && v.certificate->kind == CertificateKind::IntervalDecision;
  };
  bool named = decided(vf[1], Status::Proven) && decided(vf[3], Status::Proven) && decided(vg[1], Status::Refuted) &&
               decided(vg[3], Status::Refuted);
  for (long n = 1; n <= 1000 && named; ++n) {
    const QuadExt x = QuadExt(1) + QuadExt(make_rational(1, n + 1));
    const QuadExt y = QuadExt(1) - QuadExt(make_rational(1, n + 1));
    named = contains(dg, x) && contains(dg, y) &&
            abs(evaluate(g, x) - evaluate(g, y)) == QuadExt(1);
  }

  std::mt19937_64 rng(7);
  AnalysisConfig sweep = config;
  sweep.grid_exponent = 12;
  std::size_t agree = 0, refuted = 0;
  for (int i = 0; i < 100; ++i) {
    const cases::IntervalCase c = cases::random_intervals(rng);
    const auto v = classify(c.domain, c.function, config);
    const Verdict su = modulus_sweep(c.domain, c.function, Notion::UC, sweep);
    const Verdict ss = modulus_sweep(c.domain, c.function, Notion::USC, sweep);
    const bool ok = (v[1].status == Status::Refuted) == (su.status == Status::Refuted) &&
                    (v[3].status == Status::Refuted) == (ss.status == Status::Refuted) &&
                    v[1].status != Status::NoViolationAtResolution && v[3].status != Status::NoViolationAtResolution;
    agree += ok;
    refuted += v[1].status == Status::Refuted;
    if (!ok) {
      std::cerr << "interval case " << i << ": " << describe(c.domain) << " / " << describe(c.function)
                << " decision UC " << to_string(v[1].status) << " USC " << to_string(v[3].status) << ", sweep UC "
                << to_string(su.status) << " USC " << to_string(ss.status) << '\n';
    }
  }
  return {named && agree == 100, std::string("named cases ") + (named ? "decided as expected" : "wrong") + "; " +
                                     std::to_string(agree) + " of 100 random unions agree with the sweep (" +
                                     std::to_string(refuted) + " not UC)"};
}

Outcome quadext_arithmetic() {
  std::mt19937_64 rng(99);
  std::size_t failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const QuadExt x = oracle::random_quadext(rng), y = oracle::random_quadext(rng), z = oracle::random_quadext(rng);
    failures += parse_quadext(to_string(x)) != x;
    failures += x.sign() != oracle::sign(x);
    const int by_oracle = oracle::sign(x - y);
    const int by_lib = (x < y) ? -1 : (x == y ? 0 : 1);
    failures += by_oracle != by_lib;
    failures += cmp(oracle::approx(x), oracle::approx(y)) * by_oracle < 0;
    if (x < y) failures += !(x + z < y + z) || (z.sign() > 0 && !(x * z < y * z));
    const Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng);
    failures += (a < b) != (QuadExt(a) < QuadExt(b));
  }
  std::size_t mid_fail = 0;
  for (int i = 0; i < 1000; ++i) {
    const QuadExt q(oracle::random_rational(rng));
    mid_fail += midpoint(q, QuadExt::sqrt2()).irr() != Rational(1, 2);
  }
  const DomainSpec d = DomainSpec::truncated_rationals(200, Rational(1), Rational(2), true);
  const FuncSpec f = FuncSpec::piecewise(
      {{DomainSpec::truncated_rationals(200, Rational(1), Rational(2), false), Const{QuadExt(1)}},
       {DomainSpec::finite_points({QuadExt::sqrt2()}), Const{QuadExt::sqrt2()}}});
  const ModulusProfile p = sym_profile(d, d, f, AnalysisConfig{});
  bool zero = !p.values.empty();
  for (const auto& e : p.values) zero = zero && e.oscillation.is_zero();
  return {failures == 0 && mid_fail == 0 && zero,
          "10000 rounds, " + std::to_string(failures) + " failures; " + std::to_string(mid_fail) +
              " midpoint failures in 1000; sym modulus on the truncation " + (zero ? "identically 0" : "nonzero")};
}

Outcome determinism(const std::string& cli) {
  const std::string cmd = "'" + cli + "' zoo --all --format json";
  const CommandResult a = run_command(cmd);
  const CommandResult b = run_command(cmd);
  const bool pass = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
  return {pass, std::to_string(a.out.size()) + " bytes, " + (a.out == b.out ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-symcont>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::array<std::pair<const char*, std::function<Outcome()>>, 8> criteria{{
      {"zoo reproduction", [&] { return zoo_reproduction(cli); }},
      {"midpoint exclusion", midpoint_exclusion},
      {"modulus inequality", modulus_inequality},
      {"oracle equivalence", oracle_equivalence},
      {"staircase proof", staircase_checks},
      {"interval decision", interval_decision},
      {"quadratic field arithmetic", quadext_arithmetic},
      {"determinism", [&] { return determinism(cli); }},
  }};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
