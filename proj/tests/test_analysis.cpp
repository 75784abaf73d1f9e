#include <doctest.h>

#include <random>

#include "random_cases.hpp"
#include "symcont/analysis.hpp"
#include "symcont/error.hpp"

using namespace symcont;

namespace {
QuadExt q(long long n, long long d = 1) { return QuadExt(make_rational(n, d)); }

AnalysisConfig short_schedule() {
  AnalysisConfig c;
  c.delta_schedule.clear();
  for (int j = 0; j <= 8; ++j) c.delta_schedule.push_back(halve(QuadExt(1), static_cast<unsigned>(j)));
  return c;
}
}  // namespace

TEST_CASE("configuration validation") {
  AnalysisConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.delta_schedule.size() == 21);
  CHECK(c.delta_schedule.back() == q(1, 1048576));
  c.delta_schedule = {q(1, 2), QuadExt(1)};
  CHECK_THROWS_AS(c.validate(), ConfigurationError);
  c.delta_schedule = {QuadExt(1), QuadExt(0)};
  CHECK_THROWS_AS(c.validate(), ConfigurationError);
  c.delta_schedule = {};
  CHECK_THROWS_AS(c.validate(), ConfigurationError);
  c = AnalysisConfig{};
  c.grid_exponent = 25;
  CHECK_THROWS_AS(c.validate(), ConfigurationError);
  c = AnalysisConfig{};
  c.enum_limit = 0;
  CHECK_THROWS_AS(c.validate(), ConfigurationError);
}

TEST_CASE("notion names") {
  CHECK(parse_notion("usc") == Notion::USC);
  CHECK(parse_notion("Uc") == Notion::UC);
  CHECK_FALSE(parse_notion("continuous").has_value());
  CHECK(to_string(Notion::USC_wrt_B) == "USC_wrt_B");
  CHECK(to_string(Status::NoViolationAtResolution) == "NoViolationAtResolution");
}

TEST_CASE("moduli match brute force and satisfy the doubling inequality") {
  std::mt19937_64 rng(42);
  const AnalysisConfig config = short_schedule();
  for (int t = 0; t < 60; ++t) {
    const cases::FiniteCase c = cases::random_finite(rng, 30);
    for (const auto& delta : config.delta_schedule) {
      const auto sym = sym_oscillation(c.domain, c.domain, c.function, delta, config);
      const auto uc = uc_oscillation(c.domain, c.function, QuadExt(2) * delta, config);
      CHECK(sym.oscillation == oracle::omega_sym(c.sample, delta));
      CHECK(uc.oscillation == oracle::omega_uc(c.sample, QuadExt(2) * delta));
      CHECK(sym.oscillation <= uc.oscillation);
      if (sym.witness) {
        CHECK(sym.witness->scale < delta);
        CHECK(abs(evaluate(c.function, sym.witness->x) - evaluate(c.function, sym.witness->y)) == sym.oscillation);
      }
    }
  }
}

TEST_CASE("finite sets are uniformly discrete") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const cases::FiniteCase c = cases::random_finite(rng, 20);
    const auto v = classify(c.domain, c.function, AnalysisConfig{});
    REQUIRE(v.size() == 4);
    for (const auto& verdict : v) {
      CHECK(verdict.status == Status::Proven);
      REQUIRE(verdict.certificate.has_value());
    }
    CHECK(oracle::usc_holds(c.sample));
  }
}

TEST_CASE("midpoint-free domain proves USC without a sweep") {
  const auto d = DomainSpec::odd_prime_reciprocals(200, true);
  const FuncSpec f = FuncSpec::piecewise({{DomainSpec::odd_prime_reciprocals(200, false), Const{QuadExt(1)}},
                                          {DomainSpec::finite_points({QuadExt(0)}), Const{QuadExt(0)}}});
  const auto v = classify(d, f, AnalysisConfig{});
  CHECK(v[3].status == Status::Proven);
  CHECK(v[3].certificate->kind == CertificateKind::MidpointFree);
  CHECK(v[0].status == Status::Refuted);
  REQUIRE(v[0].witness.has_value());
  CHECK(verify_witness(*v[0].witness, d, f).ok);
}

TEST_CASE("refutations carry witnesses that re-verify, and tampering is caught") {
  const auto d = DomainSpec::interval_union({{QuadExt(0), QuadExt(3), false, true}});
  const FuncSpec f = FuncSpec::single(d, Reciprocal{});
  const auto v = classify(d, f, AnalysisConfig{});
  REQUIRE(v[1].status == Status::Refuted);
  REQUIRE(v[1].witness.has_value());
  Witness w = *v[1].witness;
  CHECK(verify_witness(w, d, f).ok);
  w.terms.front().oscillation += QuadExt(1);
  CHECK_FALSE(verify_witness(w, d, f).ok);
  w = *v[1].witness;
  w.terms.back().delta = w.terms.back().scale;
  CHECK_FALSE(verify_witness(w, d, f).ok);
  w = *v[1].witness;
  w.terms.front().x = QuadExt(-1);
  CHECK_FALSE(verify_witness(w, d, f).ok);
}

TEST_CASE("subset checks") {
  const auto a = DomainSpec::natural_reciprocals(20, true);
  const FuncSpec f = FuncSpec::single(a, Identity{});
  CHECK_THROWS_AS(check_wrt_subset(a, DomainSpec::integer_window(0, 2), f, AnalysisConfig{}), PreconditionError);
  const Verdict v = check_wrt_subset(a, DomainSpec::finite_points({QuadExt(0), QuadExt(1)}), f, AnalysisConfig{});
  CHECK(v.notion == Notion::USC_wrt_B);
  CHECK(v.status != Status::Refuted);
  CHECK_THROWS_AS(modulus_sweep(a, f, Notion::USC_wrt_B, AnalysisConfig{}), ConfigurationError);
}

TEST_CASE("constant function has a zero profile") {
  const auto d = DomainSpec::natural_reciprocals(50, true);
  const FuncSpec f = FuncSpec::single(d, Const{q(7, 3)});
  for (const auto& p : {sym_profile(d, d, f, AnalysisConfig{}), uc_profile(d, f, AnalysisConfig{})}) {
    REQUIRE(p.values.size() == 21);
    for (const auto& e : p.values) {
      CHECK(e.oscillation.is_zero());
      CHECK_FALSE(e.witness.has_value());
    }
  }
}

TEST_CASE("implication suite holds on random finite sets") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const cases::FiniteCase c = cases::random_finite(rng, 25);
    const ImplicationReport r = implication_suite(c.domain, c.function, short_schedule());
    CHECK(r.ok());
    CHECK(r.rows.size() == 9);
  }
}

TEST_CASE("modulus sweep refutes a jump and leaves a line alone") {
  AnalysisConfig config;
  config.grid_exponent = 8;
  const std::vector<IntervalPiece> pieces{{QuadExt(0), QuadExt(1), true, false}, IntervalPiece::closed(QuadExt(1), QuadExt(2))};
  const auto d = DomainSpec::interval_union(pieces);
  const FuncSpec step = FuncSpec::piecewise({{DomainSpec::interval_union({pieces[0]}), Const{QuadExt(0)}},
                                             {DomainSpec::interval_union({pieces[1]}), Const{QuadExt(1)}}});
  for (Notion n : {Notion::UC, Notion::USC}) {
    const Verdict v = modulus_sweep(d, step, n, config);
    CHECK(v.status == Status::Refuted);
    REQUIRE(v.witness.has_value());
    CHECK(verify_witness(*v.witness, d, step).ok);
  }
  const FuncSpec line = FuncSpec::single(d, Affine{QuadExt(3), QuadExt(1)});
  CHECK(modulus_sweep(d, line, Notion::UC, config).status == Status::NoViolationAtResolution);
  CHECK(modulus_sweep(d, line, Notion::USC, config).status == Status::NoViolationAtResolution);
}

TEST_CASE("a uniform limit keeps the transfer bound") {
  const auto d = DomainSpec::natural_reciprocals(60, true);
  const FuncSpec f = FuncSpec::single(d, Identity{});
  std::vector<FuncSpec> seq;
  for (long n = 1; n <= 4; ++n) seq.push_back(FuncSpec::single(d, Affine{QuadExt(1), q(1, n)}));
  const TransferReport r = uniform_limit_transfer(seq, f, d, short_schedule());
  CHECK(r.all_hold);
  CHECK(r.decreasing);
  CHECK(r.sup_dist.back() == q(1, 4));
}
