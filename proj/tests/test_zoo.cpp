#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "symcont/error.hpp"
#include "symcont/zoo.hpp"

using namespace symcont;

TEST_CASE("catalog ids are stable and resolvable") {
  const auto ids = example_ids();
  CHECK(ids == std::vector<std::string>{"ex-2.4", "ex-2.5", "ex-2.7", "ex-2.8", "ex-3.2", "ex-3.3", "ex-3.5",
                                        "ex-3.6", "ex-3.7", "ex-3.8", "ex-3.9", "ex-4.3"});
  for (const auto& id : ids) {
    const PaperExample ex = build_example(id);
    CHECK(ex.id == id);
    CHECK_FALSE(ex.subjects.empty());
    CHECK(build_example(ex.slug).id == id);
    CHECK(build_example(id + "-" + ex.slug).id == id);
    for (const auto& s : ex.subjects) CHECK_FALSE(expectation_conflict(s.expected).has_value());
  }
  CHECK_THROWS_AS(build_example("ex-9.9"), SpecError);
}

TEST_CASE("expectation conflicts are detected") {
  const auto bad = std::vector<std::pair<Notion, Expected>>{{Notion::UC, Expected::Proven}, {Notion::C, Expected::Refuted}};
  CHECK(expectation_conflict(bad).has_value());
  const auto usc = std::vector<std::pair<Notion, Expected>>{{Notion::USC, Expected::Proven}, {Notion::SC, Expected::Refuted}};
  CHECK(expectation_conflict(usc).has_value());
}

TEST_CASE("midpoint exclusion against brute force at small bounds") {
  for (long long bound : {3LL, 10LL, 60LL}) {
    const MidpointReport r = midpoint_exclusion_primes(bound);
    std::vector<long long> ps;
    for (long long p = 3; p <= bound; ++p) {
      if (oracle::is_prime(p)) ps.push_back(p);
    }
    const std::size_t members = ps.size() + 1;
    CHECK(r.pairs_checked == members * (members - 1) / 2);
    CHECK(r.holds());
  }
  CHECK_THROWS_AS(midpoint_exclusion_primes(2), PreconditionError);

  const MidpointReport n = midpoint_contrast_naturals(20);
  REQUIRE(n.violations.size() == 10);
  for (std::size_t i = 0; i < n.violations.size(); ++i) {
    CHECK(n.violations[i].first == static_cast<long long>(i + 1));
    CHECK(n.violations[i].midpoint == QuadExt(make_rational(1, 2 * (static_cast<long long>(i) + 1))));
  }
}

TEST_CASE("staircase proof ingredients") {
  const StaircaseProofReport r = verify_staircase_proof({StaircaseVariant::A, 40}, 40);
  CHECK(r.rows.size() == 40);
  CHECK(r.all_pass());
  CHECK_FALSE(r.first_failure().has_value());
  CHECK_THROWS_AS(verify_staircase_proof({StaircaseVariant::B, 40}, 10), PreconditionError);
  CHECK_THROWS_AS(verify_staircase_proof({StaircaseVariant::A, 10}, 11), PreconditionError);

  const auto rows = verify_staircase_witness(30);
  REQUIRE(rows.size() == 30);
  for (const auto& row : rows) {
    CHECK(row.ok());
    CHECK(row.midpoint == midpoint(row.x, row.y));
  }
}

TEST_CASE("staircase step covers the requested blocks") {
  const FuncSpec f = staircase_step({StaircaseVariant::B, 5});
  const auto a = staircase_breakpoints(StaircaseVariant::B, 10);
  for (int i = 0; i < 5; ++i) CHECK(evaluate(f, a[2 * i]) == QuadExt(2 * i + 1));
}

TEST_CASE("single examples reproduce") {
  ZooBudget budget;
  budget.parallel = false;
  for (const char* id : {"ex-2.4", "ex-2.5", "ex-3.3", "ex-3.7", "ex-4.3"}) {
    const ZooReport r = run_all(budget, {id});
    CHECK_MESSAGE(r.all_match(), id);
    std::set<std::string> seen;
    for (const auto& row : r.rows) seen.insert(row.example);
    CHECK(seen == std::set<std::string>{id});
  }
}

TEST_CASE("random example honours the seed") {
  const PaperExample a = build_example("ex-3.6", 1), b = build_example("ex-3.6", 1), c = build_example("ex-3.6", 2);
  const auto& da = a.subjects.front();
  const auto& dc = c.subjects.front();
  const auto va = evaluate(da.function, QuadExt(17));
  CHECK(va == evaluate(b.subjects.front().function, QuadExt(17)));
  bool differs = false;
  for (long x = -20; x <= 20 && !differs; ++x) differs = evaluate(da.function, QuadExt(x)) != evaluate(dc.function, QuadExt(x));
  CHECK(differs);
}
