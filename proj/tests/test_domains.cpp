#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "symcont/domains.hpp"
#include "symcont/error.hpp"

using namespace symcont;

namespace {
QuadExt q(long long n, long long d = 1) { return QuadExt(make_rational(n, d)); }
}  // namespace

TEST_CASE("membership per variant") {
  const auto primes = DomainSpec::odd_prime_reciprocals(50, true);
  CHECK(contains(primes, q(1, 47)));
  CHECK(contains(primes, QuadExt(0)));
  CHECK_FALSE(contains(primes, q(1, 49)));
  CHECK_FALSE(contains(primes, q(1, 2)));
  CHECK_FALSE(contains(primes, q(1, 53)));
  CHECK_FALSE(contains(DomainSpec::odd_prime_reciprocals(50, false), QuadExt(0)));

  const auto naturals = DomainSpec::natural_reciprocals(10, true);
  CHECK(contains(naturals, q(1, 10)));
  CHECK(contains(naturals, QuadExt(1)));
  CHECK_FALSE(contains(naturals, q(2, 3)));

  const auto tr = DomainSpec::truncated_rationals(6, Rational(1), Rational(2), true);
  CHECK(contains(tr, q(7, 6)));
  CHECK(contains(tr, QuadExt::sqrt2()));
  CHECK_FALSE(contains(tr, q(8, 7)));
  CHECK_FALSE(contains(tr, q(13, 6)));

  const auto iw = DomainSpec::integer_window(-3, 3);
  CHECK(contains(iw, QuadExt(-3)));
  CHECK_FALSE(contains(iw, q(1, 2)));

  const auto iu = DomainSpec::interval_union({IntervalPiece::open(QuadExt(0), QuadExt(1)), IntervalPiece::point(QuadExt(2))});
  CHECK(contains(iu, q(1, 2)));
  CHECK_FALSE(contains(iu, QuadExt(1)));
  CHECK(contains(iu, QuadExt(2)));
  CHECK(contains(iu, QuadExt::sqrt2() - QuadExt(1)));

  const auto u = DomainSpec::union_of({iw, DomainSpec::finite_points({QuadExt::sqrt2()})});
  CHECK(contains(u, QuadExt::sqrt2()));
  CHECK(contains(u, QuadExt(2)));
}

TEST_CASE("invalid domains are rejected") {
  CHECK_THROWS_AS(DomainSpec::integer_window(2, 1), SpecError);
  CHECK_THROWS_AS(DomainSpec::interval_union({IntervalPiece::open(QuadExt(1), QuadExt(1))}), SpecError);
  CHECK_THROWS_AS(DomainSpec::staircase({StaircaseVariant::A, 0}), SpecError);
  CHECK_THROWS_AS(DomainSpec::union_of({}), SpecError);
  CHECK_THROWS_AS(DomainSpec::truncated_rationals(0, Rational(0), Rational(1), false), SpecError);
}

TEST_CASE("odd primes match trial division") {
  const auto ps = odd_primes_up_to(2000);
  std::vector<long long> expected;
  for (long long n = 3; n <= 2000; ++n) {
    if (oracle::is_prime(n)) expected.push_back(n);
  }
  CHECK(ps == expected);
  CHECK(ps.size() == 302);
}

TEST_CASE("enumeration is sorted, limited and flags truncation") {
  const auto d = DomainSpec::natural_reciprocals(100, true);
  const PointList all = enumerate_points(d, 1000);
  CHECK(all.points.size() == 101);
  CHECK(all.points.front() == QuadExt(0));
  CHECK(std::is_sorted(all.points.begin(), all.points.end()));
  CHECK_FALSE(all.truncated);
  const PointList some = enumerate_points(d, 10);
  CHECK(some.points.size() == 10);
  CHECK(some.truncated);
  const PointList windowed = enumerate_points(d, 1000, Window{q(1, 4), q(1, 2)});
  CHECK(windowed.points.size() == 3);

  const auto tr = DomainSpec::truncated_rationals(5, Rational(0), Rational(1), false);
  std::set<Rational> farey;
  for (long long den = 1; den <= 5; ++den) {
    for (long long num = 0; num <= den; ++num) farey.insert(make_rational(num, den));
  }
  CHECK(enumerate_points(tr, 1000).points.size() == farey.size());

  CHECK_THROWS_AS(enumerate_points(DomainSpec::interval_union({IntervalPiece::closed(QuadExt(0), QuadExt(1))}), 10),
                  NotEnumerableError);
}

TEST_CASE("sampling a closed interval hits both ends") {
  SamplingOptions o;
  o.grid_exponent = 3;
  const auto d = DomainSpec::interval_union({IntervalPiece::closed(QuadExt(0), QuadExt(1))});
  const PointList p = sample_points(d, o);
  CHECK(p.sampled);
  CHECK(p.points.size() == 9);
  CHECK(p.points.front() == QuadExt(0));
  CHECK(p.points.back() == QuadExt(1));
  const auto open = DomainSpec::interval_union({IntervalPiece::open(QuadExt(0), QuadExt(1))});
  for (const auto& x : sample_points(open, o).points) CHECK(contains(open, x));
}

TEST_CASE("merging interval pieces") {
  const std::vector<IntervalPiece> glued{{QuadExt(0), QuadExt(1), false, false}, {QuadExt(1), QuadExt(2), false, false}};
  const MergeResult g = merge_interval_components(glued);
  REQUIRE(g.components.size() == 1);
  CHECK(g.components[0].glued_points == std::vector<QuadExt>{QuadExt(1)});
  CHECK(g.gaps.empty());

  const std::vector<IntervalPiece> apart{IntervalPiece::closed(QuadExt(2), QuadExt(3)),
                                         IntervalPiece::closed(QuadExt(0), QuadExt(1))};
  const MergeResult a = merge_interval_components(apart);
  REQUIRE(a.components.size() == 2);
  CHECK(a.components[0].span.hi == QuadExt(1));
  CHECK(a.gaps == std::vector<QuadExt>{QuadExt(1)});

  const std::vector<IntervalPiece> overlap{IntervalPiece::closed(QuadExt(0), QuadExt(1)),
                                           IntervalPiece::closed(QuadExt(1), QuadExt(2))};
  try {
    merge_interval_components(overlap);
    FAIL("overlap not reported");
  } catch (const OverlapError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
  }
}

TEST_CASE("staircase breakpoints") {
  const auto a = staircase_breakpoints(StaircaseVariant::A, 8);
  CHECK(a == std::vector<QuadExt>{q(1), q(3, 2), q(5, 2), q(3), q(4), q(13, 3), q(29, 6), q(31, 6)});
  const auto b = staircase_breakpoints(StaircaseVariant::B, 5);
  CHECK(b == std::vector<QuadExt>{q(0), q(1), q(3, 2), q(11, 6), q(25, 12)});
  const StaircaseResult s = build_staircase({StaircaseVariant::B, 3});
  CHECK(contains(s.domain, q(7, 4)));
  CHECK_FALSE(contains(s.domain, q(5, 4)));
}

TEST_CASE("model structure") {
  SamplingOptions o;
  CHECK(model_kind(DomainSpec::integer_window(0, 3)) == ModelKind::ExactFinite);
  CHECK(model_kind(DomainSpec::odd_prime_reciprocals(100, true)) == ModelKind::Truncation);
  CHECK(model_kind(DomainSpec::interval_union({IntervalPiece::closed(QuadExt(0), QuadExt(1))})) ==
        ModelKind::ExactContinuum);
  CHECK(model_resolution(DomainSpec::finite_points({QuadExt(1)}), o).is_zero());
  CHECK(model_resolution(DomainSpec::natural_reciprocals(100, true), o) == q(1, 25));
  CHECK(structurally_midpoint_free(DomainSpec::odd_prime_reciprocals(10, true)));
  CHECK_FALSE(structurally_midpoint_free(DomainSpec::natural_reciprocals(10, true)));
  CHECK(structural_gap(DomainSpec::integer_window(-5, 5), 100) == QuadExt(1));
  CHECK(structural_gap(DomainSpec::finite_points({QuadExt(0), q(1, 3), QuadExt(1)}), 100) == q(1, 3));
  CHECK_FALSE(structural_gap(DomainSpec::natural_reciprocals(10, true), 100).has_value());

  const auto d = DomainSpec::natural_reciprocals(30, true);
  const auto r = refine(d);
  for (const auto& x : enumerate_points(d, 1000).points) CHECK(contains(r, x));
  CHECK(refine(DomainSpec::integer_window(0, 3)) == DomainSpec::integer_window(0, 3));
}

TEST_CASE("symmetric pairs agree with brute force") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::set<QuadExt> drawn;
    while (drawn.size() < 25) drawn.insert(oracle::lattice_point(rng));
    const std::vector<QuadExt> pts(drawn.begin(), drawn.end());
    const auto d = DomainSpec::finite_points(pts);
    const QuadExt dmax = q(3);
    const PairList pl = symmetric_pairs(d, d, dmax, 100000);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const QuadExt h = halve(pts[j] - pts[i], 1);
        expected += h < dmax && oracle::member(pts, midpoint(pts[i], pts[j]));
      }
    }
    CHECK(pl.pairs.size() == expected);
    for (const auto& p : pl.pairs) {
      CHECK(p.x < p.y);
      CHECK(p.center == midpoint(p.x, p.y));
      CHECK(oracle::member(pts, p.center));
    }
  }
}

TEST_CASE("minimum gap") {
  const GapResult g = min_gap(DomainSpec::natural_reciprocals(10, false), 100);
  CHECK(g.value == q(1, 90));
  CHECK_FALSE(g.truncated);
}
