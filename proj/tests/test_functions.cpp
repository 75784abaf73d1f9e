#include <doctest.h>

#include "symcont/error.hpp"
#include "symcont/functions.hpp"

using namespace symcont;

namespace {
QuadExt q(long long n, long long d = 1) { return QuadExt(make_rational(n, d)); }
DomainSpec closed(long long lo, long long hi) {
  return DomainSpec::interval_union({IntervalPiece::closed(QuadExt(lo), QuadExt(hi))});
}
}  // namespace

TEST_CASE("formulas") {
  CHECK(apply(Const{q(3, 4)}, QuadExt(9)) == q(3, 4));
  CHECK(apply(Identity{}, QuadExt::sqrt2()) == QuadExt::sqrt2());
  CHECK(apply(Affine{QuadExt(2), QuadExt(-1)}, q(1, 2)) == QuadExt(0));
  CHECK(apply(Reciprocal{}, QuadExt::sqrt2()) == QuadExt(Rational(0), Rational(1, 2)));
  CHECK(apply(Monomial{3}, QuadExt::sqrt2()) == QuadExt(Rational(0), Rational(2)));
  CHECK_THROWS_AS(apply(Reciprocal{}, QuadExt(0)), EvaluationError);
}

TEST_CASE("piecewise evaluation: first governing piece decides") {
  const FuncSpec f = FuncSpec::piecewise({{closed(0, 1), Const{QuadExt(1)}}, {closed(1, 2), Const{QuadExt(2)}}});
  CHECK(evaluate(f, q(1, 2)) == QuadExt(1));
  CHECK(evaluate(f, QuadExt(1)) == QuadExt(1));
  CHECK(evaluate(f, q(3, 2)) == QuadExt(2));
  CHECK_THROWS_AS(evaluate(f, QuadExt(3)), DomainError);
  CHECK_THROWS_AS(evaluate_checked(f, QuadExt(1)), ConfigurationError);
  CHECK(evaluate_checked(f, q(3, 2)) == QuadExt(2));
  CHECK_THROWS_AS(FuncSpec::piecewise({}), SpecError);
}

TEST_CASE("combinations") {
  const FuncSpec x = FuncSpec::single(closed(-2, 2), Identity{});
  const FuncSpec one = FuncSpec::single(closed(-2, 2), Const{QuadExt(1)});
  CHECK(evaluate(combine(CombineOp::mul(), {x, x}), QuadExt::sqrt2()) == QuadExt(2));
  CHECK(evaluate(combine(CombineOp::add(), {x, one}), QuadExt(1)) == QuadExt(2));
  CHECK(evaluate(combine(CombineOp::sub(), {x, one}), QuadExt(1)) == QuadExt(0));
  CHECK(evaluate(combine(CombineOp::scale(q(1, 2)), {x}), QuadExt(1)) == q(1, 2));
  CHECK(evaluate(combine(CombineOp::div(), {one, x}), QuadExt(2)) == q(1, 2));
  CHECK_THROWS_AS(evaluate(combine(CombineOp::div(), {one, x}), QuadExt(0)), EvaluationError);
  CHECK_THROWS_AS(combine(CombineOp::add(), {x}), SpecError);
  CHECK_THROWS_AS(combine(CombineOp::scale(QuadExt(2)), {x, x}), SpecError);
}

TEST_CASE("one-sided limits at glued points") {
  const FuncSpec f = FuncSpec::piecewise(
      {{DomainSpec::interval_union({{QuadExt(0), QuadExt(1), true, false}}), Identity{}},
       {closed(1, 2), Const{QuadExt(5)}}});
  const OneSidedLimits l = one_sided_limits(f, QuadExt(1));
  CHECK(l.left == QuadExt(1));
  CHECK(l.right == QuadExt(5));
  const OneSidedLimits end = one_sided_limits(f, QuadExt(0));
  CHECK_FALSE(end.left.has_value());
  CHECK(end.right == QuadExt(0));
  CHECK(left_adjacent(closed(0, 1), QuadExt(1)));
  CHECK_FALSE(right_adjacent(closed(0, 1), QuadExt(1)));
}

TEST_CASE("boundedness") {
  const auto half_open = DomainSpec::interval_union({{QuadExt(0), QuadExt(3), false, true}});
  CHECK_FALSE(bounded_on(FuncSpec::single(half_open, Reciprocal{}), half_open, 1000).bounded);
  const auto away = DomainSpec::interval_union({IntervalPiece::closed(q(1, 2), QuadExt(3))});
  const BoundReport b = bounded_on(FuncSpec::single(away, Reciprocal{}), away, 1000);
  CHECK(b.bounded);
  CHECK(b.bound == QuadExt(2));
  const auto primes = DomainSpec::odd_prime_reciprocals(100, false);
  const BoundReport p = bounded_on(FuncSpec::single(primes, Reciprocal{}), primes, 1000);
  CHECK(p.bound == QuadExt(97));
}
