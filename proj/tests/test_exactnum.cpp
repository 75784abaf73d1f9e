#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "symcont/error.hpp"
#include "symcont/exactnum.hpp"

using namespace symcont;

namespace {
QuadExt q(long long n, long long d = 1) { return QuadExt(make_rational(n, d)); }
}  // namespace

TEST_CASE("rationals are canonical and parse both forms") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK_THROWS_AS(make_rational(1, 0), EvaluationError);
  CHECK_THROWS_AS(parse_rational("1/0"), SpecError);
  CHECK_THROWS_AS(parse_rational("1/"), SpecError);
  CHECK_THROWS_AS(parse_rational("x"), SpecError);
}

TEST_CASE("field operations in Q(sqrt2)") {
  const QuadExt r = QuadExt::sqrt2();
  CHECK(r * r == QuadExt(2));
  CHECK((QuadExt(1) + r) * (QuadExt(1) - r) == QuadExt(-1));
  CHECK(QuadExt(1) / (QuadExt(1) + r) == r - QuadExt(1));
  CHECK((QuadExt(3) + r).norm() == Rational(7));
  CHECK((QuadExt(3) + r).conjugate() == QuadExt(3) - r);
  CHECK(pow(r, 5) == QuadExt(Rational(0), Rational(4)));
  CHECK(qx_arith(ArithOp::neg, r, QuadExt(0)) == -r);
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), EvaluationError);
  CHECK_THROWS_AS(qx_arith(ArithOp::div, r, QuadExt(0)), EvaluationError);
}

TEST_CASE("order, floor and ceil") {
  const QuadExt r = QuadExt::sqrt2();
  CHECK(q(141, 100) < r);
  CHECK(r < q(142, 100));
  CHECK(q(99, 70) > r);  // 99/70 = 1.41428...
  CHECK((QuadExt(3) - QuadExt(2) * r).sign() == 1);
  CHECK((QuadExt(2) - QuadExt(2) * r).sign() == -1);
  CHECK(floor(r) == 1);
  CHECK(ceil(r) == 2);
  CHECK(floor(-r) == -2);
  CHECK(ceil(QuadExt(3)) == 3);
  CHECK(abs(QuadExt(1) - r) == r - QuadExt(1));
  CHECK(max(r, q(3, 2)) == q(3, 2));
  CHECK(min(r, q(3, 2)) == r);
  CHECK(qx_compare(r, q(3, 2)) == std::strong_ordering::less);
}

TEST_CASE("midpoint and halving are exact") {
  CHECK(midpoint(q(1), QuadExt::sqrt2()) == QuadExt(Rational(1, 2), Rational(1, 2)));
  CHECK(halve(QuadExt(3), 4) == q(3, 16));
  CHECK(halve(QuadExt::sqrt2(), 1).irr() == Rational(1, 2));
}

TEST_CASE("rendering and parsing") {
  CHECK(to_string(QuadExt(Rational(1), Rational(-1))) == "1 + -1*sqrt2");
  CHECK(to_string(QuadExt(Rational(0), Rational(1, 2))) == "0 + 1/2*sqrt2");
  CHECK(to_string(q(-7, 3)) == "-7/3");
  CHECK(parse_quadext("sqrt2") == QuadExt::sqrt2());
  CHECK(parse_quadext("-3/4*sqrt2") == QuadExt(Rational(0), Rational(-3, 4)));
  CHECK(parse_quadext("2 - 1/3*sqrt2") == QuadExt(Rational(2), Rational(-1, 3)));
  CHECK(parse_quadext(" 1/2 + 1/2*sqrt2 ") == QuadExt(Rational(1, 2), Rational(1, 2)));
  CHECK_THROWS_AS(parse_quadext("sqrt3"), SpecError);
  CHECK_THROWS_AS(parse_quadext(""), SpecError);
  CHECK_THROWS_AS(parse_quadext("1 + "), SpecError);
}

TEST_CASE("random round trips and sign agree with independent checks") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const QuadExt x = oracle::random_quadext(rng), y = oracle::random_quadext(rng);
    CHECK(parse_quadext(to_string(x)) == x);
    CHECK(x.sign() == oracle::sign(x));
    CHECK(((x - y).sign() < 0) == (x < y));
    CHECK(cmp(oracle::approx(x), oracle::approx(y)) * oracle::sign(x - y) >= 0);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(x.norm() == (x * x.conjugate()).rat());
  }
}

TEST_CASE("elements with tiny norm still compare exactly") {
  // 665857/470832 is a convergent of sqrt2; the difference is about 1.6e-12.
  const QuadExt c = q(665857, 470832);
  CHECK(c > QuadExt::sqrt2());
  CHECK((c - QuadExt::sqrt2()).sign() == 1);
  CHECK(oracle::sign(c - QuadExt::sqrt2()) == 1);
}
