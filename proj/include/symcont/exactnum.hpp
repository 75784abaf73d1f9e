#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace symcont {

using Integer = mpz_class;
using Rational = mpq_class;

static_assert(sizeof(long) == sizeof(long long), "an LP64 platform is assumed");

inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

/// Canonical num/den; throws EvaluationError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long long num, long long den) {
  return make_rational(to_integer(num), to_integer(den));
}
std::string to_string(const Rational& r);
/// Accepts "p" or "p/q" with an optional sign.
Rational parse_rational(std::string_view text);

/// Exact element a + b*sqrt(2) of Q(sqrt 2).
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(long value) : rat_(value) {}
  QuadExt(Rational rat) : rat_(std::move(rat)) {}
  QuadExt(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

  static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

  const Rational& rat() const noexcept { return rat_; }
  const Rational& irr() const noexcept { return irr_; }
  bool is_rational() const { return sgn(irr_) == 0; }
  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  int sign() const;
  QuadExt conjugate() const { return QuadExt(rat_, -irr_); }
  /// a^2 - 2 b^2; nonzero for every nonzero element.
  Rational norm() const { return Rational(rat_ * rat_ - 2 * irr_ * irr_); }
  /// Nearest-double approximation, for display and fast filtering only.
  double approx() const;

  QuadExt operator-() const { return QuadExt(-rat_, -irr_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b);

private:
  Rational rat_;
  Rational irr_;
};

enum class ArithOp { add, sub, mul, div, neg };

/// Field operation; `neg` ignores y. Division by zero throws EvaluationError.
QuadExt qx_arith(ArithOp op, const QuadExt& x, const QuadExt& y);
std::strong_ordering qx_compare(const QuadExt& x, const QuadExt& y);
QuadExt midpoint(const QuadExt& x, const QuadExt& y);
/// x / 2^k, exact.
QuadExt halve(const QuadExt& x, unsigned k = 1);
QuadExt abs(const QuadExt& x);
const QuadExt& max(const QuadExt& x, const QuadExt& y);
const QuadExt& min(const QuadExt& x, const QuadExt& y);
/// Largest integer n with n <= x.
Integer floor(const QuadExt& x);
Integer ceil(const QuadExt& x);
QuadExt pow(const QuadExt& x, unsigned n);

/// "a" when b = 0, otherwise "a + b*sqrt2" (b keeps its sign, e.g. "1 + -1*sqrt2").
std::string to_string(const QuadExt& x);
/// Accepts the rendering grammar plus "sqrt2", "b*sqrt2", "a - b*sqrt2".
QuadExt parse_quadext(std::string_view text);

}  // namespace symcont
