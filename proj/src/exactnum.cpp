#include "symcont/exactnum.hpp"

#include <cmath>
#include <regex>

#include "symcont/error.hpp"

namespace symcont {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw EvaluationError("division by zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw SpecError("malformed rational '" + std::string(text) + "'");
  }
  std::string digits = m[1].str();
  if (digits.front() == '+') digits.erase(0, 1);
  Integer num(digits);
  Integer den(1);
  if (m[2].matched) {
    den = Integer(m[2].str());
    if (sgn(den) == 0) throw SpecError("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

int QuadExt::sign() const {
  const int sa = sgn(rat_);
  const int sb = sgn(irr_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 2b^2 decides; equality is impossible.
  const int c = cmp(Rational(rat_ * rat_), Rational(2 * irr_ * irr_));
  return c > 0 ? sa : sb;
}

double QuadExt::approx() const { return rat_.get_d() + irr_.get_d() * M_SQRT2; }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  if (sgn(irr_) == 0 && sgn(o.irr_) == 0) {
    rat_ *= o.rat_;
    return *this;
  }
  Rational a = rat_ * o.rat_ + 2 * irr_ * o.irr_;
  Rational b = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(a);
  irr_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw EvaluationError("division by zero");
  if (sgn(o.irr_) == 0) {
    rat_ /= o.rat_;
    irr_ /= o.rat_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conjugate();
  rat_ /= n;
  irr_ /= n;
  return *this;
}

std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
  int s;
  if (sgn(a.irr_) == 0 && sgn(b.irr_) == 0) {
    s = cmp(a.rat_, b.rat_);
  } else {
    s = (a - b).sign();
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadExt qx_arith(ArithOp op, const QuadExt& x, const QuadExt& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
    case ArithOp::neg: return -x;
  }
  throw Error("unknown arithmetic operation");
}

std::strong_ordering qx_compare(const QuadExt& x, const QuadExt& y) { return x <=> y; }

QuadExt halve(const QuadExt& x, unsigned k) {
  Rational a, b;
  mpq_div_2exp(a.get_mpq_t(), x.rat().get_mpq_t(), k);
  mpq_div_2exp(b.get_mpq_t(), x.irr().get_mpq_t(), k);
  return QuadExt(std::move(a), std::move(b));
}

QuadExt midpoint(const QuadExt& x, const QuadExt& y) { return halve(x + y); }

QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

const QuadExt& max(const QuadExt& x, const QuadExt& y) { return x < y ? y : x; }
const QuadExt& min(const QuadExt& x, const QuadExt& y) { return y < x ? y : x; }

namespace {

Integer floor_rational(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

}  // namespace

Integer floor(const QuadExt& x) {
  if (x.is_rational()) return floor_rational(x.rat());
  // High-precision estimate, then exact correction.
  const auto bits = [](const Rational& r) {
    return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
  };
  const mp_bitcnt_t prec = 128 + 2 * (bits(x.rat()) + bits(x.irr()));
  mpf_class root2(2, prec);
  root2 = sqrt(root2);
  mpf_class value(x.rat(), prec);
  value += mpf_class(x.irr(), prec) * root2;
  mpf_class fl(0, prec);
  mpf_floor(fl.get_mpf_t(), value.get_mpf_t());
  Integer n(fl);
  while (QuadExt(Rational(n)) > x) --n;
  while (QuadExt(Rational(n + 1)) <= x) ++n;
  return n;
}

Integer ceil(const QuadExt& x) {
  Integer n = floor(x);
  if (QuadExt(Rational(n)) != x) ++n;
  return n;
}

QuadExt pow(const QuadExt& x, unsigned n) {
  QuadExt result(1);
  QuadExt base = x;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.rat());
  return to_string(x.rat()) + " + " + to_string(x.irr()) + "*sqrt2";
}

QuadExt parse_quadext(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact.push_back(c);
  }
  static const std::string rat = R"([+-]?[0-9]+(?:/[0-9]+)?)";
  static const std::regex full("(" + rat + ")(?:([+-])(?:(" + rat + R"()\*)?sqrt2)?)");
  static const std::regex pure(R"(([+-]?)(?:()" + rat + R"()\*)?sqrt2)");
  std::smatch m;
  try {
    if (std::regex_match(compact, m, full)) {
      Rational a = parse_rational(m[1].str());
      if (!m[2].matched) return QuadExt(std::move(a));
      Rational b = m[3].matched ? parse_rational(m[3].str()) : Rational(1);
      if (m[2].str() == "-") b = -b;
      return QuadExt(std::move(a), std::move(b));
    }
    if (std::regex_match(compact, m, pure)) {
      Rational b = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
      if (m[1].str() == "-") b = -b;
      return QuadExt(Rational(0), std::move(b));
    }
  } catch (const SpecError&) {
  }
  throw SpecError("malformed number '" + std::string(text) +
                  "' (expected \"p/q\" or \"a + b*sqrt2\")");
}

}  // namespace symcont
