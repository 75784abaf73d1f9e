#include "symcont/functions.hpp"

#include <algorithm>

#include "symcont/error.hpp"

namespace symcont {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

QuadExt apply(const Formula& formula, const QuadExt& x) {
  return std::visit(overloaded{
                        [&](const Const& c) { return c.c; },
                        [&](const Identity&) { return x; },
                        [&](const Affine& a) { return a.m * x + a.c; },
                        [&](const Reciprocal&) {
                          if (x.is_zero()) throw EvaluationError("1/x evaluated at 0");
                          return QuadExt(1) / x;
                        },
                        [&](const Monomial& m) { return pow(x, m.n); },
                    },
                    formula);
}

std::string describe(const Formula& formula) {
  return std::visit(overloaded{
                        [](const Const& c) { return "Const(" + to_string(c.c) + ")"; },
                        [](const Identity&) { return std::string("Identity"); },
                        [](const Affine& a) { return "Affine(" + to_string(a.m) + ", " + to_string(a.c) + ")"; },
                        [](const Reciprocal&) { return std::string("Reciprocal"); },
                        [](const Monomial& m) { return "Monomial(" + std::to_string(m.n) + ")"; },
                    },
                    formula);
}

FuncSpec FuncSpec::piecewise(std::vector<Piece> pieces) {
  if (pieces.empty()) throw SpecError("Piecewise requires at least one piece");
  for (const auto& p : pieces) {
    if (const auto* m = std::get_if<Monomial>(&p.formula); m && m->n < 1) {
      throw SpecError("Monomial exponent must be at least 1");
    }
  }
  return FuncSpec(Piecewise{std::move(pieces)});
}

FuncSpec FuncSpec::single(DomainSpec region, Formula formula) {
  std::vector<Piece> pieces;
  pieces.push_back({std::move(region), std::move(formula)});
  return piecewise(std::move(pieces));
}

FuncSpec combine(const CombineOp& op, std::vector<FuncSpec> fs) {
  const std::size_t arity = op.kind == CombineKind::scale ? 1 : 2;
  if (fs.size() != arity) {
    throw SpecError("combinator expects " + std::to_string(arity) + " operand(s), got " + std::to_string(fs.size()));
  }
  return FuncSpec(Combined{op, std::move(fs)});
}

namespace {

QuadExt combine_values(const CombineOp& op, const std::vector<QuadExt>& v) {
  switch (op.kind) {
    case CombineKind::scale: return op.alpha * v[0];
    case CombineKind::add: return v[0] + v[1];
    case CombineKind::sub: return v[0] - v[1];
    case CombineKind::mul: return v[0] * v[1];
    case CombineKind::div:
      if (v[1].is_zero()) throw EvaluationError("division by a vanishing function value");
      return v[0] / v[1];
  }
  throw Error("unknown combinator");
}

QuadExt eval_impl(const FuncSpec& f, const QuadExt& x, bool checked) {
  if (const auto* pw = f.as_piecewise()) {
    const Piece* governing = nullptr;
    std::size_t count = 0;
    for (const auto& piece : pw->pieces) {
      if (!contains(piece.region, x)) continue;
      if (!governing) governing = &piece;
      ++count;
      if (!checked) break;
    }
    if (!governing) throw DomainError("point " + to_string(x) + " is not covered by any piece");
    if (count > 1) {
      throw ConfigurationError("point " + to_string(x) + " is governed by " + std::to_string(count) + " pieces");
    }
    return apply(governing->formula, x);
  }
  const auto& c = std::get<Combined>(f.node());
  std::vector<QuadExt> values;
  values.reserve(c.operands.size());
  for (const auto& operand : c.operands) values.push_back(eval_impl(operand, x, checked));
  return combine_values(c.op, values);
}

}  // namespace

QuadExt evaluate(const FuncSpec& f, const QuadExt& x) { return eval_impl(f, x, false); }

QuadExt evaluate_checked(const FuncSpec& f, const QuadExt& x) { return eval_impl(f, x, true); }

std::string describe(const FuncSpec& f) {
  if (const auto* pw = f.as_piecewise()) {
    std::string s = "Piecewise[";
    for (std::size_t i = 0; i < pw->pieces.size(); ++i) {
      if (i) s += "; ";
      s += describe(pw->pieces[i].region) + " -> " + describe(pw->pieces[i].formula);
    }
    return s + "]";
  }
  const auto& c = std::get<Combined>(f.node());
  static constexpr const char* names[] = {"scale", "add", "sub", "mul", "div"};
  std::string s = names[static_cast<int>(c.op.kind)];
  if (c.op.kind == CombineKind::scale) s += "(" + to_string(c.op.alpha) + ")";
  s += "(";
  for (std::size_t i = 0; i < c.operands.size(); ++i) {
    if (i) s += ", ";
    s += describe(c.operands[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Boundedness

namespace {

std::vector<IntervalPiece> interval_pieces(const DomainSpec& d) {
  if (const auto* u = std::get_if<IntervalUnion>(&d.variant())) return u->pieces;
  return {};
}

/// sup |formula| over an interval; nullopt when unbounded.
std::optional<QuadExt> formula_sup(const Formula& formula, const IntervalPiece& piece) {
  const QuadExt alo = abs(piece.lo), ahi = abs(piece.hi);
  return std::visit(overloaded{
                        [&](const Const& c) -> std::optional<QuadExt> { return abs(c.c); },
                        [&](const Identity&) -> std::optional<QuadExt> { return max(alo, ahi); },
                        [&](const Affine& a) -> std::optional<QuadExt> {
                          return max(abs(a.m * piece.lo + a.c), abs(a.m * piece.hi + a.c));
                        },
                        [&](const Monomial& m) -> std::optional<QuadExt> { return pow(max(alo, ahi), m.n); },
                        [&](const Reciprocal&) -> std::optional<QuadExt> {
                          if (piece.lo.sign() <= 0 && piece.hi.sign() >= 0) return std::nullopt;
                          return QuadExt(1) / min(alo, ahi);
                        },
                    },
                    formula);
}

std::optional<BoundReport> analytic_bound(const FuncSpec& f, const DomainSpec& d) {
  const auto* pw = f.as_piecewise();
  if (!pw) return std::nullopt;
  BoundReport out;
  out.analytic = true;
  const bool all_const = std::all_of(pw->pieces.begin(), pw->pieces.end(),
                                     [](const Piece& p) { return std::holds_alternative<Const>(p.formula); });
  if (all_const) {
    for (const auto& p : pw->pieces) out.bound = max(out.bound, abs(std::get<Const>(p.formula).c));
    return out;
  }
  const auto domain_pieces = interval_pieces(d);
  if (domain_pieces.empty()) return std::nullopt;
  for (const auto& p : pw->pieces) {
    const auto region_pieces = interval_pieces(p.region);
    if (region_pieces.empty()) return std::nullopt;
    for (const auto& rp : region_pieces) {
      for (const auto& dp : domain_pieces) {
        const auto atom = intersect(rp, dp);
        if (!atom) continue;
        const auto sup = formula_sup(p.formula, *atom);
        if (!sup) {
          out.bounded = false;
          continue;
        }
        out.bound = max(out.bound, *sup);
      }
    }
  }
  return out;
}

}  // namespace

BoundReport bounded_on(const FuncSpec& f, const DomainSpec& d, std::size_t limit, const SamplingOptions& sampling) {
  if (auto analytic = analytic_bound(f, d)) return *analytic;
  SamplingOptions opt = sampling;
  opt.enum_limit = limit;
  const PointList pts = sample_points(d, opt);
  BoundReport out;
  out.truncated = pts.truncated || pts.sampled || model_kind(d) == ModelKind::Truncation;
  for (const auto& x : pts.points) {
    QuadExt v = evaluate(f, x);
    QuadExt a = abs(v);
    if (!out.witness || a > out.bound) {
      out.bound = std::move(a);
      out.witness = std::make_pair(x, std::move(v));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// One-sided limits

namespace {

bool adjacent(const DomainSpec& d, const QuadExt& a, bool left) {
  const auto piece_adjacent = [&](const IntervalPiece& p) {
    if (p.degenerate()) return false;
    return left ? (p.lo < a && a <= p.hi) : (p.lo <= a && a < p.hi);
  };
  return std::visit(overloaded{
                        [&](const IntervalUnion& u) {
                          return std::any_of(u.pieces.begin(), u.pieces.end(), piece_adjacent);
                        },
                        [&](const Staircase& s) {
                          return std::any_of(s.pieces.begin(), s.pieces.end(), piece_adjacent);
                        },
                        [&](const UnionOf& u) {
                          return std::any_of(u.parts.begin(), u.parts.end(),
                                             [&](const DomainSpec& p) { return adjacent(p, a, left); });
                        },
                        [](const auto&) { return false; },
                    },
                    d.variant());
}

std::optional<QuadExt> formula_limit(const Formula& formula, const QuadExt& a) {
  if (std::holds_alternative<Reciprocal>(formula) && a.is_zero()) return std::nullopt;
  return apply(formula, a);
}

std::optional<QuadExt> side_limit(const FuncSpec& f, const QuadExt& a, bool left) {
  if (const auto* pw = f.as_piecewise()) {
    for (const auto& piece : pw->pieces) {
      if (adjacent(piece.region, a, left)) return formula_limit(piece.formula, a);
    }
    return std::nullopt;
  }
  const auto& c = std::get<Combined>(f.node());
  std::vector<QuadExt> values;
  for (const auto& operand : c.operands) {
    auto v = side_limit(operand, a, left);
    if (!v) return std::nullopt;
    values.push_back(std::move(*v));
  }
  if (c.op.kind == CombineKind::div && values[1].is_zero()) return std::nullopt;
  return combine_values(c.op, values);
}

}  // namespace

bool left_adjacent(const DomainSpec& d, const QuadExt& a) { return adjacent(d, a, true); }
bool right_adjacent(const DomainSpec& d, const QuadExt& a) { return adjacent(d, a, false); }

OneSidedLimits one_sided_limits(const FuncSpec& f, const QuadExt& a) {
  return {side_limit(f, a, true), side_limit(f, a, false)};
}

}  // namespace symcont
