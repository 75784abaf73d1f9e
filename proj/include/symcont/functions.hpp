#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "symcont/domains.hpp"
#include "symcont/exactnum.hpp"

namespace symcont {

struct Const {
  QuadExt c;
  friend bool operator==(const Const&, const Const&) = default;
};
struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};
struct Affine {
  QuadExt m;
  QuadExt c;
  friend bool operator==(const Affine&, const Affine&) = default;
};
/// 1/x; undefined at 0.
struct Reciprocal {
  friend bool operator==(const Reciprocal&, const Reciprocal&) = default;
};
struct Monomial {
  unsigned n = 1;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using Formula = std::variant<Const, Identity, Affine, Reciprocal, Monomial>;

/// Throws EvaluationError for 1/x at 0.
QuadExt apply(const Formula& formula, const QuadExt& x);
std::string describe(const Formula& formula);

class FuncSpec;

struct Piece {
  DomainSpec region;
  Formula formula;
};

struct Piecewise {
  std::vector<Piece> pieces;
};

enum class CombineKind { scale, add, sub, mul, div };

struct CombineOp {
  CombineKind kind = CombineKind::add;
  QuadExt alpha;  ///< scale factor, used by `scale` only

  static CombineOp scale(QuadExt alpha) { return {CombineKind::scale, std::move(alpha)}; }
  static CombineOp add() { return {CombineKind::add, {}}; }
  static CombineOp sub() { return {CombineKind::sub, {}}; }
  static CombineOp mul() { return {CombineKind::mul, {}}; }
  static CombineOp div() { return {CombineKind::div, {}}; }
};

struct Combined {
  CombineOp op;
  std::vector<FuncSpec> operands;
};

/// Piecewise exact function, or a field combination of such functions.
class FuncSpec {
public:
  using Node = std::variant<Piecewise, Combined>;

  static FuncSpec piecewise(std::vector<Piece> pieces);
  /// One formula over a whole region.
  static FuncSpec single(DomainSpec region, Formula formula);

  const Node& node() const noexcept { return *node_; }
  const Piecewise* as_piecewise() const { return std::get_if<Piecewise>(node_.get()); }

private:
  explicit FuncSpec(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
  std::shared_ptr<const Node> node_;
  friend FuncSpec combine(const CombineOp& op, std::vector<FuncSpec> fs);
};

/// Throws SpecError on arity mismatch (scale takes one operand, the others two).
FuncSpec combine(const CombineOp& op, std::vector<FuncSpec> fs);

/// First governing piece decides. Throws DomainError when no piece covers x and
/// EvaluationError on division by zero.
QuadExt evaluate(const FuncSpec& f, const QuadExt& x);

/// Like evaluate, but throws ConfigurationError unless exactly one piece governs x
/// at every Piecewise level.
QuadExt evaluate_checked(const FuncSpec& f, const QuadExt& x);

std::string describe(const FuncSpec& f);

struct BoundReport {
  bool bounded = true;
  QuadExt bound;
  std::optional<std::pair<QuadExt, QuadExt>> witness;  ///< (point, value) attaining the bound
  bool truncated = false;
  bool analytic = false;
};

BoundReport bounded_on(const FuncSpec& f, const DomainSpec& d, std::size_t limit,
                       const SamplingOptions& sampling = {});

struct OneSidedLimits {
  std::optional<QuadExt> left;
  std::optional<QuadExt> right;
};

/// Limits from the formulas of interval pieces adjacent to a on each side.
OneSidedLimits one_sided_limits(const FuncSpec& f, const QuadExt& a);

/// True when some interval piece of d contains (a - eps, a) for small eps > 0.
bool left_adjacent(const DomainSpec& d, const QuadExt& a);
bool right_adjacent(const DomainSpec& d, const QuadExt& a);

}  // namespace symcont
