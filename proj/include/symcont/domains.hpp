#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symcont/exactnum.hpp"

namespace symcont {

struct IntervalPiece {
  QuadExt lo;
  QuadExt hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static IntervalPiece closed(QuadExt lo, QuadExt hi) { return {std::move(lo), std::move(hi), true, true}; }
  static IntervalPiece open(QuadExt lo, QuadExt hi) { return {std::move(lo), std::move(hi), false, false}; }
  static IntervalPiece point(const QuadExt& x) { return {x, x, true, true}; }

  bool degenerate() const { return lo == hi; }
  bool contains(const QuadExt& x) const;
  QuadExt length() const { return hi - lo; }
  /// Throws SpecError unless lo < hi, or lo == hi with both ends closed.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const IntervalPiece&, const IntervalPiece&) = default;
};

std::optional<IntervalPiece> intersect(const IntervalPiece& a, const IntervalPiece& b);

enum class StaircaseVariant { A, B };

struct StaircaseParams {
  StaircaseVariant variant = StaircaseVariant::A;
  int blocks = 1;  ///< number of closed intervals [a_{2i-1}, a_{2i}]
  friend bool operator==(const StaircaseParams&, const StaircaseParams&) = default;
};

class DomainSpec;

struct FinitePoints {
  std::vector<QuadExt> points;  ///< strictly increasing
  friend bool operator==(const FinitePoints&, const FinitePoints&) = default;
};

struct IntegerWindow {
  long long lo = 0;
  long long hi = 0;
  friend bool operator==(const IntegerWindow&, const IntegerWindow&) = default;
};

struct OddPrimeReciprocals {
  long long max_prime = 3;
  bool with_zero = true;
  friend bool operator==(const OddPrimeReciprocals&, const OddPrimeReciprocals&) = default;
};

struct NaturalReciprocals {
  long long max_n = 1;
  bool with_zero = true;
  friend bool operator==(const NaturalReciprocals&, const NaturalReciprocals&) = default;
};

struct TruncatedRationals {
  long long max_denominator = 1;
  Rational lo;
  Rational hi;
  bool adjoin_sqrt2 = false;  ///< sqrt2 is adjoined whether or not it lies in [lo, hi]
  friend bool operator==(const TruncatedRationals&, const TruncatedRationals&) = default;
};

struct IntervalUnion {
  std::vector<IntervalPiece> pieces;
  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;
};

struct Staircase {
  StaircaseParams params;
  std::vector<QuadExt> breakpoints;   ///< a_1 .. a_{2 blocks}
  std::vector<IntervalPiece> pieces;  ///< [a_{2i-1}, a_{2i}]
  friend bool operator==(const Staircase& a, const Staircase& b) { return a.params == b.params; }
};

struct UnionOf {
  std::vector<DomainSpec> parts;
  friend bool operator==(const UnionOf&, const UnionOf&);
};

/// Immutable description of a subset of the real line with exact membership.
class DomainSpec {
public:
  using Variant = std::variant<FinitePoints, IntegerWindow, OddPrimeReciprocals, NaturalReciprocals,
                               TruncatedRationals, IntervalUnion, Staircase, UnionOf>;

  static DomainSpec finite_points(std::vector<QuadExt> points);
  static DomainSpec integer_window(long long lo, long long hi);
  static DomainSpec odd_prime_reciprocals(long long max_prime, bool with_zero);
  static DomainSpec natural_reciprocals(long long max_n, bool with_zero);
  static DomainSpec truncated_rationals(long long max_denominator, Rational lo, Rational hi,
                                        bool adjoin_sqrt2);
  static DomainSpec interval_union(std::vector<IntervalPiece> pieces);
  static DomainSpec staircase(StaircaseParams params);
  static DomainSpec union_of(std::vector<DomainSpec> parts);

  const Variant& variant() const noexcept { return v_; }
  std::string kind_name() const;

  friend bool operator==(const DomainSpec& a, const DomainSpec& b) { return a.v_ == b.v_; }

private:
  explicit DomainSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

inline bool operator==(const UnionOf& a, const UnionOf& b) { return a.parts == b.parts; }

std::string describe(const DomainSpec& d);

bool contains(const DomainSpec& d, const QuadExt& x);

/// Closed window [lo, hi] restricting enumeration or sampling.
struct Window {
  QuadExt lo;
  QuadExt hi;
};

struct PointList {
  std::vector<QuadExt> points;  ///< strictly increasing
  bool truncated = false;       ///< a limit cut the list short
  bool sampled = false;         ///< non-degenerate intervals were sampled
};

/// Strictly increasing members (smallest first), at most `limit` of them.
/// Throws NotEnumerableError for non-degenerate interval components.
PointList enumerate_points(const DomainSpec& d, std::size_t limit,
                           const std::optional<Window>& window = std::nullopt);

struct SamplingOptions {
  int grid_exponent = 10;     ///< 2^k + 1 grid points per interval piece
  int endpoint_offsets = 10;  ///< open ends approached by spacing * 2^-m, m = 1..offsets
  std::size_t enum_limit = 100000;
};

/// Enumerates discrete components and samples interval components.
PointList sample_points(const DomainSpec& d, const SamplingOptions& options,
                        const std::optional<Window>& window = std::nullopt);

bool has_continuum(const DomainSpec& d);
bool is_enumerable(const DomainSpec& d);

struct GapResult {
  std::optional<QuadExt> value;
  bool truncated = false;
};

GapResult min_gap(const DomainSpec& d, std::size_t limit);

struct SymmetricPair {
  QuadExt x;  ///< x < y
  QuadExt y;
  QuadExt center;
  QuadExt h;  ///< (y - x) / 2 > 0
};

struct PairList {
  std::vector<SymmetricPair> pairs;
  bool truncated = false;
  bool sampled = false;
};

/// All pairs x < y of the (enumerated or sampled) ambient with (y - x)/2 < delta_max and
/// midpoint in `centers`, ordered by h then (x, y); at most max_pairs of them.
PairList symmetric_pairs(const DomainSpec& ambient, const DomainSpec& centers,
                         const QuadExt& delta_max, std::size_t max_pairs,
                         const SamplingOptions& options = {});

struct Component {
  IntervalPiece span;
  std::vector<std::size_t> members;  ///< indices into the input pieces, left to right
  std::vector<QuadExt> glued_points; ///< interior boundaries where members meet
};

struct MergeResult {
  std::vector<Component> components;  ///< left to right
  std::vector<QuadExt> gaps;          ///< d(C_i, C_j) for i < j, row-major
  std::vector<std::pair<std::size_t, std::size_t>> shared_endpoint_pairs;
};

/// Throws OverlapError naming the first intersecting pair of input pieces.
MergeResult merge_interval_components(std::span<const IntervalPiece> pieces);

/// a_1 .. a_count of the staircase recursion.
std::vector<QuadExt> staircase_breakpoints(StaircaseVariant variant, std::size_t count);

struct StaircaseResult {
  DomainSpec domain;  ///< IntervalUnion of the closed blocks
  std::vector<QuadExt> breakpoints;
};

StaircaseResult build_staircase(const StaircaseParams& params);

enum class ModelKind {
  ExactFinite,     ///< the described set is finite and fully enumerable
  ExactContinuum,  ///< finite union of intervals and points, described exactly
  Truncation       ///< finite stand-in for an infinite family
};

ModelKind model_kind(const DomainSpec& d);

/// Scale below which a truncated or sampled model stops resembling the set it stands for.
/// Zero for exact finite models.
QuadExt model_resolution(const DomainSpec& d, const SamplingOptions& options);

/// The same family at four times finer resolution; contains `d`'s model points.
DomainSpec refine(const DomainSpec& d);

/// Sets known to admit no symmetric pair at all, for every truncation parameter.
bool structurally_midpoint_free(const DomainSpec& d);

/// A positive lower bound on distances between distinct members, when one is known
/// without relying on truncated data.
std::optional<QuadExt> structural_gap(const DomainSpec& d, std::size_t limit);

bool is_prime(long long n);
std::vector<long long> odd_primes_up_to(long long n);

}  // namespace symcont
