#pragma once

#include <optional>
#include <vector>

#include "symcont/analysis.hpp"

namespace symcont::detail {

struct IntervalVerdicts {
  Verdict c;
  Verdict uc;
  Verdict sc;
  Verdict usc;
};

/// Interval pieces of an IntervalUnion or Staircase domain.
std::optional<std::vector<IntervalPiece>> interval_pieces_of(const DomainSpec& d);

/// Exact decision for a Piecewise function whose regions are all IntervalUnions, on a
/// finite union of intervals. nullopt when f has another shape. Throws
/// ConfigurationError when the pieces do not tile the domain.
std::optional<IntervalVerdicts> interval_decision(const std::vector<IntervalPiece>& domain, const FuncSpec& f,
                                                  const AnalysisConfig& config);

/// Terms for a pair family indexed by n >= 1, one per scheduled delta: the first n
/// (by doubling) whose scale lies below delta and whose oscillation reaches `target`.
struct PairFamily {
  std::function<std::pair<QuadExt, QuadExt>(long)> pair;
  bool symmetric = false;
  std::optional<QuadExt> point;  ///< pointwise C: scale measured from the point
};

std::vector<WitnessTerm> family_terms(const PairFamily& family, const FuncSpec& f,
                                      const std::vector<QuadExt>& schedule, const QuadExt& target);

/// Smallest oscillation over the terms.
QuadExt min_oscillation(const std::vector<WitnessTerm>& terms);

}  // namespace symcont::detail
