#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symcont/domains.hpp"
#include "symcont/functions.hpp"

namespace symcont::detail {

/// Materialized model of a domain: sorted points with exact function values, plus
/// double shadows used only to skip work that exact comparisons would reject anyway.
struct Model {
  std::vector<QuadExt> x;
  std::vector<double> xa;
  std::vector<QuadExt> v;
  std::vector<double> va;
  double xtol = 0;  ///< bound on |xa - x|, with margin
  double vtol = 0;  ///< bound on |va - v|, with margin
  bool truncated = false;
  bool sampled = false;
  std::size_t dropped = 0;

  std::size_t size() const { return x.size(); }
  /// First index with x >= value (exact).
  std::size_t lower_index(const QuadExt& value) const;
  /// First index with x > value (exact).
  std::size_t upper_index(const QuadExt& value) const;
};

double tolerance_for(const std::vector<QuadExt>& values);

/// Points from sample_points over the given windows (whole domain when empty), with f
/// evaluated at each; throws ConfigurationError when f does not govern every point exactly once.
/// With drop_uncovered, points no piece governs are left out instead.
Model build_model(const DomainSpec& d, const FuncSpec& f, const SamplingOptions& options,
                  const std::vector<Window>& windows = {}, bool drop_uncovered = false);

/// Points only, no function values.
Model build_point_model(const DomainSpec& d, const SamplingOptions& options,
                        const std::vector<Window>& windows = {});

/// Membership oracle for midpoints: discrete centers by sorted lookup, interval
/// centers by normalized piece list, exact checks wherever the shadow is ambiguous.
struct CenterIndex {
  std::vector<QuadExt> pts;
  std::vector<double> pa;
  std::vector<IntervalPiece> pieces;  ///< sorted, pairwise disjoint
  std::vector<double> plo, phi;
  const DomainSpec* fallback = nullptr;  ///< exact membership when enumeration was capped
  double tol = 0;
  bool truncated = false;
};

/// Discrete centers are enumerated only inside `windows` when any are given.
CenterIndex build_centers(const DomainSpec& d, std::size_t enum_limit, const std::vector<Window>& windows = {});

/// Refined sampling options paired with refine(d).
SamplingOptions refined_sampling(const DomainSpec& d, const SamplingOptions& options);

}  // namespace symcont::detail
