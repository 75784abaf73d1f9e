#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "point_model.hpp"

namespace symcont::detail {

/// Strictly decreasing scale thresholds d_0 > d_1 > ... with double shadows.
struct Levels {
  std::vector<QuadExt> d;
  std::vector<double> da;
  double tol = 0;

  Levels() = default;
  explicit Levels(std::vector<QuadExt> deltas);
  std::size_t size() const { return d.size(); }

  /// Bucket of a scale: the largest k with scale < d_k, or -1 when scale >= d_0.
  /// Bucket k < size-1 holds scales in [d_{k+1}, d_k); the last bucket holds (0, d_last).
  template <class Exact>
  int bucket(double approx, Exact&& exact) const {
    int definite = 0;  // number of leading levels with approx clearly below d_k
    while (definite < static_cast<int>(da.size()) && approx < da[definite] - tol) ++definite;
    int k = definite;
    while (k < static_cast<int>(da.size()) && approx <= da[k] + tol) {
      if (!(exact() < d[k])) break;
      ++k;
    }
    return k - 1;
  }
};

/// Argmax record: the canonical pair attaining the largest oscillation. Zero oscillation
/// is never recorded, so an empty record means "oscillation 0".
struct Best {
  int i = -1;
  int j = -1;
  QuadExt osc;
  double oa = 0;
  bool has() const { return i >= 0; }
};

/// Canonical order on candidate pairs: larger oscillation, then smaller |x - y|, then
/// smaller (min, max) index pair.
class PairRanker {
public:
  explicit PairRanker(const Model& m) : m_(m) {}
  /// Offers pair (i, j); returns true when it replaced the record.
  bool consider(Best& b, int i, int j) const;
  bool better(const Best& a, const Best& b) const;

private:
  int compare_scale(int i1, int j1, int i2, int j2) const;
  const Model& m_;
};

std::vector<Best> cumulative(const std::vector<Best>& buckets, const PairRanker& ranker);

struct SymScan {
  std::vector<Best> buckets;
  std::vector<std::vector<Best>> per_center;  ///< indexed like CenterIndex::pts; empty unless tracked
  std::size_t pairs = 0;
  bool capped = false;
  std::size_t first_complete = 0;  ///< buckets from here on were scanned in full
  bool finest_complete() const { return first_complete < buckets.size(); }
};

/// Symmetric pairs of `m` with h < lv.d[0] and midpoint in `c`, bucketed by h. Bands are
/// scanned finest first, so max_pairs cuts off the coarsest scales.
SymScan scan_symmetric(const Model& m, const CenterIndex& c, const Levels& lv, std::size_t max_pairs,
                       bool track_centers);

/// Visits admissible pairs (i < j, h < hmax, midpoint in c) in enumeration order until
/// visit returns false. center is an index into c.pts or -1 for interval/fallback centers.
void for_each_symmetric_pair(const Model& m, const CenterIndex& c, const QuadExt& hmax,
                             const std::function<bool(int i, int j, int center)>& visit);
/// The same restricted to pairs with h at least about hmin; a few pairs just below hmin may
/// be visited too.
void for_each_symmetric_pair(const Model& m, const CenterIndex& c, double hmin, const QuadExt& hmax,
                             const std::function<bool(int i, int j, int center)>& visit);

/// Sparse tables answering argmax / argmin of the model values over index ranges.
class RangeExtrema {
public:
  explicit RangeExtrema(const Model& m);
  /// Inclusive range [l, r], l <= r.
  int argmax(std::size_t l, std::size_t r) const;
  int argmin(std::size_t l, std::size_t r) const;

private:
  bool greater(int a, int b) const;
  const Model& m_;
  std::vector<std::vector<int>> mx_, mn_;
};

struct UcScan {
  std::vector<Best> levels;  ///< cumulative: level k covers |x - y| < d_k
  std::size_t pairs = 0;
  bool capped = false;
};

/// Charges one unit of max_pairs per (row, level) range query.
UcScan scan_uniform(const Model& m, const RangeExtrema& rx, const Levels& lv, std::size_t max_pairs);

/// Per-bucket largest |f(a) - f(y)| over neighbors y of the point at index a, where
/// bucket k holds |a - y| in [d_{k+1}, d_k) and the last bucket (0, d_last).
std::vector<Best> point_bands(const Model& m, const RangeExtrema& rx, std::size_t a, const Levels& lv);

/// Number of neighbor pairs examined by point_bands for every point with |a - y| < d_0.
std::size_t neighbor_pairs(const Model& m, const QuadExt& d0);

/// Distance from point a to its nearest neighbor in the model, if any.
std::optional<QuadExt> nearest_gap(const Model& m, std::size_t a);

}  // namespace symcont::detail
