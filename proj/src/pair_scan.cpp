#include "pair_scan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "symcont/error.hpp"

namespace symcont::detail {

Levels::Levels(std::vector<QuadExt> deltas) : d(std::move(deltas)) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k].sign() <= 0) throw ConfigurationError("scales must be positive");
    if (k > 0 && !(d[k] < d[k - 1])) throw ConfigurationError("scales must be strictly decreasing");
    da.push_back(d[k].approx());
  }
  tol = tolerance_for(d);
}

// ---------------------------------------------------------------------------

int PairRanker::compare_scale(int i1, int j1, int i2, int j2) const {
  const double s1 = std::fabs(m_.xa[j1] - m_.xa[i1]);
  const double s2 = std::fabs(m_.xa[j2] - m_.xa[i2]);
  const double t = 4 * m_.xtol;
  if (s1 < s2 - t) return -1;
  if (s1 > s2 + t) return 1;
  const QuadExt e1 = abs(m_.x[j1] - m_.x[i1]);
  const QuadExt e2 = abs(m_.x[j2] - m_.x[i2]);
  const auto c = e1 <=> e2;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

bool index_less(int i1, int j1, int i2, int j2) {
  return std::make_pair(std::min(i1, j1), std::max(i1, j1)) < std::make_pair(std::min(i2, j2), std::max(i2, j2));
}

}  // namespace

bool PairRanker::better(const Best& a, const Best& b) const {
  if (!a.has()) return false;
  if (!b.has()) return true;
  const double t = 2 * m_.vtol;
  if (a.oa > b.oa + t) return true;
  if (a.oa < b.oa - t) return false;
  const auto c = a.osc <=> b.osc;
  if (c != 0) return c > 0;
  const int s = compare_scale(a.i, a.j, b.i, b.j);
  if (s != 0) return s < 0;
  return index_less(a.i, a.j, b.i, b.j);
}

bool PairRanker::consider(Best& b, int i, int j) const {
  const double oa = std::fabs(m_.va[j] - m_.va[i]);
  const double t = 2 * m_.vtol;
  if (oa <= t && m_.v[i] == m_.v[j]) return false;
  if (b.has() && oa < b.oa - t) return false;
  Best cand;
  cand.i = i;
  cand.j = j;
  cand.oa = oa;
  cand.osc = abs(m_.v[j] - m_.v[i]);
  if (cand.osc.is_zero()) return false;
  if (!better(cand, b)) return false;
  b = std::move(cand);
  return true;
}

std::vector<Best> cumulative(const std::vector<Best>& buckets, const PairRanker& ranker) {
  std::vector<Best> out(buckets.size());
  Best run;
  for (std::size_t k = buckets.size(); k-- > 0;) {
    if (ranker.better(buckets[k], run)) run = buckets[k];
    out[k] = run;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric pairs

namespace {

/// Monotone cursor answering "is this midpoint a center?" for a nondecreasing sequence
/// of queries. Returns the index into c.pts, -2 for interval or fallback membership,
/// -1 otherwise.
class CenterCursor {
public:
  CenterCursor(const CenterIndex& c, double tol) : c_(c), tol_(tol) {}

  void reset() { k_ = 0; p_ = 0; }

  template <class Exact>
  int lookup(double ma, Exact&& exact) {
    while (k_ < c_.pa.size() && c_.pa[k_] < ma - tol_) ++k_;
    for (std::size_t k = k_; k < c_.pa.size() && c_.pa[k] <= ma + tol_; ++k) {
      if (c_.pts[k] == exact()) return static_cast<int>(k);
    }
    while (p_ < c_.pieces.size() && c_.phi[p_] < ma - tol_) ++p_;
    for (std::size_t p = p_; p < c_.pieces.size() && c_.plo[p] <= ma + tol_; ++p) {
      const auto& piece = c_.pieces[p];
      if (c_.plo[p] + tol_ < ma && ma < c_.phi[p] - tol_) return -2;
      if (piece.contains(exact())) return -2;
    }
    if (c_.fallback && contains(*c_.fallback, exact())) return -2;
    return -1;
  }

private:
  const CenterIndex& c_;
  double tol_;
  std::size_t k_ = 0;
  std::size_t p_ = 0;
};

class LazyMid {
public:
  LazyMid(const Model& m, int i, int j) : m_(m), i_(i), j_(j) {}
  const QuadExt& operator()() {
    if (!value_) value_ = halve(m_.x[i_] + m_.x[j_], 1);
    return *value_;
  }

private:
  const Model& m_;
  int i_, j_;
  std::optional<QuadExt> value_;
};

bool use_center_driven(const Model& m, const CenterIndex& c) {
  return c.pieces.empty() && !c.fallback && c.pts.size() * 32 < m.size();
}

/// h < hmax for the pair (i, j); nullopt means h clearly exceeds hmax, ending the row.
std::optional<bool> below(const Model& m, int i, int j, const QuadExt& hmax, double hmax_a, double tol) {
  const double h = (m.xa[j] - m.xa[i]) / 2;
  if (h < hmax_a - tol) return true;
  if (h > hmax_a + tol) return std::nullopt;
  if (halve(m.x[j] - m.x[i], 1) < hmax) return true;
  return false;
}

}  // namespace

void for_each_symmetric_pair(const Model& m, const CenterIndex& c, const QuadExt& hmax,
                             const std::function<bool(int, int, int)>& visit) {
  for_each_symmetric_pair(m, c, 0.0, hmax, visit);
}

void for_each_symmetric_pair(const Model& m, const CenterIndex& c, double hmin, const QuadExt& hmax,
                             const std::function<bool(int, int, int)>& visit) {
  const double hmax_a = hmax.approx();
  const double tol = 2 * m.xtol + tolerance_for({hmax});
  const double ctol = m.xtol + c.tol;
  const double hmin_a = hmin - tol;
  const int n = static_cast<int>(m.size());
  if (use_center_driven(m, c)) {
    for (std::size_t k = 0; k < c.pts.size(); ++k) {
      const QuadExt& center = c.pts[k];
      const double ca = c.pa[k];
      int i = static_cast<int>(std::lower_bound(m.xa.begin(), m.xa.end(), ca - hmax_a - tol) - m.xa.begin());
      for (; i < n && m.xa[i] < ca + ctol; ++i) {
        if (hmin_a > 0 && ca - m.xa[i] < hmin_a) break;
        if (!(m.x[i] < center)) break;
        if (!(center - m.x[i] < hmax)) continue;
        const double ya = 2 * ca - m.xa[i];
        int j = static_cast<int>(std::lower_bound(m.xa.begin(), m.xa.end(), ya - 4 * ctol) - m.xa.begin());
        const QuadExt y = center + center - m.x[i];
        for (; j < n && m.xa[j] <= ya + 4 * ctol; ++j) {
          if (m.x[j] == y) {
            if (!visit(i, j, static_cast<int>(k))) return;
            break;
          }
        }
      }
    }
    return;
  }
  CenterCursor cursor(c, ctol);
  for (int i = 0; i < n; ++i) {
    cursor.reset();
    int j = i + 1;
    if (hmin_a > 0) {
      j = std::max(j, static_cast<int>(std::lower_bound(m.xa.begin(), m.xa.end(), m.xa[i] + 2 * hmin_a) - m.xa.begin()));
    }
    for (; j < n; ++j) {
      const auto ok = below(m, i, j, hmax, hmax_a, tol);
      if (!ok) break;
      if (!*ok) continue;
      LazyMid mid(m, i, j);
      const int k = cursor.lookup((m.xa[i] + m.xa[j]) / 2, mid);
      if (k == -1) continue;
      if (!visit(i, j, k)) return;
    }
  }
}

SymScan scan_symmetric(const Model& m, const CenterIndex& c, const Levels& levels, std::size_t max_pairs,
                       bool track_centers) {
  SymScan out;
  out.buckets.resize(levels.size());
  if (levels.size() == 0) return out;
  if (track_centers) out.per_center.assign(c.pts.size(), std::vector<Best>(levels.size()));
  Levels lv = levels;
  lv.tol = levels.tol + 2 * m.xtol;
  const PairRanker ranker(m);
  out.first_complete = levels.size();
  if (max_pairs == 0) {
    out.capped = true;
    return out;
  }
  // Finest band first, so a cap only ever hides coarse scales.
  for (std::size_t band = lv.size(); band-- > 0 && !out.capped;) {
    const double hmin = band + 1 < lv.size() ? lv.da[band + 1] : 0.0;
    for_each_symmetric_pair(m, c, hmin, lv.d[band], [&](int i, int j, int k) {
      const int b = lv.bucket((m.xa[j] - m.xa[i]) / 2, [&] { return halve(m.x[j] - m.x[i], 1); });
      if (b != static_cast<int>(band)) return true;
      if (out.pairs == max_pairs) {
        out.capped = true;
        return false;
      }
      ++out.pairs;
      ranker.consider(out.buckets[b], i, j);
      if (track_centers && k >= 0) ranker.consider(out.per_center[k][b], i, j);
      return true;
    });
    if (!out.capped) out.first_complete = band;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Range extrema

RangeExtrema::RangeExtrema(const Model& m) : m_(m) {
  const std::size_t n = m.size();
  if (n == 0) return;
  const int levels = std::bit_width(n);
  mx_.resize(levels);
  mn_.resize(levels);
  mx_[0].resize(n);
  mn_[0].resize(n);
  for (std::size_t i = 0; i < n; ++i) mx_[0][i] = mn_[0][i] = static_cast<int>(i);
  for (int l = 1; l < levels; ++l) {
    const std::size_t half = std::size_t{1} << (l - 1);
    const std::size_t len = n - (std::size_t{1} << l) + 1;
    mx_[l].resize(len);
    mn_[l].resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      const int a = mx_[l - 1][i], b = mx_[l - 1][i + half];
      mx_[l][i] = greater(b, a) ? b : a;
      const int c = mn_[l - 1][i], d = mn_[l - 1][i + half];
      mn_[l][i] = greater(c, d) ? d : c;
    }
  }
}

bool RangeExtrema::greater(int a, int b) const {
  const double t = 2 * m_.vtol;
  if (m_.va[a] > m_.va[b] + t) return true;
  if (m_.va[a] < m_.va[b] - t) return false;
  return m_.v[a] > m_.v[b];
}

int RangeExtrema::argmax(std::size_t l, std::size_t r) const {
  const int level = std::bit_width(r - l + 1) - 1;
  const int a = mx_[level][l], b = mx_[level][r + 1 - (std::size_t{1} << level)];
  return greater(b, a) ? b : a;
}

int RangeExtrema::argmin(std::size_t l, std::size_t r) const {
  const int level = std::bit_width(r - l + 1) - 1;
  const int a = mn_[level][l], b = mn_[level][r + 1 - (std::size_t{1} << level)];
  return greater(a, b) ? b : a;
}

// ---------------------------------------------------------------------------
// Uniform pairs

namespace {

/// First index with x >= value (exact), located through the shadow first.
std::size_t first_at_least(const Model& m, const QuadExt& value, double va) {
  std::size_t k = static_cast<std::size_t>(
      std::lower_bound(m.xa.begin(), m.xa.end(), va - 4 * m.xtol) - m.xa.begin());
  while (k < m.size() && m.x[k] < value) ++k;
  return k;
}

/// First index with x > value (exact).
std::size_t first_above(const Model& m, const QuadExt& value, double va) {
  std::size_t k = static_cast<std::size_t>(
      std::lower_bound(m.xa.begin(), m.xa.end(), va - 4 * m.xtol) - m.xa.begin());
  while (k < m.size() && m.x[k] <= value) ++k;
  return k;
}

/// Exact comparison of v[a] - v[b] against a target difference, with shadow prefilter.
bool value_at_least(const Model& m, int a, const QuadExt& target, double target_a) {
  const double t = 2 * m.vtol;
  if (m.va[a] > target_a + t) return true;
  if (m.va[a] < target_a - t) return false;
  return !(m.v[a] < target);
}

bool value_at_most(const Model& m, int a, const QuadExt& target, double target_a) {
  const double t = 2 * m.vtol;
  if (m.va[a] < target_a - t) return true;
  if (m.va[a] > target_a + t) return false;
  return !(m.v[a] > target);
}

/// Largest |v[a] - v[y]| over y in [l, r] with the index attaining it nearest to `a`.
struct RangeHit {
  int j = -1;
  QuadExt osc;
  double oa = 0;
};

RangeHit range_extreme(const Model& m, const RangeExtrema& rx, std::size_t a, std::size_t l, std::size_t r,
                       bool nearest_is_first) {
  RangeHit hit;
  if (l > r) return hit;
  const int hi = rx.argmax(l, r), lo = rx.argmin(l, r);
  const QuadExt up = m.v[hi] - m.v[a];
  const QuadExt down = m.v[a] - m.v[lo];
  hit.osc = max(up, down);
  if (hit.osc.sign() <= 0) {
    hit.osc = QuadExt(0);
    return hit;
  }
  hit.oa = hit.osc.approx();
  const auto locate = [&](bool use_max) {
    const QuadExt target = use_max ? m.v[a] + hit.osc : m.v[a] - hit.osc;
    const double ta = target.approx();
    const auto reaches = [&](std::size_t from, std::size_t to) {
      return use_max ? value_at_least(m, rx.argmax(from, to), target, ta)
                     : value_at_most(m, rx.argmin(from, to), target, ta);
    };
    std::size_t lo_i = l, hi_i = r;
    if (nearest_is_first) {
      while (lo_i < hi_i) {
        const std::size_t mid = lo_i + (hi_i - lo_i) / 2;
        if (reaches(l, mid)) hi_i = mid;
        else lo_i = mid + 1;
      }
    } else {
      while (lo_i < hi_i) {
        const std::size_t mid = lo_i + (hi_i - lo_i + 1) / 2;
        if (reaches(mid, r)) lo_i = mid;
        else hi_i = mid - 1;
      }
    }
    return static_cast<int>(lo_i);
  };
  std::optional<int> best;
  if (up == hit.osc) best = locate(true);
  if (down == hit.osc) {
    const int j = locate(false);
    if (!best) best = j;
    else if (nearest_is_first ? j < *best : j > *best) best = j;
  }
  hit.j = *best;
  return hit;
}

}  // namespace

UcScan scan_uniform(const Model& m, const RangeExtrema& rx, const Levels& lv, std::size_t max_pairs) {
  UcScan out;
  out.levels.resize(lv.size());
  const std::size_t n = m.size();
  if (lv.size() == 0 || n < 2) return out;
  const double tol = lv.tol + 2 * m.xtol;

  // Right ends r_k(i): last index with x_r - x_i < d_k.
  const auto reach = [&](std::size_t i, std::size_t k, std::size_t from) {
    std::size_t p = std::max(from, i + 1);
    while (p < n) {
      const double s = m.xa[p] - m.xa[i];
      if (s < lv.da[k] - tol) {
        ++p;
        continue;
      }
      if (s > lv.da[k] + tol) break;
      if (m.x[p] - m.x[i] < lv.d[k]) {
        ++p;
        continue;
      }
      break;
    }
    return p;  // one past the last admissible index
  };

  // Budget: one unit per (row, level) range query, rows in scan order.
  std::size_t rows = std::min(n, max_pairs / lv.size());
  out.capped = rows < n;
  out.pairs = rows * lv.size();

  const PairRanker ranker(m);
  for (std::size_t k = 0; k < lv.size(); ++k) {
    // Pass 1: the exact maximum over rows.
    std::vector<std::size_t> ends(rows);
    QuadExt best(0);
    double best_a = 0;
    std::size_t p = 1;
    for (std::size_t i = 0; i < rows; ++i) {
      p = reach(i, k, p);
      ends[i] = p;
      if (p <= i + 1) continue;
      const int hi = rx.argmax(i + 1, p - 1), lo = rx.argmin(i + 1, p - 1);
      const double ca = std::max(m.va[hi] - m.va[i], m.va[i] - m.va[lo]);
      if (ca < best_a - 2 * m.vtol) continue;
      const QuadExt c = max(m.v[hi] - m.v[i], m.v[i] - m.v[lo]);
      if (c > best) {
        best = c;
        best_a = c.approx();
      }
    }
    if (best.sign() <= 0) continue;
    // Pass 2: canonical pair among the maximizers.
    Best rec;
    for (std::size_t i = 0; i < rows; ++i) {
      if (ends[i] <= i + 1) continue;
      const RangeHit hit = range_extreme(m, rx, i, i + 1, ends[i] - 1, true);
      if (hit.j < 0 || hit.oa < best_a - 2 * m.vtol || hit.osc != best) continue;
      ranker.consider(rec, static_cast<int>(i), hit.j);
    }
    out.levels[k] = rec;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise bands

std::vector<Best> point_bands(const Model& m, const RangeExtrema& rx, std::size_t a, const Levels& lv) {
  std::vector<Best> out(lv.size());
  const PairRanker ranker(m);
  const QuadExt& xa = m.x[a];
  const double xa_a = m.xa[a];
  for (std::size_t k = 0; k < lv.size(); ++k) {
    const bool last = k + 1 == lv.size();
    // Left neighbors: x in (xa - d_k, xa - d_{k+1}]; right: x in [xa + d_{k+1}, xa + d_k).
    const std::size_t l_lo = first_above(m, xa - lv.d[k], xa_a - lv.da[k]);
    const std::size_t l_end = last ? a : first_above(m, xa - lv.d[k + 1], xa_a - lv.da[k + 1]);
    const std::size_t r_lo = last ? a + 1 : first_at_least(m, xa + lv.d[k + 1], xa_a + lv.da[k + 1]);
    const std::size_t r_end = first_at_least(m, xa + lv.d[k], xa_a + lv.da[k]);
    Best rec;
    const auto offer = [&](const RangeHit& hit) {
      if (hit.j < 0) return;
      Best cand;
      cand.i = static_cast<int>(a);
      cand.j = hit.j;
      cand.osc = hit.osc;
      cand.oa = hit.oa;
      if (ranker.better(cand, rec)) rec = std::move(cand);
    };
    if (l_lo < l_end) offer(range_extreme(m, rx, a, l_lo, l_end - 1, false));
    if (r_lo < r_end) offer(range_extreme(m, rx, a, r_lo, r_end - 1, true));
    out[k] = std::move(rec);
  }
  return out;
}

std::size_t neighbor_pairs(const Model& m, const QuadExt& d0) {
  const double da = d0.approx();
  const double tol = 4 * m.xtol + tolerance_for({d0});
  std::size_t total = 0, p = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    p = std::max(p, i + 1);
    while (p < m.size()) {
      const double s = m.xa[p] - m.xa[i];
      if (s < da - tol || (s <= da + tol && m.x[p] - m.x[i] < d0)) {
        ++p;
        continue;
      }
      break;
    }
    total += 2 * (p - i - 1);
  }
  return total;
}

std::optional<QuadExt> nearest_gap(const Model& m, std::size_t a) {
  std::optional<QuadExt> g;
  if (a > 0) g = m.x[a] - m.x[a - 1];
  if (a + 1 < m.size()) {
    QuadExt r = m.x[a + 1] - m.x[a];
    if (!g || r < *g) g = std::move(r);
  }
  return g;
}

}  // namespace symcont::detail

namespace symcont {

PairList symmetric_pairs(const DomainSpec& ambient, const DomainSpec& centers, const QuadExt& delta_max,
                         std::size_t max_pairs, const SamplingOptions& options) {
  if (delta_max.sign() <= 0) throw PreconditionError("delta_max must be positive");
  const detail::Model m = detail::build_point_model(ambient, options);
  const detail::CenterIndex c = detail::build_centers(centers, options.enum_limit);
  PairList out;
  out.sampled = m.sampled;
  std::vector<std::pair<int, int>> found;
  detail::for_each_symmetric_pair(m, c, delta_max, [&](int i, int j, int) {
    found.emplace_back(i, j);
    return true;
  });
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    const double sa = m.xa[a.second] - m.xa[a.first];
    const double sb = m.xa[b.second] - m.xa[b.first];
    if (std::fabs(sa - sb) > 4 * m.xtol) return sa < sb;
    const auto cmp = (m.x[a.second] - m.x[a.first]) <=> (m.x[b.second] - m.x[b.first]);
    if (cmp != 0) return cmp < 0;
    return a < b;
  });
  if (found.size() > max_pairs) {
    found.resize(max_pairs);
    out.truncated = true;
  }
  out.truncated = out.truncated || m.truncated || c.truncated;
  out.pairs.reserve(found.size());
  for (const auto& [i, j] : found) {
    const QuadExt h = halve(m.x[j] - m.x[i], 1);
    out.pairs.push_back({m.x[i], m.x[j], m.x[i] + h, h});
  }
  return out;
}

}  // namespace symcont
