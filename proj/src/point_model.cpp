#include "point_model.hpp"

#include <algorithm>
#include <cmath>

#include "symcont/error.hpp"

namespace symcont::detail {

std::size_t Model::lower_index(const QuadExt& value) const {
  return static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), value) - x.begin());
}

std::size_t Model::upper_index(const QuadExt& value) const {
  return static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), value) - x.begin());
}

double tolerance_for(const std::vector<QuadExt>& values) {
  double mag = 0;
  for (const auto& v : values) {
    const double m = std::fabs(v.rat().get_d()) + 1.5 * std::fabs(v.irr().get_d());
    if (!std::isfinite(m)) throw Error("value " + to_string(v) + " is outside double range");
    mag = std::max(mag, m);
  }
  return 1e-12 * (1.0 + mag);
}

namespace {

PointList gather(const DomainSpec& d, const SamplingOptions& options, const std::vector<Window>& windows) {
  if (windows.empty()) return sample_points(d, options);
  PointList out;
  for (const auto& w : windows) {
    PointList part = sample_points(d, options, w);
    out.truncated = out.truncated || part.truncated;
    out.sampled = out.sampled || part.sampled;
    out.points.insert(out.points.end(), part.points.begin(), part.points.end());
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

}  // namespace

Model build_point_model(const DomainSpec& d, const SamplingOptions& options, const std::vector<Window>& windows) {
  PointList pts = gather(d, options, windows);
  Model m;
  m.truncated = pts.truncated;
  m.sampled = pts.sampled;
  m.x = std::move(pts.points);
  m.xa.reserve(m.x.size());
  for (const auto& p : m.x) m.xa.push_back(p.approx());
  m.xtol = tolerance_for(m.x);
  return m;
}

Model build_model(const DomainSpec& d, const FuncSpec& f, const SamplingOptions& options,
                  const std::vector<Window>& windows, bool drop_uncovered) {
  Model m = build_point_model(d, options, windows);
  m.v.reserve(m.size());
  std::vector<std::string> uncovered;
  std::size_t uncovered_count = 0;
  std::vector<QuadExt> kept;
  for (const auto& p : m.x) {
    try {
      m.v.push_back(evaluate_checked(f, p));
      if (drop_uncovered) kept.push_back(p);
    } catch (const DomainError&) {
      if (uncovered.size() < 5) uncovered.push_back(to_string(p));
      ++uncovered_count;
      if (!drop_uncovered) m.v.emplace_back(0);
    } catch (const EvaluationError& e) {
      throw EvaluationError(std::string(e.what()) + " (at x = " + to_string(p) + ")");
    }
  }
  if (uncovered_count > 0) {
    if (!drop_uncovered) {
      std::string msg = "function pieces do not cover " + std::to_string(uncovered_count) + " domain point(s):";
      for (const auto& u : uncovered) msg += " " + u;
      if (uncovered_count > uncovered.size()) msg += " ...";
      throw ConfigurationError(msg);
    }
    m.dropped = uncovered_count;
    m.x = std::move(kept);
    m.xa.clear();
    for (const auto& p : m.x) m.xa.push_back(p.approx());
  }
  m.va.reserve(m.size());
  for (const auto& v : m.v) m.va.push_back(v.approx());
  m.vtol = tolerance_for(m.v);
  return m;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void flatten(const DomainSpec& d, std::size_t limit, const std::vector<Window>& windows, CenterIndex& out) {
  const auto add_enumerated = [&](const DomainSpec& part) {
    const auto add = [&](const std::optional<Window>& w) {
      PointList pts = enumerate_points(part, limit, w);
      out.truncated = out.truncated || pts.truncated;
      out.pts.insert(out.pts.end(), pts.points.begin(), pts.points.end());
    };
    if (windows.empty()) add(std::nullopt);
    for (const auto& w : windows) add(w);
  };
  std::visit(overloaded{
                 [&](const IntervalUnion& u) {
                   for (const auto& p : u.pieces) {
                     if (p.degenerate()) {
                       out.pts.push_back(p.lo);
                     } else {
                       out.pieces.push_back(p);
                     }
                   }
                 },
                 [&](const Staircase& s) { out.pieces.insert(out.pieces.end(), s.pieces.begin(), s.pieces.end()); },
                 [&](const UnionOf& u) {
                   for (const auto& part : u.parts) flatten(part, limit, windows, out);
                 },
                 [&](const auto&) { add_enumerated(d); },
             },
             d.variant());
}

std::vector<IntervalPiece> normalize(std::vector<IntervalPiece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const IntervalPiece& a, const IntervalPiece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<IntervalPiece> out;
  for (auto& p : pieces) {
    if (!out.empty()) {
      IntervalPiece& cur = out.back();
      const auto c = p.lo <=> cur.hi;
      if (c < 0 || (c == 0 && (p.lo_closed || cur.hi_closed))) {
        if (p.hi > cur.hi) {
          cur.hi = p.hi;
          cur.hi_closed = p.hi_closed;
        } else if (p.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

CenterIndex build_centers(const DomainSpec& d, std::size_t enum_limit, const std::vector<Window>& windows) {
  CenterIndex c;
  flatten(d, enum_limit, windows, c);
  std::sort(c.pts.begin(), c.pts.end());
  c.pts.erase(std::unique(c.pts.begin(), c.pts.end()), c.pts.end());
  c.pieces = normalize(std::move(c.pieces));
  for (const auto& p : c.pts) c.pa.push_back(p.approx());
  std::vector<QuadExt> ends;
  for (const auto& p : c.pieces) {
    c.plo.push_back(p.lo.approx());
    c.phi.push_back(p.hi.approx());
    ends.push_back(p.lo);
    ends.push_back(p.hi);
  }
  c.tol = std::max(tolerance_for(c.pts), tolerance_for(ends));
  if (c.truncated) c.fallback = &d;
  return c;
}

SamplingOptions refined_sampling(const DomainSpec& d, const SamplingOptions& options) {
  SamplingOptions out = options;
  bool intervals = false;
  std::visit(overloaded{
                 [&](const IntervalUnion& u) {
                   intervals = std::any_of(u.pieces.begin(), u.pieces.end(),
                                           [](const IntervalPiece& p) { return !p.degenerate(); });
                 },
                 [&](const UnionOf& u) {
                   for (const auto& part : u.parts) {
                     if (refined_sampling(part, options).grid_exponent != options.grid_exponent) intervals = true;
                   }
                 },
                 [](const auto&) {},
             },
             d.variant());
  if (intervals) out.grid_exponent = options.grid_exponent + 2;
  return out;
}

}  // namespace symcont::detail
