#include "symcont/domains.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "symcont/error.hpp"

namespace symcont {

bool IntervalPiece::contains(const QuadExt& x) const {
  const auto lo_cmp = lo <=> x;
  if (lo_cmp > 0 || (lo_cmp == 0 && !lo_closed)) return false;
  const auto hi_cmp = x <=> hi;
  return hi_cmp < 0 || (hi_cmp == 0 && hi_closed);
}

void IntervalPiece::validate() const {
  if (lo < hi) return;
  if (lo == hi && lo_closed && hi_closed) return;
  throw SpecError("invalid interval " + to_string());
}

std::string IntervalPiece::to_string() const {
  return std::string(lo_closed ? "[" : "(") + symcont::to_string(lo) + ", " + symcont::to_string(hi) +
         (hi_closed ? "]" : ")");
}

std::optional<IntervalPiece> intersect(const IntervalPiece& a, const IntervalPiece& b) {
  IntervalPiece r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (r.lo < r.hi || (r.lo == r.hi && r.lo_closed && r.hi_closed)) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Construction

DomainSpec DomainSpec::finite_points(std::vector<QuadExt> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return DomainSpec(FinitePoints{std::move(points)});
}

DomainSpec DomainSpec::integer_window(long long lo, long long hi) {
  if (lo > hi) throw SpecError("IntegerWindow requires lo <= hi");
  return DomainSpec(IntegerWindow{lo, hi});
}

DomainSpec DomainSpec::odd_prime_reciprocals(long long max_prime, bool with_zero) {
  if (max_prime < 1) throw SpecError("OddPrimeReciprocals requires a positive bound");
  return DomainSpec(OddPrimeReciprocals{max_prime, with_zero});
}

DomainSpec DomainSpec::natural_reciprocals(long long max_n, bool with_zero) {
  if (max_n < 1) throw SpecError("NaturalReciprocals requires a positive bound");
  return DomainSpec(NaturalReciprocals{max_n, with_zero});
}

DomainSpec DomainSpec::truncated_rationals(long long max_denominator, Rational lo, Rational hi,
                                           bool adjoin_sqrt2) {
  if (max_denominator < 1) throw SpecError("TruncatedRationals requires a positive denominator bound");
  if (lo > hi) throw SpecError("TruncatedRationals requires lo <= hi");
  return DomainSpec(TruncatedRationals{max_denominator, std::move(lo), std::move(hi), adjoin_sqrt2});
}

DomainSpec DomainSpec::interval_union(std::vector<IntervalPiece> pieces) {
  for (const auto& p : pieces) p.validate();
  return DomainSpec(IntervalUnion{std::move(pieces)});
}

DomainSpec DomainSpec::staircase(StaircaseParams params) {
  if (params.blocks < 1) throw SpecError("Staircase requires at least one block");
  Staircase s;
  s.params = params;
  s.breakpoints = staircase_breakpoints(params.variant, 2 * static_cast<std::size_t>(params.blocks));
  for (int i = 0; i < params.blocks; ++i) {
    s.pieces.push_back(IntervalPiece::closed(s.breakpoints[2 * i], s.breakpoints[2 * i + 1]));
  }
  return DomainSpec(std::move(s));
}

DomainSpec DomainSpec::union_of(std::vector<DomainSpec> parts) {
  if (parts.empty()) throw SpecError("UnionOf requires at least one part");
  return DomainSpec(UnionOf{std::move(parts)});
}

std::string DomainSpec::kind_name() const {
  static constexpr const char* names[] = {"FinitePoints",       "IntegerWindow", "OddPrimeReciprocals",
                                          "NaturalReciprocals", "TruncatedRationals", "IntervalUnion",
                                          "Staircase",          "UnionOf"};
  return names[v_.index()];
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* zero_flag(bool with_zero) { return with_zero ? "withZero" : "noZero"; }

}  // namespace

std::string describe(const DomainSpec& d) {
  return std::visit(
      overloaded{
          [](const FinitePoints& f) {
            std::string s = "FinitePoints{";
            for (std::size_t i = 0; i < f.points.size(); ++i) {
              if (i) s += ", ";
              if (i == 8 && f.points.size() > 10) {
                s += "... (" + std::to_string(f.points.size()) + " points)";
                break;
              }
              s += to_string(f.points[i]);
            }
            return s + "}";
          },
          [](const IntegerWindow& w) {
            return "IntegerWindow(" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + ")";
          },
          [](const OddPrimeReciprocals& o) {
            return "OddPrimeReciprocals(" + std::to_string(o.max_prime) + ", " + zero_flag(o.with_zero) + ")";
          },
          [](const NaturalReciprocals& o) {
            return "NaturalReciprocals(" + std::to_string(o.max_n) + ", " + zero_flag(o.with_zero) + ")";
          },
          [](const TruncatedRationals& t) {
            return "TruncatedRationals(" + std::to_string(t.max_denominator) + ", " + to_string(t.lo) + ", " +
                   to_string(t.hi) + (t.adjoin_sqrt2 ? ", adjoinSqrt2" : "") + ")";
          },
          [](const IntervalUnion& u) {
            std::string s = "IntervalUnion(";
            for (std::size_t i = 0; i < u.pieces.size(); ++i) {
              if (i) s += " u ";
              s += u.pieces[i].to_string();
            }
            return s + ")";
          },
          [](const Staircase& s) {
            return std::string("Staircase(") + (s.params.variant == StaircaseVariant::A ? "A" : "B") + ", " +
                   std::to_string(s.params.blocks) + " blocks)";
          },
          [](const UnionOf& u) {
            std::string s = "UnionOf(";
            for (std::size_t i = 0; i < u.parts.size(); ++i) {
              if (i) s += ", ";
              s += describe(u.parts[i]);
            }
            return s + ")";
          },
      },
      d.variant());
}

// ---------------------------------------------------------------------------
// Primes

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long k = 3; k * k <= n; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<long long> odd_primes_up_to(long long n) {
  std::vector<long long> out;
  if (n < 3) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (long long p = 3; p <= n; p += 2) {
    if (composite[p]) continue;
    out.push_back(p);
    for (long long m = p * p; m <= n; m += 2 * p) composite[m] = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Membership

namespace {

bool fits_long(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

bool unit_reciprocal(const QuadExt& x, long long& den) {
  if (!x.is_rational() || x.rat() <= 0 || x.rat().get_num() != 1) return false;
  if (!fits_long(x.rat().get_den())) return false;
  den = x.rat().get_den().get_si();
  return true;
}

bool pieces_contain(const std::vector<IntervalPiece>& sorted_pieces, const QuadExt& x) {
  // Pieces are sorted by lo and pairwise disjoint: only the last piece starting at or before x matters.
  auto it = std::upper_bound(sorted_pieces.begin(), sorted_pieces.end(), x,
                             [](const QuadExt& v, const IntervalPiece& p) { return v < p.lo; });
  if (it == sorted_pieces.begin()) return false;
  return std::prev(it)->contains(x);
}

}  // namespace

bool contains(const DomainSpec& d, const QuadExt& x) {
  return std::visit(
      overloaded{
          [&](const FinitePoints& f) { return std::binary_search(f.points.begin(), f.points.end(), x); },
          [&](const IntegerWindow& w) {
            if (!x.is_rational() || x.rat().get_den() != 1) return false;
            const Integer& n = x.rat().get_num();
            return n >= to_integer(w.lo) && n <= to_integer(w.hi);
          },
          [&](const OddPrimeReciprocals& o) {
            if (x.is_zero()) return o.with_zero;
            long long den;
            return unit_reciprocal(x, den) && den >= 3 && den <= o.max_prime && is_prime(den);
          },
          [&](const NaturalReciprocals& o) {
            if (x.is_zero()) return o.with_zero;
            long long den;
            return unit_reciprocal(x, den) && den <= o.max_n;
          },
          [&](const TruncatedRationals& t) {
            if (!x.is_rational()) return t.adjoin_sqrt2 && x == QuadExt::sqrt2();
            return x.rat().get_den() <= to_integer(t.max_denominator) && x.rat() >= t.lo && x.rat() <= t.hi;
          },
          [&](const IntervalUnion& u) {
            return std::any_of(u.pieces.begin(), u.pieces.end(),
                               [&](const IntervalPiece& p) { return p.contains(x); });
          },
          [&](const Staircase& s) { return pieces_contain(s.pieces, x); },
          [&](const UnionOf& u) {
            return std::any_of(u.parts.begin(), u.parts.end(),
                               [&](const DomainSpec& p) { return contains(p, x); });
          },
      },
      d.variant());
}

// ---------------------------------------------------------------------------
// Enumeration and sampling

namespace {

bool in_window(const std::optional<Window>& w, const QuadExt& x) { return !w || (w->lo <= x && x <= w->hi); }

void sort_unique(std::vector<QuadExt>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void cap(PointList& out, std::size_t limit) {
  if (out.points.size() > limit) {
    out.points.resize(limit);
    out.truncated = true;
  }
}

long long clamp_to_long(const Integer& z) {
  if (z > to_integer(LLONG_MAX / 4)) return LLONG_MAX / 4;
  if (z < to_integer(LLONG_MIN / 4)) return LLONG_MIN / 4;
  return z.get_si();
}

/// Range [first, last] of n >= 1 with 1/n inside the window.
std::pair<long long, long long> reciprocal_range(long long max_n, const std::optional<Window>& w) {
  long long first = 1, last = max_n;
  if (!w) return {first, last};
  if (w->hi.sign() <= 0) return {1, 0};
  first = std::max<long long>(1, clamp_to_long(ceil(QuadExt(1) / w->hi)));
  if (w->lo.sign() > 0) last = std::min<long long>(max_n, clamp_to_long(floor(QuadExt(1) / w->lo)));
  return {first, last};
}

PointList enumerate_truncated_rationals(const TruncatedRationals& t, std::size_t limit,
                                        const std::optional<Window>& w) {
  QuadExt lo(t.lo), hi(t.hi);
  if (w) {
    lo = max(lo, w->lo);
    hi = min(hi, w->hi);
  }
  struct Frac {
    long long p, q;
  };
  std::vector<Frac> fracs;
  if (lo <= hi) {
    constexpr long long kMaxCandidates = 50'000'000;
    long long candidates = 0;
    for (long long q = 1; q <= t.max_denominator; ++q) {
      const Integer pmin = ceil(lo * QuadExt(q));
      const Integer pmax = floor(hi * QuadExt(q));
      if (pmin > pmax) continue;
      if (!fits_long(pmin) || !fits_long(pmax) || abs(pmin) > to_integer(1LL << 40) || abs(pmax) > to_integer(1LL << 40)) {
        throw SpecError("TruncatedRationals window too large to enumerate");
      }
      const long long a = pmin.get_si(), b = pmax.get_si();
      candidates += b - a + 1;
      if (candidates > kMaxCandidates) throw SpecError("TruncatedRationals enumeration exceeds desk scale");
      for (long long p = a; p <= b; ++p) {
        if (std::gcd(p, q) == 1) fracs.push_back({p, q});
      }
    }
  }
  std::sort(fracs.begin(), fracs.end(), [](const Frac& x, const Frac& y) {
    return static_cast<__int128>(x.p) * y.q < static_cast<__int128>(y.p) * x.q;
  });
  PointList out;
  const std::size_t keep = std::min(fracs.size(), limit + 1);
  out.points.reserve(keep + 1);
  for (std::size_t i = 0; i < keep; ++i) out.points.emplace_back(make_rational(fracs[i].p, fracs[i].q));
  if (t.adjoin_sqrt2 && in_window(w, QuadExt::sqrt2())) {
    out.points.push_back(QuadExt::sqrt2());
    sort_unique(out.points);
  }
  if (fracs.size() > keep) out.truncated = true;
  cap(out, limit);
  return out;
}

void sample_piece(const IntervalPiece& piece, const SamplingOptions& opt, const std::optional<Window>& w,
                  std::vector<QuadExt>& out) {
  if (piece.degenerate()) {
    if (in_window(w, piece.lo)) out.push_back(piece.lo);
    return;
  }
  const long long cells = 1LL << opt.grid_exponent;
  const QuadExt spacing = halve(piece.length(), static_cast<unsigned>(opt.grid_exponent));
  long long first = 0, last = cells;
  if (w) {
    first = std::max<long long>(first, clamp_to_long(ceil((w->lo - piece.lo) / spacing)));
    last = std::min<long long>(last, clamp_to_long(floor((w->hi - piece.lo) / spacing)));
  }
  if (!piece.lo_closed) first = std::max<long long>(first, 1);
  if (!piece.hi_closed) last = std::min<long long>(last, cells - 1);
  for (long long i = first; i <= last; ++i) out.push_back(piece.lo + spacing * QuadExt(i));
  for (int m = 1; m <= opt.endpoint_offsets; ++m) {
    const QuadExt offset = halve(spacing, static_cast<unsigned>(m));
    if (!piece.lo_closed) {
      QuadExt x = piece.lo + offset;
      if (in_window(w, x)) out.push_back(std::move(x));
    }
    if (!piece.hi_closed) {
      QuadExt x = piece.hi - offset;
      if (in_window(w, x)) out.push_back(std::move(x));
    }
  }
}

PointList collect(const DomainSpec& d, std::size_t limit, const std::optional<Window>& w,
                  const SamplingOptions* sampling) {
  return std::visit(
      overloaded{
          [&](const FinitePoints& f) {
            PointList out;
            for (const auto& x : f.points) {
              if (in_window(w, x)) out.points.push_back(x);
            }
            cap(out, limit);
            return out;
          },
          [&](const IntegerWindow& iw) {
            long long lo = iw.lo, hi = iw.hi;
            if (w) {
              lo = std::max(lo, clamp_to_long(ceil(w->lo)));
              hi = std::min(hi, clamp_to_long(floor(w->hi)));
            }
            PointList out;
            for (long long n = lo; n <= hi; ++n) {
              if (out.points.size() == limit) {
                out.truncated = true;
                break;
              }
              out.points.emplace_back(static_cast<long>(n));
            }
            return out;
          },
          [&](const OddPrimeReciprocals& o) {
            PointList out;
            if (o.with_zero && in_window(w, QuadExt(0))) out.points.emplace_back(0);
            const auto [first, last] = reciprocal_range(o.max_prime, w);
            const auto primes = odd_primes_up_to(o.max_prime);
            for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
              if (*it < first || *it > last) continue;
              out.points.emplace_back(make_rational(1, *it));
            }
            cap(out, limit);
            return out;
          },
          [&](const NaturalReciprocals& o) {
            PointList out;
            if (o.with_zero && in_window(w, QuadExt(0))) out.points.emplace_back(0);
            const auto [first, last] = reciprocal_range(o.max_n, w);
            for (long long n = last; n >= first; --n) {
              if (out.points.size() == limit) {
                out.truncated = true;
                break;
              }
              out.points.emplace_back(make_rational(1, n));
            }
            return out;
          },
          [&](const TruncatedRationals& t) { return enumerate_truncated_rationals(t, limit, w); },
          [&](const IntervalUnion& u) {
            PointList out;
            for (std::size_t i = 0; i < u.pieces.size(); ++i) {
              const auto& p = u.pieces[i];
              if (!p.degenerate()) {
                if (!sampling) {
                  throw NotEnumerableError("IntervalUnion piece " + std::to_string(i) + " " + p.to_string() +
                                           " is a non-degenerate interval");
                }
                out.sampled = true;
              }
              if (sampling) {
                sample_piece(p, *sampling, w, out.points);
              } else if (in_window(w, p.lo)) {
                out.points.push_back(p.lo);
              }
            }
            sort_unique(out.points);
            cap(out, limit);
            return out;
          },
          [&](const Staircase& s) {
            if (!sampling) throw NotEnumerableError("Staircase blocks are non-degenerate intervals");
            PointList out;
            out.sampled = true;
            for (const auto& p : s.pieces) {
              if (w && (p.hi < w->lo || p.lo > w->hi)) continue;
              sample_piece(p, *sampling, w, out.points);
            }
            sort_unique(out.points);
            cap(out, limit);
            return out;
          },
          [&](const UnionOf& u) {
            PointList out;
            for (const auto& part : u.parts) {
              PointList sub = collect(part, limit, w, sampling);
              out.truncated = out.truncated || sub.truncated;
              out.sampled = out.sampled || sub.sampled;
              out.points.insert(out.points.end(), sub.points.begin(), sub.points.end());
            }
            sort_unique(out.points);
            cap(out, limit);
            return out;
          },
      },
      d.variant());
}

}  // namespace

PointList enumerate_points(const DomainSpec& d, std::size_t limit, const std::optional<Window>& window) {
  return collect(d, limit, window, nullptr);
}

PointList sample_points(const DomainSpec& d, const SamplingOptions& options, const std::optional<Window>& window) {
  if (options.grid_exponent < 0 || options.grid_exponent > 30) throw SpecError("grid exponent out of range");
  return collect(d, options.enum_limit, window, &options);
}

bool has_continuum(const DomainSpec& d) {
  return std::visit(overloaded{
                        [](const IntervalUnion& u) {
                          return std::any_of(u.pieces.begin(), u.pieces.end(),
                                             [](const IntervalPiece& p) { return !p.degenerate(); });
                        },
                        [](const Staircase&) { return true; },
                        [](const UnionOf& u) {
                          return std::any_of(u.parts.begin(), u.parts.end(), has_continuum);
                        },
                        [](const auto&) { return false; },
                    },
                    d.variant());
}

bool is_enumerable(const DomainSpec& d) { return !has_continuum(d); }

GapResult min_gap(const DomainSpec& d, std::size_t limit) {
  GapResult out;
  if (has_continuum(d)) return out;
  const PointList pts = enumerate_points(d, limit);
  out.truncated = pts.truncated;
  for (std::size_t i = 1; i < pts.points.size(); ++i) {
    QuadExt gap = pts.points[i] - pts.points[i - 1];
    if (!out.value || gap < *out.value) out.value = std::move(gap);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Interval merging

MergeResult merge_interval_components(std::span<const IntervalPiece> pieces) {
  for (const auto& p : pieces) p.validate();
  std::vector<std::size_t> order(pieces.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pieces[a].lo != pieces[b].lo) return pieces[a].lo < pieces[b].lo;
    return pieces[a].hi < pieces[b].hi;
  });

  MergeResult out;
  std::size_t reach = 0;  // piece attaining the furthest right end of the current component
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t idx = order[k];
    const IntervalPiece& p = pieces[idx];
    if (k > 0) {
      const IntervalPiece& r = pieces[reach];
      const auto c = p.lo <=> r.hi;
      const bool overlap = c < 0 || (c == 0 && p.lo_closed && r.hi_closed);
      if (overlap) {
        throw OverlapError("interval pieces " + std::to_string(std::min(idx, reach)) + " and " +
                               std::to_string(std::max(idx, reach)) + " overlap",
                           std::min(idx, reach), std::max(idx, reach));
      }
      if (c == 0) {
        Component& comp = out.components.back();
        if (comp.glued_points.empty() || comp.glued_points.back() != p.lo) comp.glued_points.push_back(p.lo);
        comp.members.push_back(idx);
        comp.span.hi = p.hi;
        comp.span.hi_closed = p.hi_closed;
        out.shared_endpoint_pairs.emplace_back(reach, idx);
        reach = idx;
        continue;
      }
    }
    out.components.push_back(Component{p, {idx}, {}});
    reach = idx;
  }
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    for (std::size_t j = i + 1; j < out.components.size(); ++j) {
      out.gaps.push_back(out.components[j].span.lo - out.components[i].span.hi);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Staircases

std::vector<QuadExt> staircase_breakpoints(StaircaseVariant variant, std::size_t count) {
  std::vector<QuadExt> a;
  a.reserve(count);
  if (variant == StaircaseVariant::A) {
    QuadExt prev(0);  // a_0, so that a_1 = a_0 + 1
    for (long n = 1; a.size() < count; ++n) {
      const QuadExt increments[4] = {QuadExt(1), QuadExt(make_rational(1, n + 1)), QuadExt(make_rational(1, n)),
                                     QuadExt(make_rational(1, n + 1))};
      for (const auto& inc : increments) {
        if (a.size() == count) break;
        prev += inc;
        a.push_back(prev);
      }
    }
  } else {
    QuadExt prev(0);
    for (std::size_t n = 1; n <= count; ++n) {
      if (n >= 2) prev += QuadExt(make_rational(1, static_cast<long>(n - 1)));
      a.push_back(prev);
    }
  }
  return a;
}

StaircaseResult build_staircase(const StaircaseParams& params) {
  if (params.blocks < 1) throw SpecError("Staircase requires at least one block");
  auto breakpoints = staircase_breakpoints(params.variant, 2 * static_cast<std::size_t>(params.blocks));
  std::vector<IntervalPiece> pieces;
  for (int i = 0; i < params.blocks; ++i) {
    pieces.push_back(IntervalPiece::closed(breakpoints[2 * i], breakpoints[2 * i + 1]));
  }
  return {DomainSpec::interval_union(std::move(pieces)), std::move(breakpoints)};
}

// ---------------------------------------------------------------------------
// Model structure

ModelKind model_kind(const DomainSpec& d) {
  return std::visit(overloaded{
                        [](const FinitePoints&) { return ModelKind::ExactFinite; },
                        [](const IntegerWindow&) { return ModelKind::ExactFinite; },
                        [](const IntervalUnion& u) {
                          const bool any = std::any_of(u.pieces.begin(), u.pieces.end(),
                                                       [](const IntervalPiece& p) { return !p.degenerate(); });
                          return any ? ModelKind::ExactContinuum : ModelKind::ExactFinite;
                        },
                        [](const UnionOf& u) {
                          ModelKind k = ModelKind::ExactFinite;
                          for (const auto& p : u.parts) k = std::max(k, model_kind(p));
                          return k;
                        },
                        [](const auto&) { return ModelKind::Truncation; },
                    },
                    d.variant());
}

QuadExt model_resolution(const DomainSpec& d, const SamplingOptions& options) {
  return std::visit(
      overloaded{
          [](const FinitePoints&) { return QuadExt(0); },
          [](const IntegerWindow&) { return QuadExt(0); },
          [](const OddPrimeReciprocals& o) { return QuadExt(make_rational(4, o.max_prime)); },
          [](const NaturalReciprocals& o) { return QuadExt(make_rational(4, o.max_n)); },
          [](const TruncatedRationals& t) { return QuadExt(make_rational(4, t.max_denominator)); },
          [&](const IntervalUnion& u) {
            QuadExt r(0);
            for (const auto& p : u.pieces) {
              if (!p.degenerate()) r = max(r, halve(p.length(), static_cast<unsigned>(options.grid_exponent)));
            }
            return r;
          },
          [](const Staircase& s) {
            const auto& a = s.breakpoints;
            return QuadExt(4) * (a[a.size() - 1] - a[a.size() - 2]);
          },
          [&](const UnionOf& u) {
            QuadExt r(0);
            for (const auto& p : u.parts) r = max(r, model_resolution(p, options));
            return r;
          },
      },
      d.variant());
}

DomainSpec refine(const DomainSpec& d) {
  return std::visit(overloaded{
                        [&](const OddPrimeReciprocals& o) {
                          return DomainSpec::odd_prime_reciprocals(4 * o.max_prime, o.with_zero);
                        },
                        [&](const NaturalReciprocals& o) {
                          return DomainSpec::natural_reciprocals(4 * o.max_n, o.with_zero);
                        },
                        [&](const TruncatedRationals& t) {
                          return DomainSpec::truncated_rationals(4 * t.max_denominator, t.lo, t.hi, t.adjoin_sqrt2);
                        },
                        [&](const Staircase& s) {
                          return DomainSpec::staircase({s.params.variant, 4 * s.params.blocks});
                        },
                        [&](const UnionOf& u) {
                          std::vector<DomainSpec> parts;
                          for (const auto& p : u.parts) parts.push_back(refine(p));
                          return DomainSpec::union_of(std::move(parts));
                        },
                        [&](const auto&) { return d; },
                    },
                    d.variant());
}

bool structurally_midpoint_free(const DomainSpec& d) {
  // {0} u {1/p : p odd prime}: (1/p + 1/q)/2 = 1/r forces p | q, and 1/(2p) has an even denominator.
  return std::holds_alternative<OddPrimeReciprocals>(d.variant());
}

std::optional<QuadExt> structural_gap(const DomainSpec& d, std::size_t limit) {
  if (std::holds_alternative<IntegerWindow>(d.variant())) return QuadExt(1);
  if (model_kind(d) != ModelKind::ExactFinite) return std::nullopt;
  const GapResult g = min_gap(d, limit);
  if (g.truncated) return std::nullopt;
  return g.value;
}

}  // namespace symcont
