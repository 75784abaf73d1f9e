#include "symcont/analysis.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <stdexcept>

#include "interval_decision.hpp"
#include "pair_scan.hpp"
#include "point_model.hpp"
#include "symcont/error.hpp"

namespace symcont {

using detail::Best;
using detail::CenterIndex;
using detail::Levels;
using detail::Model;
using detail::RangeExtrema;

std::string to_string(Notion n) {
  switch (n) {
    case Notion::C: return "C";
    case Notion::UC: return "UC";
    case Notion::SC: return "SC";
    case Notion::USC: return "USC";
    case Notion::USC_wrt_B: return "USC_wrt_B";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Proven: return "Proven";
    case Status::Refuted: return "Refuted";
    case Status::NoViolationAtResolution: return "NoViolationAtResolution";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::UniformlyDiscrete: return "UniformlyDiscrete";
    case CertificateKind::MidpointFree: return "MidpointFree";
    case CertificateKind::IntervalDecision: return "IntervalDecision";
    case CertificateKind::ImplicationFrom: return "ImplicationFrom";
    case CertificateKind::ExhaustiveEnumeration: return "ExhaustiveEnumeration";
    case CertificateKind::AnalyticFormula: return "AnalyticFormula";
    case CertificateKind::WitnessFamily: return "WitnessFamily";
    case CertificateKind::ModulusSweep: return "ModulusSweep";
  }
  return "?";
}

std::optional<Notion> parse_notion(const std::string& s) {
  std::string u;
  for (char ch : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (u == "C") return Notion::C;
  if (u == "UC") return Notion::UC;
  if (u == "SC") return Notion::SC;
  if (u == "USC") return Notion::USC;
  if (u == "USC_WRT_B") return Notion::USC_wrt_B;
  return std::nullopt;
}

std::vector<QuadExt> AnalysisConfig::default_schedule() {
  std::vector<QuadExt> out;
  for (int j = 0; j <= 20; ++j) out.emplace_back(make_rational(1, 1LL << j));
  return out;
}

void AnalysisConfig::validate() const {
  if (delta_schedule.empty()) throw ConfigurationError("delta schedule is empty");
  for (std::size_t k = 0; k < delta_schedule.size(); ++k) {
    if (delta_schedule[k].sign() <= 0) throw ConfigurationError("delta schedule entries must be positive");
    if (k > 0 && !(delta_schedule[k] < delta_schedule[k - 1])) {
      throw ConfigurationError("delta schedule must be strictly decreasing");
    }
  }
  if (grid_exponent < 0 || grid_exponent > 24) throw ConfigurationError("grid exponent must lie in [0, 24]");
  if (enum_limit == 0) throw ConfigurationError("enumeration limit must be positive");
}

SamplingOptions AnalysisConfig::sampling() const {
  SamplingOptions s;
  s.grid_exponent = grid_exponent;
  s.enum_limit = enum_limit;
  return s;
}

FuncSpec refine(const FuncSpec& f) {
  if (const auto* pw = f.as_piecewise()) {
    std::vector<Piece> pieces;
    for (const auto& p : pw->pieces) pieces.push_back({refine(p.region), p.formula});
    return FuncSpec::piecewise(std::move(pieces));
  }
  const auto& c = std::get<Combined>(f.node());
  std::vector<FuncSpec> ops;
  for (const auto& o : c.operands) ops.push_back(refine(o));
  return combine(c.op, std::move(ops));
}

namespace {

constexpr std::size_t kC = 0, kUC = 1, kSC = 2, kUSC = 3;
constexpr std::size_t kMaxRefinedChecks = 64;
/// Base models up to this size are refined in full for the global sweeps; larger ones
/// only in windows around the witness pairs.
constexpr std::size_t kFullRefinement = 2048;

WitnessTerm sym_term(const Model& m, int i, int j, const QuadExt& delta) {
  WitnessTerm t;
  t.x = m.x[std::min(i, j)];
  t.y = m.x[std::max(i, j)];
  t.center = midpoint(t.x, t.y);
  t.scale = halve(t.y - t.x, 1);
  t.delta = delta;
  t.oscillation = abs(m.v[j] - m.v[i]);
  return t;
}

WitnessTerm dist_term(const Model& m, int i, int j, const QuadExt& delta) {
  WitnessTerm t;
  t.x = m.x[std::min(i, j)];
  t.y = m.x[std::max(i, j)];
  t.scale = t.y - t.x;
  t.delta = delta;
  t.oscillation = abs(m.v[j] - m.v[i]);
  return t;
}

QuadExt osc_of(const Best& b) { return b.has() ? b.osc : QuadExt(0); }

Verdict implied(Notion notion, const Verdict& source) {
  Verdict v;
  v.notion = notion;
  v.status = source.status;
  Certificate c;
  c.kind = CertificateKind::ImplicationFrom;
  c.from = source.notion;
  c.detail = to_string(source.notion) + (source.status == Status::Proven ? " holds" : " fails");
  v.certificate = std::move(c);
  v.witness = source.witness;
  return v;
}

Verdict proven(Notion notion, CertificateKind kind, std::string detail, std::optional<QuadExt> gap = std::nullopt) {
  Verdict v;
  v.notion = notion;
  v.status = Status::Proven;
  Certificate c;
  c.kind = kind;
  c.gap = std::move(gap);
  c.detail = std::move(detail);
  v.certificate = std::move(c);
  return v;
}

Verdict refuted(Notion notion, CertificateKind kind, std::string detail, Witness w) {
  Verdict v;
  v.notion = notion;
  v.status = Status::Refuted;
  Certificate c;
  c.kind = kind;
  c.detail = std::move(detail);
  v.certificate = std::move(c);
  v.witness = std::move(w);
  return v;
}

Verdict no_violation(Notion notion, ResolutionInfo info) {
  Verdict v;
  v.notion = notion;
  v.status = Status::NoViolationAtResolution;
  v.resolution = std::move(info);
  return v;
}

bool analytic_uc(const FuncSpec& f) {
  const auto* pw = f.as_piecewise();
  if (!pw || pw->pieces.size() != 1) return false;
  const Formula& form = pw->pieces.front().formula;
  return std::holds_alternative<Const>(form) || std::holds_alternative<Identity>(form) ||
         std::holds_alternative<Affine>(form);
}

/// Everything the sweeps share for one (ambient, f, config): the schedule window, the
/// base model and lazily built scans.
class Sweeper {
public:
  Sweeper(const DomainSpec& ambient, const FuncSpec& f, const AnalysisConfig& config)
      : a_(ambient), f_(f), cfg_(config), opts_(config.sampling()) {
    rho_ = model_resolution(ambient, opts_);
    const auto& s = config.delta_schedule;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] > rho_) j_ = k;
    }
    if (j_) {
      j0_ = *j_ >= 4 ? *j_ - 4 : 0;
      window_.assign(s.begin() + static_cast<long>(j0_), s.begin() + static_cast<long>(*j_) + 1);
    }
  }

  const Model& base() {
    if (!model_) model_ = std::make_unique<Model>(detail::build_model(a_, f_, opts_));
    return *model_;
  }

  bool built() const { return model_ != nullptr; }

  Verdict global_sym(const DomainSpec& centers, Notion notion, bool share) {
    if (!j_) return no_window(notion);
    const Model& m = base();
    std::unique_ptr<SymData> local;
    SymData* data;
    if (share) {
      data = &sym_data(centers);
    } else {
      local = std::make_unique<SymData>(make_sym_data(centers, false));
      data = local.get();
    }
    ResolutionInfo info = base_info(data->scan.pairs, data->scan.capped);
    const auto cum = detail::cumulative(data->scan.buckets, detail::PairRanker(m));
    if (!data->scan.finest_complete()) {
      info.detail = "pair budget exhausted after " + std::to_string(data->scan.pairs) + " symmetric pairs";
      return no_violation(notion, std::move(info));
    }
    if (!cum.back().has()) {
      info.zero = !data->scan.capped;
      info.detail = "every symmetric pair with h < " + to_string(window_.back()) + " has equal values";
      return no_violation(notion, std::move(info));
    }
    const QuadExt eps = cum.back().osc;
    info.oscillation = eps;
    Witness w;
    w.notion = notion;
    w.epsilon = eps;
    std::vector<Window> windows;
    for (std::size_t k = 0; k < window_.size(); ++k) {
      w.terms.push_back(sym_term(m, cum[k].i, cum[k].j, window_[k]));
      add_window(windows, *w.terms.back().center);
    }
    if (m.size() <= kFullRefinement) windows.clear();
    const Model rm = refined_model(windows);
    const CenterIndex rc = detail::build_centers(refine(centers), cfg_.enum_limit, windows);
    const Levels fine({halve(window_.back(), 2)});
    const auto rs = detail::scan_symmetric(rm, rc, fine, cfg_.max_pairs, false);
    const QuadExt eps_fine = osc_of(rs.buckets[0]);
    const std::string evidence = "oscillation " + to_string(eps) + " at every scheduled delta down to " +
                                 to_string(window_.back()) + "; refined model reaches " + to_string(eps_fine) +
                                 " below " + to_string(fine.d[0]);
    if (QuadExt(2) * eps_fine >= eps) {
      w.description = "symmetric pairs with shrinking h and oscillation at least " + to_string(eps);
      return refuted(notion, CertificateKind::ModulusSweep, evidence, std::move(w));
    }
    info.detail = "oscillation decays under refinement: " + evidence;
    return no_violation(notion, std::move(info));
  }

  Verdict global_uc() {
    if (!j_) return no_window(Notion::UC);
    const Model& m = base();
    const Levels lv(window_);
    const auto scan = detail::scan_uniform(m, extrema(), lv, cfg_.max_pairs);
    ResolutionInfo info = base_info(scan.pairs, scan.capped);
    if (scan.capped) {
      info.detail = "pair budget exhausted";
      return no_violation(Notion::UC, std::move(info));
    }
    if (!scan.levels.back().has()) {
      info.zero = true;
      info.detail = "every pair closer than " + to_string(window_.back()) + " has equal values";
      return no_violation(Notion::UC, std::move(info));
    }
    const QuadExt eps = scan.levels.back().osc;
    info.oscillation = eps;
    Witness w;
    w.notion = Notion::UC;
    w.epsilon = eps;
    std::vector<Window> windows;
    for (std::size_t k = 0; k < window_.size(); ++k) {
      w.terms.push_back(dist_term(m, scan.levels[k].i, scan.levels[k].j, window_[k]));
      add_window(windows, midpoint(w.terms.back().x, w.terms.back().y));
    }
    if (m.size() <= kFullRefinement) windows.clear();
    const Model rm = refined_model(windows);
    const RangeExtrema rrx(rm);
    const Levels fine({halve(window_.back(), 2)});
    const auto rs = detail::scan_uniform(rm, rrx, fine, cfg_.max_pairs);
    const QuadExt eps_fine = osc_of(rs.levels[0]);
    const std::string evidence = "oscillation " + to_string(eps) + " at every scheduled delta down to " +
                                 to_string(window_.back()) + "; refined model reaches " + to_string(eps_fine) +
                                 " below " + to_string(fine.d[0]);
    if (QuadExt(2) * eps_fine >= eps) {
      w.description = "pairs with shrinking distance and oscillation at least " + to_string(eps);
      return refuted(Notion::UC, CertificateKind::ModulusSweep, evidence, std::move(w));
    }
    info.detail = "oscillation decays under refinement: " + evidence;
    return no_violation(Notion::UC, std::move(info));
  }

  Verdict pointwise_c() {
    if (!j_) return no_window(Notion::C);
    const Model& m = base();
    const RangeExtrema& rx = extrema();
    const Levels lv(window_);
    std::size_t used = 0, checks = 0;
    bool capped = false;
    QuadExt finest(0);
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (used + lv.size() > cfg_.max_pairs) {
        capped = true;
        break;
      }
      used += lv.size();
      const auto bands = detail::point_bands(m, rx, a, lv);
      if (bands.back().has() && bands.back().osc > finest) finest = bands.back().osc;
      if (!all_positive(bands)) continue;
      if (QuadExt(2) * bands.back().osc < bands.front().osc) continue;
      if (checks == kMaxRefinedChecks) break;
      ++checks;
      const QuadExt& xa = m.x[a];
      const Model rm = refined_model({Window{xa - window_.back(), xa + window_.back()}});
      const auto idx = accumulation_index(m, a, rm);
      if (!idx) continue;
      const RangeExtrema rrx(rm);
      const Levels fine({halve(window_.back(), 2)});
      const auto rb = detail::point_bands(rm, rrx, *idx, fine);
      if (!rb[0].has() || QuadExt(2) * rb[0].osc < bands.back().osc) continue;
      Witness w;
      w.notion = Notion::C;
      w.point = xa;
      for (std::size_t k = 0; k < lv.size(); ++k) {
        w.terms.push_back(dist_term(m, bands[k].i, bands[k].j, window_[k]));
      }
      w.epsilon = detail::min_oscillation(w.terms);
      w.description = "points approaching " + to_string(xa) + " with |f(y) - f(" + to_string(xa) +
                      ")| at least " + to_string(w.epsilon);
      return refuted(Notion::C, CertificateKind::ModulusSweep,
                     "oscillation at " + to_string(xa) + " persists in every distance band down to " +
                         to_string(window_.back()) + " and reaches " + to_string(rb[0].osc) +
                         " in the refined model below " + to_string(fine.d[0]),
                     std::move(w));
    }
    ResolutionInfo info = base_info(used, capped);
    info.oscillation = finest;
    info.zero = finest.is_zero() && !capped;
    info.detail = capped ? "pair budget exhausted" : "no point keeps its oscillation under refinement";
    return no_violation(Notion::C, std::move(info));
  }

  Verdict pointwise_sc() {
    if (!j_) return no_window(Notion::SC);
    if (has_continuum(a_)) {
      ResolutionInfo info = base_info(0, false);
      info.detail = "pointwise symmetric sweep runs on discrete models only";
      return no_violation(Notion::SC, std::move(info));
    }
    const Model& m = base();
    SymData& data = sym_data(a_);
    ResolutionInfo info = base_info(data.scan.pairs, data.scan.capped);
    const auto cum = detail::cumulative(data.scan.buckets, detail::PairRanker(m));
    info.oscillation = osc_of(cum.back());
    if (data.scan.capped) {
      info.detail = "pair budget exhausted";
      return no_violation(Notion::SC, std::move(info));
    }
    std::size_t checks = 0;
    for (std::size_t k = 0; k < data.scan.per_center.size(); ++k) {
      const auto& bands = data.scan.per_center[k];
      if (!all_positive(bands)) continue;
      if (QuadExt(2) * bands.back().osc < bands.front().osc) continue;
      if (checks == kMaxRefinedChecks) break;
      ++checks;
      const QuadExt& center = data.centers.pts[k];
      const std::size_t a = m.lower_index(center);
      if (a == m.size() || m.x[a] != center) continue;
      const Model rm = refined_model({Window{center - window_.back(), center + window_.back()}});
      if (!accumulation_index(m, a, rm)) continue;
      CenterIndex single;
      single.pts = {center};
      single.pa = {center.approx()};
      single.tol = detail::tolerance_for(single.pts);
      const Levels fine({halve(window_.back(), 2)});
      const auto rs = detail::scan_symmetric(rm, single, fine, cfg_.max_pairs, false);
      if (!rs.buckets[0].has() || QuadExt(2) * rs.buckets[0].osc < bands.back().osc) continue;
      Witness w;
      w.notion = Notion::SC;
      w.point = center;
      for (std::size_t b = 0; b < bands.size(); ++b) {
        w.terms.push_back(sym_term(m, bands[b].i, bands[b].j, window_[b]));
      }
      w.epsilon = detail::min_oscillation(w.terms);
      w.description = "symmetric pairs around " + to_string(center) + " with oscillation at least " +
                      to_string(w.epsilon);
      return refuted(Notion::SC, CertificateKind::ModulusSweep,
                     "symmetric oscillation around " + to_string(center) + " persists in every band down to " +
                         to_string(window_.back()) + " and reaches " + to_string(rs.buckets[0].osc) +
                         " in the refined model below " + to_string(fine.d[0]),
                     std::move(w));
    }
    info.zero = !cum.back().has();
    info.detail = "no center keeps its symmetric oscillation under refinement";
    return no_violation(Notion::SC, std::move(info));
  }

  /// Symmetric pairs of the base model, any h, centered in `centers`; used to cross-check
  /// structural midpoint-freeness.
  std::size_t count_pairs(const DomainSpec& centers, std::size_t limit) {
    const Model& m = base();
    if (m.size() < 2 || limit == 0) return 0;
    const CenterIndex c = detail::build_centers(centers, cfg_.enum_limit);
    const QuadExt span = m.x.back() - m.x.front() + QuadExt(1);
    std::size_t found = 0;
    detail::for_each_symmetric_pair(m, c, span, [&](int, int, int) {
      ++found;
      return found < limit;
    });
    return found;
  }

private:
  struct SymData {
    CenterIndex centers;
    detail::SymScan scan;
  };

  static bool all_positive(const std::vector<Best>& bands) {
    return !bands.empty() && std::all_of(bands.begin(), bands.end(), [](const Best& b) { return b.has(); });
  }

  SymData make_sym_data(const DomainSpec& centers, bool track) {
    SymData d;
    d.centers = detail::build_centers(centers, cfg_.enum_limit);
    d.scan = detail::scan_symmetric(base(), d.centers, Levels(window_), cfg_.max_pairs, track);
    return d;
  }

  SymData& sym_data(const DomainSpec& centers) {
    if (!sym_) sym_ = std::make_unique<SymData>(make_sym_data(centers, !has_continuum(centers)));
    return *sym_;
  }

  const RangeExtrema& extrema() {
    if (!rx_) rx_ = std::make_unique<RangeExtrema>(base());
    return *rx_;
  }

  void add_window(std::vector<Window>& windows, const QuadExt& center) const {
    for (const auto& w : windows) {
      if (w.lo + window_.back() == center) return;
    }
    windows.push_back({center - window_.back(), center + window_.back()});
  }

  Model refined_model(const std::vector<Window>& windows) const {
    return detail::build_model(refine(a_), refine(f_), detail::refined_sampling(a_, opts_), windows, true);
  }

  /// Index of base point a in the refined model when its nearest neighbor there is at
  /// most half as far as in the base model.
  static std::optional<std::size_t> accumulation_index(const Model& m, std::size_t a, const Model& rm) {
    const std::size_t idx = rm.lower_index(m.x[a]);
    if (idx == rm.size() || rm.x[idx] != m.x[a]) return std::nullopt;
    const auto g = detail::nearest_gap(m, a);
    const auto rg = detail::nearest_gap(rm, idx);
    if (!g || !rg || QuadExt(2) * *rg > *g) return std::nullopt;
    return idx;
  }

  ResolutionInfo base_info(std::size_t pairs, bool capped) {
    ResolutionInfo info;
    info.resolution = rho_;
    if (j_) info.finest_delta = window_.back();
    const Model& m = base();
    info.truncated = m.sampled || model_kind(a_) == ModelKind::Truncation;
    info.capped = capped || m.truncated;
    info.pairs = pairs;
    return info;
  }

  Verdict no_window(Notion notion) {
    ResolutionInfo info;
    info.resolution = rho_;
    info.truncated = true;
    info.detail = "no scheduled delta exceeds the model resolution " + to_string(rho_);
    return no_violation(notion, std::move(info));
  }

  const DomainSpec& a_;
  const FuncSpec& f_;
  const AnalysisConfig& cfg_;
  SamplingOptions opts_;
  QuadExt rho_;
  std::optional<std::size_t> j_;
  std::size_t j0_ = 0;
  std::vector<QuadExt> window_;
  std::unique_ptr<Model> model_;
  std::unique_ptr<RangeExtrema> rx_;
  std::unique_ptr<SymData> sym_;
};

using Slots = std::array<std::optional<Verdict>, 4>;

constexpr std::array<Notion, 4> kNotions = {Notion::C, Notion::UC, Notion::SC, Notion::USC};

bool decided(const std::optional<Verdict>& v) { return v && v->status != Status::NoViolationAtResolution; }

void set_implied(Slots& s, std::size_t target, std::size_t source) {
  const Verdict& src = *s[source];
  if (decided(s[target])) {
    if (s[target]->status != src.status) {
      throw std::logic_error("inconsistent verdicts: " + to_string(src.notion) + " " + to_string(src.status) +
                             " but " + to_string(kNotions[target]) + " " + to_string(s[target]->status));
    }
    return;
  }
  s[target] = implied(kNotions[target], src);
}

void propagate(Slots& s) {
  const auto is = [&](std::size_t i, Status st) { return decided(s[i]) && s[i]->status == st; };
  for (int round = 0; round < 4; ++round) {
    if (is(kUC, Status::Proven)) {
      set_implied(s, kC, kUC);
      set_implied(s, kUSC, kUC);
    }
    if (is(kC, Status::Proven)) set_implied(s, kSC, kC);
    if (is(kUSC, Status::Proven)) set_implied(s, kSC, kUSC);
    if (is(kSC, Status::Refuted)) {
      set_implied(s, kC, kSC);
      set_implied(s, kUSC, kSC);
    }
    if (is(kC, Status::Refuted)) set_implied(s, kUC, kC);
    if (is(kUSC, Status::Refuted)) set_implied(s, kUC, kUSC);
  }
}

bool symmetric_notion(Notion n) { return n == Notion::USC || n == Notion::USC_wrt_B || n == Notion::SC; }

/// Checks a user-supplied sequence exactly; the witness when every term passes and
/// the scales strictly decrease.
std::optional<Witness> verify_hint(const WitnessSequence& hint, const DomainSpec& ambient, const DomainSpec& centers,
                                   const FuncSpec& f, const AnalysisConfig& config, std::string& why) {
  if (hint.last < hint.first) {
    why = "empty sequence";
    return std::nullopt;
  }
  const auto count = static_cast<std::size_t>(hint.last - hint.first + 1);
  if (count > config.max_pairs) {
    why = "sequence exceeds the pair budget";
    return std::nullopt;
  }
  const bool sym = symmetric_notion(hint.notion);
  Witness w;
  w.notion = hint.notion;
  w.description = hint.description;
  for (long n = hint.first; n <= hint.last; ++n) {
    auto [x, y] = hint.terms(n);
    if (y < x) std::swap(x, y);
    const std::string at = "term " + std::to_string(n);
    if (!(x < y)) {
      why = at + " is a degenerate pair";
      return std::nullopt;
    }
    if (!contains(ambient, x) || !contains(ambient, y)) {
      why = at + " leaves the domain";
      return std::nullopt;
    }
    WitnessTerm t;
    if (sym) {
      t.center = midpoint(x, y);
      if (!contains(centers, *t.center)) {
        why = at + " has midpoint " + to_string(*t.center) + " outside the center set";
        return std::nullopt;
      }
      t.scale = halve(y - x, 1);
    } else {
      t.scale = y - x;
    }
    t.oscillation = abs(evaluate(f, y) - evaluate(f, x));
    if (hint.claimed_oscillation && t.oscillation != hint.claimed_oscillation(n)) {
      why = at + " has oscillation " + to_string(t.oscillation) + ", not the claimed " +
            to_string(hint.claimed_oscillation(n));
      return std::nullopt;
    }
    if (!w.terms.empty() && !(t.scale < w.terms.back().scale)) {
      why = at + " does not shrink";
      return std::nullopt;
    }
    std::optional<QuadExt> delta;
    for (const auto& d : config.delta_schedule) {
      if (t.scale < d) delta = d;
    }
    if (!delta) continue;
    t.delta = *delta;
    t.x = std::move(x);
    t.y = std::move(y);
    w.terms.push_back(std::move(t));
  }
  if (w.terms.size() < 2) {
    why = "fewer than two terms fall under the schedule";
    return std::nullopt;
  }
  w.epsilon = detail::min_oscillation(w.terms);
  if (w.epsilon.sign() <= 0) {
    why = "a term has zero oscillation";
    return std::nullopt;
  }
  return w;
}

void check_subset(const DomainSpec& ambient, const DomainSpec& b, const AnalysisConfig& config) {
  const PointList pts = sample_points(b, config.sampling());
  for (const auto& p : pts.points) {
    if (!contains(ambient, p)) {
      throw PreconditionError("subset point " + to_string(p) + " is not a member of the ambient domain");
    }
  }
}

}  // namespace

std::vector<Verdict> classify(const DomainSpec& ambient, const FuncSpec& f, const AnalysisConfig& config,
                              const std::vector<WitnessSequence>& hints) {
  config.validate();
  Sweeper sweeper(ambient, f, config);
  Slots s;
  std::vector<Verdict> out;
  const auto finish = [&] {
    if (!sweeper.built()) sweeper.base();
    for (std::size_t i = 0; i < 4; ++i) out.push_back(std::move(*s[i]));
    return out;
  };

  if (const auto gap = structural_gap(ambient, config.enum_limit)) {
    const Model& m = sweeper.base();
    for (std::size_t i = 0; i < 4; ++i) {
      if (m.size() <= 1 && !m.truncated) {
        s[i] = proven(kNotions[i], CertificateKind::ExhaustiveEnumeration,
                      "the domain has " + std::to_string(m.size()) + " point(s)");
      } else {
        s[i] = proven(kNotions[i], CertificateKind::UniformlyDiscrete,
                      "distinct points are at least " + to_string(*gap) + " apart", *gap);
      }
    }
    return finish();
  }

  if (structurally_midpoint_free(ambient)) {
    if (const std::size_t found = sweeper.count_pairs(ambient, std::min<std::size_t>(config.max_pairs, 1));
        found > 0) {
      throw std::logic_error("midpoint-free domain " + describe(ambient) + " has a symmetric pair");
    }
    s[kUSC] = proven(Notion::USC, CertificateKind::MidpointFree,
                     "no midpoint of two distinct members is a member, for every truncation");
  }

  if (const auto pieces = detail::interval_pieces_of(ambient)) {
    const bool staircase = std::holds_alternative<Staircase>(ambient.variant());
    if (const auto iv = detail::interval_decision(*pieces, f, config)) {
      s[kC] = iv->c;
      s[kSC] = iv->sc;
      if (!staircase) {
        s[kUC] = iv->uc;
        s[kUSC] = iv->usc;
      }
    }
  }

  if (!s[kUC] && analytic_uc(f)) {
    s[kUC] = proven(Notion::UC, CertificateKind::AnalyticFormula,
                    describe(std::get<Piecewise>(f.node()).pieces.front().formula) +
                        " is uniformly continuous on every subset of the line");
  }
  propagate(s);

  for (const auto& hint : hints) {
    const std::size_t slot = hint.notion == Notion::UC ? kUC : hint.notion == Notion::USC ? kUSC : 4;
    if (slot == 4 || decided(s[slot])) continue;
    std::string why;
    if (auto w = verify_hint(hint, ambient, ambient, f, config, why)) {
      s[slot] = refuted(hint.notion, CertificateKind::WitnessFamily,
                        "verified sequence of " + std::to_string(w->terms.size()) + " terms: " + hint.description,
                        std::move(*w));
      propagate(s);
    }
  }

  if (!decided(s[kC])) {
    s[kC] = sweeper.pointwise_c();
    propagate(s);
  }
  if (!decided(s[kUSC])) {
    s[kUSC] = sweeper.global_sym(ambient, Notion::USC, true);
    propagate(s);
  }
  if (!decided(s[kSC])) {
    s[kSC] = sweeper.pointwise_sc();
    propagate(s);
  }
  if (!decided(s[kUC])) {
    s[kUC] = sweeper.global_uc();
    propagate(s);
  }
  return finish();
}

Verdict check_wrt_subset(const DomainSpec& ambient, const DomainSpec& b, const FuncSpec& f,
                         const AnalysisConfig& config, const std::vector<WitnessSequence>& hints) {
  config.validate();
  check_subset(ambient, b, config);
  if (b == ambient) {
    Verdict v = classify(ambient, f, config, hints)[kUSC];
    v.notion = Notion::USC_wrt_B;
    return v;
  }
  Sweeper sweeper(ambient, f, config);
  const auto done = [&](Verdict v) {
    if (!sweeper.built()) sweeper.base();
    return v;
  };
  if (const auto gap = structural_gap(ambient, config.enum_limit)) {
    return done(proven(Notion::USC_wrt_B, CertificateKind::UniformlyDiscrete,
                       "distinct points are at least " + to_string(*gap) + " apart", *gap));
  }
  if (structurally_midpoint_free(ambient)) {
    return done(proven(Notion::USC_wrt_B, CertificateKind::MidpointFree,
                       "no midpoint of two distinct members is a member"));
  }
  std::optional<Verdict> uc;
  if (const auto pieces = detail::interval_pieces_of(ambient);
      pieces && !std::holds_alternative<Staircase>(ambient.variant())) {
    if (const auto iv = detail::interval_decision(*pieces, f, config)) uc = iv->uc;
  }
  if (!uc && analytic_uc(f)) uc = proven(Notion::UC, CertificateKind::AnalyticFormula, "analytic formula");
  if (uc && uc->status == Status::Proven) return done(implied(Notion::USC_wrt_B, *uc));
  for (const auto& hint : hints) {
    if (hint.notion != Notion::USC_wrt_B) continue;
    std::string why;
    if (auto w = verify_hint(hint, ambient, b, f, config, why)) {
      return done(refuted(Notion::USC_wrt_B, CertificateKind::WitnessFamily,
                          "verified sequence of " + std::to_string(w->terms.size()) + " terms: " + hint.description,
                          std::move(*w)));
    }
  }
  return sweeper.global_sym(b, Notion::USC_wrt_B, false);
}

Verdict modulus_sweep(const DomainSpec& ambient, const FuncSpec& f, Notion notion, const AnalysisConfig& config) {
  config.validate();
  Sweeper sweeper(ambient, f, config);
  switch (notion) {
    case Notion::UC: return sweeper.global_uc();
    case Notion::USC: return sweeper.global_sym(ambient, Notion::USC, false);
    case Notion::C: return sweeper.pointwise_c();
    case Notion::SC: return sweeper.pointwise_sc();
    case Notion::USC_wrt_B: break;
  }
  throw ConfigurationError("modulus_sweep needs the subset B; use check_wrt_subset");
}

// ---------------------------------------------------------------------------
// Profiles

namespace {

ModulusProfile make_profile(const std::vector<QuadExt>& schedule, const std::vector<Best>& cum, const Model& m,
                            bool symmetric, bool truncated) {
  ModulusProfile p;
  p.schedule = schedule;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    ModulusProfile::Entry e;
    e.delta = schedule[k];
    e.oscillation = osc_of(cum[k]);
    if (cum[k].has()) {
      e.witness = symmetric ? sym_term(m, cum[k].i, cum[k].j, schedule[k])
                            : dist_term(m, cum[k].i, cum[k].j, schedule[k]);
    }
    e.truncated = truncated;
    p.values.push_back(std::move(e));
  }
  return p;
}

}  // namespace

ModulusProfile sym_profile(const DomainSpec& ambient, const DomainSpec& centers, const FuncSpec& f,
                           const AnalysisConfig& config) {
  config.validate();
  const Model m = detail::build_model(ambient, f, config.sampling());
  const CenterIndex c = detail::build_centers(centers, config.enum_limit);
  const Levels lv(config.delta_schedule);
  const auto scan = detail::scan_symmetric(m, c, lv, config.max_pairs, false);
  const auto cum = detail::cumulative(scan.buckets, detail::PairRanker(m));
  return make_profile(config.delta_schedule, cum, m, true, scan.capped || m.truncated || c.truncated);
}

ModulusProfile uc_profile(const DomainSpec& ambient, const FuncSpec& f, const AnalysisConfig& config) {
  config.validate();
  const Model m = detail::build_model(ambient, f, config.sampling());
  const RangeExtrema rx(m);
  const Levels lv(config.delta_schedule);
  const auto scan = detail::scan_uniform(m, rx, lv, config.max_pairs);
  return make_profile(config.delta_schedule, scan.levels, m, false, scan.capped || m.truncated);
}

namespace {

OscillationResult single(const ModulusProfile& p) {
  OscillationResult r;
  r.oscillation = p.values[0].oscillation;
  r.witness = p.values[0].witness;
  r.truncated = p.values[0].truncated;
  return r;
}

}  // namespace

OscillationResult sym_oscillation(const DomainSpec& ambient, const DomainSpec& centers, const FuncSpec& f,
                                  const QuadExt& delta, const AnalysisConfig& config) {
  AnalysisConfig c = config;
  c.delta_schedule = {delta};
  return single(sym_profile(ambient, centers, f, c));
}

OscillationResult uc_oscillation(const DomainSpec& ambient, const FuncSpec& f, const QuadExt& delta,
                                 const AnalysisConfig& config) {
  AnalysisConfig c = config;
  c.delta_schedule = {delta};
  return single(uc_profile(ambient, f, c));
}

// ---------------------------------------------------------------------------
// Witness verification

WitnessCheck verify_witness(const Witness& w, const DomainSpec& ambient, const FuncSpec& f,
                            const std::optional<DomainSpec>& centers) {
  const auto fail = [](std::string msg) { return WitnessCheck{false, std::move(msg)}; };
  if (w.terms.empty()) return fail("witness has no terms");
  if (w.epsilon.sign() <= 0) return fail("witness epsilon is not positive");
  const DomainSpec& mids = centers ? *centers : ambient;
  const bool pointwise = w.notion == Notion::C || w.notion == Notion::SC;
  if (pointwise) {
    if (!w.point) return fail("pointwise witness lacks its point");
    if (!contains(ambient, *w.point)) return fail("point " + to_string(*w.point) + " is not in the domain");
  }
  const bool sym = symmetric_notion(w.notion);
  for (std::size_t k = 0; k < w.terms.size(); ++k) {
    const WitnessTerm& t = w.terms[k];
    const std::string at = "term " + std::to_string(k + 1) + ": ";
    if (!(t.x < t.y)) return fail(at + "x must be smaller than y");
    if (!contains(ambient, t.x)) return fail(at + to_string(t.x) + " is not in the domain");
    if (!contains(ambient, t.y)) return fail(at + to_string(t.y) + " is not in the domain");
    if (sym) {
      const QuadExt mid = midpoint(t.x, t.y);
      if (!t.center || *t.center != mid) return fail(at + "recorded center is not the midpoint");
      if (!contains(mids, mid)) return fail(at + "midpoint " + to_string(mid) + " is not an admissible center");
      if (t.scale != halve(t.y - t.x, 1)) return fail(at + "recorded h is wrong");
      if (w.notion == Notion::SC && mid != *w.point) return fail(at + "pair is not centered at the point");
    } else {
      if (t.scale != t.y - t.x) return fail(at + "recorded distance is wrong");
      if (w.notion == Notion::C && t.x != *w.point && t.y != *w.point) {
        return fail(at + "pair does not contain the point");
      }
    }
    if (!(t.scale < t.delta)) return fail(at + "scale is not below its delta");
    const QuadExt osc = abs(evaluate(f, t.y) - evaluate(f, t.x));
    if (osc != t.oscillation) {
      return fail(at + "oscillation recomputes to " + to_string(osc) + ", recorded " + to_string(t.oscillation));
    }
    if (osc < w.epsilon) return fail(at + "oscillation is below epsilon");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Implications and limits

ImplicationReport implication_suite(const DomainSpec& ambient, const FuncSpec& f, const AnalysisConfig& config) {
  config.validate();
  ImplicationReport rep;
  const ModulusProfile sym = sym_profile(ambient, ambient, f, config);
  AnalysisConfig doubled = config;
  for (auto& d : doubled.delta_schedule) d = QuadExt(2) * d;
  const ModulusProfile uc = uc_profile(ambient, f, doubled);
  for (std::size_t k = 0; k < config.delta_schedule.size(); ++k) {
    ImplicationReport::Row row{config.delta_schedule[k], sym.values[k].oscillation, uc.values[k].oscillation, true};
    row.holds = row.sym <= row.uc_double;
    if (!row.holds) {
      rep.violations.push_back("omega_sym(" + to_string(row.delta) + ") = " + to_string(row.sym) +
                               " exceeds omega_uc(2 delta) = " + to_string(row.uc_double));
    }
    rep.rows.push_back(std::move(row));
  }
  rep.verdicts = classify(ambient, f, config);
  const auto st = [&](std::size_t i) { return rep.verdicts[i].status; };
  const auto require = [&](bool cond, const std::string& what) {
    if (!cond) rep.violations.push_back(what);
  };
  require(st(kUC) != Status::Proven || st(kUSC) == Status::Proven, "UC Proven without USC Proven");
  require(st(kUC) != Status::Proven || st(kC) == Status::Proven, "UC Proven without C Proven");
  require(st(kUSC) != Status::Refuted || st(kUC) == Status::Refuted, "USC Refuted without UC Refuted");
  require(st(kUSC) != Status::Proven || st(kSC) == Status::Proven, "USC Proven without SC Proven");
  require(st(kC) != Status::Proven || st(kSC) == Status::Proven, "C Proven without SC Proven");
  return rep;
}

TransferReport uniform_limit_transfer(const std::vector<FuncSpec>& sequence, const FuncSpec& f,
                                      const DomainSpec& ambient, const AnalysisConfig& config) {
  if (sequence.empty()) throw PreconditionError("uniform_limit_transfer needs a nonempty sequence");
  config.validate();
  TransferReport rep;
  const Model limit = detail::build_model(ambient, f, config.sampling());
  const ModulusProfile pf = sym_profile(ambient, ambient, f, config);
  for (std::size_t n = 0; n < sequence.size(); ++n) {
    QuadExt sup(0);
    for (std::size_t i = 0; i < limit.size(); ++i) {
      const QuadExt d = abs(evaluate(sequence[n], limit.x[i]) - limit.v[i]);
      if (d > sup) sup = d;
    }
    const ModulusProfile pn = sym_profile(ambient, ambient, sequence[n], config);
    for (std::size_t k = 0; k < config.delta_schedule.size(); ++k) {
      TransferReport::Row row{n + 1, config.delta_schedule[k], pf.values[k].oscillation,
                              pn.values[k].oscillation + QuadExt(2) * sup, true};
      row.holds = row.lhs <= row.rhs;
      rep.all_hold = rep.all_hold && row.holds;
      rep.rows.push_back(std::move(row));
    }
    if (!rep.sup_dist.empty() && sup > rep.sup_dist.back()) rep.decreasing = false;
    rep.sup_dist.push_back(std::move(sup));
  }
  rep.stagnant = rep.sup_dist.front().sign() > 0 && QuadExt(2) * rep.sup_dist.back() >= rep.sup_dist.front();
  return rep;
}

}  // namespace symcont
