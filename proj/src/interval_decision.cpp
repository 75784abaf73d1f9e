#include "interval_decision.hpp"

#include <algorithm>

#include "symcont/error.hpp"

namespace symcont::detail {

std::optional<std::vector<IntervalPiece>> interval_pieces_of(const DomainSpec& d) {
  if (const auto* u = std::get_if<IntervalUnion>(&d.variant())) return u->pieces;
  if (const auto* s = std::get_if<Staircase>(&d.variant())) return s->pieces;
  return std::nullopt;
}

QuadExt min_oscillation(const std::vector<WitnessTerm>& terms) {
  QuadExt out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0 || terms[i].oscillation < out) out = terms[i].oscillation;
  }
  return out;
}

std::vector<WitnessTerm> family_terms(const PairFamily& family, const FuncSpec& f,
                                      const std::vector<QuadExt>& schedule, const QuadExt& target) {
  std::vector<WitnessTerm> out;
  long n = 1;
  constexpr long kLimit = 1L << 60;
  for (const auto& delta : schedule) {
    while (n < kLimit) {
      auto [x, y] = family.pair(n);
      if (y < x) std::swap(x, y);
      QuadExt scale = family.symmetric ? halve(y - x, 1) : y - x;
      if (scale < delta) {
        QuadExt osc = abs(evaluate(f, y) - evaluate(f, x));
        if (!(osc < target)) {
          WitnessTerm t;
          if (family.symmetric) t.center = midpoint(x, y);
          t.x = std::move(x);
          t.y = std::move(y);
          t.scale = std::move(scale);
          t.delta = delta;
          t.oscillation = std::move(osc);
          out.push_back(std::move(t));
          break;
        }
      }
      n *= 2;
    }
    if (n >= kLimit) break;
  }
  return out;
}

namespace {

struct Atom {
  IntervalPiece span;
  const Formula* formula;
  std::size_t piece;
};

std::optional<QuadExt> limit_at(const Atom& a, const QuadExt& c) {
  if (std::holds_alternative<Reciprocal>(*a.formula) && c.is_zero()) return std::nullopt;
  return apply(*a.formula, c);
}

void check_tiling(const std::vector<IntervalPiece>& domain, const std::vector<Atom>& atoms) {
  std::vector<IntervalPiece> spans;
  for (const auto& a : atoms) spans.push_back(a.span);
  try {
    merge_interval_components(spans);
  } catch (const OverlapError& e) {
    throw ConfigurationError("function pieces overlap on " + atoms[e.first()].span.to_string() + " and " +
                             atoms[e.second()].span.to_string());
  }
  for (const auto& dp : domain) {
    std::vector<const Atom*> inside;
    for (const auto& a : atoms) {
      if (intersect(a.span, dp)) inside.push_back(&a);
    }
    std::sort(inside.begin(), inside.end(), [](const Atom* a, const Atom* b) {
      if (a->span.lo != b->span.lo) return a->span.lo < b->span.lo;
      return a->span.lo_closed && !b->span.lo_closed;
    });
    const auto uncovered = [&](const std::string& what) {
      throw ConfigurationError("function pieces do not cover " + what + " of domain piece " + dp.to_string());
    };
    if (inside.empty()) uncovered("any point");
    const IntervalPiece& first = inside.front()->span;
    if (first.lo != dp.lo || first.lo_closed != dp.lo_closed) uncovered("the left end " + to_string(dp.lo));
    for (std::size_t i = 1; i < inside.size(); ++i) {
      const IntervalPiece& prev = inside[i - 1]->span;
      const IntervalPiece& next = inside[i]->span;
      if (next.lo != prev.hi) uncovered("(" + to_string(prev.hi) + ", " + to_string(next.lo) + ")");
      if (!prev.hi_closed && !next.lo_closed) uncovered("the point " + to_string(prev.hi));
    }
    const IntervalPiece& last = inside.back()->span;
    if (last.hi != dp.hi || last.hi_closed != dp.hi_closed) uncovered("the right end " + to_string(dp.hi));
  }
}

enum class FailureKind { Blowup, Jump, Value };

struct Failure {
  FailureKind kind;
  QuadExt position;
  std::string text;
  PairFamily uc;
  PairFamily usc;
  QuadExt target;
};

struct PointFailure {
  QuadExt point;
  std::string text;
  PairFamily family;
  QuadExt target;
};

QuadExt jump_target(const std::optional<QuadExt>& a, const std::optional<QuadExt>& b) {
  if (!a || !b) return QuadExt(1);
  return halve(abs(*a - *b), 1);
}

std::string render(const std::optional<QuadExt>& v) { return v ? to_string(*v) : std::string("unbounded"); }

}  // namespace

std::optional<IntervalVerdicts> interval_decision(const std::vector<IntervalPiece>& domain, const FuncSpec& f,
                                                  const AnalysisConfig& config) {
  const auto* pw = f.as_piecewise();
  if (!pw) return std::nullopt;
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < pw->pieces.size(); ++i) {
    const auto* region = std::get_if<IntervalUnion>(&pw->pieces[i].region.variant());
    if (!region) return std::nullopt;
    for (const auto& rp : region->pieces) {
      for (const auto& dp : domain) {
        if (auto a = intersect(rp, dp)) atoms.push_back({*a, &pw->pieces[i].formula, i});
      }
    }
  }
  check_tiling(domain, atoms);
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.span.lo != b.span.lo) return a.span.lo < b.span.lo;
    return a.span.hi < b.span.hi;
  });

  const auto value_at = [&](const QuadExt& c) -> std::optional<QuadExt> {
    for (const auto& a : atoms) {
      if (a.span.contains(c)) return apply(*a.formula, c);
    }
    return std::nullopt;
  };

  std::vector<Failure> uc_failures;
  std::vector<PointFailure> c_failures, sc_failures;

  // Atoms: every supported formula is uniformly continuous on a bounded interval unless
  // it is 1/x with 0 in the closure.
  for (const auto& a : atoms) {
    if (!std::holds_alternative<Reciprocal>(*a.formula)) continue;
    if (a.span.contains(QuadExt(0))) throw EvaluationError("1/x evaluated at 0 on " + a.span.to_string());
    const bool right = a.span.lo.is_zero();
    const bool left = a.span.hi.is_zero();
    if (!right && !left) continue;
    const QuadExt d = right ? a.span.hi : -a.span.lo;
    const bool far_closed = right ? a.span.hi_closed : a.span.lo_closed;
    auto family = [d, far_closed, right](long n) {
      const QuadExt t = d / QuadExt(far_closed ? 3 * n : 3 * (n + 1));
      const QuadExt x = t, y = QuadExt(3) * t;
      return right ? std::make_pair(x, y) : std::make_pair(-y, -x);
    };
    Failure fl{FailureKind::Blowup, QuadExt(0), "1/x is unbounded near 0 on " + a.span.to_string(),
               PairFamily{family, false, std::nullopt}, PairFamily{family, true, std::nullopt}, QuadExt(1)};
    uc_failures.push_back(std::move(fl));
  }

  std::vector<IntervalPiece> spans;
  for (const auto& a : atoms) spans.push_back(a.span);
  const MergeResult merged = merge_interval_components(spans);

  std::vector<ComponentDecision> components;
  for (const auto& comp : merged.components) {
    ComponentDecision cd;
    cd.span = comp.span;
    std::vector<std::string> reasons;
    for (std::size_t idx : comp.members) {
      const Atom& a = atoms[idx];
      if (std::holds_alternative<Reciprocal>(*a.formula) && (a.span.lo.is_zero() || a.span.hi.is_zero())) {
        cd.uniformly_continuous = false;
        reasons.push_back("1/x unbounded on " + a.span.to_string());
      }
    }
    for (const auto& c : comp.glued_points) {
      const Atom* left = nullptr;
      const Atom* right = nullptr;
      for (std::size_t idx : comp.members) {
        const Atom& a = atoms[idx];
        if (a.span.degenerate()) continue;
        if (a.span.hi == c) left = &a;
        if (a.span.lo == c) right = &a;
      }
      const std::optional<QuadExt> value = value_at(c);
      const std::optional<QuadExt> lim_l = left ? limit_at(*left, c) : std::nullopt;
      const std::optional<QuadExt> lim_r = right ? limit_at(*right, c) : std::nullopt;
      const QuadExt len_l = left ? left->span.length() : QuadExt(0);
      const QuadExt len_r = right ? right->span.length() : QuadExt(0);
      const std::string where = "at " + to_string(c) + ": left limit " + (left ? render(lim_l) : "none") +
                                ", right limit " + (right ? render(lim_r) : "none") + ", value " +
                                (value ? to_string(*value) : std::string("undefined"));
      const bool missing = (left && !lim_l) || (right && !lim_r);

      // Pointwise continuity at c in A.
      if (value) {
        const bool bad_l = left && (!lim_l || *lim_l != *value);
        const bool bad_r = right && (!lim_r || *lim_r != *value);
        if (bad_l || bad_r) {
          const bool use_right = bad_r;
          const QuadExt len = use_right ? len_r : len_l;
          auto pair = [c, len, use_right](long n) {
            const QuadExt t = len / QuadExt(n + 1);
            return use_right ? std::make_pair(c, c + t) : std::make_pair(c - t, c);
          };
          c_failures.push_back({c, "not continuous " + where, PairFamily{pair, false, c},
                                jump_target(use_right ? lim_r : lim_l, value)});
        }
        if (left && right && (missing || *lim_l != *lim_r)) {
          const QuadExt len = min(len_l, len_r);
          auto pair = [c, len](long n) {
            const QuadExt t = len / QuadExt(n + 1);
            return std::make_pair(c - t, c + t);
          };
          sc_failures.push_back({c, "not symmetrically continuous " + where, PairFamily{pair, true, c},
                                 jump_target(lim_l, lim_r)});
        }
      }

      if (missing) continue;  // reported through the atom blowup
      if (left && right && *lim_l != *lim_r) {
        const QuadExt len = min(len_l, len_r);
        auto uc_pair = [c, len](long n) {
          const QuadExt t = len / QuadExt(n + 1);
          return std::make_pair(c - t, c + t);
        };
        PairFamily usc{uc_pair, true, std::nullopt};
        if (!value) {
          usc.pair = [c, len](long n) {
            const QuadExt t = len / QuadExt(2 * (n + 1));
            return std::make_pair(c - t, c + QuadExt(2) * t);
          };
        }
        uc_failures.push_back({FailureKind::Jump, c, "jump " + where, PairFamily{uc_pair, false, std::nullopt},
                               usc, jump_target(lim_l, lim_r)});
        cd.uniformly_continuous = false;
        reasons.push_back("jump " + where);
        continue;
      }
      const std::optional<QuadExt>& lim = left ? lim_l : lim_r;
      if (value && lim && *lim != *value) {
        const bool use_right = right != nullptr;
        const QuadExt len = use_right ? len_r : len_l;
        auto uc_pair = [c, len, use_right](long n) {
          const QuadExt t = len / QuadExt(n + 1);
          return use_right ? std::make_pair(c, c + t) : std::make_pair(c - t, c);
        };
        auto usc_pair = [c, len, use_right](long n) {
          const QuadExt t2 = len / QuadExt(n + 1);
          return use_right ? std::make_pair(c, c + t2) : std::make_pair(c - t2, c);
        };
        uc_failures.push_back({FailureKind::Value, c, "value mismatch " + where,
                               PairFamily{uc_pair, false, std::nullopt}, PairFamily{usc_pair, true, std::nullopt},
                               jump_target(lim, value)});
        cd.uniformly_continuous = false;
        reasons.push_back("value mismatch " + where);
      }
    }
    if (cd.uniformly_continuous) {
      cd.reason = comp.glued_points.empty() ? "every formula is uniformly continuous on its piece"
                                            : "every formula is uniformly continuous on its piece and the values "
                                              "agree at the glued points";
    } else {
      for (std::size_t i = 0; i < reasons.size(); ++i) cd.reason += (i ? "; " : "") + reasons[i];
    }
    components.push_back(std::move(cd));
  }

  std::stable_sort(uc_failures.begin(), uc_failures.end(),
                   [](const Failure& a, const Failure& b) { return a.position < b.position; });

  Certificate cert;
  cert.kind = CertificateKind::IntervalDecision;
  cert.components = components;
  const auto& schedule = config.delta_schedule;

  IntervalVerdicts out;
  out.uc.notion = Notion::UC;
  out.usc.notion = Notion::USC;
  if (uc_failures.empty()) {
    out.uc.status = Status::Proven;
    out.uc.certificate = cert;
    out.uc.certificate->detail = "uniformly continuous on each of " + std::to_string(components.size()) +
                                 " component(s), components pairwise at positive distance or glued continuously";
    out.usc.status = Status::Proven;
    out.usc.certificate = cert;
    out.usc.certificate->detail = "on a finite union of intervals USC holds exactly when UC does";
  } else {
    const Failure& fl = uc_failures.front();
    for (Verdict* v : {&out.uc, &out.usc}) {
      const bool sym = v == &out.usc;
      Witness w;
      w.notion = v->notion;
      w.terms = family_terms(sym ? fl.usc : fl.uc, f, schedule, fl.target);
      w.epsilon = min_oscillation(w.terms);
      w.description = fl.text;
      v->status = Status::Refuted;
      v->certificate = cert;
      v->certificate->detail = sym ? "on a finite union of intervals USC fails exactly when UC does" : fl.text;
      v->witness = std::move(w);
    }
  }

  const auto pointwise = [&](Verdict& v, Notion notion, const std::vector<PointFailure>& failures,
                             const std::string& ok) {
    v.notion = notion;
    v.certificate = cert;
    if (failures.empty()) {
      v.status = Status::Proven;
      v.certificate->detail = ok;
      return;
    }
    const auto it = std::min_element(failures.begin(), failures.end(),
                                     [](const PointFailure& a, const PointFailure& b) { return a.point < b.point; });
    Witness w;
    w.notion = notion;
    w.point = it->point;
    w.terms = family_terms(it->family, f, schedule, it->target);
    w.epsilon = min_oscillation(w.terms);
    w.description = it->text;
    v.status = Status::Refuted;
    v.certificate->detail = it->text;
    v.witness = std::move(w);
  };
  pointwise(out.c, Notion::C, c_failures,
            "every formula is continuous on its piece and side limits match the value at every glued point");
  pointwise(out.sc, Notion::SC, sc_failures,
            "left and right limits agree at every interior glued point of the domain");
  return out;
}

}  // namespace symcont::detail
