#include "symcont/zoo.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <stdexcept>

#include "symcont/error.hpp"

namespace symcont {

std::string to_string(Expected e) {
  switch (e) {
    case Expected::Proven: return "Proven";
    case Expected::Refuted: return "Refuted";
    case Expected::NoViolation: return "NoViolationAtResolution";
    case Expected::ZeroOnTruncation: return "ZeroOnTruncation";
  }
  return "?";
}

namespace {

using Expectations = std::vector<std::pair<Notion, Expected>>;

constexpr Expected P = Expected::Proven;
constexpr Expected R = Expected::Refuted;
constexpr Expected NV = Expected::NoViolation;
constexpr Expected Z = Expected::ZeroOnTruncation;

QuadExt q(long long num, long long den = 1) { return QuadExt(make_rational(num, den)); }

Expectations all4(Expected c, Expected uc, Expected sc, Expected usc) {
  return {{Notion::C, c}, {Notion::UC, uc}, {Notion::SC, sc}, {Notion::USC, usc}};
}

Subject subject(std::string label, DomainSpec d, FuncSpec f, Expectations expected) {
  return Subject{std::move(label), std::move(d), std::move(f), std::nullopt, {}, AnalysisConfig{}, std::move(expected)};
}

FuncSpec indicator(const DomainSpec& ones, const QuadExt& zero_point) {
  return FuncSpec::piecewise({{ones, Const{QuadExt(1)}}, {DomainSpec::finite_points({zero_point}), Const{QuadExt(0)}}});
}

CheckOutcome outcome(std::string name, std::string expected, std::string actual) {
  const bool match = expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), match};
}

// ---------------------------------------------------------------------------
// Catalog

PaperExample reciprocal_half_line() {
  PaperExample ex;
  ex.id = "ex-2.4";
  ex.slug = "reciprocal-half-line";
  ex.title = "1/x on (0, infinity)";
  ex.description =
      "The half line is modeled by (0, 3] with exact interval reasoning; blow-up at the open end 0 "
      "refutes UC and USC through the pairs (3/n, 1/n) centered at 2/n.";
  ex.parameters = {{"model", "(0, 3]"}};
  const DomainSpec d = DomainSpec::interval_union({IntervalPiece{QuadExt(0), QuadExt(3), false, true}});
  ex.subjects.push_back(subject("f", d, FuncSpec::single(d, Reciprocal{}), all4(P, R, P, R)));
  WitnessSequence w;
  w.notion = Notion::USC;
  w.description = "x = 3/n, y = 1/n, midpoint 2/n, oscillation 2n/3";
  w.terms = [](long n) { return std::make_pair(q(3, n), q(1, n)); };
  w.claimed_oscillation = [](long n) { return q(2 * n, 3); };
  w.first = 1;
  w.last = 1000;
  ex.witnesses.push_back(std::move(w));
  return ex;
}

PaperExample odd_prime_indicator() {
  PaperExample ex;
  ex.id = "ex-2.5";
  ex.slug = "odd-prime-indicator";
  ex.title = "indicator of the odd prime reciprocals";
  ex.description = "f = 1 on 1/p for odd primes p, f(0) = 0. Midpoint-free domain, discontinuous at 0.";
  ex.parameters = {{"max_prime", "1000"}};
  const DomainSpec d = DomainSpec::odd_prime_reciprocals(1000, true);
  ex.subjects.push_back(
      subject("f", d, indicator(DomainSpec::odd_prime_reciprocals(1000, false), QuadExt(0)), all4(R, R, P, P)));
  ex.checks = [](const AnalysisConfig&) {
    const MidpointReport r = midpoint_exclusion_primes(1000);
    return std::vector<CheckOutcome>{outcome("midpoint exclusion up to 1000", "0 violations",
                                             std::to_string(r.violations.size()) + " violations")};
  };
  return ex;
}

PaperExample natural_reciprocal_indicator() {
  PaperExample ex;
  ex.id = "ex-2.7";
  ex.slug = "natural-reciprocal-indicator";
  ex.title = "indicator of the natural reciprocals";
  ex.description = "f = 1 on 1/n, f(0) = 0. The pairs (1/n, 0) have midpoint 1/(2n) inside the set.";
  ex.parameters = {{"max_n", "1000"}};
  const DomainSpec d = DomainSpec::natural_reciprocals(1000, true);
  ex.subjects.push_back(
      subject("f", d, indicator(DomainSpec::natural_reciprocals(1000, false), QuadExt(0)), all4(R, R, NV, R)));
  WitnessSequence w;
  w.notion = Notion::USC;
  w.description = "x = 1/n, y = 0, midpoint 1/(2n), oscillation 1";
  w.terms = [](long n) { return std::make_pair(q(1, n), QuadExt(0)); };
  w.claimed_oscillation = [](long) { return QuadExt(1); };
  w.first = 1;
  w.last = 500;
  ex.witnesses.push_back(std::move(w));
  ex.checks = [](const AnalysisConfig&) {
    const MidpointReport r = midpoint_contrast_naturals(1000);
    bool every = r.violations.size() == 500;
    for (std::size_t i = 0; every && i < r.violations.size(); ++i) {
      every = r.violations[i].first == static_cast<long long>(i + 1);
    }
    return std::vector<CheckOutcome>{
        outcome("midpoint 1/(2n) in the set", "every n <= 500",
                every ? "every n <= 500" : std::to_string(r.violations.size()) + " violations")};
  };
  return ex;
}

PaperExample rationals_with_sqrt2() {
  PaperExample ex;
  ex.id = "ex-2.8";
  ex.slug = "rationals-with-sqrt2";
  ex.title = "rationals with sqrt2 adjoined";
  ex.description =
      "f = 1 on rationals and f(sqrt2) = sqrt2, on rationals of denominator <= 200 in [1, 2] with sqrt2. "
      "USC on the full set is asserted in general; the truncation shows exact zero symmetric oscillation.";
  ex.parameters = {{"max_denominator", "200"}, {"window", "[1, 2]"}};
  const DomainSpec d = DomainSpec::truncated_rationals(200, Rational(1), Rational(2), true);
  const FuncSpec f = FuncSpec::piecewise(
      {{DomainSpec::truncated_rationals(200, Rational(1), Rational(2), false), Const{QuadExt(1)}},
       {DomainSpec::finite_points({QuadExt::sqrt2()}), Const{QuadExt::sqrt2()}}});
  ex.subjects.push_back(subject("f", d, f, all4(R, R, Z, Z)));
  ex.checks = [d](const AnalysisConfig& config) {
    const PointList pts = enumerate_points(d, config.enum_limit);
    std::size_t bad = 0, rationals = 0;
    for (const auto& p : pts.points) {
      if (!p.is_rational()) continue;
      ++rationals;
      const QuadExt mid = midpoint(p, QuadExt::sqrt2());
      if (mid.irr() != Rational(1, 2) || contains(d, mid)) ++bad;
    }
    return std::vector<CheckOutcome>{outcome("midpoint(q, sqrt2) irrational and outside",
                                             "all " + std::to_string(rationals) + " rationals",
                                             bad == 0 ? "all " + std::to_string(rationals) + " rationals"
                                                      : std::to_string(bad) + " failures")};
  };
  return ex;
}

PaperExample identity_product() {
  PaperExample ex;
  ex.id = "ex-3.2";
  ex.slug = "identity-product";
  ex.title = "product of two identities";
  ex.description =
      "f = g = x are USC, fg = x^2 is not: x = n + 1/n, y = n has oscillation 2 + 1/n^2. "
      "The line is modeled by rationals of denominator <= 24 in [0, 12].";
  ex.parameters = {{"max_denominator", "24"}, {"window", "[0, 12]"}};
  const DomainSpec d = DomainSpec::truncated_rationals(24, Rational(0), Rational(12), false);
  const FuncSpec f = FuncSpec::single(d, Identity{});
  ex.subjects.push_back(subject("f", d, f, all4(P, P, P, P)));
  Subject fg = subject("fg", d, combine(CombineOp::mul(), {f, f}),
                       {{Notion::UC, R}, {Notion::USC, R}, {Notion::C, NV}, {Notion::SC, NV}});
  WitnessSequence w;
  w.notion = Notion::USC;
  w.description = "x = n + 1/n, y = n, oscillation 2 + 1/n^2";
  w.terms = [](long n) { return std::make_pair(q(n * n + 1, n), QuadExt(n)); };
  w.claimed_oscillation = [](long n) { return QuadExt(2) + q(1, n * n); };
  w.first = 1;
  w.last = 11;
  fg.hints.push_back(w);
  ex.subjects.push_back(std::move(fg));
  ex.witnesses.push_back(std::move(w));
  return ex;
}

PaperExample unbounded_prime_map() {
  PaperExample ex;
  ex.id = "ex-3.3";
  ex.slug = "unbounded-prime-map";
  ex.title = "f(1/p) = p on the odd prime reciprocals";
  ex.description = "USC on a bounded set, yet unbounded: the supremum grows with every truncation.";
  ex.parameters = {{"max_prime", "1000"}};
  const auto make = [](long long n) {
    const DomainSpec d = DomainSpec::odd_prime_reciprocals(n, true);
    const FuncSpec f = FuncSpec::piecewise({{DomainSpec::odd_prime_reciprocals(n, false), Reciprocal{}},
                                            {DomainSpec::finite_points({QuadExt(0)}), Const{QuadExt(0)}}});
    return std::make_pair(d, f);
  };
  const auto [d, f] = make(1000);
  ex.subjects.push_back(subject("f", d, f, all4(R, R, P, P)));
  ex.checks = [make](const AnalysisConfig& config) {
    std::string actual;
    for (long long n : {100LL, 1000LL}) {
      const auto [dn, fn] = make(n);
      const BoundReport b = bounded_on(fn, dn, config.enum_limit, config.sampling());
      if (!actual.empty()) actual += ", ";
      actual += "sup " + to_string(b.bound) + " at " + std::to_string(n);
    }
    return std::vector<CheckOutcome>{outcome("growth of sup f", "sup 97 at 100, sup 997 at 1000", actual)};
  };
  return ex;
}

PaperExample pointwise_limit() {
  PaperExample ex;
  ex.id = "ex-3.5";
  ex.slug = "pointwise-limit";
  ex.title = "pointwise limit of x^n on [0, 2]";
  ex.description =
      "f_n = x^n on [0, 1] and 1 on (1, 2] are UC; the limit jumps at 1 and is not even SC there.";
  ex.parameters = {{"members", "1..8"}, {"transfer_grid_exponent", "8"}};
  const DomainSpec d = DomainSpec::interval_union({IntervalPiece::closed(QuadExt(0), QuadExt(2))});
  const DomainSpec left = DomainSpec::interval_union({IntervalPiece{QuadExt(0), QuadExt(1), true, false}});
  const DomainSpec right = DomainSpec::interval_union({IntervalPiece::closed(QuadExt(1), QuadExt(2))});
  const FuncSpec f = FuncSpec::piecewise({{left, Const{QuadExt(0)}}, {right, Const{QuadExt(1)}}});
  ex.subjects.push_back(subject("f", d, f, all4(R, R, R, R)));
  std::vector<FuncSpec> members;
  const DomainSpec unit = DomainSpec::interval_union({IntervalPiece::closed(QuadExt(0), QuadExt(1))});
  const DomainSpec tail = DomainSpec::interval_union({IntervalPiece{QuadExt(1), QuadExt(2), false, true}});
  for (unsigned n = 1; n <= 8; ++n) {
    members.push_back(FuncSpec::piecewise({{unit, Monomial{n}}, {tail, Const{QuadExt(1)}}}));
  }
  ex.subjects.push_back(subject("f_8", d, members.back(), all4(P, P, P, P)));
  ex.checks = [d, f, members](const AnalysisConfig& config) {
    std::vector<CheckOutcome> out;
    const OneSidedLimits lim = one_sided_limits(f, QuadExt(1));
    const auto show = [](const std::optional<QuadExt>& v) { return v ? to_string(*v) : std::string("none"); };
    out.push_back(outcome("one-sided limits at 1", "left 0, right 1",
                          "left " + show(lim.left) + ", right " + show(lim.right)));
    std::size_t usc = 0;
    for (const auto& fn : members) {
      if (classify(d, fn, config)[3].status == Status::Proven) ++usc;
    }
    out.push_back(outcome("members USC", "8 of 8", std::to_string(usc) + " of 8"));
    AnalysisConfig tc = config;
    tc.grid_exponent = std::min(tc.grid_exponent, 8);
    const TransferReport t = uniform_limit_transfer(members, f, d, tc);
    std::string actual = t.all_hold ? "bound holds" : "bound fails";
    actual += t.stagnant ? ", sup distance stagnant" : ", sup distance shrinks";
    out.push_back(outcome("uniform limit transfer", "bound holds, sup distance stagnant", actual));
    return out;
  };
  return ex;
}

PaperExample integer_window_random(std::uint64_t seed) {
  PaperExample ex;
  ex.id = "ex-3.6";
  ex.slug = "integer-window-random";
  ex.title = "arbitrary function on the integers";
  ex.description = "Pseudo-random rational values on the integers in [-1000, 1000]; uniformly discrete domain.";
  ex.parameters = {{"window", "[-1000, 1000]"}, {"seed", std::to_string(seed)}};
  std::mt19937_64 rng(seed);
  std::map<Rational, std::vector<QuadExt>> groups;
  for (long long k = -1000; k <= 1000; ++k) {
    const long long num = static_cast<long long>(rng() % 201) - 100;
    const long long den = static_cast<long long>(rng() % 9) + 1;
    groups[make_rational(num, den)].push_back(QuadExt(static_cast<long>(k)));
  }
  std::vector<Piece> pieces;
  for (auto& [value, pts] : groups) pieces.push_back({DomainSpec::finite_points(std::move(pts)), Const{QuadExt(value)}});
  ex.subjects.push_back(
      subject("f", DomainSpec::integer_window(-1000, 1000), FuncSpec::piecewise(std::move(pieces)), all4(P, P, P, P)));
  return ex;
}

PaperExample reciprocal_wrt_integers() {
  PaperExample ex;
  ex.id = "ex-3.7";
  ex.slug = "reciprocal-wrt-integers";
  ex.title = "1/x with respect to the integers";
  ex.description =
      "f = 1/x off 0, f(0) = 0. Restricted to the integers it is USC, but with centers in the integers "
      "the pairs (-1/n, 1/n) around 0 have oscillation 2n. The line is modeled by rationals of "
      "denominator <= 100 in [-1, 1].";
  ex.parameters = {{"max_denominator", "100"}, {"window", "[-1, 1]"}, {"subset", "integers in [-1, 1]"}};
  const DomainSpec d = DomainSpec::truncated_rationals(100, Rational(-1), Rational(1), false);
  const DomainSpec b = DomainSpec::integer_window(-1, 1);
  const FuncSpec f = FuncSpec::piecewise(
      {{DomainSpec::interval_union({IntervalPiece{QuadExt(-1), QuadExt(0), true, false}}), Reciprocal{}},
       {DomainSpec::interval_union({IntervalPiece{QuadExt(0), QuadExt(1), false, true}}), Reciprocal{}},
       {DomainSpec::finite_points({QuadExt(0)}), Const{QuadExt(0)}}});
  Subject wrt = subject("f wrt B", d, f, {{Notion::USC_wrt_B, R}});
  wrt.subset = b;
  ex.subjects.push_back(std::move(wrt));
  ex.subjects.push_back(subject("f|B", b, f, all4(P, P, P, P)));
  WitnessSequence w;
  w.notion = Notion::USC_wrt_B;
  w.description = "x = -1/n, y = 1/n, midpoint 0, oscillation 2n";
  w.terms = [](long n) { return std::make_pair(q(-1, n), q(1, n)); };
  w.claimed_oscillation = [](long n) { return QuadExt(2 * n); };
  w.first = 1;
  w.last = 100;
  ex.witnesses.push_back(std::move(w));
  return ex;
}

PaperExample staircase_a() {
  PaperExample ex;
  ex.id = "ex-3.8";
  ex.slug = "staircase-a";
  ex.title = "staircase with midpoints pushed into the gaps";
  ex.description =
      "Step function 2i - 1 on 100 blocks. Continuous but not UC. USC for infinitely many blocks is asserted "
      "in general; the truncation shows exact zero symmetric oscillation, and the proof ingredients are "
      "checked exactly.";
  ex.parameters = {{"blocks", "100"}, {"function_blocks", "400"}, {"grid_exponent", "3"}};
  const DomainSpec d = DomainSpec::staircase({StaircaseVariant::A, 100});
  Subject s = subject("f", d, staircase_step({StaircaseVariant::A, 400}), all4(P, R, P, Z));
  s.config.grid_exponent = 3;
  ex.subjects.push_back(std::move(s));
  ex.checks = [](const AnalysisConfig&) {
    const StaircaseProofReport r = verify_staircase_proof({StaircaseVariant::A, 100}, 100);
    const auto fail = r.first_failure();
    return std::vector<CheckOutcome>{outcome("proof ingredients", "pass for k <= 100",
                                             fail ? "fails at k = " + std::to_string(*fail) : "pass for k <= 100")};
  };
  return ex;
}

PaperExample staircase_b() {
  PaperExample ex;
  ex.id = "ex-3.9";
  ex.slug = "staircase-b";
  ex.title = "staircase with harmonic gaps";
  ex.description =
      "Step function 2i - 1 on blocks [a_{2i-1}, a_{2i}] with a_n = a_{n-1} + 1/(n-1). The pairs "
      "(a_{2n-1}, a_{2n+1}) have midpoints inside a block and oscillation 2.";
  ex.parameters = {{"blocks", "100"}, {"function_blocks", "400"}, {"grid_exponent", "3"}};
  const DomainSpec d = DomainSpec::staircase({StaircaseVariant::B, 100});
  Subject s = subject("f", d, staircase_step({StaircaseVariant::B, 400}), all4(P, R, P, R));
  s.config.grid_exponent = 3;
  ex.subjects.push_back(std::move(s));
  const std::vector<QuadExt> a = staircase_breakpoints(StaircaseVariant::B, 201);
  WitnessSequence w;
  w.notion = Notion::USC;
  w.description = "x = a_{2n-1}, y = a_{2n+1}, oscillation 2";
  w.terms = [a](long n) { return std::make_pair(a[2 * n - 2], a[2 * n]); };
  w.claimed_oscillation = [](long) { return QuadExt(2); };
  w.first = 1;
  w.last = 99;
  ex.witnesses.push_back(std::move(w));
  ex.checks = [](const AnalysisConfig&) {
    const auto rows = verify_staircase_witness(99);
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const StaircaseWitnessRow& r) { return !r.ok(); });
    return std::vector<CheckOutcome>{outcome("midpoint in block, oscillation 2", "all n <= 99",
                                             bad == 0 ? "all n <= 99" : std::to_string(bad) + " failures")};
  };
  return ex;
}

PaperExample glued_intervals() {
  PaperExample ex;
  ex.id = "ex-4.3";
  ex.slug = "glued-intervals";
  ex.title = "uniform continuity across touching intervals";
  ex.description =
      "f = x on [0, 1] and x - 2 on [2, 3] is UC across a positive gap. g = 1 on (0, 1) and 2 on (1, 2) "
      "is not UC: the pairs 1 +- 1/(n+1) straddle the missing point 1.";
  const DomainSpec df = DomainSpec::interval_union(
      {IntervalPiece::closed(QuadExt(0), QuadExt(1)), IntervalPiece::closed(QuadExt(2), QuadExt(3))});
  const FuncSpec f = FuncSpec::piecewise(
      {{DomainSpec::interval_union({IntervalPiece::closed(QuadExt(0), QuadExt(1))}), Identity{}},
       {DomainSpec::interval_union({IntervalPiece::closed(QuadExt(2), QuadExt(3))}), Affine{QuadExt(1), QuadExt(-2)}}});
  const DomainSpec g1 = DomainSpec::interval_union({IntervalPiece::open(QuadExt(0), QuadExt(1))});
  const DomainSpec g2 = DomainSpec::interval_union({IntervalPiece::open(QuadExt(1), QuadExt(2))});
  const DomainSpec dg = DomainSpec::interval_union(
      {IntervalPiece::open(QuadExt(0), QuadExt(1)), IntervalPiece::open(QuadExt(1), QuadExt(2))});
  const FuncSpec g = FuncSpec::piecewise({{g1, Const{QuadExt(1)}}, {g2, Const{QuadExt(2)}}});
  ex.subjects.push_back(subject("f", df, f, all4(P, P, P, P)));
  ex.subjects.push_back(subject("g", dg, g, all4(P, R, P, R)));
  WitnessSequence w;
  w.notion = Notion::UC;
  w.description = "x = 1 + 1/(n+1), y = 1 - 1/(n+1), oscillation 1";
  w.terms = [](long n) { return std::make_pair(QuadExt(1) + q(1, n + 1), QuadExt(1) - q(1, n + 1)); };
  w.claimed_oscillation = [](long) { return QuadExt(1); };
  w.first = 1;
  w.last = 1000;
  ex.witnesses.push_back(std::move(w));
  ex.checks = [df, dg](const AnalysisConfig&) {
    const auto shape = [](const DomainSpec& d) {
      const auto& pieces = std::get<IntervalUnion>(d.variant()).pieces;
      const MergeResult m = merge_interval_components(pieces);
      std::string s = std::to_string(m.components.size()) + (m.components.size() == 1 ? " component" : " components");
      for (const auto& gap : m.gaps) s += ", gap " + to_string(gap);
      for (const auto& c : m.components) {
        for (const auto& g : c.glued_points) s += ", glued at " + to_string(g);
      }
      return s;
    };
    return std::vector<CheckOutcome>{outcome("components of f's domain", "2 components, gap 1", shape(df)),
                                     outcome("components of g's domain", "1 component, glued at 1", shape(dg))};
  };
  return ex;
}

struct CatalogEntry {
  const char* id;
  const char* slug;
};

constexpr CatalogEntry kCatalog[] = {
    {"ex-2.4", "reciprocal-half-line"},    {"ex-2.5", "odd-prime-indicator"},
    {"ex-2.7", "natural-reciprocal-indicator"}, {"ex-2.8", "rationals-with-sqrt2"},
    {"ex-3.2", "identity-product"},        {"ex-3.3", "unbounded-prime-map"},
    {"ex-3.5", "pointwise-limit"},         {"ex-3.6", "integer-window-random"},
    {"ex-3.7", "reciprocal-wrt-integers"}, {"ex-3.8", "staircase-a"},
    {"ex-3.9", "staircase-b"},             {"ex-4.3", "glued-intervals"},
};

std::string canonical_id(const std::string& name) {
  for (const auto& e : kCatalog) {
    if (name == e.id || name == e.slug || name == std::string(e.id) + "-" + e.slug) return e.id;
  }
  throw SpecError("unknown example id: " + name);
}

}  // namespace

std::vector<std::string> example_ids() {
  std::vector<std::string> out;
  for (const auto& e : kCatalog) out.emplace_back(e.id);
  return out;
}

PaperExample build_example(const std::string& id, std::uint64_t seed) {
  const std::string c = canonical_id(id);
  if (c == "ex-2.4") return reciprocal_half_line();
  if (c == "ex-2.5") return odd_prime_indicator();
  if (c == "ex-2.7") return natural_reciprocal_indicator();
  if (c == "ex-2.8") return rationals_with_sqrt2();
  if (c == "ex-3.2") return identity_product();
  if (c == "ex-3.3") return unbounded_prime_map();
  if (c == "ex-3.5") return pointwise_limit();
  if (c == "ex-3.6") return integer_window_random(seed);
  if (c == "ex-3.7") return reciprocal_wrt_integers();
  if (c == "ex-3.8") return staircase_a();
  if (c == "ex-3.9") return staircase_b();
  return glued_intervals();
}

std::optional<std::string> expectation_conflict(const Expectations& expected) {
  std::map<Notion, Expected> m;
  for (const auto& [n, e] : expected) {
    if (const auto it = m.find(n); it != m.end() && it->second != e) {
      return to_string(n) + " is expected twice with different statuses";
    }
    m[n] = e;
  }
  const auto is = [&](Notion n, Expected e) {
    const auto it = m.find(n);
    return it != m.end() && it->second == e;
  };
  static const std::pair<Notion, Notion> implications[] = {
      {Notion::UC, Notion::USC}, {Notion::USC, Notion::SC}, {Notion::UC, Notion::C},
      {Notion::C, Notion::SC},   {Notion::UC, Notion::SC}};
  for (const auto& [from, to] : implications) {
    if (is(from, P) && is(to, R)) {
      return to_string(from) + " Proven contradicts " + to_string(to) + " Refuted";
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Number-theoretic and staircase verifiers

MidpointReport midpoint_exclusion_primes(long long bound) {
  if (bound < 3) throw PreconditionError("midpoint_exclusion_primes needs a bound of at least 3");
  MidpointReport r;
  r.bound = bound;
  const DomainSpec d = DomainSpec::odd_prime_reciprocals(bound, true);
  const std::vector<long long> primes = odd_primes_up_to(bound);
  const auto test = [&](long long p, long long qq, const QuadExt& x, const QuadExt& y) {
    ++r.pairs_checked;
    const QuadExt mid = midpoint(x, y);
    if (contains(d, mid)) r.violations.push_back({p, qq, mid});
  };
  for (std::size_t i = 0; i < primes.size(); ++i) {
    test(primes[i], 0, q(1, primes[i]), QuadExt(0));
    for (std::size_t j = i + 1; j < primes.size(); ++j) test(primes[i], primes[j], q(1, primes[i]), q(1, primes[j]));
  }
  return r;
}

MidpointReport midpoint_contrast_naturals(long long bound) {
  if (bound < 1) throw PreconditionError("midpoint_contrast_naturals needs a positive bound");
  MidpointReport r;
  r.bound = bound;
  const DomainSpec d = DomainSpec::natural_reciprocals(bound, true);
  for (long long n = 1; n <= bound; ++n) {
    ++r.pairs_checked;
    const QuadExt mid = midpoint(q(1, n), QuadExt(0));
    if (contains(d, mid)) r.violations.push_back({n, 0, mid});
  }
  return r;
}

bool StaircaseProofReport::all_pass() const { return !first_failure(); }

std::optional<long long> StaircaseProofReport::first_failure() const {
  for (const auto& row : rows) {
    if (!row.ok()) return row.k;
  }
  return std::nullopt;
}

FuncSpec staircase_step(const StaircaseParams& params) {
  const DomainSpec d = DomainSpec::staircase(params);
  const auto* s = &std::get<Staircase>(d.variant());
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < s->pieces.size(); ++i) {
    pieces.push_back({DomainSpec::interval_union({s->pieces[i]}), Const{QuadExt(static_cast<long>(2 * i + 1))}});
  }
  return FuncSpec::piecewise(std::move(pieces));
}

StaircaseProofReport verify_staircase_proof(const StaircaseParams& params, long long blocks_to_check) {
  if (params.variant != StaircaseVariant::A) {
    throw PreconditionError("the staircase proof checks are inapplicable to variant B");
  }
  if (blocks_to_check < 1 || blocks_to_check > params.blocks) {
    throw PreconditionError("blocks to check must lie in [1, " + std::to_string(params.blocks) + "]");
  }
  const auto count = static_cast<std::size_t>(4 * blocks_to_check + 2);
  const DomainSpec d = DomainSpec::staircase({StaircaseVariant::A, static_cast<int>(count / 2)});
  const std::vector<QuadExt>& a = std::get<Staircase>(d.variant()).breakpoints;
  const FuncSpec f = staircase_step(std::get<Staircase>(d.variant()).params);
  const auto at = [&](long long i) -> const QuadExt& { return a[static_cast<std::size_t>(i - 1)]; };
  StaircaseProofReport r;
  for (long long k = 1; k <= blocks_to_check; ++k) {
    StaircaseProofRow row;
    row.k = k;
    row.unit_gap = at(4 * k + 1) - at(4 * k) == QuadExt(1);
    row.lower_midpoint = midpoint(at(4 * k - 3), at(4 * k - 1)) > at(4 * k - 2);
    row.upper_midpoint = midpoint(at(4 * k - 2), at(4 * k)) < at(4 * k - 1);
    row.uc_pair = at(4 * k - 1) - at(4 * k - 2) == q(1, k) &&
                  abs(evaluate(f, at(4 * k - 1)) - evaluate(f, at(4 * k - 2))) == QuadExt(2);
    r.rows.push_back(row);
  }
  return r;
}

std::vector<StaircaseWitnessRow> verify_staircase_witness(long long terms) {
  if (terms < 1) throw PreconditionError("verify_staircase_witness needs at least one term");
  const DomainSpec d = DomainSpec::staircase({StaircaseVariant::B, static_cast<int>(terms + 1)});
  const std::vector<QuadExt>& a = std::get<Staircase>(d.variant()).breakpoints;
  const FuncSpec f = staircase_step(std::get<Staircase>(d.variant()).params);
  std::vector<StaircaseWitnessRow> out;
  for (long long n = 1; n <= terms; ++n) {
    StaircaseWitnessRow row;
    row.n = n;
    row.x = a[static_cast<std::size_t>(2 * n - 2)];
    row.y = a[static_cast<std::size_t>(2 * n)];
    row.midpoint = midpoint(row.x, row.y);
    row.midpoint_in_block = a[static_cast<std::size_t>(2 * n - 2)] <= row.midpoint &&
                            row.midpoint <= a[static_cast<std::size_t>(2 * n - 1)] && contains(d, row.midpoint);
    row.oscillation = abs(evaluate(f, row.y) - evaluate(f, row.x));
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite

namespace {

bool matches(Expected e, const Verdict& v) {
  switch (e) {
    case Expected::Proven: return v.status == Status::Proven;
    case Expected::Refuted: return v.status == Status::Refuted;
    case Expected::NoViolation: return v.status == Status::NoViolationAtResolution;
    case Expected::ZeroOnTruncation: return v.zero_at_resolution();
  }
  return false;
}

std::string describe_verdict(const Verdict& v) {
  std::string s = to_string(v.status);
  if (v.certificate) s += " [" + to_string(v.certificate->kind) + "]";
  if (v.zero_at_resolution()) s += " (zero)";
  return s;
}

AnalysisConfig apply_budget(AnalysisConfig c, const ZooBudget& b) {
  if (b.max_pairs) c.max_pairs = *b.max_pairs;
  if (b.enum_limit) c.enum_limit = *b.enum_limit;
  if (b.grid_exponent) c.grid_exponent = *b.grid_exponent;
  if (b.delta_schedule) c.delta_schedule = *b.delta_schedule;
  c.seed = b.seed;
  return c;
}

CheckOutcome check_sequence(const WitnessSequence& w, const Subject& s) {
  const bool sym = w.notion != Notion::UC;
  const DomainSpec& centers = s.subset && w.notion == Notion::USC_wrt_B ? *s.subset : s.domain;
  std::string failure;
  for (long n = w.first; n <= w.last && failure.empty(); ++n) {
    const auto [x, y] = w.terms(n);
    const std::string at = "n = " + std::to_string(n) + ": ";
    if (!contains(s.domain, x) || !contains(s.domain, y)) {
      failure = at + "point outside the domain";
    } else if (sym && !contains(centers, midpoint(x, y))) {
      failure = at + "midpoint outside the center set";
    } else if (w.claimed_oscillation &&
               abs(evaluate(s.function, x) - evaluate(s.function, y)) != w.claimed_oscillation(n)) {
      failure = at + "oscillation differs from the claim";
    }
  }
  const std::string range = "n = " + std::to_string(w.first) + ".." + std::to_string(w.last) + " verified";
  return outcome("witness: " + w.description, range, failure.empty() ? range : failure);
}

const Subject* subject_for(const PaperExample& ex, Notion n) {
  for (const auto& s : ex.subjects) {
    for (const auto& [notion, e] : s.expected) {
      if (notion == n && e == Expected::Refuted) return &s;
    }
  }
  return ex.subjects.empty() ? nullptr : &ex.subjects.front();
}

struct ExampleResult {
  std::vector<ZooRow> rows;
  /// Per subject: label and actual statuses of the four notions, when every row matched.
  std::vector<std::pair<std::string, std::map<Notion, Status>>> clean;
};

ExampleResult run_example(const std::string& id, const ZooBudget& budget) {
  const PaperExample ex = build_example(id, budget.seed);
  ExampleResult res;
  for (const auto& s : ex.subjects) {
    if (const auto conflict = expectation_conflict(s.expected)) {
      throw std::logic_error(ex.id + "/" + s.label + ": " + *conflict);
    }
  }
  for (const auto& s : ex.subjects) {
    const AnalysisConfig config = apply_budget(s.config, budget);
    std::vector<Verdict> verdicts;
    std::string error;
    try {
      if (s.subset) {
        verdicts.push_back(check_wrt_subset(s.domain, *s.subset, s.function, config, s.hints));
      } else {
        verdicts = classify(s.domain, s.function, config, s.hints);
      }
    } catch (const Error& e) {
      error = e.what();
    }
    bool all = error.empty();
    std::map<Notion, Status> statuses;
    for (const auto& v : verdicts) statuses[v.notion] = v.status;
    for (const auto& [notion, expected] : s.expected) {
      ZooRow row;
      row.example = ex.id;
      row.subject = s.label;
      row.item = to_string(notion);
      row.expected = to_string(expected);
      const auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const Verdict& v) { return v.notion == notion; });
      if (it == verdicts.end()) {
        row.actual = error.empty() ? "missing" : "error: " + error;
      } else {
        row.actual = describe_verdict(*it);
        row.match = matches(expected, *it);
        if (it->witness) {
          const std::optional<DomainSpec> centers =
              s.subset && it->witness->notion == Notion::USC_wrt_B ? s.subset : std::nullopt;
          const WitnessCheck wc = verify_witness(*it->witness, s.domain, s.function, centers);
          if (!wc.ok) {
            row.match = false;
            row.note = "witness rejected: " + wc.message;
          }
        }
        row.verdict = *it;
      }
      all = all && row.match;
      res.rows.push_back(std::move(row));
    }
    if (all) res.clean.emplace_back(ex.subjects.size() > 1 ? ex.id + "/" + s.label : ex.id, std::move(statuses));
  }
  const auto add_check = [&](const std::string& label, const CheckOutcome& c) {
    ZooRow row;
    row.example = ex.id;
    row.subject = label;
    row.item = c.name;
    row.expected = c.expected;
    row.actual = c.actual;
    row.match = c.match;
    res.rows.push_back(std::move(row));
  };
  for (const auto& w : ex.witnesses) {
    if (const Subject* s = subject_for(ex, w.notion)) {
      try {
        add_check(s->label, check_sequence(w, *s));
      } catch (const Error& e) {
        add_check(s->label, {"witness: " + w.description, "verified", std::string("error: ") + e.what(), false});
      }
    }
  }
  if (ex.checks) {
    const AnalysisConfig config = apply_budget(AnalysisConfig{}, budget);
    try {
      for (const auto& c : ex.checks(config)) add_check("", c);
    } catch (const Error& e) {
      add_check("", {"checks", "completed", std::string("error: ") + e.what(), false});
    }
  }
  return res;
}

std::vector<RelationRow> relations(const std::vector<ExampleResult>& results) {
  struct Pattern {
    Notion holds;
    Notion fails;
  };
  const auto establishing = [&](Pattern p) {
    std::vector<std::string> out;
    for (const auto& r : results) {
      for (const auto& [label, st] : r.clean) {
        const auto h = st.find(p.holds), f = st.find(p.fails);
        if (h != st.end() && f != st.end() && h->second == Status::Proven && f->second == Status::Refuted) {
          out.push_back(label);
        }
      }
    }
    return out;
  };
  std::vector<RelationRow> rows;
  const auto add = [&](int number, std::string statement, std::vector<Pattern> patterns) {
    RelationRow row;
    row.number = number;
    row.statement = std::move(statement);
    row.witnessed = true;
    for (const auto& p : patterns) {
      if (!row.pattern.empty()) row.pattern += "; ";
      row.pattern += to_string(p.holds) + " Proven and " + to_string(p.fails) + " Refuted";
      auto found = establishing(p);
      row.witnessed = row.witnessed && !found.empty();
      for (auto& f : found) {
        row.established_by.push_back(patterns.size() > 1 ? f + " (" + to_string(p.holds) + ")" : f);
      }
    }
    rows.push_back(std::move(row));
  };
  add(1, "UC implies C, not conversely", {{Notion::C, Notion::UC}});
  add(2, "C implies SC, not conversely", {{Notion::SC, Notion::C}});
  add(3, "USC implies SC, not conversely", {{Notion::SC, Notion::USC}});
  add(4, "UC implies USC, not conversely", {{Notion::USC, Notion::UC}});
  add(5, "USC and C are incomparable", {{Notion::USC, Notion::C}, {Notion::C, Notion::USC}});
  return rows;
}

}  // namespace

bool ZooReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const ZooRow& r) { return r.match; });
}

bool ZooReport::relations_witnessed() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationRow& r) { return r.witnessed; });
}

ZooReport run_all(const ZooBudget& budget, const std::vector<std::string>& ids) {
  std::vector<std::string> chosen;
  for (const auto& id : ids.empty() ? example_ids() : ids) chosen.push_back(canonical_id(id));
  std::vector<ExampleResult> results;
  if (budget.parallel && chosen.size() > 1) {
    std::vector<std::future<ExampleResult>> futures;
    for (const auto& id : chosen) futures.push_back(std::async(std::launch::async, run_example, id, budget));
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (const auto& id : chosen) results.push_back(run_example(id, budget));
  }
  ZooReport report;
  report.seed = budget.seed;
  for (auto& r : results) {
    for (auto& row : r.rows) report.rows.push_back(std::move(row));
  }
  report.relations = relations(results);
  return report;
}

}  // namespace symcont
