#pragma once

// Seeded random domains and functions shared by the property tests and the acceptance run.
// Values are computed from the drawn formula parameters directly, not through the library.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "oracle.hpp"

namespace cases {

using symcont::DomainSpec;
using symcont::FuncSpec;
using symcont::IntervalPiece;
using symcont::QuadExt;
using symcont::Rational;

struct FiniteCase {
  DomainSpec domain;
  FuncSpec function;
  oracle::Sample sample;
};

/// Up to `max_points` lattice points in Q(sqrt2), split into one to four groups, each
/// carrying Const, Affine, Identity, x^2 or (away from 0) 1/x.
inline FiniteCase random_finite(std::mt19937_64& rng, std::size_t max_points = 40) {
  std::uniform_int_distribution<std::size_t> count(1, max_points);
  std::set<QuadExt> drawn;
  const std::size_t n = count(rng);
  while (drawn.size() < n) drawn.insert(oracle::lattice_point(rng));
  oracle::Sample sample;
  sample.points.assign(drawn.begin(), drawn.end());

  std::uniform_int_distribution<int> groups_dist(1, 4);
  const int groups = groups_dist(rng);
  std::uniform_int_distribution<int> pick(0, groups - 1);
  std::vector<std::vector<QuadExt>> members(groups);
  for (const auto& p : sample.points) members[pick(rng)].push_back(p);

  std::vector<symcont::Piece> pieces;
  std::vector<std::pair<std::vector<QuadExt>, std::function<QuadExt(const QuadExt&)>>> rules;
  for (auto& group : members) {
    if (group.empty()) continue;
    const bool has_zero = std::binary_search(group.begin(), group.end(), QuadExt(0));
    std::uniform_int_distribution<int> kind(0, has_zero ? 3 : 4);
    const QuadExt m = oracle::lattice_point(rng), b = oracle::lattice_point(rng);
    symcont::Formula formula;
    std::function<QuadExt(const QuadExt&)> value;
    switch (kind(rng)) {
      case 0: formula = symcont::Const{b}; value = [b](const QuadExt&) { return b; }; break;
      case 1: formula = symcont::Affine{m, b}; value = [m, b](const QuadExt& x) { return m * x + b; }; break;
      case 2: formula = symcont::Identity{}; value = [](const QuadExt& x) { return x; }; break;
      case 3: formula = symcont::Monomial{2}; value = [](const QuadExt& x) { return x * x; }; break;
      default: formula = symcont::Reciprocal{}; value = [](const QuadExt& x) { return QuadExt(1) / x; }; break;
    }
    pieces.push_back({DomainSpec::finite_points(group), formula});
    rules.emplace_back(group, value);
  }
  for (const auto& p : sample.points) {
    for (const auto& [group, value] : rules) {
      if (std::binary_search(group.begin(), group.end(), p)) sample.values.push_back(value(p));
    }
  }
  DomainSpec domain = DomainSpec::finite_points(sample.points);
  return {std::move(domain), FuncSpec::piecewise(std::move(pieces)), std::move(sample)};
}

struct IntervalCase {
  std::vector<IntervalPiece> pieces;
  DomainSpec domain;
  FuncSpec function;
};

/// One to six pieces with endpoints on the 1/8 grid in [0, 4]; neighbours touch about
/// half of the time. Each piece carries Const or Affine with coefficients in (1/4)Z.
inline IntervalCase random_intervals(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> npieces(1, 6), len(1, 8), gap(0, 4), coin(0, 1), coef(-8, 8), start(0, 8);
  std::vector<IntervalPiece> pieces;
  int cursor = start(rng);
  const int target = npieces(rng);
  bool prev_hi_closed = false;
  for (int i = 0; i < target; ++i) {
    const int hi = cursor + len(rng);
    if (hi > 32) break;
    IntervalPiece p{QuadExt(symcont::make_rational(cursor, 8)), QuadExt(symcont::make_rational(hi, 8)), coin(rng) == 1, coin(rng) == 1};
    if (!pieces.empty() && pieces.back().hi == p.lo && prev_hi_closed) p.lo_closed = false;
    pieces.push_back(p);
    prev_hi_closed = p.hi_closed;
    cursor = hi + (coin(rng) == 1 ? 0 : gap(rng));
  }
  std::vector<symcont::Piece> fp;
  for (const auto& p : pieces) {
    const QuadExt b(symcont::make_rational(coef(rng), 4));
    symcont::Formula formula = symcont::Const{b};
    if (coin(rng) == 1) formula = symcont::Affine{QuadExt(symcont::make_rational(coef(rng), 4)), b};
    fp.push_back({DomainSpec::interval_union({p}), formula});
  }
  DomainSpec domain = DomainSpec::interval_union(pieces);
  return {std::move(pieces), std::move(domain), FuncSpec::piecewise(std::move(fp))};
}

}  // namespace cases
