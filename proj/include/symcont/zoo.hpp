#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symcont/analysis.hpp"

namespace symcont {

/// What a catalog entry expects for one notion.
enum class Expected {
  Proven,
  Refuted,
  NoViolation,
  /// Claimed for the infinite set; the truncation can only show exact zero oscillation.
  ZeroOnTruncation
};

std::string to_string(Expected e);

/// One (domain, function) pair of an example with its expected verdicts.
struct Subject {
  std::string label;
  DomainSpec domain;
  FuncSpec function;
  std::optional<DomainSpec> subset;  ///< analyzed with check_wrt_subset when set
  std::vector<WitnessSequence> hints;
  AnalysisConfig config;
  std::vector<std::pair<Notion, Expected>> expected;
};

/// A named side check that is not a verdict (bounds, limits, proof ingredients).
struct CheckOutcome {
  std::string name;
  std::string expected;
  std::string actual;
  bool match = false;
};

struct PaperExample {
  std::string id;    ///< "ex-2.5"
  std::string slug;  ///< "odd-prime-indicator"
  std::string title;
  std::string description;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Subject> subjects;
  std::vector<WitnessSequence> witnesses;
  std::function<std::vector<CheckOutcome>(const AnalysisConfig&)> checks;
};

/// Stable ids, catalog order.
std::vector<std::string> example_ids();

/// Accepts the id ("ex-3.9"), the full tag ("ex-3.9-staircase-b") or the slug alone.
/// Throws SpecError for unknown ids. The seed drives the random function of ex-3.6.
PaperExample build_example(const std::string& id, std::uint64_t seed = 0);

/// Empty when the expected statuses respect UC => USC => SC and UC => C => SC;
/// otherwise a description of the first contradiction.
std::optional<std::string> expectation_conflict(const std::vector<std::pair<Notion, Expected>>& expected);

struct MidpointViolation {
  long long first = 0;   ///< p, or n for the contrast run
  long long second = 0;  ///< q; 0 stands for the member 0
  QuadExt midpoint;
};

struct MidpointReport {
  long long bound = 0;
  std::vector<MidpointViolation> violations;
  std::size_t pairs_checked = 0;
  bool holds() const { return violations.empty(); }
};

/// Every midpoint of two distinct members of {1/p : p odd prime <= bound} with 0,
/// tested for membership. Throws PreconditionError when bound < 3.
MidpointReport midpoint_exclusion_primes(long long bound);

/// The same test for (1/n, 0) in {1/n : n <= bound} with 0; violations are expected
/// for every n with 2n <= bound.
MidpointReport midpoint_contrast_naturals(long long bound);

struct StaircaseProofRow {
  long long k = 0;
  bool unit_gap = false;       ///< a_{4k+1} - a_{4k} == 1
  bool lower_midpoint = false; ///< (a_{4k-3} + a_{4k-1}) / 2 > a_{4k-2}
  bool upper_midpoint = false; ///< (a_{4k-2} + a_{4k}) / 2 < a_{4k-1}
  bool uc_pair = false;        ///< a_{4k-1} - a_{4k-2} == 1/k with oscillation 2
  bool ok() const { return unit_gap && lower_midpoint && upper_midpoint && uc_pair; }
};

struct StaircaseProofReport {
  std::vector<StaircaseProofRow> rows;
  bool all_pass() const;
  /// First failing k, if any.
  std::optional<long long> first_failure() const;
};

/// Exact checks of the ingredients showing the variant A step function is USC but not UC,
/// for k = 1..blocks_to_check. Throws PreconditionError for variant B or when
/// blocks_to_check exceeds params.blocks.
StaircaseProofReport verify_staircase_proof(const StaircaseParams& params, long long blocks_to_check);

struct StaircaseWitnessRow {
  long long n = 0;
  QuadExt x;
  QuadExt y;
  QuadExt midpoint;
  QuadExt oscillation;
  bool midpoint_in_block = false;  ///< midpoint in [a_{2n-1}, a_{2n}]
  bool ok() const { return midpoint_in_block && oscillation == QuadExt(2); }
};

/// The variant B pairs (a_{2n-1}, a_{2n+1}) for n = 1..terms.
std::vector<StaircaseWitnessRow> verify_staircase_witness(long long terms);

/// The step function 2i - 1 on block i, for blocks 1..params.blocks. Covering more blocks
/// than the analysed staircase lets refined models keep their extra blocks.
FuncSpec staircase_step(const StaircaseParams& params);

struct ZooBudget {
  std::optional<std::size_t> max_pairs;
  std::optional<std::size_t> enum_limit;
  std::optional<int> grid_exponent;
  std::optional<std::vector<QuadExt>> delta_schedule;
  std::uint64_t seed = 0;
  bool parallel = true;
};

struct ZooRow {
  std::string example;
  std::string subject;
  std::string item;  ///< notion name or check name
  std::string expected;
  std::string actual;
  bool match = false;
  std::optional<Verdict> verdict;
  std::string note;
};

struct RelationRow {
  int number = 0;
  std::string statement;
  std::string pattern;                      ///< the verdict pattern that establishes it
  std::vector<std::string> established_by;  ///< "ex-2.4", or "ex-4.3/g"
  bool witnessed = false;
};

struct ZooReport {
  std::vector<ZooRow> rows;
  std::vector<RelationRow> relations;
  std::uint64_t seed = 0;
  bool all_match() const;
  bool relations_witnessed() const;
};

/// Runs every listed example (all when `ids` is empty) and assembles the table in
/// catalog order.
ZooReport run_all(const ZooBudget& budget, const std::vector<std::string>& ids = {});

}  // namespace symcont
