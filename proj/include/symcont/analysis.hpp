#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symcont/domains.hpp"
#include "symcont/exactnum.hpp"
#include "symcont/functions.hpp"

namespace symcont {

enum class Notion { C, UC, SC, USC, USC_wrt_B };
enum class Status { Proven, Refuted, NoViolationAtResolution };
enum class CertificateKind {
  UniformlyDiscrete,
  MidpointFree,
  IntervalDecision,
  ImplicationFrom,
  ExhaustiveEnumeration,
  AnalyticFormula,
  WitnessFamily,  ///< refutation by a verified user-supplied sequence
  ModulusSweep    ///< refutation by the modulus sweep
};

std::string to_string(Notion n);
std::string to_string(Status s);
std::string to_string(CertificateKind k);
std::optional<Notion> parse_notion(const std::string& s);

struct AnalysisConfig {
  std::vector<QuadExt> delta_schedule = default_schedule();
  int grid_exponent = 10;
  std::size_t max_pairs = 1000000;
  std::size_t enum_limit = 100000;
  std::uint64_t seed = 0;

  /// Throws ConfigurationError unless the schedule is positive and strictly decreasing,
  /// the grid exponent lies in [0, 24] and enum_limit is positive.
  void validate() const;
  SamplingOptions sampling() const;
  static std::vector<QuadExt> default_schedule();
};

/// One pair of a witness. For pointwise notions `x` is the point or (for SC) x and y
/// straddle it symmetrically.
struct WitnessTerm {
  QuadExt x;
  QuadExt y;
  std::optional<QuadExt> center;  ///< midpoint, for the symmetric notions
  QuadExt scale;                  ///< h for symmetric pairs, |x - y| otherwise
  QuadExt delta;                  ///< the pair is admissible for this delta: scale < delta
  QuadExt oscillation;            ///< |f(x) - f(y)|
};

struct Witness {
  Notion notion = Notion::UC;  ///< the notion the pairs violate
  QuadExt epsilon;             ///< every term has oscillation >= epsilon > 0
  std::optional<QuadExt> point;
  std::vector<WitnessTerm> terms;
  std::string description;
};

struct ComponentDecision {
  IntervalPiece span;
  bool uniformly_continuous = true;
  std::string reason;
};

struct Certificate {
  CertificateKind kind = CertificateKind::ExhaustiveEnumeration;
  std::optional<QuadExt> gap;                  ///< UniformlyDiscrete
  std::optional<Notion> from;                  ///< ImplicationFrom
  std::vector<ComponentDecision> components;   ///< IntervalDecision
  std::string detail;
};

struct ResolutionInfo {
  QuadExt resolution;                 ///< model resolution rho
  std::optional<QuadExt> finest_delta;  ///< last scheduled delta above rho
  QuadExt oscillation;                ///< largest oscillation seen at finest_delta
  bool zero = false;                  ///< oscillation exactly 0 and nothing capped
  bool truncated = false;             ///< finite stand-in or sampled model
  bool capped = false;                ///< max_pairs or enum_limit cut the scan short
  std::size_t pairs = 0;
  std::string detail;
};

struct Verdict {
  Notion notion = Notion::C;
  Status status = Status::NoViolationAtResolution;
  std::optional<Certificate> certificate;  ///< set for Proven and Refuted
  std::optional<Witness> witness;          ///< set for Refuted
  std::optional<ResolutionInfo> resolution;  ///< set for NoViolationAtResolution

  bool zero_at_resolution() const {
    return status == Status::NoViolationAtResolution && resolution && resolution->zero;
  }
};

struct ModulusProfile {
  struct Entry {
    QuadExt delta;
    QuadExt oscillation;
    std::optional<WitnessTerm> witness;
    bool truncated = false;
  };
  std::vector<QuadExt> schedule;
  std::vector<Entry> values;
};

struct OscillationResult {
  QuadExt oscillation;
  std::optional<WitnessTerm> witness;
  bool truncated = false;
  std::size_t pairs = 0;
};

/// Largest |f(x) - f(y)| over symmetric pairs of the ambient model with h < delta and
/// midpoint in `centers`.
OscillationResult sym_oscillation(const DomainSpec& ambient, const DomainSpec& centers, const FuncSpec& f,
                                  const QuadExt& delta, const AnalysisConfig& config);

/// Largest |f(x) - f(y)| over pairs with |x - y| < delta.
OscillationResult uc_oscillation(const DomainSpec& ambient, const FuncSpec& f, const QuadExt& delta,
                                 const AnalysisConfig& config);

ModulusProfile sym_profile(const DomainSpec& ambient, const DomainSpec& centers, const FuncSpec& f,
                           const AnalysisConfig& config);
ModulusProfile uc_profile(const DomainSpec& ambient, const FuncSpec& f, const AnalysisConfig& config);

/// A hand-built sequence of pairs claimed to violate `notion` (UC, USC or USC_wrt_B).
struct WitnessSequence {
  Notion notion = Notion::USC;
  std::string description;
  std::function<std::pair<QuadExt, QuadExt>(long)> terms;
  std::function<QuadExt(long)> claimed_oscillation;
  long first = 1;
  long last = 1;
};

/// Verdicts for C, UC, SC, USC in that order.
std::vector<Verdict> classify(const DomainSpec& ambient, const FuncSpec& f, const AnalysisConfig& config,
                              const std::vector<WitnessSequence>& hints = {});

/// USC of f on `ambient` with respect to `b`. Throws PreconditionError when b is not a subset.
Verdict check_wrt_subset(const DomainSpec& ambient, const DomainSpec& b, const FuncSpec& f,
                         const AnalysisConfig& config, const std::vector<WitnessSequence>& hints = {});

/// The modulus sweep alone for UC or USC (centers = ambient), bypassing structural rules.
Verdict modulus_sweep(const DomainSpec& ambient, const FuncSpec& f, Notion notion, const AnalysisConfig& config);

struct WitnessCheck {
  bool ok = true;
  std::string message;
};

/// Re-evaluates every term: membership, midpoint membership (in `centers` when given,
/// else the ambient), scale below delta, and the recorded oscillation.
WitnessCheck verify_witness(const Witness& w, const DomainSpec& ambient, const FuncSpec& f,
                            const std::optional<DomainSpec>& centers = std::nullopt);

struct ImplicationReport {
  struct Row {
    QuadExt delta;
    QuadExt sym;        ///< omega_sym(delta)
    QuadExt uc_double;  ///< omega_uc(2 delta)
    bool holds = true;
  };
  std::vector<Row> rows;
  std::vector<Verdict> verdicts;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ImplicationReport implication_suite(const DomainSpec& ambient, const FuncSpec& f, const AnalysisConfig& config);

struct TransferReport {
  struct Row {
    std::size_t index;  ///< 1-based position in the sequence
    QuadExt delta;
    QuadExt lhs;  ///< omega_sym of the limit
    QuadExt rhs;  ///< omega_sym of the member + 2 supDist
    bool holds = true;
  };
  std::vector<QuadExt> sup_dist;
  std::vector<Row> rows;
  bool all_hold = true;
  bool decreasing = true;  ///< supDist nonincreasing along the sequence
  bool stagnant = false;   ///< supDist at the end is at least half its first value
};

TransferReport uniform_limit_transfer(const std::vector<FuncSpec>& sequence, const FuncSpec& f,
                                      const DomainSpec& ambient, const AnalysisConfig& config);

/// The same function with truncation-family regions refined alongside refine(d).
FuncSpec refine(const FuncSpec& f);

}  // namespace symcont
