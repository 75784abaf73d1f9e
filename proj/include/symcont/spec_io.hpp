#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "symcont/analysis.hpp"

namespace symcont {

struct AnalysisSpec {
  DomainSpec domain;
  FuncSpec function;
  std::optional<DomainSpec> subset;
  AnalysisConfig config;
  std::string canonical;  ///< the input re-serialized with sorted keys
};

/// Parses a JSON analysis spec:
///
///   { "domain": {"OddPrimeReciprocals": {"maxPrime": 1000, "withZero": true}},
///     "function": {"Piecewise": [{"region": ..., "formula": {"Const": "1"}}]},
///     "subsetB": ...,                       (optional)
///     "config": {"deltaSchedule": ["1", "1/2"], "gridExponent": 10, ...} }  (optional)
///
/// Numbers are JSON integers or strings in exact form ("3/4", "1 + -1*sqrt2").
/// Throws ParseError for malformed JSON and SpecError for unknown keys, invalid values,
/// or a subsetB that is not contained in the domain.
AnalysisSpec parse_spec(std::string_view text);

/// Parses one value of the exact number grammar used in specs and on the command line.
QuadExt parse_number(std::string_view text);

/// Comma-separated exact numbers, e.g. "1,1/2,1/4".
std::vector<QuadExt> parse_schedule(std::string_view text);

}  // namespace symcont
