#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcont/analysis.hpp"
#include "symcont/zoo.hpp"

namespace symcont {

struct ProfileEntry {
  Notion notion;
  ModulusProfile profile;
};

struct Report {
  std::string command;                   ///< "analyze", "moduli" or "zoo"
  std::optional<std::string> input;      ///< canonical spec JSON for analyze and moduli
  std::optional<std::string> domain;     ///< human-readable echo
  std::optional<std::string> function;
  std::optional<std::string> subset;
  AnalysisConfig config;
  std::vector<Verdict> verdicts;
  std::vector<ProfileEntry> profiles;
  std::optional<ZooReport> zoo;
  std::vector<std::string> notices;
  std::optional<double> seconds;  ///< only rendered when set
};

/// Notices for every NoViolationAtResolution verdict and truncated profile.
std::vector<std::string> truncation_notices(const Report& r);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

struct WitnessAudit {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Re-verifies every witness in a JSON report against the domain and function it was
/// computed for: the echoed spec of analyze reports, or the rebuilt catalog entry of zoo
/// rows. Throws ParseError or SpecError when the report itself is malformed.
WitnessAudit verify_report_witnesses(std::string_view json_text);

}  // namespace symcont
