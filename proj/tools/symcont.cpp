#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symcont/error.hpp"
#include "symcont/report.hpp"
#include "symcont/spec_io.hpp"
#include "symcont/zoo.hpp"

using namespace symcont;

namespace {

struct Overrides {
  std::string schedule;
  std::optional<int> grid_exponent;
  std::optional<std::size_t> max_pairs;
  std::optional<std::size_t> enum_limit;
  std::optional<std::uint64_t> seed;

  void apply(AnalysisConfig& c) const {
    if (!schedule.empty()) c.delta_schedule = parse_schedule(schedule);
    if (grid_exponent) c.grid_exponent = *grid_exponent;
    if (max_pairs) c.max_pairs = *max_pairs;
    if (enum_limit) c.enum_limit = *enum_limit;
    if (seed) c.seed = *seed;
    c.validate();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Every witness the engine produced must re-verify; a failure is an invariant violation.
bool witnesses_verify(const std::vector<Verdict>& verdicts, const AnalysisSpec& spec, std::vector<std::string>& notes) {
  bool ok = true;
  for (const auto& v : verdicts) {
    if (!v.witness) continue;
    const std::optional<DomainSpec> centers =
        v.witness->notion == Notion::USC_wrt_B ? spec.subset : std::nullopt;
    const WitnessCheck c = verify_witness(*v.witness, spec.domain, spec.function, centers);
    if (!c.ok) {
      ok = false;
      notes.push_back("witness for " + to_string(v.notion) + " failed re-verification: " + c.message);
    }
  }
  return ok;
}

Report spec_report(const std::string& command, const AnalysisSpec& spec) {
  Report r;
  r.command = command;
  r.input = spec.canonical;
  r.domain = describe(spec.domain);
  r.function = describe(spec.function);
  if (spec.subset) r.subset = describe(*spec.subset);
  r.config = spec.config;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify functions on exact subsets of the line by continuity, uniform continuity, "
               "symmetric continuity and uniform symmetric continuity."};
  app.require_subcommand(0, 1);

  Overrides ov;
  std::string format = "text";
  bool timing = false;
  std::string verify_path;
  app.add_option("--delta-schedule", ov.schedule, "comma-separated strictly decreasing deltas, e.g. 1,1/2,1/4");
  app.add_option("--grid-exponent", ov.grid_exponent, "2^k + 1 sample points per interval piece");
  app.add_option("--max-pairs", ov.max_pairs, "pair budget per scan");
  app.add_option("--enum-limit", ov.enum_limit, "enumeration limit per domain");
  app.add_option("--seed", ov.seed, "seed for pseudo-random catalog content");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", timing, "append wall-clock time to the report");
  app.add_option("--verify-witness", verify_path, "re-verify every witness in a JSON report");

  std::string spec_path;
  auto* analyze = app.add_subcommand("analyze", "classify the function of a spec file");
  analyze->add_option("spec", spec_path, "spec file")->required();
  analyze->fallthrough();

  std::string moduli_path, notion_name;
  auto* moduli = app.add_subcommand("moduli", "modulus profile over the delta schedule");
  moduli->add_option("spec", moduli_path, "spec file")->required();
  moduli->add_option("--notion", notion_name, "uc or usc")->required()->check(CLI::IsMember({"uc", "usc"}));
  moduli->fallthrough();

  std::vector<std::string> examples;
  bool all = false;
  auto* zoo = app.add_subcommand("zoo", "reproduce the example catalog");
  zoo->add_option("--example", examples, "example id or slug (repeatable)");
  zoo->add_flag("--all", all, "run every catalog entry");
  zoo->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto finish = [&](Report& r) {
    if (timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& n : truncation_notices(r)) r.notices.push_back(std::move(n));
    std::cout << (format == "json" ? render_json(r) : render_text(r));
  };

  try {
    if (!verify_path.empty()) {
      const WitnessAudit a = verify_report_witnesses(read_file(verify_path));
      std::cout << "verified " << a.checked << " witnesses, " << a.failures.size() << " failures\n";
      for (const auto& f : a.failures) std::cout << "  " << f << "\n";
      return a.ok() ? 0 : 1;
    }
    if (*analyze) {
      AnalysisSpec spec = parse_spec(read_file(spec_path));
      ov.apply(spec.config);
      Report r = spec_report("analyze", spec);
      r.verdicts = classify(spec.domain, spec.function, spec.config);
      if (spec.subset) r.verdicts.push_back(check_wrt_subset(spec.domain, *spec.subset, spec.function, spec.config));
      const bool ok = witnesses_verify(r.verdicts, spec, r.notices);
      finish(r);
      return ok ? 0 : 1;
    }
    if (*moduli) {
      AnalysisSpec spec = parse_spec(read_file(moduli_path));
      ov.apply(spec.config);
      Report r = spec_report("moduli", spec);
      if (notion_name == "uc") {
        r.profiles.push_back({Notion::UC, uc_profile(spec.domain, spec.function, spec.config)});
      } else {
        const DomainSpec& centers = spec.subset ? *spec.subset : spec.domain;
        r.profiles.push_back({spec.subset ? Notion::USC_wrt_B : Notion::USC,
                              sym_profile(spec.domain, centers, spec.function, spec.config)});
      }
      finish(r);
      return 0;
    }
    if (*zoo) {
      if (!all && examples.empty()) throw SpecError("zoo needs --all or at least one --example");
      AnalysisConfig base;
      ov.apply(base);
      ZooBudget budget;
      budget.max_pairs = ov.max_pairs;
      budget.enum_limit = ov.enum_limit;
      budget.grid_exponent = ov.grid_exponent;
      if (!ov.schedule.empty()) budget.delta_schedule = base.delta_schedule;
      budget.seed = base.seed;
      Report r;
      r.command = "zoo";
      r.config = base;
      r.zoo = run_all(budget, all ? std::vector<std::string>{} : examples);
      finish(r);
      const bool ok = r.zoo->all_match() && (!all || r.zoo->relations_witnessed());
      return ok ? 0 : 1;
    }
    std::cerr << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  }
}
