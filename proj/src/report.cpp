#include "symcont/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

#include "symcont/error.hpp"
#include "symcont/spec_io.hpp"

namespace symcont {

using ojson = nlohmann::ordered_json;

namespace {

std::string num(const QuadExt& x) { return to_string(x); }

ojson term_json(const WitnessTerm& t) {
  ojson j;
  j["x"] = num(t.x);
  j["y"] = num(t.y);
  if (t.center) j["center"] = num(*t.center);
  j["scale"] = num(t.scale);
  j["delta"] = num(t.delta);
  j["oscillation"] = num(t.oscillation);
  return j;
}

ojson witness_json(const Witness& w) {
  ojson j;
  j["notion"] = to_string(w.notion);
  j["epsilon"] = num(w.epsilon);
  if (w.point) j["point"] = num(*w.point);
  j["description"] = w.description;
  j["terms"] = ojson::array();
  for (const auto& t : w.terms) j["terms"].push_back(term_json(t));
  return j;
}

ojson verdict_json(const Verdict& v) {
  ojson j;
  j["notion"] = to_string(v.notion);
  j["status"] = to_string(v.status);
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    ojson cj;
    cj["kind"] = to_string(c.kind);
    if (c.gap) cj["gap"] = num(*c.gap);
    if (c.from) cj["from"] = to_string(*c.from);
    if (!c.components.empty()) {
      cj["components"] = ojson::array();
      for (const auto& comp : c.components) {
        cj["components"].push_back(
            {{"span", comp.span.to_string()}, {"uniformlyContinuous", comp.uniformly_continuous}, {"reason", comp.reason}});
      }
    }
    cj["detail"] = c.detail;
    j["certificate"] = std::move(cj);
  }
  if (v.witness) j["witness"] = witness_json(*v.witness);
  if (v.resolution) {
    const ResolutionInfo& r = *v.resolution;
    ojson rj;
    rj["resolution"] = num(r.resolution);
    if (r.finest_delta) rj["finestDelta"] = num(*r.finest_delta);
    rj["oscillation"] = num(r.oscillation);
    rj["zero"] = r.zero;
    rj["truncated"] = r.truncated;
    rj["capped"] = r.capped;
    rj["pairs"] = r.pairs;
    rj["detail"] = r.detail;
    j["resolution"] = std::move(rj);
  }
  return j;
}

ojson config_json(const AnalysisConfig& c) {
  ojson j;
  j["deltaSchedule"] = ojson::array();
  for (const auto& d : c.delta_schedule) j["deltaSchedule"].push_back(num(d));
  j["gridExponent"] = c.grid_exponent;
  j["maxPairs"] = c.max_pairs;
  j["enumLimit"] = c.enum_limit;
  j["seed"] = c.seed;
  return j;
}

ojson profile_json(const ProfileEntry& p) {
  ojson j;
  j["notion"] = to_string(p.notion);
  j["entries"] = ojson::array();
  for (const auto& e : p.profile.values) {
    ojson ej;
    ej["delta"] = num(e.delta);
    ej["oscillation"] = num(e.oscillation);
    ej["truncated"] = e.truncated;
    if (e.witness) ej["witness"] = term_json(*e.witness);
    j["entries"].push_back(std::move(ej));
  }
  return j;
}

ojson zoo_json(const ZooReport& z) {
  ojson j;
  j["seed"] = z.seed;
  j["allMatch"] = z.all_match();
  j["relationsWitnessed"] = z.relations_witnessed();
  j["rows"] = ojson::array();
  for (const auto& r : z.rows) {
    ojson rj;
    rj["example"] = r.example;
    rj["subject"] = r.subject;
    rj["item"] = r.item;
    rj["expected"] = r.expected;
    rj["actual"] = r.actual;
    rj["match"] = r.match;
    if (!r.note.empty()) rj["note"] = r.note;
    if (r.verdict) rj["verdict"] = verdict_json(*r.verdict);
    j["rows"].push_back(std::move(rj));
  }
  j["relations"] = ojson::array();
  for (const auto& r : z.relations) {
    j["relations"].push_back({{"number", r.number},
                              {"statement", r.statement},
                              {"pattern", r.pattern},
                              {"establishedBy", r.established_by},
                              {"witnessed", r.witnessed}});
  }
  return j;
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

void verdict_text(std::ostream& os, const Verdict& v, const std::string& indent) {
  os << indent << to_string(v.notion) << ": " << to_string(v.status);
  if (v.certificate) os << " [" << to_string(v.certificate->kind) << "]";
  os << "\n";
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    if (!c.detail.empty()) os << indent << "  " << c.detail << "\n";
    if (c.gap) os << indent << "  gap " << num(*c.gap) << "\n";
    for (const auto& comp : c.components) {
      os << indent << "  component " << comp.span.to_string() << ": "
         << (comp.uniformly_continuous ? "uniformly continuous" : "not uniformly continuous");
      if (!comp.reason.empty()) os << " (" << comp.reason << ")";
      os << "\n";
    }
  }
  if (v.witness) {
    const Witness& w = *v.witness;
    os << indent << "  witness (" << to_string(w.notion) << "): epsilon " << num(w.epsilon);
    if (w.point) os << " at " << num(*w.point);
    os << "\n";
    if (!w.description.empty()) os << indent << "    " << w.description << "\n";
    for (const auto& t : w.terms) {
      os << indent << "    x = " << num(t.x) << ", y = " << num(t.y);
      if (t.center) os << ", center " << num(*t.center);
      os << ", scale " << num(t.scale) << " < " << num(t.delta) << ", oscillation " << num(t.oscillation) << "\n";
    }
  }
  if (v.resolution) {
    const ResolutionInfo& r = *v.resolution;
    os << indent << "  resolution " << num(r.resolution);
    if (r.finest_delta) os << ", finest delta " << num(*r.finest_delta);
    os << ", oscillation " << num(r.oscillation) << (r.zero ? " (exactly zero)" : "") << ", " << r.pairs << " pairs";
    if (r.truncated) os << ", truncated model";
    if (r.capped) os << ", capped";
    os << "\n";
    if (!r.detail.empty()) os << indent << "  " << r.detail << "\n";
  }
}

}  // namespace

std::vector<std::string> truncation_notices(const Report& r) {
  std::vector<std::string> out;
  const auto note = [&](const std::string& where, const Verdict& v) {
    if (v.status != Status::NoViolationAtResolution || !v.resolution) return;
    std::string s = where + to_string(v.notion) + " is undecided beyond resolution " + num(v.resolution->resolution);
    if (v.resolution->capped) s += " (scan capped)";
    out.push_back(std::move(s));
  };
  for (const auto& v : r.verdicts) note("", v);
  for (const auto& p : r.profiles) {
    if (std::any_of(p.profile.values.begin(), p.profile.values.end(), [](const auto& e) { return e.truncated; })) {
      out.push_back(to_string(p.notion) + " profile was computed on a truncated or sampled model");
    }
  }
  if (r.zoo) {
    for (const auto& row : r.zoo->rows) {
      if (row.verdict) note(row.example + "/" + row.subject + " ", *row.verdict);
    }
  }
  return out;
}

std::string render_json(const Report& r) {
  ojson j;
  j["tool"] = "symcont";
  j["schemaVersion"] = 1;
  j["command"] = r.command;
  if (r.input) j["input"] = ojson::parse(*r.input);
  if (r.domain) j["domain"] = *r.domain;
  if (r.function) j["function"] = *r.function;
  if (r.subset) j["subset"] = *r.subset;
  j["config"] = config_json(r.config);
  j["verdicts"] = ojson::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(verdict_json(v));
  j["profiles"] = ojson::array();
  for (const auto& p : r.profiles) j["profiles"].push_back(profile_json(p));
  if (r.zoo) j["zoo"] = zoo_json(*r.zoo);
  j["notices"] = r.notices;
  if (r.seconds) j["timing"] = {{"seconds", *r.seconds}};
  return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "symcont " << r.command << "\n";
  if (r.domain) os << "domain:   " << *r.domain << "\n";
  if (r.function) os << "function: " << *r.function << "\n";
  if (r.subset) os << "subset B: " << *r.subset << "\n";
  const AnalysisConfig& c = r.config;
  os << "config:   " << c.delta_schedule.size() << " deltas from " << num(c.delta_schedule.front()) << " to "
     << num(c.delta_schedule.back()) << ", grid exponent " << c.grid_exponent << ", max pairs " << c.max_pairs
     << ", enum limit " << c.enum_limit << ", seed " << c.seed << "\n";
  if (!r.verdicts.empty()) {
    os << "\nverdicts\n";
    for (const auto& v : r.verdicts) verdict_text(os, v, "  ");
  }
  for (const auto& p : r.profiles) {
    os << "\n" << to_string(p.notion) << " modulus profile\n";
    for (const auto& e : p.profile.values) {
      os << "  delta " << num(e.delta) << ": " << num(e.oscillation);
      if (e.witness) os << "  at (" << num(e.witness->x) << ", " << num(e.witness->y) << ")";
      if (e.truncated) os << "  [truncated]";
      os << "\n";
    }
  }
  if (r.zoo) {
    const ZooReport& z = *r.zoo;
    os << "\nzoo (seed " << z.seed << ")\n";
    for (const auto& row : z.rows) {
      os << "  " << (row.match ? "ok  " : "FAIL") << "  " << row.example;
      if (!row.subject.empty()) os << " " << row.subject;
      os << "  " << row.item << ": expected " << row.expected << ", got " << row.actual << "\n";
      if (!row.note.empty()) os << "        " << row.note << "\n";
    }
    os << "\nrelations\n";
    for (const auto& rel : z.relations) {
      os << "  (" << rel.number << ") " << rel.statement << ": ";
      if (rel.established_by.empty()) {
        os << "not witnessed";
      } else {
        for (std::size_t i = 0; i < rel.established_by.size(); ++i) os << (i ? ", " : "") << rel.established_by[i];
      }
      if (!rel.witnessed) os << " [incomplete]";
      os << "\n";
    }
    os << "\n" << (z.all_match() ? "all rows match" : "MISMATCH") << ", "
       << (z.relations_witnessed() ? "all relations witnessed" : "relations incomplete") << "\n";
  }
  if (!r.notices.empty()) {
    os << "\nnotices\n";
    for (const auto& n : r.notices) os << "  " << n << "\n";
  }
  if (r.seconds) os << "\ntime " << seconds_text(*r.seconds) << " s\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Witness audit

namespace {

using nlohmann::json;

QuadExt field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw SpecError(std::string("report witness lacks '") + key + "'");
  return parse_number(j[key].get<std::string>());
}

Witness witness_from(const json& j) {
  Witness w;
  const auto notion = parse_notion(j.value("notion", ""));
  if (!notion) throw SpecError("report witness has an unknown notion");
  w.notion = *notion;
  w.epsilon = field(j, "epsilon");
  if (j.contains("point")) w.point = field(j, "point");
  w.description = j.value("description", "");
  if (!j.contains("terms") || !j["terms"].is_array()) throw SpecError("report witness lacks terms");
  for (const auto& t : j["terms"]) {
    WitnessTerm term;
    term.x = field(t, "x");
    term.y = field(t, "y");
    if (t.contains("center")) term.center = field(t, "center");
    term.scale = field(t, "scale");
    term.delta = field(t, "delta");
    term.oscillation = field(t, "oscillation");
    w.terms.push_back(std::move(term));
  }
  return w;
}

void audit(WitnessAudit& a, const std::string& where, const json& verdict, const DomainSpec& d, const FuncSpec& f,
           const std::optional<DomainSpec>& subset) {
  if (!verdict.contains("witness")) return;
  const Witness w = witness_from(verdict["witness"]);
  const std::optional<DomainSpec> centers = w.notion == Notion::USC_wrt_B ? subset : std::nullopt;
  ++a.checked;
  const WitnessCheck c = verify_witness(w, d, f, centers);
  if (!c.ok) a.failures.push_back(where + ": " + c.message);
}

}  // namespace

WitnessAudit verify_report_witnesses(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what(), 0, 0);
  }
  WitnessAudit a;
  if (root.contains("input")) {
    const AnalysisSpec spec = parse_spec(root["input"].dump());
    for (const auto& v : root.value("verdicts", json::array())) {
      audit(a, v.value("notion", "?"), v, spec.domain, spec.function, spec.subset);
    }
  }
  if (root.contains("zoo")) {
    const json& z = root["zoo"];
    const std::uint64_t seed = z.value("seed", std::uint64_t{0});
    std::string current;
    std::optional<PaperExample> ex;
    for (const auto& row : z.value("rows", json::array())) {
      if (!row.contains("verdict")) continue;
      const std::string id = row.value("example", "");
      if (id != current) {
        ex = build_example(id, seed);
        current = id;
      }
      const std::string label = row.value("subject", "");
      const auto it = std::find_if(ex->subjects.begin(), ex->subjects.end(),
                                   [&](const Subject& s) { return s.label == label; });
      if (it == ex->subjects.end()) throw SpecError("report row names unknown subject " + id + "/" + label);
      audit(a, id + "/" + label + " " + row.value("item", ""), row["verdict"], it->domain, it->function, it->subset);
    }
  }
  return a;
}

}  // namespace symcont
