#include "symcont/spec_io.hpp"

#include <json.hpp>

#include <set>

#include "symcont/error.hpp"

namespace symcont {

using nlohmann::json;

namespace {

std::string where(const std::string& path) { return path.empty() ? "spec" : path; }

void allow_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw SpecError(where(path) + ": expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw SpecError(where(path) + ": unknown key '" + key + "'");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(where(path) + ": missing key '" + key + "'");
  return *it;
}

QuadExt number(const json& v, const std::string& path) {
  if (v.is_number_integer()) return QuadExt(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_number(v.get<std::string>());
    } catch (const SpecError& e) {
      throw SpecError(path + ": " + e.what());
    }
  }
  throw SpecError(path + ": expected an integer or an exact number string");
}

Rational rational(const json& v, const std::string& path) {
  const QuadExt x = number(v, path);
  if (!x.is_rational()) throw SpecError(path + ": expected a rational number");
  return x.rat();
}

long long integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SpecError(path + ": expected an integer");
  return v.get<long long>();
}

bool boolean(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw SpecError(path + ": expected true or false");
  return v.get<bool>();
}

/// A single-key object {"Name": body}; returns the name and body.
std::pair<std::string, const json*> tagged(const json& v, const std::string& path) {
  if (v.is_string()) return {v.get<std::string>(), nullptr};
  if (!v.is_object() || v.size() != 1) throw SpecError(path + ": expected a single-key object naming the variant");
  return {v.begin().key(), &v.begin().value()};
}

IntervalPiece piece(const json& v, const std::string& path) {
  allow_keys(v, path, {"lo", "hi", "loClosed", "hiClosed"});
  IntervalPiece p{number(require(v, path, "lo"), path + ".lo"), number(require(v, path, "hi"), path + ".hi"), true, true};
  if (v.contains("loClosed")) p.lo_closed = boolean(v["loClosed"], path + ".loClosed");
  if (v.contains("hiClosed")) p.hi_closed = boolean(v["hiClosed"], path + ".hiClosed");
  p.validate();
  return p;
}

DomainSpec domain(const json& v, const std::string& path) {
  const auto [name, body] = tagged(v, path);
  const std::string p = path + "." + name;
  if (!body) throw SpecError(path + ": domain variant '" + name + "' needs a body");
  const json& b = *body;
  if (name == "FinitePoints") {
    if (!b.is_array()) throw SpecError(p + ": expected an array of numbers");
    std::vector<QuadExt> pts;
    for (std::size_t i = 0; i < b.size(); ++i) pts.push_back(number(b[i], p + "[" + std::to_string(i) + "]"));
    return DomainSpec::finite_points(std::move(pts));
  }
  if (name == "IntegerWindow") {
    allow_keys(b, p, {"lo", "hi"});
    return DomainSpec::integer_window(integer(require(b, p, "lo"), p + ".lo"), integer(require(b, p, "hi"), p + ".hi"));
  }
  if (name == "OddPrimeReciprocals") {
    allow_keys(b, p, {"maxPrime", "withZero"});
    return DomainSpec::odd_prime_reciprocals(integer(require(b, p, "maxPrime"), p + ".maxPrime"),
                                             boolean(require(b, p, "withZero"), p + ".withZero"));
  }
  if (name == "NaturalReciprocals") {
    allow_keys(b, p, {"maxN", "withZero"});
    return DomainSpec::natural_reciprocals(integer(require(b, p, "maxN"), p + ".maxN"),
                                           boolean(require(b, p, "withZero"), p + ".withZero"));
  }
  if (name == "TruncatedRationals") {
    allow_keys(b, p, {"maxDenominator", "lo", "hi", "adjoinSqrt2"});
    const bool adjoin = b.contains("adjoinSqrt2") && boolean(b["adjoinSqrt2"], p + ".adjoinSqrt2");
    return DomainSpec::truncated_rationals(integer(require(b, p, "maxDenominator"), p + ".maxDenominator"),
                                           rational(require(b, p, "lo"), p + ".lo"),
                                           rational(require(b, p, "hi"), p + ".hi"), adjoin);
  }
  if (name == "IntervalUnion") {
    if (!b.is_array()) throw SpecError(p + ": expected an array of intervals");
    std::vector<IntervalPiece> pieces;
    for (std::size_t i = 0; i < b.size(); ++i) pieces.push_back(piece(b[i], p + "[" + std::to_string(i) + "]"));
    return DomainSpec::interval_union(std::move(pieces));
  }
  if (name == "Staircase") {
    allow_keys(b, p, {"variant", "blocks"});
    const json& var = require(b, p, "variant");
    if (!var.is_string() || (var != "A" && var != "B")) throw SpecError(p + ".variant: expected \"A\" or \"B\"");
    const long long blocks = integer(require(b, p, "blocks"), p + ".blocks");
    if (blocks < 1 || blocks > 100000) throw SpecError(p + ".blocks: expected 1..100000");
    return DomainSpec::staircase({var == "A" ? StaircaseVariant::A : StaircaseVariant::B, static_cast<int>(blocks)});
  }
  if (name == "UnionOf") {
    if (!b.is_array()) throw SpecError(p + ": expected an array of domains");
    std::vector<DomainSpec> parts;
    for (std::size_t i = 0; i < b.size(); ++i) parts.push_back(domain(b[i], p + "[" + std::to_string(i) + "]"));
    return DomainSpec::union_of(std::move(parts));
  }
  throw SpecError(path + ": unknown domain variant '" + name + "'");
}

Formula formula(const json& v, const std::string& path) {
  const auto [name, body] = tagged(v, path);
  const std::string p = path + "." + name;
  const auto empty_body = [&] {
    if (body && !(body->is_object() && body->empty()) && !body->is_null()) {
      throw SpecError(p + ": takes no parameters");
    }
  };
  if (name == "Identity") {
    empty_body();
    return Identity{};
  }
  if (name == "Reciprocal") {
    empty_body();
    return Reciprocal{};
  }
  if (!body) throw SpecError(path + ": formula '" + name + "' needs a body");
  if (name == "Const") return Const{number(*body, p)};
  if (name == "Affine") {
    allow_keys(*body, p, {"m", "c"});
    return Affine{number(require(*body, p, "m"), p + ".m"), number(require(*body, p, "c"), p + ".c")};
  }
  if (name == "Monomial") {
    const long long n = integer(*body, p);
    if (n < 1 || n > 64) throw SpecError(p + ": exponent must lie in [1, 64]");
    return Monomial{static_cast<unsigned>(n)};
  }
  throw SpecError(path + ": unknown formula '" + name + "'");
}

FuncSpec function(const json& v, const std::string& path) {
  const auto [name, body] = tagged(v, path);
  const std::string p = path + "." + name;
  if (!body) throw SpecError(path + ": function variant '" + name + "' needs a body");
  if (name == "Piecewise") {
    if (!body->is_array() || body->empty()) throw SpecError(p + ": expected a nonempty array of pieces");
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < body->size(); ++i) {
      const std::string pp = p + "[" + std::to_string(i) + "]";
      const json& item = (*body)[i];
      allow_keys(item, pp, {"region", "formula"});
      pieces.push_back({domain(require(item, pp, "region"), pp + ".region"),
                        formula(require(item, pp, "formula"), pp + ".formula")});
    }
    return FuncSpec::piecewise(std::move(pieces));
  }
  if (name == "Combined") {
    allow_keys(*body, p, {"op", "alpha", "operands"});
    const json& op = require(*body, p, "op");
    if (!op.is_string()) throw SpecError(p + ".op: expected a string");
    CombineOp c;
    const std::string o = op.get<std::string>();
    if (o == "scale") {
      c = CombineOp::scale(number(require(*body, p, "alpha"), p + ".alpha"));
    } else if (o == "add") {
      c = CombineOp::add();
    } else if (o == "sub") {
      c = CombineOp::sub();
    } else if (o == "mul") {
      c = CombineOp::mul();
    } else if (o == "div") {
      c = CombineOp::div();
    } else {
      throw SpecError(p + ".op: unknown operation '" + o + "'");
    }
    if (o != "scale" && body->contains("alpha")) throw SpecError(p + ".alpha: only scale takes alpha");
    const json& ops = require(*body, p, "operands");
    if (!ops.is_array()) throw SpecError(p + ".operands: expected an array");
    std::vector<FuncSpec> fs;
    for (std::size_t i = 0; i < ops.size(); ++i) fs.push_back(function(ops[i], p + ".operands[" + std::to_string(i) + "]"));
    return combine(c, std::move(fs));
  }
  throw SpecError(path + ": unknown function variant '" + name + "'");
}

AnalysisConfig config(const json& v) {
  const std::string p = "config";
  allow_keys(v, p, {"deltaSchedule", "gridExponent", "maxPairs", "enumLimit", "seed"});
  AnalysisConfig c;
  if (v.contains("deltaSchedule")) {
    const json& s = v["deltaSchedule"];
    if (!s.is_array()) throw SpecError(p + ".deltaSchedule: expected an array");
    c.delta_schedule.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      c.delta_schedule.push_back(number(s[i], p + ".deltaSchedule[" + std::to_string(i) + "]"));
    }
  }
  const auto nonneg = [&](const char* key) {
    const long long n = integer(v[key], p + "." + key);
    if (n < 0) throw SpecError(p + "." + key + ": must not be negative");
    return n;
  };
  if (v.contains("gridExponent")) c.grid_exponent = static_cast<int>(nonneg("gridExponent"));
  if (v.contains("maxPairs")) c.max_pairs = static_cast<std::size_t>(nonneg("maxPairs"));
  if (v.contains("enumLimit")) c.enum_limit = static_cast<std::size_t>(nonneg("enumLimit"));
  if (v.contains("seed")) c.seed = static_cast<std::uint64_t>(nonneg("seed"));
  try {
    c.validate();
  } catch (const ConfigurationError& e) {
    throw SpecError(p + ": " + e.what());
  }
  return c;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

QuadExt parse_number(std::string_view text) { return parse_quadext(text); }

std::vector<QuadExt> parse_schedule(std::string_view text) {
  std::vector<QuadExt> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_number(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

AnalysisSpec parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, offset);
    std::string msg = e.what();
    if (const auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg,
                     line, col);
  }
  allow_keys(root, "", {"domain", "function", "subsetB", "config"});
  DomainSpec d = domain(require(root, "", "domain"), "domain");
  FuncSpec f = function(require(root, "", "function"), "function");
  std::optional<DomainSpec> b;
  if (root.contains("subsetB")) b = domain(root["subsetB"], "subsetB");
  AnalysisConfig c = root.contains("config") ? config(root["config"]) : AnalysisConfig{};
  if (b) {
    const PointList pts = sample_points(*b, c.sampling());
    for (const auto& x : pts.points) {
      if (!contains(d, x)) {
        throw SpecError("subsetB is not contained in the domain: " + to_string(x) + " is missing from " + describe(d));
      }
    }
  }
  return AnalysisSpec{std::move(d), std::move(f), std::move(b), std::move(c), root.dump(2)};
}

}  // namespace symcont
