#include <doctest.h>

#include "symcont/error.hpp"
#include "symcont/spec_io.hpp"
#include "symcont/zoo.hpp"

using namespace symcont;

namespace {

const char* kOddPrimes = R"({
  "domain": {"OddPrimeReciprocals": {"maxPrime": 1000, "withZero": true}},
  "function": {"Piecewise": [
    {"region": {"OddPrimeReciprocals": {"maxPrime": 1000, "withZero": false}}, "formula": {"Const": 1}},
    {"region": {"FinitePoints": [0]}, "formula": {"Const": "0"}}
  ]}
})";

std::string spec_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("a user spec reproduces the odd prime catalog entry") {
  const AnalysisSpec spec = parse_spec(kOddPrimes);
  const PaperExample ex = build_example("ex-2.5");
  CHECK(spec.domain == ex.subjects.front().domain);
  const auto mine = classify(spec.domain, spec.function, spec.config);
  const auto theirs = classify(ex.subjects.front().domain, ex.subjects.front().function, AnalysisConfig{});
  REQUIRE(mine.size() == theirs.size());
  for (std::size_t i = 0; i < mine.size(); ++i) CHECK(mine[i].status == theirs[i].status);
}

TEST_CASE("syntax errors report line and column") {
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  try {
    parse_spec("{\n  \"domain\": {\"IntegerWindow\": {\"lo\": 0, \"hi\": 3}},\n  \"function\" }");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("semantic errors explain themselves") {
  CHECK(spec_error(R"({"domain": {"IntegerWindow": {"lo": 0, "hi": 3}}, "function": "Identity", "extra": 1})")
            .find("extra") != std::string::npos);
  CHECK(spec_error(R"({"domain": {"IntegerWindow": {"lo": 0, "hi": 3, "step": 1}},
                       "function": {"Piecewise": [{"region": {"IntegerWindow": {"lo": 0, "hi": 3}}, "formula": "Identity"}]}})")
            .find("step") != std::string::npos);
  CHECK_FALSE(spec_error(R"({"domain": {"Circle": {}}, "function": {"Piecewise": []}})").empty());
  CHECK_FALSE(spec_error(R"({"domain": {"FinitePoints": ["1/0"]},
                             "function": {"Piecewise": [{"region": {"FinitePoints": [1]}, "formula": "Identity"}]}})")
                  .empty());
  CHECK_FALSE(spec_error(R"({"domain": {"FinitePoints": [1]},
                             "function": {"Piecewise": [{"region": {"FinitePoints": [1]}, "formula": "Identity"}]},
                             "config": {"deltaSchedule": ["1/2", "1"]}})")
                  .empty());
  CHECK(spec_error(R"({"domain": {"FinitePoints": [1]},
                       "function": {"Piecewise": [{"region": {"FinitePoints": [1]}, "formula": {"Monomial": 0}}]}})")
            .find("exponent") != std::string::npos);
}

TEST_CASE("a subset with a missing point is named") {
  // Three points with a hole at 1: B = {0, 1, 2} is not a subset.
  const std::string msg = spec_error(R"({
    "domain": {"FinitePoints": [0, 2, "1/2"]},
    "function": {"Piecewise": [{"region": {"FinitePoints": [0, 2, "1/2"]}, "formula": "Identity"}]},
    "subsetB": {"IntegerWindow": {"lo": 0, "hi": 2}}
  })");
  CHECK(msg.find("subsetB") != std::string::npos);
  CHECK(msg.find(" 1 ") != std::string::npos);
}

TEST_CASE("exact numbers and schedules") {
  CHECK(parse_number("1/2 + 1/2*sqrt2") == QuadExt(Rational(1, 2), Rational(1, 2)));
  CHECK(parse_schedule("1,1/2,1/4").size() == 3);
  CHECK_THROWS_AS(parse_schedule("1,,1/4"), SpecError);
}

TEST_CASE("canonical echo sorts keys") {
  const AnalysisSpec a = parse_spec(
      R"({"function": {"Piecewise": [{"formula": "Identity", "region": {"IntegerWindow": {"hi": 3, "lo": 0}}}]},
          "domain": {"IntegerWindow": {"hi": 3, "lo": 0}}})");
  const AnalysisSpec b = parse_spec(
      R"({"domain": {"IntegerWindow": {"lo": 0, "hi": 3}},
          "function": {"Piecewise": [{"region": {"IntegerWindow": {"lo": 0, "hi": 3}}, "formula": "Identity"}]}})");
  CHECK(a.canonical == b.canonical);
}
