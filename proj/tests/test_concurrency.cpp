#include <doctest.h>

#include <future>
#include <random>

#include "random_cases.hpp"
#include "symcont/report.hpp"

using namespace symcont;

TEST_CASE("parallel and serial zoo runs assemble identical tables") {
  ZooBudget serial;
  serial.parallel = false;
  ZooBudget parallel;
  const std::vector<std::string> ids{"ex-2.4", "ex-2.5", "ex-3.2", "ex-3.6", "ex-3.9", "ex-4.3"};
  Report a, b;
  a.command = b.command = "zoo";
  a.zoo = run_all(serial, ids);
  b.zoo = run_all(parallel, ids);
  CHECK(render_json(a) == render_json(b));
}

TEST_CASE("concurrent classifications agree with sequential ones") {
  std::mt19937_64 rng(17);
  std::vector<cases::FiniteCase> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(cases::random_finite(rng, 30));
  const auto signature = [](const cases::FiniteCase& c) {
    std::string s;
    for (const auto& v : classify(c.domain, c.function, AnalysisConfig{})) s += to_string(v.status) + ";";
    s += to_string(sym_oscillation(c.domain, c.domain, c.function, QuadExt(1), AnalysisConfig{}).oscillation);
    return s;
  };
  std::vector<std::string> expected;
  for (const auto& c : inputs) expected.push_back(signature(c));
  std::vector<std::future<std::string>> futures;
  for (const auto& c : inputs) futures.push_back(std::async(std::launch::async, signature, std::cref(c)));
  for (std::size_t i = 0; i < futures.size(); ++i) CHECK(futures[i].get() == expected[i]);
}
