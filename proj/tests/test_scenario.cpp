// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/suites.hpp>

#include <doctest.h>

using namespace afock;
using nlohmann::json;

namespace {

json base_config() {
  return json::parse(R"({
    "name": "t",
    "labels": ["a", "b", "c"],
    "marginals": ["1/2", "1/3", "2/5"],
    "generators": [[["a", "b", "c"]]]
  })");
}

std::string error_of(const json& j) {
  try {
    (void)parse_scenario(j);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

// Pass/fail pattern of every asserted (non-recorded) check, in report order.
std::vector<std::pair<std::string, bool>> outcomes(const Report& r) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& s : r.suites) {
    out.emplace_back(s.suite, s.passed());
    for (const auto& a : s.assertions) {
      if (!a.recorded) out.emplace_back(a.reference + " " + a.parameters, a.pass);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("config parsing") {
  const Scenario s = parse_scenario(base_config());
  CHECK(s.labels.size() == 3);
  CHECK(s.marginals[2] == Rational(2, 5));
  CHECK(s.action().order() == 3);
  CHECK(s.suites.empty());
  const Scenario back = parse_scenario(to_json(s));
  CHECK(back.labels == s.labels);
  CHECK(back.marginals == s.marginals);
  CHECK(back.generators == s.generators);
  CHECK(back.seed == s.seed);
}

TEST_CASE("config validation names the field") {
  json j = base_config();
  j["marginals"][1] = "0/1";
  CHECK(error_of(j).find("marginals[1]") != std::string::npos);
  j = base_config();
  j["marginals"][0] = 0.5;
  CHECK(error_of(j).find("marginals[0]") != std::string::npos);
  j = base_config();
  j["marginals"].erase(2);
  CHECK(error_of(j).find("marginals") != std::string::npos);
  j = base_config();
  j["generators"] = json::parse(R"([[["a", "z"]]])");
  CHECK(error_of(j).find("generators") != std::string::npos);
  j = base_config();
  j["suites"] = json::array({"car", "bogus"});
  CHECK(error_of(j).find("bogus") != std::string::npos);
  j = base_config();
  j["tolerances"] = json::parse(R"({"car": -1})");
  CHECK(error_of(j).find("tolerances.car") != std::string::npos);
  j = base_config();
  j["samples"] = json::parse(R"({"nope": 3})");
  CHECK(error_of(j).find("samples.nope") != std::string::npos);
  j = base_config();
  j["labels"] = json::array({"a", "a", "b"});
  CHECK_FALSE(error_of(j).empty());
  CHECK_FALSE(error_of(json::array()).empty());
}

TEST_CASE("suite seeds differ across suites and follow the scenario seed") {
  CHECK(suite_seed(1, "car") != suite_seed(1, "wick"));
  CHECK(suite_seed(1, "car") != suite_seed(2, "car"));
  CHECK(suite_seed(1, "car") == suite_seed(1, "car"));
}

TEST_CASE("reports are deterministic given config and seed") {
  Scenario s = default_scenario();
  s.suites = {"car", "wick", "boundary", "kakutani"};
  RunOptions par;
  RunOptions ser;
  ser.parallel = false;
  const std::string a = run_scenario(s, par).to_json().dump();
  const std::string b = run_scenario(s, ser).to_json().dump();
  CHECK(a == b);
  s.seed += 1;
  CHECK(run_scenario(s, par).to_json().dump() != a);
}

TEST_CASE("every assertion appears once per run") {
  Scenario s = default_scenario();
  s.suites = {"tomita", "kakutani"};
  const Report r = run_scenario(s);
  REQUIRE(r.suites.size() == 2);
  CHECK(r.suites[0].suite == "tomita");
  CHECK(r.suites[1].suite == "kakutani");
  std::size_t n = 0;
  const json j = r.to_json();
  for (const auto& suite : j["suites"]) n += suite["assertions"].size();
  CHECK(n == r.suites[0].assertions.size() + r.suites[1].assertions.size());
}

TEST_CASE("permuted labels give identical outcomes") {
  Scenario s = default_scenario();
  s.suites = {"car", "quasifree", "tomita", "wick", "keylemma", "boundary", "kakutani"};
  const auto base = outcomes(run_scenario(s));
  for (const auto& order : std::vector<std::vector<std::size_t>>{{2, 0, 1}, {1, 0, 2}}) {
    const auto permuted = outcomes(run_scenario(permute_labels(s, order)));
    CHECK(permuted == base);
  }
  CHECK_THROWS_AS(permute_labels(s, {0, 0, 1}), InputError);
}

TEST_CASE("unknown suites and oversized models are input errors") {
  RunOptions o;
  o.suites = {"nosuch"};
  CHECK_THROWS_AS(run_scenario(default_scenario(), o), InputError);
  Scenario big;
  big.labels = {"a", "b", "c", "d", "e", "f", "g"};
  big.marginals = std::vector<Rational>(7, Rational(1, 3));
  big.suites = {"car"};
  CHECK_THROWS_AS(run_scenario(big), InputError);
  // The model-free suites still run at that size.
  big.suites = {"boundary", "kakutani"};
  CHECK(run_scenario(big).passed());
}

TEST_CASE("text report lists every suite") {
  Scenario s = default_scenario();
  s.suites = {"kakutani"};
  const std::string text = run_scenario(s).to_text();
  CHECK(text.find("[kakutani] PASS") != std::string::npos);
  CHECK(text.find("ALL PASS") != std::string::npos);
}
