// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/report.hpp>

#include <boost/version.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace afock {

using nlohmann::json;

Assertion& SuiteResult::check(std::string reference, std::string parameters, double value, double bound,
                              std::string note) {
  Assertion a;
  a.reference = std::move(reference);
  a.parameters = std::move(parameters);
  a.value = value;
  a.bound = bound;
  a.pass = std::isfinite(value) && value <= bound;
  a.note = std::move(note);
  assertions.push_back(std::move(a));
  return assertions.back();
}

Assertion& SuiteResult::require(std::string reference, std::string parameters, bool ok, std::string note) {
  Assertion& a = check(std::move(reference), std::move(parameters), ok ? 0.0 : 1.0, 0.0, std::move(note));
  a.value = ok ? 1.0 : 0.0;
  a.bound = 1.0;
  return a;
}

Assertion& SuiteResult::record(std::string reference, std::string parameters, double value, double bound,
                               std::string note) {
  Assertion& a = check(std::move(reference), std::move(parameters), value, bound, std::move(note));
  a.recorded = true;
  return a;
}

bool SuiteResult::passed() const { return error.empty() && failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& a : assertions) n += (!a.recorded && !a.pass) ? 1 : 0;
  return n;
}

bool Report::passed() const {
  for (const auto& s : suites) {
    if (!s.passed()) return false;
  }
  return true;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

json environment_metadata() {
  json e;
#if defined(__clang__)
  e["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  e["compiler"] = "gcc " + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__) + "." +
                  std::to_string(__GNUC_PATCHLEVEL__);
#else
  e["compiler"] = "unknown";
#endif
  e["cxx_standard"] = static_cast<long>(__cplusplus);
  e["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
               std::to_string(EIGEN_MINOR_VERSION);
  e["boost"] = std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000);
#ifdef NDEBUG
  e["build"] = "release";
#else
  e["build"] = "debug";
#endif
  return e;
}

json Report::to_json() const {
  json j;
  j["scenario"] = afock::to_json(scenario);
  j["seed"] = scenario.seed;
  j["environment"] = environment_metadata();
  j["passed"] = passed();
  json arr = json::array();
  for (const auto& s : suites) {
    json sj;
    sj["suite"] = s.suite;
    sj["passed"] = s.passed();
    if (!s.error.empty()) sj["error"] = s.error;
    json as = json::array();
    for (const auto& a : s.assertions) {
      json aj;
      aj["reference"] = a.reference;
      aj["parameters"] = a.parameters;
      aj["value"] = a.value;
      aj["bound"] = a.bound;
      aj["pass"] = a.pass;
      if (a.recorded) aj["recorded_only"] = true;
      if (!a.note.empty()) aj["note"] = a.note;
      as.push_back(std::move(aj));
    }
    sj["assertions"] = std::move(as);
    sj["records"] = s.records;
    arr.push_back(std::move(sj));
  }
  j["suites"] = std::move(arr);
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "scenario " << scenario.name << "  seed " << scenario.seed << "\n";
  out << "X0 = {";
  for (std::size_t i = 0; i < scenario.labels.size(); ++i) {
    out << (i ? ", " : "") << scenario.labels[i] << ":" << afock::to_string(scenario.marginals[i]);
  }
  out << "}\n\n";
  for (const auto& s : suites) {
    out << "[" << s.suite << "] " << (s.passed() ? "PASS" : "FAIL") << "\n";
    if (!s.error.empty()) out << "  aborted: " << s.error << "\n";
    for (const auto& a : s.assertions) {
      const char* tag = a.recorded ? "info" : (a.pass ? "ok  " : "FAIL");
      out << "  " << tag << "  " << a.reference << "  " << a.parameters << "  " << format_number(a.value)
          << " <= " << format_number(a.bound);
      if (!a.note.empty()) out << "  (" << a.note << ")";
      out << "\n";
    }
    for (const auto& [key, value] : s.records.items()) {
      if (value.is_primitive()) out << "  record " << key << " = " << value.dump() << "\n";
    }
    out << "\n";
  }
  out << (passed() ? "ALL PASS" : "FAILURES") << "\n";
  return out.str();
}

void Report::write(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "report.json") << to_json().dump(2) << "\n";
  std::ofstream(dir / "report.txt") << to_text();
}

}  // namespace afock
