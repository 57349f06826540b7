// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief Assertion records and the JSON / plain-text verification report.
 */

#pragma once

#include <afock/scenario.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace afock {

struct Assertion {
  std::string reference;   ///< stable dotted id, e.g. "keylemma.decomposition"
  std::string parameters;  ///< what was tested, human readable
  double value = 0.0;      ///< residual or defect
  double bound = 0.0;      ///< tolerance or proven bound
  bool pass = false;
  bool recorded = false;   ///< diagnostic only; never affects the exit code
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<Assertion> assertions;
  nlohmann::json records = nlohmann::json::object();  ///< resolution records and tables
  std::string error;  ///< set when the suite aborted

  /// value ≤ bound is a pass. Returns the stored assertion.
  Assertion& check(std::string reference, std::string parameters, double value, double bound, std::string note = {});
  /// Boolean assertion, value 1/0 against bound 1.
  Assertion& require(std::string reference, std::string parameters, bool ok, std::string note = {});
  /// Diagnostic; pass is filled in but ignored.
  Assertion& record(std::string reference, std::string parameters, double value, double bound, std::string note = {});

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t failures() const;
};

struct Report {
  Scenario scenario;
  std::vector<SuiteResult> suites;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] std::string to_text() const;
  /// report.json and report.txt.
  void write(const std::filesystem::path& dir) const;
};

/// Compiler, library and build information; no timestamps, so reports stay reproducible.
nlohmann::json environment_metadata();

/// Fixed-width scientific formatting used in both report formats.
std::string format_number(double v);

}  // namespace afock
