// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file suites.hpp
 * @brief The verification suites behind `verify run`.
 *
 * Suites that need the Fock model share one BernoulliModel, built before the
 * suites start; boundary and kakutani work on the index set alone and so scale
 * to large X.
 */

#pragma once

#include <afock/report.hpp>

#include <memory>
#include <string>
#include <vector>

namespace afock {

/// Per-suite seed derived from the scenario seed and the suite name.
std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite);

[[nodiscard]] bool suite_needs_model(const std::string& suite);

SuiteResult run_car(const Scenario& s, const BernoulliModel& model, std::uint64_t seed);
SuiteResult run_quasifree(const Scenario& s, const BernoulliModel& model, std::uint64_t seed);
SuiteResult run_tomita(const Scenario& s, const BernoulliModel& model, std::uint64_t seed);
SuiteResult run_wick(const Scenario& s, const BernoulliModel& model, std::uint64_t seed);
SuiteResult run_keylemma(const Scenario& s, const BernoulliModel& model, std::uint64_t seed);
SuiteResult run_crossed(const Scenario& s, const BernoulliModel& model, std::uint64_t seed);
SuiteResult run_boundary(const Scenario& s, std::uint64_t seed);
SuiteResult run_kakutani(const Scenario& s, std::uint64_t seed);

struct RunOptions {
  std::vector<std::string> suites;  ///< empty = scenario selection
  bool parallel = true;
  bool verbose = false;             ///< per-suite timings on stderr
};

/// Builds the model if any selected suite needs it (InputError propagates), runs the
/// suites concurrently and assembles the report in canonical suite order.
Report run_scenario(const Scenario& s, const RunOptions& opts = {});

}  // namespace afock
