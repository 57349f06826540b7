// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scenario.hpp
 * @brief Verification scenario: the finite Bernoulli system plus suite
 *        selection, tolerances, sample counts and caps, read from JSON.
 */

#pragma once

#include <afock/bernoulli.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace afock {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"car",      "quasifree", "tomita",  "wick",
                                              "boundary", "keylemma",  "crossed", "kakutani"};
  return names;
}

struct Tolerances {
  double car = 1e-10;
  double moment = 1e-8;
  double tomita = 1e-8;
  double wick = 1e-8;
  double rn_state = 1e-10;     ///< φ∘α_g⁻¹ = φ(·h_g) on monomials
  double rn_normalisation = 1e-12;
  double cocycle = 1e-9;
  double unitary = 1e-9;
  double multiplicative = 1e-8;
  double commutes_j = 1e-9;
  double permutation = 1e-10;
  double key_max = 1e-8;
  double key_spectral = 1e-7;
  double resolution = 1e-12;
  double vanishing = 1e-8;
  double sharpness = 1e-3;     ///< probe threshold, recorded only
  double crossed = 1e-10;
  double membership = 1e-8;
};

struct SampleCounts {
  std::size_t moments = 200;
  std::size_t moment_degree = 3;
  std::size_t tomita = 100;
  std::size_t wick_tuples = 50;
  std::size_t wick_n = 5;
  std::size_t boundary = 1000;
  std::size_t boundary_max_z = 50;
  std::size_t commutation = 64;
  std::size_t alpha_products = 16;
  std::size_t zf = 16;
};

struct Caps {
  Eigen::Index crossed_dimension = 4096;
  std::size_t group_order = 720;
  std::size_t rank_budget = std::size_t{1} << 26;
  std::size_t kakutani_window = 0;  ///< 0 = whole table
};

struct Scenario {
  std::string name = "scenario";
  std::vector<std::string> labels;
  std::vector<Rational> marginals;
  std::vector<std::vector<std::vector<std::string>>> generators;  ///< each generator as label cycles
  std::uint64_t seed = 20261014;
  std::set<std::string> suites;  ///< empty = all
  Tolerances tol;
  SampleCounts samples;
  Caps caps;

  [[nodiscard]] bool selected(const std::string& suite) const { return suites.empty() || suites.count(suite) > 0; }
  [[nodiscard]] IndexSet index() const { return IndexSet(labels); }
  [[nodiscard]] GroupAction action() const;
  [[nodiscard]] BernoulliSystem system() const;
};

/// Throws InputError with a message naming the offending field.
Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);
nlohmann::json to_json(const Scenario& s);

/// |X0| = 3, p = (1/2, 1/3, 2/5), G generated by the 3-cycle.
Scenario default_scenario();

/// Reorders X0: position i of the result holds label order[i] of s, with its marginal.
/// Generators are given by label and carry over unchanged.
Scenario permute_labels(const Scenario& s, const std::vector<std::size_t>& order);

}  // namespace afock
