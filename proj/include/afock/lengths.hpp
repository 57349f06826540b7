// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lengths.hpp
 * @brief Proper length functions on a finite permutation group and on X.
 *
 * |g|_G is the word length of gN in G/N, N the kernel of the action on X0,
 * over a symmetric generating set. |x|_X is the least word length of an h
 * carrying the orbit representative to x, and |Ix|_X := |x|_X.
 */

#pragma once

#include <afock/group_action.hpp>

#include <cstdint>
#include <vector>

namespace afock {

struct LengthPair {
  std::vector<std::int64_t> site;   ///< |x|_X for x ∈ X (size 2|X0|)
  std::vector<std::int64_t> group;  ///< |g|_G per group element index
  std::vector<std::int64_t> word;   ///< raw word length per group element
  std::vector<Element> orbit_rep;   ///< representative of the orbit of each base label
  std::vector<std::size_t> kernel;  ///< element indices acting trivially

  [[nodiscard]] std::int64_t of_site(Element x) const { return site.at(x); }
  [[nodiscard]] std::int64_t of_group(std::size_t g) const { return group.at(g); }
};

struct LengthAxiomReport {
  bool kernel = true;       ///< |g| = 0 ⇔ g ∈ N
  bool subadditive = true;  ///< |gh| ≤ |g| + |h|
  bool symmetric = true;    ///< |g⁻¹| = |g|
  bool proper = true;       ///< sublevel counts finite and monotone
  bool action = true;       ///< |g·x| ≤ |g| + |x|
  [[nodiscard]] bool all() const { return kernel && subadditive && symmetric && proper && action; }
};

/// Uses the action's own generators; see the overload for an explicit set.
LengthPair build_lengths(const GroupAction& action);
/// Generators as element indices; inverses are added. Throws if they do not generate.
LengthPair build_lengths(const GroupAction& action, const std::vector<std::size_t>& generators);

LengthAxiomReport check_length_axioms(const GroupAction& action, const LengthPair& lengths);

/// max over orbits i of min_{λ ∈ Stab(rep_i)} wordlen(gλ). Not a length function in
/// general (fails |g·x| ≤ |g| + |x| already on S3); kept to exhibit that.
std::vector<std::int64_t> stabilizer_max_lengths(const GroupAction& action, const LengthPair& lengths);

}  // namespace afock
