// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file group_action.hpp
 * @brief Finite permutation groups on X0, extended diagonally to X.
 *
 * Elements are enumerated breadth-first from the identity over the generators,
 * so element 0 is always e and the order is deterministic.
 */

#pragma once

#include <afock/index_set.hpp>

#include <map>
#include <string>
#include <vector>

namespace afock {

/// image[x] = g·x on X0.
using Permutation = std::vector<Element>;

class GroupAction {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 720;

  GroupAction() = default;
  GroupAction(IndexSet index, std::vector<Permutation> generators, std::size_t max_order = kDefaultMaxOrder);

  /// Each generator is a product of disjoint (or not) cycles of base labels.
  static GroupAction from_cycles(IndexSet index, const std::vector<std::vector<std::vector<std::string>>>& gens,
                                 std::size_t max_order = kDefaultMaxOrder);
  static GroupAction trivial(IndexSet index) { return GroupAction(std::move(index), {}); }

  [[nodiscard]] const IndexSet& index() const noexcept { return index_; }
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] std::size_t identity() const noexcept { return 0; }
  [[nodiscard]] const Permutation& element(std::size_t g) const { return elements_.at(g); }
  /// g on X = X0 ⊔ IX0, commuting with I.
  [[nodiscard]] Permutation on_full(std::size_t g) const;
  [[nodiscard]] Element act(std::size_t g, Element x) const;

  /// Index of g·h (apply h first).
  [[nodiscard]] std::size_t multiply(std::size_t g, std::size_t h) const { return mult_.at(g).at(h); }
  [[nodiscard]] std::size_t inverse(std::size_t g) const { return inv_.at(g); }
  /// Element indices of the given generators (deduplicated, identity dropped).
  [[nodiscard]] const std::vector<std::size_t>& generators() const noexcept { return gens_; }
  [[nodiscard]] std::size_t index_of(const Permutation& p) const;

  /// Cycle notation over labels, "e" for the identity.
  [[nodiscard]] std::string describe(std::size_t g) const;

 private:
  IndexSet index_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> lookup_;
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> gens_;
};

}  // namespace afock
