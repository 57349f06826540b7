// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file kakutani.hpp
 * @brief Finite-window diagnostics for infinite product measures:
 *        Kakutani's sum for one group element and the atomless sum.
 */

#pragma once

#include <afock/rational.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace afock {

/// Marginals p_i on an explicit finite table of integer indices.
struct MarginalTable {
  std::map<std::int64_t, Rational> p;
  /// Summation order; the first n entries form the window of size n.
  std::vector<std::int64_t> order;

  void set(std::int64_t i, Rational value);
};

struct PartialSum {
  double value = 0.0;
  std::size_t terms = 0;      ///< summed
  std::size_t truncated = 0;  ///< skipped, translated index outside the table
};

/// Σ_{i in window} (√p_i − √p_{g·i})² + (√q_i − √q_{g·i})².
PartialSum kakutani_partial_sum(const std::function<std::int64_t(std::int64_t)>& g, const MarginalTable& table,
                                std::size_t window);

/// Σ_{i in window} min(p_i, q_i).
PartialSum atomless_partial_sum(const MarginalTable& table, std::size_t window);

}  // namespace afock
