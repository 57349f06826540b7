// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file index_set.hpp
 * @brief The doubled index set X = X0 ⊔ IX0 with its involution.
 *
 * Base labels occupy 0..k-1 and their mirrors k..2k-1, so I(x) = (x+k) mod 2k.
 * Mirror labels print as "I" + base label.
 */

#pragma once

#include <afock/common.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace afock {

class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::string> base_labels);

  /// Labels "0", "1", ..., "k-1".
  static IndexSet numbered(std::size_t k);

  [[nodiscard]] std::size_t base_size() const noexcept { return base_.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return 2 * base_.size(); }

  [[nodiscard]] Element partner(Element x) const;
  [[nodiscard]] bool is_base(Element x) const noexcept { return x < base_.size(); }
  /// Base label of x or of its partner.
  [[nodiscard]] Element base_of(Element x) const { return is_base(x) ? x : partner(x); }

  [[nodiscard]] std::string label(Element x) const;
  [[nodiscard]] const std::vector<std::string>& base_labels() const noexcept { return base_; }

  /// Accepts both base labels and "I"-prefixed mirrors.
  [[nodiscard]] Element index_of(std::string_view label) const;
  /// Only base labels.
  [[nodiscard]] Element base_index(std::string_view label) const;

  bool operator==(const IndexSet& o) const = default;

 private:
  std::vector<std::string> base_;
};

}  // namespace afock
