// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/index_set.hpp>

#include <algorithm>
#include <set>

namespace afock {

IndexSet::IndexSet(std::vector<std::string> base_labels) : base_(std::move(base_labels)) {
  if (base_.empty()) throw InputError("index set: need at least one base label");
  std::set<std::string> seen;
  for (const auto& l : base_) {
    if (l.empty()) throw InputError("index set: empty label");
    if (l.front() == 'I') throw InputError("index set: base label may not start with 'I': " + l);
    if (!seen.insert(l).second) throw InputError("index set: duplicate label " + l);
  }
}

IndexSet IndexSet::numbered(std::size_t k) {
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return IndexSet(std::move(labels));
}

Element IndexSet::partner(Element x) const {
  if (x >= size()) throw InputError("index set: element out of range");
  const auto k = static_cast<Element>(base_.size());
  return x < k ? x + k : x - k;
}

std::string IndexSet::label(Element x) const {
  if (x >= size()) throw InputError("index set: element out of range");
  return is_base(x) ? base_[x] : "I" + base_[x - base_.size()];
}

Element IndexSet::base_index(std::string_view label) const {
  auto it = std::find(base_.begin(), base_.end(), label);
  if (it == base_.end()) throw InputError("unknown label: " + std::string(label));
  return static_cast<Element>(it - base_.begin());
}

Element IndexSet::index_of(std::string_view label) const {
  auto it = std::find(base_.begin(), base_.end(), label);
  if (it != base_.end()) return static_cast<Element>(it - base_.begin());
  if (!label.empty() && label.front() == 'I') {
    return partner(base_index(label.substr(1)));
  }
  throw InputError("unknown label: " + std::string(label));
}

}  // namespace afock
