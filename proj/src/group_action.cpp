// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/group_action.hpp>

#include <algorithm>
#include <deque>

namespace afock {

namespace {

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
  return out;
}

void validate(const Permutation& p, std::size_t k) {
  if (p.size() != k) throw InputError("group action: generator has wrong length");
  std::vector<bool> hit(k, false);
  for (Element y : p) {
    if (y >= k || hit[y]) throw InputError("group action: generator is not a permutation of X0");
    hit[y] = true;
  }
}

}  // namespace

GroupAction::GroupAction(IndexSet index, std::vector<Permutation> generators, std::size_t max_order)
    : index_(std::move(index)) {
  const std::size_t k = index_.base_size();
  Permutation id(k);
  for (std::size_t x = 0; x < k; ++x) id[x] = static_cast<Element>(x);
  for (const auto& g : generators) validate(g, k);

  elements_.push_back(id);
  lookup_.emplace(id, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(g, elements_[cur]);
      if (lookup_.count(next)) continue;
      if (elements_.size() >= max_order) throw InputError("group action: group order exceeds the cap");
      lookup_.emplace(next, elements_.size());
      queue.push_back(elements_.size());
      elements_.push_back(std::move(next));
    }
  }

  const std::size_t n = elements_.size();
  mult_.assign(n, std::vector<std::size_t>(n));
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = lookup_.at(compose(elements_[a], elements_[b]));
      mult_[a][b] = ab;
      if (ab == 0) inv_[a] = b;
    }
  }
  for (const auto& g : generators) {
    const std::size_t i = lookup_.at(g);
    if (i != 0 && std::find(gens_.begin(), gens_.end(), i) == gens_.end()) gens_.push_back(i);
  }
}

GroupAction GroupAction::from_cycles(IndexSet index,
                                     const std::vector<std::vector<std::vector<std::string>>>& gens,
                                     std::size_t max_order) {
  const std::size_t k = index.base_size();
  std::vector<Permutation> perms;
  for (const auto& cycles : gens) {
    Permutation p(k);
    for (std::size_t x = 0; x < k; ++x) p[x] = static_cast<Element>(x);
    // Cycles compose right to left, as in (a b)(b c).
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      const auto& cyc = *it;
      std::vector<Element> ids;
      for (const auto& l : cyc) ids.push_back(index.base_index(l));
      auto sorted = ids;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("group action: repeated label inside a cycle");
      }
      Permutation c(k);
      for (std::size_t x = 0; x < k; ++x) c[x] = static_cast<Element>(x);
      for (std::size_t i = 0; i < ids.size(); ++i) c[ids[i]] = ids[(i + 1) % ids.size()];
      p = compose(c, p);
    }
    perms.push_back(std::move(p));
  }
  return GroupAction(std::move(index), std::move(perms), max_order);
}

Permutation GroupAction::on_full(std::size_t g) const {
  const auto& p = element(g);
  const std::size_t k = p.size();
  Permutation out(2 * k);
  for (std::size_t x = 0; x < k; ++x) {
    out[x] = p[x];
    out[x + k] = static_cast<Element>(p[x] + k);
  }
  return out;
}

Element GroupAction::act(std::size_t g, Element x) const {
  const auto& p = element(g);
  const auto k = static_cast<Element>(p.size());
  if (x >= 2 * k) throw InputError("group action: element out of range");
  return x < k ? p[x] : p[x - k] + k;
}

std::size_t GroupAction::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) throw InputError("group action: permutation is not in the group");
  return it->second;
}

std::string GroupAction::describe(std::size_t g) const {
  const auto& p = element(g);
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += "(";
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += " ";
      out += index_.label(static_cast<Element>(y));
      first = false;
      y = p[y];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace afock
