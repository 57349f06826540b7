// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/slater.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace afock {

SlaterIndex::SlaterIndex(std::vector<Element> sorted) : elems_(std::move(sorted)) {
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (elems_[i - 1] >= elems_[i]) throw InputError("slater index: not strictly increasing");
  }
}

SlaterIndex SlaterIndex::from_unsorted(std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw InputError("slater index: repeated element");
  }
  SlaterIndex s;
  s.elems_ = std::move(elems);
  return s;
}

SlaterIndex SlaterIndex::from_mask(std::uint64_t mask) {
  SlaterIndex s;
  for (Element i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) s.elems_.push_back(i);
  }
  return s;
}

bool SlaterIndex::contains(Element x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t SlaterIndex::count_below(Element x) const noexcept {
  return static_cast<std::size_t>(std::lower_bound(elems_.begin(), elems_.end(), x) - elems_.begin());
}

std::size_t SlaterIndex::count_above(Element x) const noexcept {
  return static_cast<std::size_t>(elems_.end() - std::upper_bound(elems_.begin(), elems_.end(), x));
}

SlaterIndex SlaterIndex::with(Element x) const {
  auto pos = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (pos != elems_.end() && *pos == x) throw InputError("slater index: element already present");
  SlaterIndex s;
  s.elems_.reserve(elems_.size() + 1);
  s.elems_.insert(s.elems_.end(), elems_.begin(), pos);
  s.elems_.push_back(x);
  s.elems_.insert(s.elems_.end(), pos, elems_.end());
  return s;
}

SlaterIndex SlaterIndex::without(Element x) const {
  auto pos = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (pos == elems_.end() || *pos != x) throw InputError("slater index: element absent");
  SlaterIndex s;
  s.elems_.reserve(elems_.size() - 1);
  s.elems_.insert(s.elems_.end(), elems_.begin(), pos);
  s.elems_.insert(s.elems_.end(), pos + 1, elems_.end());
  return s;
}

bool SlaterIndex::includes(const SlaterIndex& sub) const noexcept {
  return std::includes(elems_.begin(), elems_.end(), sub.elems_.begin(), sub.elems_.end());
}

std::uint64_t SlaterIndex::mask() const {
  std::uint64_t m = 0;
  for (Element x : elems_) {
    if (x >= 64) throw InputError("slater index: element too large for a bitmask");
    m |= std::uint64_t{1} << x;
  }
  return m;
}

// ---------------------------------------------------------------------------

FockVector FockVector::basis(const SlaterIndex& s, cplx c) {
  FockVector v;
  v.terms_.emplace(s, c);
  return v;
}

void FockVector::add(const SlaterIndex& s, cplx c) {
  if (c == cplx{}) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) terms_.erase(it);
  }
}

cplx FockVector::coefficient(const SlaterIndex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{} : it->second;
}

double FockVector::norm() const {
  double acc = 0.0;
  for (const auto& [s, c] : terms_) acc += std::norm(c);
  return std::sqrt(acc);
}

double FockVector::max_abs() const {
  double m = 0.0;
  for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

cplx FockVector::inner(const FockVector& other) const {
  cplx acc{};
  for (const auto& [s, c] : terms_) acc += c * std::conj(other.coefficient(s));
  return acc;
}

void FockVector::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FockVector& FockVector::operator*=(cplx c) {
  if (c == cplx{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

// ---------------------------------------------------------------------------

int sorting_sign(std::span<const Element> seq) {
  // Inversion parity; tuples here are short.
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) throw InputError("sorting_sign: repeated element");
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

namespace {

double sqrt_factorial(std::size_t n) {
  return std::sqrt(std::tgamma(static_cast<double>(n) + 1.0));
}

}  // namespace

FockVector wedge(std::span<const Vector> xs) {
  const std::size_t n = xs.size();
  if (n == 0) return FockVector::vacuum();
  const auto dim = xs.front().size();
  std::set<Element> support;
  for (const auto& v : xs) {
    if (v.size() != dim) throw InputError("wedge: vectors of different length");
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (v[i] != cplx{}) support.insert(static_cast<Element>(i));
    }
  }
  std::vector<Element> supp(support.begin(), support.end());
  FockVector out;
  if (supp.size() < n) return out;

  double combos = 1.0;
  for (std::size_t i = 0; i < n; ++i) combos *= static_cast<double>(supp.size() - i) / static_cast<double>(i + 1);
  if (combos > 2e6) throw InputError("wedge: support too large to expand");

  const double norm = 1.0 / sqrt_factorial(n);
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  Matrix minor(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  while (true) {
    std::vector<Element> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = supp[pick[j]];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        minor(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = xs[i][s[j]];
      }
    }
    const cplx det = (n == 1) ? minor(0, 0) : minor.determinant();
    if (det != cplx{}) out.add(SlaterIndex(std::move(s)), det * norm);

    // Next combination in lexicographic order.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == supp.size() - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

FockVector wedge_deltas(std::span<const Element> xs) {
  std::vector<Element> seq(xs.begin(), xs.end());
  std::vector<Element> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  const double c = sorting_sign(seq) / sqrt_factorial(seq.size());
  return FockVector::basis(SlaterIndex(std::move(sorted)), c);
}

}  // namespace afock
