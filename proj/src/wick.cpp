// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/wick.hpp>

#include <bit>
#include <cmath>
#include <functional>

namespace afock {

namespace {

void enumerate_rec(std::vector<int>& used, WickPartition& cur, std::vector<WickPartition>& out) {
  const std::size_t n = used.size();
  std::size_t i = 0;
  while (i < n && used[i]) ++i;
  if (i == n) {
    WickPartition w = cur;
    std::sort(w.singletons.begin(), w.singletons.end());
    out.push_back(std::move(w));
    return;
  }
  used[i] = 1;
  cur.singletons.push_back(i);
  enumerate_rec(used, cur, out);
  cur.singletons.pop_back();
  for (std::size_t j = i + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    cur.pairs.emplace_back(i, j);
    enumerate_rec(used, cur, out);
    cur.pairs.pop_back();
    used[j] = 0;
  }
  used[i] = 0;
}

double factorial(std::size_t m) { return std::tgamma(static_cast<double>(m) + 1.0); }

}  // namespace

std::vector<WickPartition> enumerate_partitions(std::size_t n) {
  std::vector<WickPartition> out;
  std::vector<int> used(n, 0);
  WickPartition cur;
  enumerate_rec(used, cur, out);
  return out;
}

std::size_t crossing_count(const WickPartition& w) {
  std::size_t c = 0;
  for (const auto& [i, j] : w.pairs) {
    for (const auto& [k, l] : w.pairs) {
      if (i < k && k < j && j < l) ++c;
    }
    for (std::size_t p : w.singletons) {
      if (i < p && p < j) ++c;
    }
  }
  return c;
}

std::string to_string(WickNormalization n) {
  return n == WickNormalization::sqrt_factorial ? "sqrt(m!)" : "1/sqrt(m!)";
}

double wick_coefficient(const WickPartition& w, WickNormalization n) {
  const double sign = (crossing_count(w) % 2) ? -1.0 : 1.0;
  const double f = std::sqrt(factorial(w.singletons.size()));
  return n == WickNormalization::sqrt_factorial ? sign * f : sign / f;
}

// ---------------------------------------------------------------------------

WickCalculus::WickCalculus(const CarAlgebra& car) : car_(&car), basis_(car) {}

std::vector<Vector> WickCalculus::deltas(std::span<const Element> xs) const {
  const auto n = static_cast<Eigen::Index>(car_->index().size());
  std::vector<Vector> out;
  for (Element x : xs) {
    if (x >= static_cast<Element>(n)) throw InputError("wick: label out of range");
    Vector v = Vector::Zero(n);
    v[x] = 1.0;
    out.push_back(std::move(v));
  }
  return out;
}

FockOperator WickCalculus::wick_word(std::span<const Vector> xs) const {
  std::vector<Vector> hats;
  hats.reserve(xs.size());
  for (const auto& x : xs) hats.push_back(car_->rep().hat(x));
  const Vector target = car_->fock().to_dense(wedge(hats));
  return FockOperator(basis_.assemble(basis_.coefficients(target)));
}

FockOperator WickCalculus::wick_word(std::span<const Element> xs) const {
  const auto d = deltas(xs);
  return wick_word(std::span<const Vector>(d));
}

cplx WickCalculus::pairing(const Vector& xi_i, const Vector& xi_j) const {
  const auto& rep = car_->rep();
  return AlmostPeriodicRep::inner(rep.hat(xi_j), rep.hat(rep.involution(xi_i)));
}

FockOperator WickCalculus::field_product(std::span<const Vector> xs) const {
  const Eigen::Index dim = car_->dimension();
  Matrix acc = Matrix::Identity(dim, dim);
  for (const auto& x : xs) acc = acc * car_->field(x).matrix();
  return FockOperator(std::move(acc));
}

FockOperator WickCalculus::expansion(std::span<const Vector> xs, WickNormalization n) const {
  const Eigen::Index dim = car_->dimension();
  std::map<std::vector<std::size_t>, FockOperator> words;
  FockOperator acc = FockOperator::zero(dim);
  for (const auto& w : enumerate_partitions(xs.size())) {
    cplx factor = wick_coefficient(w, n);
    for (const auto& [i, j] : w.pairs) factor *= pairing(xs[i], xs[j]);
    if (factor == cplx{}) continue;
    auto it = words.find(w.singletons);
    if (it == words.end()) {
      std::vector<Vector> sub;
      for (std::size_t p : w.singletons) sub.push_back(xs[p]);
      it = words.emplace(w.singletons, wick_word(std::span<const Vector>(sub))).first;
    }
    acc += factor * it->second;
  }
  return acc;
}

WickExpansion WickCalculus::expand(std::span<const Vector> xs, double tol) const {
  const FockOperator product = field_product(xs);
  const FockOperator a = expansion(xs, WickNormalization::inverse_sqrt_factorial);
  const FockOperator b = expansion(xs, WickNormalization::sqrt_factorial);
  WickExpansion out;
  out.partitions = enumerate_partitions(xs.size()).size();
  out.residual_inverse_sqrt = distance(product, a);
  out.residual_sqrt = distance(product, b);
  const bool ok_a = out.residual_inverse_sqrt < tol;
  const bool ok_b = out.residual_sqrt < tol;
  if (distance(a, b) < tol) {
    out.coincide = true;
    if (!ok_a) throw VerificationError("wick: expansion does not reproduce the field product");
    return out;
  }
  if (ok_a == ok_b) {
    throw VerificationError(ok_a ? "wick: both normalisations match although they differ"
                                 : "wick: neither normalisation reproduces the field product");
  }
  out.winner = ok_b ? WickNormalization::sqrt_factorial : WickNormalization::inverse_sqrt_factorial;
  return out;
}

WickExpansion WickCalculus::expand(std::span<const Element> xs, double tol) const {
  const auto d = deltas(xs);
  return expand(std::span<const Vector>(d), tol);
}

FockOperator WickCalculus::recursive_sub(std::span<const Vector> xs, std::uint64_t subset, WickNormalization n,
                                         std::map<std::uint64_t, FockOperator>& memo) const {
  if (auto it = memo.find(subset); it != memo.end()) return it->second;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (subset >> i & 1u) pos.push_back(i);
  }
  std::vector<Vector> sub;
  for (std::size_t p : pos) sub.push_back(xs[p]);
  FockOperator rest = field_product(sub);
  double top = 1.0;
  for (const auto& w : enumerate_partitions(pos.size())) {
    if (w.pairs.empty()) {
      top = wick_coefficient(w, n);
      continue;
    }
    cplx factor = wick_coefficient(w, n);
    for (const auto& [i, j] : w.pairs) factor *= pairing(sub[i], sub[j]);
    if (factor == cplx{}) continue;
    std::uint64_t s = 0;
    for (std::size_t p : w.singletons) s |= std::uint64_t{1} << pos[p];
    rest -= factor * recursive_sub(xs, s, n, memo);
  }
  FockOperator out = cplx(1.0 / top) * rest;
  memo.emplace(subset, out);
  return out;
}

FockOperator WickCalculus::wick_word_recursive(std::span<const Vector> xs, WickNormalization n) const {
  if (xs.size() > 20) throw InputError("wick: tuple too long");
  std::map<std::uint64_t, FockOperator> memo;
  const std::uint64_t all = (xs.size() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << xs.size()) - 1);
  return recursive_sub(xs, all, n, memo);
}

}  // namespace afock
