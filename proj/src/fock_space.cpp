// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/fock_space.hpp>

#include <bit>

namespace afock {

namespace {

SparseMatrix build_creator(std::size_t sites, Element x, bool left) {
  const Eigen::Index dim = Eigen::Index{1} << sites;
  const std::uint64_t bit = std::uint64_t{1} << x;
  const std::uint64_t below = bit - 1;
  const std::uint64_t above = ((std::uint64_t{1} << sites) - 1) & ~(below | bit);
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(dim / 2));
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(dim); ++s) {
    if (s & bit) continue;
    const int n = std::popcount(s & (left ? below : above));
    trips.emplace_back(static_cast<Eigen::Index>(s | bit), static_cast<Eigen::Index>(s), (n % 2) ? -1.0 : 1.0);
  }
  SparseMatrix m(dim, dim);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

}  // namespace

FockSpace::FockSpace(IndexSet index) : index_(std::move(index)) {
  const std::size_t n = index_.size();
  if (n > kMaxSites) throw InputError("fock space: |X| too large for a dense space");
  dim_ = Eigen::Index{1} << n;
  left_.reserve(n);
  right_.reserve(n);
  for (Element x = 0; x < n; ++x) {
    left_.push_back(build_creator(n, x, true));
    right_.push_back(build_creator(n, x, false));
  }
}

void FockSpace::check_site(Element x) const {
  if (x >= sites()) throw InputError("fock space: label out of range");
}

const SparseMatrix& FockSpace::left_creator(Element x) const {
  check_site(x);
  return left_[x];
}

const SparseMatrix& FockSpace::right_creator(Element x) const {
  check_site(x);
  return right_[x];
}

FockOperator FockSpace::create_left(Element x) const { return FockOperator(Matrix(left_creator(x))); }

FockOperator FockSpace::annihilate_left(Element x) const {
  return FockOperator(Matrix(left_creator(x).adjoint()));
}

FockOperator FockSpace::create_right(Element x) const { return FockOperator(Matrix(right_creator(x))); }

FockOperator FockSpace::annihilate_right(Element x) const {
  return FockOperator(Matrix(right_creator(x).adjoint()));
}

FockOperator FockSpace::create_left(const Vector& xi) const {
  if (static_cast<std::size_t>(xi.size()) != sites()) throw InputError("fock space: vector length != |X|");
  Matrix m = Matrix::Zero(dim_, dim_);
  for (Element x = 0; x < sites(); ++x) {
    if (xi[x] != cplx{}) m += xi[x] * Matrix(left_[x]);
  }
  return FockOperator(std::move(m));
}

FockOperator FockSpace::create_right(const Vector& xi) const {
  if (static_cast<std::size_t>(xi.size()) != sites()) throw InputError("fock space: vector length != |X|");
  Matrix m = Matrix::Zero(dim_, dim_);
  for (Element x = 0; x < sites(); ++x) {
    if (xi[x] != cplx{}) m += xi[x] * Matrix(right_[x]);
  }
  return FockOperator(std::move(m));
}

SparseMatrix FockSpace::permutation_sparse(std::span<const Element> image) const {
  const std::size_t n = sites();
  if (image.size() != n) throw InputError("permutation: wrong length");
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < n; ++x) {
    if (image[x] >= n || hit[image[x]]) throw InputError("permutation: not a bijection of X");
    hit[image[x]] = true;
    if (image[index_.partner(x)] != index_.partner(image[x])) {
      throw InputError("permutation: does not commute with the involution");
    }
  }
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(dim_));
  std::vector<Element> seq;
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(dim_); ++s) {
    seq.clear();
    std::uint64_t t = 0;
    for (Element x = 0; x < n; ++x) {
      if (s >> x & 1u) {
        seq.push_back(image[x]);
        t |= std::uint64_t{1} << image[x];
      }
    }
    trips.emplace_back(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s),
                       static_cast<double>(sorting_sign(seq)));
  }
  SparseMatrix m(dim_, dim_);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

FockOperator FockSpace::permutation_operator(std::span<const Element> image) const {
  return FockOperator(Matrix(permutation_sparse(image)));
}

FockOperator FockSpace::diagonal_embed(const SymbolFunction& f) const {
  Matrix m = Matrix::Zero(dim_, dim_);
  for (Eigen::Index s = 0; s < dim_; ++s) m(s, s) = f(SlaterIndex::from_mask(static_cast<std::uint64_t>(s)));
  return FockOperator(std::move(m));
}

Vector FockSpace::vacuum() const {
  Vector v = Vector::Zero(dim_);
  v[0] = 1.0;
  return v;
}

Vector FockSpace::basis_vector(const SlaterIndex& s) const {
  Vector v = Vector::Zero(dim_);
  for (Element x : s) check_site(x);
  v[static_cast<Eigen::Index>(s.mask())] = 1.0;
  return v;
}

Vector FockSpace::to_dense(const FockVector& v) const {
  Vector out = Vector::Zero(dim_);
  for (const auto& [s, c] : v.terms()) {
    for (Element x : s) check_site(x);
    out[static_cast<Eigen::Index>(s.mask())] += c;
  }
  return out;
}

FockVector FockSpace::from_dense(const Vector& v, double tol) const {
  if (v.size() != dim_) throw InputError("fock space: dimension mismatch");
  FockVector out;
  for (Eigen::Index s = 0; s < dim_; ++s) {
    if (std::abs(v[s]) > tol) out.add(SlaterIndex::from_mask(static_cast<std::uint64_t>(s)), v[s]);
  }
  return out;
}

FockOperator FockSpace::particle_projection(std::size_t n) const {
  Matrix m = Matrix::Zero(dim_, dim_);
  for (Eigen::Index s = 0; s < dim_; ++s) {
    if (static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(s))) == n) m(s, s) = 1.0;
  }
  return FockOperator(std::move(m));
}

}  // namespace afock
