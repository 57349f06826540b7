// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock_space.hpp
 * @brief Dense antisymmetric Fock space over a small X, basis indexed by bitmask.
 *
 * ℓ(δ_x) b_S = (-1)^{#{y∈S: y<x}} b_{S∪x},  r(δ_x) b_S = (-1)^{#{y∈S: y>x}} b_{S∪x}.
 */

#pragma once

#include <afock/fock_operator.hpp>
#include <afock/index_set.hpp>
#include <afock/slater.hpp>

#include <functional>
#include <span>
#include <vector>

namespace afock {

/// Function on finite subsets of X, embedded as a diagonal operator.
using SymbolFunction = std::function<cplx(const SlaterIndex&)>;

class FockSpace {
 public:
  /// Largest |X| for which a dense space is built.
  static constexpr std::size_t kMaxSites = 12;

  explicit FockSpace(IndexSet index);

  [[nodiscard]] const IndexSet& index() const noexcept { return index_; }
  [[nodiscard]] std::size_t sites() const noexcept { return index_.size(); }
  [[nodiscard]] Eigen::Index dimension() const noexcept { return dim_; }

  [[nodiscard]] const SparseMatrix& left_creator(Element x) const;
  [[nodiscard]] const SparseMatrix& right_creator(Element x) const;

  [[nodiscard]] FockOperator create_left(Element x) const;
  [[nodiscard]] FockOperator annihilate_left(Element x) const;
  [[nodiscard]] FockOperator create_right(Element x) const;
  [[nodiscard]] FockOperator annihilate_right(Element x) const;
  /// ℓ(ξ) = Σ ξ(x) ℓ(δ_x); linear in ξ.
  [[nodiscard]] FockOperator create_left(const Vector& xi) const;
  [[nodiscard]] FockOperator create_right(const Vector& xi) const;

  /**
   * π_g for a permutation g of X commuting with I:
   * π_g(ξ1∧...∧ξn) = gξ1∧...∧gξn.
   */
  [[nodiscard]] FockOperator permutation_operator(std::span<const Element> image) const;
  [[nodiscard]] SparseMatrix permutation_sparse(std::span<const Element> image) const;

  [[nodiscard]] FockOperator diagonal_embed(const SymbolFunction& f) const;

  [[nodiscard]] Vector vacuum() const;
  [[nodiscard]] Vector basis_vector(const SlaterIndex& s) const;
  [[nodiscard]] Vector to_dense(const FockVector& v) const;
  [[nodiscard]] FockVector from_dense(const Vector& v, double tol = 0.0) const;

  /// Projection onto the n-particle sector.
  [[nodiscard]] FockOperator particle_projection(std::size_t n) const;

 private:
  void check_site(Element x) const;

  IndexSet index_;
  Eigen::Index dim_ = 1;
  std::vector<SparseMatrix> left_;
  std::vector<SparseMatrix> right_;
};

}  // namespace afock
