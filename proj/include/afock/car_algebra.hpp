// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file car_algebra.hpp
 * @brief Field operators, the quasi-free vacuum state and its modular data.
 *
 *   W(ξ̂) = ℓ(ξ̂) + ℓ(\widehat{Iξ})*,   B(ξ) = W(ξ̂)/√2,   c_x = B(δ_x).
 *
 * c_{Ix} = c_x*, and the vacuum gives φ(c_x* c_x) = p_x, φ(c_x c_x*) = q_x.
 */

#pragma once

#include <afock/almost_periodic.hpp>
#include <afock/fock_space.hpp>

#include <array>
#include <span>
#include <vector>

namespace afock {

/// 2×2 matrix units for one site of the Jordan–Wigner chain; e[i][j] = e_{i+1,j+1}.
struct MatrixUnitBlock {
  std::array<std::array<FockOperator, 2>, 2> e;
};

class CarAlgebra {
 public:
  explicit CarAlgebra(AlmostPeriodicRep rep);

  [[nodiscard]] const AlmostPeriodicRep& rep() const noexcept { return rep_; }
  [[nodiscard]] const FockSpace& fock() const noexcept { return fock_; }
  [[nodiscard]] const IndexSet& index() const noexcept { return rep_.index(); }
  [[nodiscard]] Eigen::Index dimension() const noexcept { return fock_.dimension(); }
  [[nodiscard]] std::size_t base_size() const noexcept { return index().base_size(); }

  /// W(δ̂_x) = d(x)ℓ(δ_x) + d(Ix)ℓ(δ_{Ix})*.
  [[nodiscard]] const SparseMatrix& field_sparse(Element x) const { return field_.at(x); }
  [[nodiscard]] FockOperator field(Element x) const { return FockOperator(Matrix(field_sparse(x))); }
  /// W(ξ̂) built from its definition through ℓ, hat and I.
  [[nodiscard]] FockOperator field(const Vector& xi) const;
  /// B(ξ) = W(ξ̂)/√2 for ξ ∈ ℓ²(X).
  [[nodiscard]] FockOperator self_dual(const Vector& xi) const;

  [[nodiscard]] const SparseMatrix& car_sparse(Element x) const { return car_.at(x); }
  [[nodiscard]] FockOperator car(Element x) const { return FockOperator(Matrix(car_sparse(x))); }
  /// c(ξ) = B(ξ) for ξ ∈ ℓ²(X0), given as a length-|X0| vector.
  [[nodiscard]] FockOperator car(const Vector& xi_base) const;
  /// Embeds ξ ∈ ℓ²(X0) into ℓ²(X).
  [[nodiscard]] Vector embed_base(const Vector& xi_base) const;

  /// ⟨aΩ, Ω⟩.
  [[nodiscard]] cplx vacuum_state(const FockOperator& a) const;

  /**
   * φ(c(η_m)*⋯c(η_1)* c(ξ_1)⋯c(ξ_n)), applied to Ω; ξ, η ∈ ℓ²(X0).
   */
  [[nodiscard]] cplx moment(std::span<const Vector> xi, std::span<const Vector> eta) const;
  /// δ_{mn} det[⟨Rξ_i, η_j⟩] with R = diag(p).
  [[nodiscard]] cplx quasi_free_moment(std::span<const Vector> xi, std::span<const Vector> eta) const;

  /// One block per base label, in label order.
  [[nodiscard]] std::vector<MatrixUnitBlock> matrix_units() const;

  /// J b_S = sgn · b_{IS}, antilinear; sgn from re-sorting (I s_n, ..., I s_1).
  [[nodiscard]] const FockOperator& modular_conjugation() const noexcept { return j_; }
  /// Δ b_S = Π_{x∈S} a(x)^{-1} b_S.
  [[nodiscard]] FockOperator modular_operator() const;
  [[nodiscard]] FockOperator modular_sqrt() const;
  /// Δ^{it}.
  [[nodiscard]] FockOperator modular_unitary(double t) const;
  /// S = J Δ^{1/2}.
  [[nodiscard]] FockOperator tomita() const;

  /// Sign of J on b_S.
  [[nodiscard]] int conjugation_sign(const SlaterIndex& s) const;

 private:
  [[nodiscard]] Vector modular_diagonal(double power) const;

  AlmostPeriodicRep rep_;
  FockSpace fock_;
  std::vector<SparseMatrix> field_;
  std::vector<SparseMatrix> car_;
  FockOperator j_;
};

}  // namespace afock
