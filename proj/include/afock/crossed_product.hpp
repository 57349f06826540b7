// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file crossed_product.hpp
 * @brief Standard form of M ⋊ G on F ⊗ ℓ²(G) for a finite Bernoulli system.
 *
 * Left action U_g ⊗ λ_g and a ⊗ 1, right action 1 ⊗ ρ_g and
 * π_r(b) = Σ_h U_h b U_h* ⊗ e_{h,h}, conjugation J = Σ_h U_h J_M ⊗ e_{h,h⁻¹}.
 * λ_g δ_k = δ_{gk}, ρ_g δ_k = δ_{kg⁻¹}.
 */

#pragma once

#include <afock/bernoulli.hpp>
#include <afock/block_operator.hpp>

#include <string>
#include <vector>

namespace afock {

class CrossedRep {
 public:
  static constexpr Eigen::Index kDefaultCap = 4096;

  /// Throws InputError when |G|·dim F exceeds cap.
  explicit CrossedRep(const BernoulliModel& model, Eigen::Index cap = kDefaultCap);

  [[nodiscard]] const BernoulliModel& model() const noexcept { return *model_; }
  [[nodiscard]] std::size_t group_order() const noexcept { return n_; }
  [[nodiscard]] Eigen::Index block_dim() const noexcept { return d_; }
  [[nodiscard]] Eigen::Index dimension() const noexcept { return static_cast<Eigen::Index>(n_) * d_; }

  [[nodiscard]] BlockOperator left_group(std::size_t g) const;           ///< U_g ⊗ λ_g
  [[nodiscard]] BlockOperator left_algebra(const Matrix& a) const;       ///< a ⊗ 1
  [[nodiscard]] BlockOperator right_group(std::size_t g) const;          ///< 1 ⊗ ρ_g
  [[nodiscard]] BlockOperator right_algebra(const Matrix& b) const;      ///< π_r(b)
  [[nodiscard]] BlockOperator regular_left(std::size_t g) const;         ///< 1 ⊗ λ_g
  [[nodiscard]] const BlockOperator& conjugation() const noexcept { return j_; }

  /// U_s ⊗ λ_s for the group generators, then c_x ⊗ 1 for x ∈ X.
  [[nodiscard]] const std::vector<BlockOperator>& left_generators() const noexcept { return left_; }
  /// 1 ⊗ ρ_s for the group generators, then π_r(J_M c_x J_M) for x ∈ X.
  [[nodiscard]] const std::vector<BlockOperator>& right_generators() const noexcept { return right_; }
  [[nodiscard]] const std::vector<std::string>& left_names() const noexcept { return left_names_; }
  [[nodiscard]] const std::vector<std::string>& right_names() const noexcept { return right_names_; }

 private:
  const BernoulliModel* model_;
  std::size_t n_;
  Eigen::Index d_;
  BlockOperator j_;
  std::vector<BlockOperator> left_;
  std::vector<BlockOperator> right_;
  std::vector<std::string> left_names_;
  std::vector<std::string> right_names_;
};

/// HS-orthonormal basis of the commutant of {c_x} on F, by kernel computation.
std::vector<Matrix> fock_commutant_basis(const CarAlgebra& car, std::uint64_t seed = 7);

struct DimensionReport {
  std::size_t commutant = 0;      ///< dim of the commutant of the left algebra
  std::size_t right_algebra = 0;  ///< dim of the algebra generated by the right generators
  std::size_t fock_commutant = 0; ///< dim M′ on F
  double action_residual = 0.0;   ///< Ad U_g leaving M′ invariant
  std::vector<double> membership; ///< J·(left generator)·J vs span of the right algebra
};

/// Throws InputError if the rank computations would exceed roughly `budget` complex entries.
DimensionReport crossed_dimensions(const CrossedRep& rep, std::size_t budget = std::size_t{1} << 26);

struct CrossedCommutationReport {
  double left_right = 0.0;           ///< max-entry over all left/right generator pairs
  std::string worst_pair;
  double j_square = 0.0;             ///< J² − 1
  double j_unitary = 0.0;            ///< J*J − 1 and JJ* − 1
  double j_identity_block = 0.0;     ///< (e,e) block of J vs J_M
  double j_left_algebra = 0.0;       ///< J(a⊗1)J − π_r(J_M a J_M)
  double j_left_group = 0.0;         ///< J(U_g⊗λ_g)J − 1⊗ρ_g
  double j_implementation = 0.0;     ///< [(U_g⊗λ_g)(1⊗ρ_g), J]
  double j_inner_unitary = 0.0;      ///< [U_g⊗λ_g, J], recorded only; nonzero once G ≠ {e}
  double regular = 0.0;              ///< λ_gλ_h − λ_{gh} and ρ likewise
};

CrossedCommutationReport commutation_suite(const CrossedRep& rep);

}  // namespace afock
