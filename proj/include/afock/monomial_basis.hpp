// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file monomial_basis.hpp
 * @brief Linear basis of the CAR algebra by ordered monomials.
 *
 * Monomial i is m_0 m_1 ⋯ m_{k-1} with m_x ∈ {1, c_x, c_x*, c_x* c_x} picked by
 * the base-4 digits of i. Since the vacuum is separating, a ↦ aΩ is injective
 * on the algebra and elements are recovered from their vacuum vectors.
 */

#pragma once

#include <afock/car_algebra.hpp>

#include <Eigen/LU>
#include <vector>

namespace afock {

class MonomialBasis {
 public:
  static constexpr std::size_t kMaxBase = 4;

  explicit MonomialBasis(const CarAlgebra& car);

  [[nodiscard]] std::size_t size() const noexcept { return monomials_.size(); }
  [[nodiscard]] const SparseMatrix& monomial(std::size_t i) const { return monomials_.at(i); }
  /// Digit of site x in monomial i: 0 → 1, 1 → c, 2 → c*, 3 → c*c.
  [[nodiscard]] int digit(std::size_t i, Element x) const;

  /// Same monomial pattern over another family of generators gens[x] (x ∈ X0).
  [[nodiscard]] SparseMatrix monomial_over(std::size_t i, const std::vector<SparseMatrix>& gens) const;

  /// α with Σ α_i m_i Ω = v.
  [[nodiscard]] Vector coefficients(const Vector& v) const;
  /// Coefficients of a; `residual` receives the max-entry reconstruction error.
  [[nodiscard]] Vector expand(const FockOperator& a, double* residual = nullptr) const;
  [[nodiscard]] Matrix assemble(const Vector& alpha) const;
  [[nodiscard]] Matrix assemble_over(const Vector& alpha, const std::vector<SparseMatrix>& gens) const;

  /// Columns m_i Ω.
  [[nodiscard]] const Matrix& vacuum_images() const noexcept { return k_; }

 private:
  std::size_t base_ = 0;
  Eigen::Index dim_ = 0;
  std::vector<SparseMatrix> monomials_;
  Matrix k_;
  Eigen::PartialPivLU<Matrix> lu_;
};

}  // namespace afock
