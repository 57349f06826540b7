// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock_operator.hpp
 * @brief Dense operators on a truncated Fock space, linear or antilinear.
 *
 * An antilinear operator is stored as a matrix M acting by v ↦ M·conj(v).
 */

#pragma once

#include <afock/common.hpp>

namespace afock {

enum class Linearity { linear, antilinear };

class FockOperator {
 public:
  FockOperator() = default;
  explicit FockOperator(Matrix m, Linearity lin = Linearity::linear);

  static FockOperator identity(Eigen::Index dim);
  static FockOperator zero(Eigen::Index dim);

  [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
  [[nodiscard]] Linearity linearity() const noexcept { return lin_; }
  [[nodiscard]] bool antilinear() const noexcept { return lin_ == Linearity::antilinear; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return m_.rows(); }

  [[nodiscard]] Vector apply(const Vector& v) const;
  /// Adjoint: M^H for linear, M^T for antilinear.
  [[nodiscard]] FockOperator adjoint() const;

  FockOperator operator*(const FockOperator& o) const;
  FockOperator operator+(const FockOperator& o) const;
  FockOperator operator-(const FockOperator& o) const;
  FockOperator operator-() const;
  FockOperator& operator+=(const FockOperator& o);
  FockOperator& operator-=(const FockOperator& o);
  /// (λA)v = λ·A(v) for both linearities.
  friend FockOperator operator*(cplx c, const FockOperator& a);

 private:
  void require_same(const FockOperator& o) const;

  Matrix m_;
  Linearity lin_ = Linearity::linear;
};

/// a·b - b·a.
FockOperator commutator(const FockOperator& a, const FockOperator& b);
/// a·b + b·a.
FockOperator anticommutator(const FockOperator& a, const FockOperator& b);

/// Largest entry modulus of the matrix part.
double max_entry(const Matrix& m);
double max_entry(const FockOperator& a);
/// Operator 2-norm; antilinearity does not change it.
double spectral_norm(const Matrix& m);
double spectral_norm(const FockOperator& a);
/// max-entry distance; throws on linearity mismatch.
double distance(const FockOperator& a, const FockOperator& b);

}  // namespace afock
