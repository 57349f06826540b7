// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file block_operator.hpp
 * @brief Operators on F ⊗ ℓ²(G) stored as sparse G×G grids of F-blocks.
 *
 * Block (i, j) maps the δ_j summand to the δ_i summand. Antilinear operators
 * follow the same convention as FockOperator: v ↦ M·conj(v).
 */

#pragma once

#include <afock/fock_operator.hpp>

#include <map>
#include <vector>
#include <utility>

namespace afock {

class BlockOperator {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  BlockOperator() = default;
  BlockOperator(std::size_t grid, Eigen::Index block_dim, Linearity lin = Linearity::linear);

  static BlockOperator identity(std::size_t grid, Eigen::Index block_dim);

  [[nodiscard]] std::size_t grid() const noexcept { return grid_; }
  [[nodiscard]] Eigen::Index block_dim() const noexcept { return d_; }
  [[nodiscard]] Eigen::Index dimension() const noexcept { return static_cast<Eigen::Index>(grid_) * d_; }
  [[nodiscard]] Linearity linearity() const noexcept { return lin_; }
  [[nodiscard]] bool antilinear() const noexcept { return lin_ == Linearity::antilinear; }
  [[nodiscard]] const std::map<Key, Matrix>& blocks() const noexcept { return blocks_; }
  /// Zero matrix when absent.
  [[nodiscard]] Matrix block(std::size_t i, std::size_t j) const;

  /// Accumulates into block (i, j).
  void add_block(std::size_t i, std::size_t j, const Matrix& m);

  BlockOperator operator*(const BlockOperator& o) const;
  BlockOperator operator+(const BlockOperator& o) const;
  BlockOperator operator-(const BlockOperator& o) const;
  friend BlockOperator operator*(cplx c, const BlockOperator& a);
  [[nodiscard]] BlockOperator adjoint() const;

  [[nodiscard]] double max_entry() const;
  [[nodiscard]] Matrix to_dense() const;
  /// Row-major over (i, j) blocks, each block column-major; length grid²·d².
  [[nodiscard]] Vector flatten() const;

 private:
  void require_same(const BlockOperator& o) const;

  std::size_t grid_ = 0;
  Eigen::Index d_ = 0;
  Linearity lin_ = Linearity::linear;
  std::map<Key, Matrix> blocks_;
};

BlockOperator commutator(const BlockOperator& a, const BlockOperator& b);

/// Incrementally orthonormalised span of flattened operators (Hilbert–Schmidt).
class HSSpan {
 public:
  explicit HSSpan(Eigen::Index length, std::size_t reserve = 0);

  /// Adds v if its component orthogonal to the span exceeds tol times the largest norm offered so far,
  /// so round-off left over from products that vanish exactly is not mistaken for a new direction.
  bool add(const Vector& v, double tol = 1e-9);
  /// Column-wise add; one pair of GEMMs against the existing span, then sequential within the batch.
  std::vector<bool> add_batch(const Matrix& cols, double tol = 1e-9);
  /// ‖v − proj(v)‖ / max(‖v‖, 1e-300).
  [[nodiscard]] double relative_distance(const Vector& v) const;
  [[nodiscard]] std::size_t size() const noexcept { return n_; }

 private:
  Eigen::Index length_;
  std::size_t n_ = 0;
  double scale_ = 0.0;
  Matrix q_;
};

}  // namespace afock
