// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/block_operator.hpp>

namespace afock {

BlockOperator::BlockOperator(std::size_t grid, Eigen::Index block_dim, Linearity lin)
    : grid_(grid), d_(block_dim), lin_(lin) {}

BlockOperator BlockOperator::identity(std::size_t grid, Eigen::Index block_dim) {
  BlockOperator b(grid, block_dim);
  for (std::size_t i = 0; i < grid; ++i) b.add_block(i, i, Matrix::Identity(block_dim, block_dim));
  return b;
}

Matrix BlockOperator::block(std::size_t i, std::size_t j) const {
  auto it = blocks_.find({i, j});
  return it == blocks_.end() ? Matrix::Zero(d_, d_) : it->second;
}

void BlockOperator::add_block(std::size_t i, std::size_t j, const Matrix& m) {
  if (i >= grid_ || j >= grid_) throw InputError("block operator: block index out of range");
  if (m.rows() != d_ || m.cols() != d_) throw InputError("block operator: block has wrong size");
  auto [it, inserted] = blocks_.emplace(Key{i, j}, m);
  if (!inserted) it->second += m;
}

void BlockOperator::require_same(const BlockOperator& o) const {
  if (grid_ != o.grid_ || d_ != o.d_) throw InputError("block operator: shape mismatch");
}

BlockOperator BlockOperator::operator*(const BlockOperator& o) const {
  require_same(o);
  const Linearity out = (antilinear() != o.antilinear()) ? Linearity::antilinear : Linearity::linear;
  BlockOperator c(grid_, d_, out);
  // Index o's blocks by row for the contraction over the middle index.
  std::map<std::size_t, std::vector<std::pair<std::size_t, const Matrix*>>> rows;
  for (const auto& [key, m] : o.blocks_) rows[key.first].emplace_back(key.second, &m);
  for (const auto& [key, a] : blocks_) {
    auto it = rows.find(key.second);
    if (it == rows.end()) continue;
    for (const auto& [k, b] : it->second) {
      if (antilinear()) {
        c.add_block(key.first, k, a * b->conjugate());
      } else {
        c.add_block(key.first, k, a * *b);
      }
    }
  }
  return c;
}

BlockOperator BlockOperator::operator+(const BlockOperator& o) const {
  require_same(o);
  if (lin_ != o.lin_) throw InputError("block operator: linearity mismatch");
  BlockOperator c = *this;
  for (const auto& [key, m] : o.blocks_) c.add_block(key.first, key.second, m);
  return c;
}

BlockOperator BlockOperator::operator-(const BlockOperator& o) const { return *this + cplx(-1.0) * o; }

BlockOperator operator*(cplx c, const BlockOperator& a) {
  BlockOperator out(a.grid_, a.d_, a.lin_);
  for (const auto& [key, m] : a.blocks_) out.blocks_.emplace(key, c * m);
  return out;
}

BlockOperator BlockOperator::adjoint() const {
  BlockOperator out(grid_, d_, lin_);
  for (const auto& [key, m] : blocks_) {
    out.blocks_.emplace(Key{key.second, key.first}, antilinear() ? Matrix(m.transpose()) : Matrix(m.adjoint()));
  }
  return out;
}

double BlockOperator::max_entry() const {
  double m = 0.0;
  for (const auto& [key, b] : blocks_) m = std::max(m, afock::max_entry(b));
  return m;
}

Matrix BlockOperator::to_dense() const {
  Matrix out = Matrix::Zero(dimension(), dimension());
  for (const auto& [key, b] : blocks_) {
    out.block(static_cast<Eigen::Index>(key.first) * d_, static_cast<Eigen::Index>(key.second) * d_, d_, d_) = b;
  }
  return out;
}

Vector BlockOperator::flatten() const {
  const Eigen::Index bs = d_ * d_;
  Vector v = Vector::Zero(static_cast<Eigen::Index>(grid_ * grid_) * bs);
  for (const auto& [key, b] : blocks_) {
    const auto off = static_cast<Eigen::Index>(key.first * grid_ + key.second) * bs;
    v.segment(off, bs) = Eigen::Map<const Vector>(b.data(), bs);
  }
  return v;
}

BlockOperator commutator(const BlockOperator& a, const BlockOperator& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

HSSpan::HSSpan(Eigen::Index length, std::size_t reserve)
    : length_(length), q_(length, static_cast<Eigen::Index>(std::max<std::size_t>(reserve, 1))) {}

bool HSSpan::add(const Vector& v, double tol) {
  if (v.size() != length_) throw InputError("span: vector length mismatch");
  const double nv = v.norm();
  if (nv == 0.0) return false;
  Vector w = v;
  // Two passes of classical Gram–Schmidt.
  for (int pass = 0; pass < 2 && n_ > 0; ++pass) {
    const auto n = static_cast<Eigen::Index>(n_);
    const Vector c = q_.leftCols(n).adjoint() * w;
    w -= q_.leftCols(n) * c;
  }
  scale_ = std::max(scale_, nv);
  const double nw = w.norm();
  if (nw <= tol * scale_) return false;
  if (static_cast<Eigen::Index>(n_) == q_.cols()) q_.conservativeResize(Eigen::NoChange, 2 * q_.cols());
  q_.col(static_cast<Eigen::Index>(n_)) = w / nw;
  ++n_;
  return true;
}

std::vector<bool> HSSpan::add_batch(const Matrix& cols, double tol) {
  if (cols.rows() != length_) throw InputError("span: vector length mismatch");
  Matrix w = cols;
  const auto n0 = static_cast<Eigen::Index>(n_);
  for (int pass = 0; pass < 2 && n0 > 0; ++pass) {
    const Matrix c = q_.leftCols(n0).adjoint() * w;
    w.noalias() -= q_.leftCols(n0) * c;
  }
  std::vector<bool> added(static_cast<std::size_t>(cols.cols()), false);
  for (Eigen::Index j = 0; j < cols.cols(); ++j) scale_ = std::max(scale_, cols.col(j).norm());
  for (Eigen::Index j = 0; j < cols.cols(); ++j) {
    const double nv = cols.col(j).norm();
    if (nv == 0.0) continue;
    Vector v = w.col(j);
    const auto n = static_cast<Eigen::Index>(n_);
    for (int pass = 0; pass < 2 && n > n0; ++pass) {
      const Vector c = q_.middleCols(n0, n - n0).adjoint() * v;
      v -= q_.middleCols(n0, n - n0) * c;
    }
    const double nw = v.norm();
    if (nw <= tol * scale_) continue;
    if (n == q_.cols()) q_.conservativeResize(Eigen::NoChange, 2 * q_.cols());
    q_.col(n) = v / nw;
    ++n_;
    added[static_cast<std::size_t>(j)] = true;
  }
  return added;
}

double HSSpan::relative_distance(const Vector& v) const {
  if (v.size() != length_) throw InputError("span: vector length mismatch");
  Vector w = v;
  for (int pass = 0; pass < 2 && n_ > 0; ++pass) {
    const auto n = static_cast<Eigen::Index>(n_);
    const Vector c = q_.leftCols(n).adjoint() * w;
    w -= q_.leftCols(n) * c;
  }
  return w.norm() / std::max(v.norm(), 1e-300);
}

}  // namespace afock
