// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/fock_operator.hpp>

#include <Eigen/Eigenvalues>

namespace afock {

FockOperator::FockOperator(Matrix m, Linearity lin) : m_(std::move(m)), lin_(lin) {
  if (m_.rows() != m_.cols()) throw InputError("fock operator: matrix must be square");
}

FockOperator FockOperator::identity(Eigen::Index dim) { return FockOperator(Matrix::Identity(dim, dim)); }

FockOperator FockOperator::zero(Eigen::Index dim) { return FockOperator(Matrix::Zero(dim, dim)); }

Vector FockOperator::apply(const Vector& v) const {
  if (v.size() != m_.cols()) throw InputError("fock operator: dimension mismatch");
  return antilinear() ? Vector(m_ * v.conjugate()) : Vector(m_ * v);
}

FockOperator FockOperator::adjoint() const {
  return antilinear() ? FockOperator(m_.transpose(), lin_) : FockOperator(m_.adjoint(), lin_);
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
  if (dim() != o.dim()) throw InputError("fock operator: dimension mismatch");
  // A(B v): if A is antilinear, M_A conj(B v) conjugates B's matrix.
  const Linearity out = (antilinear() != o.antilinear()) ? Linearity::antilinear : Linearity::linear;
  if (antilinear()) return FockOperator(m_ * o.m_.conjugate(), out);
  return FockOperator(m_ * o.m_, out);
}

void FockOperator::require_same(const FockOperator& o) const {
  if (dim() != o.dim()) throw InputError("fock operator: dimension mismatch");
  if (lin_ != o.lin_) throw InputError("fock operator: cannot add linear and antilinear operators");
}

FockOperator FockOperator::operator+(const FockOperator& o) const {
  require_same(o);
  return FockOperator(m_ + o.m_, lin_);
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
  require_same(o);
  return FockOperator(m_ - o.m_, lin_);
}

FockOperator FockOperator::operator-() const { return FockOperator(-m_, lin_); }

FockOperator& FockOperator::operator+=(const FockOperator& o) {
  require_same(o);
  m_ += o.m_;
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& o) {
  require_same(o);
  m_ -= o.m_;
  return *this;
}

FockOperator operator*(cplx c, const FockOperator& a) { return FockOperator(c * a.m_, a.lin_); }

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

FockOperator anticommutator(const FockOperator& a, const FockOperator& b) { return a * b + b * a; }

double max_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_entry(const FockOperator& a) { return max_entry(a.matrix()); }

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double spectral_norm(const FockOperator& a) { return spectral_norm(a.matrix()); }

double distance(const FockOperator& a, const FockOperator& b) { return max_entry(a - b); }

}  // namespace afock
