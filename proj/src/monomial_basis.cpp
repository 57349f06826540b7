// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/monomial_basis.hpp>

namespace afock {

namespace {

SparseMatrix sparse_identity(Eigen::Index n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

}  // namespace

MonomialBasis::MonomialBasis(const CarAlgebra& car) : base_(car.base_size()), dim_(car.dimension()) {
  if (base_ > kMaxBase) throw InputError("monomial basis: |X0| too large");
  std::vector<SparseMatrix> gens;
  for (Element x = 0; x < base_; ++x) gens.push_back(car.car_sparse(x));
  const std::size_t n = std::size_t{1} << (2 * base_);
  monomials_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) monomials_.push_back(monomial_over(i, gens));
  k_.resize(dim_, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) k_.col(static_cast<Eigen::Index>(i)) = Matrix(monomials_[i].col(0));
  lu_.compute(k_);
}

int MonomialBasis::digit(std::size_t i, Element x) const { return static_cast<int>((i >> (2 * x)) & 3u); }

SparseMatrix MonomialBasis::monomial_over(std::size_t i, const std::vector<SparseMatrix>& gens) const {
  if (gens.size() != base_) throw InputError("monomial basis: need one generator per base label");
  SparseMatrix acc = sparse_identity(dim_);
  for (Element x = 0; x < base_; ++x) {
    const SparseMatrix& c = gens[x];
    switch (digit(i, x)) {
      case 0:
        break;
      case 1:
        acc = acc * c;
        break;
      case 2: {
        SparseMatrix cs = c.adjoint();
        acc = acc * cs;
        break;
      }
      default: {
        SparseMatrix cs = c.adjoint();
        acc = acc * (cs * c);
        break;
      }
    }
  }
  acc.prune(cplx(0.0), 1e-14);
  return acc;
}

Vector MonomialBasis::coefficients(const Vector& v) const {
  if (v.size() != dim_) throw InputError("monomial basis: dimension mismatch");
  return lu_.solve(v);
}

Vector MonomialBasis::expand(const FockOperator& a, double* residual) const {
  if (a.antilinear()) throw InputError("monomial basis: antilinear operators are not in the algebra");
  Vector alpha = coefficients(a.matrix().col(0));
  if (residual) *residual = max_entry(Matrix(a.matrix() - assemble(alpha)));
  return alpha;
}

Matrix MonomialBasis::assemble(const Vector& alpha) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    const cplx a = alpha[static_cast<Eigen::Index>(i)];
    if (a == cplx{}) continue;
    for (Eigen::Index col = 0; col < monomials_[i].outerSize(); ++col) {
      for (SparseMatrix::InnerIterator it(monomials_[i], col); it; ++it) out(it.row(), it.col()) += a * it.value();
    }
  }
  return out;
}

Matrix MonomialBasis::assemble_over(const Vector& alpha, const std::vector<SparseMatrix>& gens) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    const cplx a = alpha[static_cast<Eigen::Index>(i)];
    if (a == cplx{}) continue;
    const SparseMatrix m = monomial_over(i, gens);
    for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
      for (SparseMatrix::InnerIterator it(m, col); it; ++it) out(it.row(), it.col()) += a * it.value();
    }
  }
  return out;
}

}  // namespace afock
