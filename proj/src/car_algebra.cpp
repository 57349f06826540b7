// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/car_algebra.hpp>

#include <cmath>

namespace afock {

CarAlgebra::CarAlgebra(AlmostPeriodicRep rep) : rep_(std::move(rep)), fock_(rep_.index()) {
  const auto& idx = rep_.index();
  const Eigen::Index dim = fock_.dimension();
  for (Element x = 0; x < idx.size(); ++x) {
    const Element ix = idx.partner(x);
    SparseMatrix w = rep_.scale(x) * fock_.left_creator(x);
    SparseMatrix ann = fock_.left_creator(ix).adjoint();
    w += rep_.scale(ix) * ann;
    field_.push_back(w);
    car_.push_back(w * cplx(M_SQRT1_2));
  }
  Matrix mj = Matrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    const auto S = SlaterIndex::from_mask(static_cast<std::uint64_t>(s));
    std::uint64_t t = 0;
    for (Element x : S) t |= std::uint64_t{1} << idx.partner(x);
    mj(static_cast<Eigen::Index>(t), s) = conjugation_sign(S);
  }
  j_ = FockOperator(std::move(mj), Linearity::antilinear);
}

int CarAlgebra::conjugation_sign(const SlaterIndex& s) const {
  // δ_{s1}∧...∧δ_{sn} ↦ δ_{Isn}∧...∧δ_{Is1}.
  std::vector<Element> seq(s.elements().rbegin(), s.elements().rend());
  for (auto& x : seq) x = index().partner(x);
  return sorting_sign(seq);
}

FockOperator CarAlgebra::field(const Vector& xi) const {
  const Vector xh = rep_.hat(xi);
  const Vector ixh = rep_.hat(rep_.involution(xi));
  return fock_.create_left(xh) + fock_.create_left(ixh).adjoint();
}

FockOperator CarAlgebra::self_dual(const Vector& xi) const { return cplx(M_SQRT1_2) * field(xi); }

Vector CarAlgebra::embed_base(const Vector& xi_base) const {
  if (static_cast<std::size_t>(xi_base.size()) != base_size()) throw InputError("car: vector length != |X0|");
  Vector xi = Vector::Zero(static_cast<Eigen::Index>(index().size()));
  xi.head(xi_base.size()) = xi_base;
  return xi;
}

FockOperator CarAlgebra::car(const Vector& xi_base) const { return self_dual(embed_base(xi_base)); }

cplx CarAlgebra::vacuum_state(const FockOperator& a) const {
  if (a.antilinear()) throw InputError("vacuum state: operator must be linear");
  return a.matrix()(0, 0);
}

cplx CarAlgebra::moment(std::span<const Vector> xi, std::span<const Vector> eta) const {
  // c(ξ) = Σ_x ξ(x) c_x, applied site by site to keep everything sparse.
  const auto apply_c = [this](const Vector& xb, const Vector& v) {
    if (static_cast<std::size_t>(xb.size()) != base_size()) throw InputError("moment: vector length != |X0|");
    Vector out = Vector::Zero(v.size());
    for (Element x = 0; x < base_size(); ++x) {
      if (xb[x] != cplx{}) out += xb[x] * (car_[x] * v);
    }
    return out;
  };
  Vector v = fock_.vacuum();
  for (auto it = xi.rbegin(); it != xi.rend(); ++it) v = apply_c(*it, v);
  Vector w = fock_.vacuum();
  for (auto it = eta.rbegin(); it != eta.rend(); ++it) w = apply_c(*it, w);
  return w.dot(v);
}

cplx CarAlgebra::quasi_free_moment(std::span<const Vector> xi, std::span<const Vector> eta) const {
  if (xi.size() != eta.size()) return 0.0;
  const auto n = static_cast<Eigen::Index>(xi.size());
  if (n == 0) return 1.0;
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(xi[i].size()) != base_size()) throw InputError("moment: vector length != |X0|");
    for (Eigen::Index j = 0; j < n; ++j) {
      cplx acc{};
      for (Element x = 0; x < base_size(); ++x) {
        acc += to_double(rep_.weight_exact(x)) * xi[i][x] * std::conj(eta[j][x]);
      }
      g(i, j) = acc;
    }
  }
  return g.determinant();
}

std::vector<MatrixUnitBlock> CarAlgebra::matrix_units() const {
  const Eigen::Index dim = dimension();
  std::vector<MatrixUnitBlock> out;
  SparseMatrix id(dim, dim);
  id.setIdentity();
  SparseMatrix v = id;  // v_{n-1}
  for (Element x = 0; x < base_size(); ++x) {
    const SparseMatrix& c = car_[x];
    const SparseMatrix cs = c.adjoint();
    MatrixUnitBlock b;
    b.e[0][0] = FockOperator(Matrix(cs * c));
    b.e[0][1] = FockOperator(Matrix(v * cs));
    b.e[1][0] = FockOperator(Matrix(c * v));
    b.e[1][1] = FockOperator(Matrix(c * cs));
    out.push_back(std::move(b));
    const SparseMatrix u = id - 2.0 * SparseMatrix(c * cs);
    v = SparseMatrix(v * u);
  }
  return out;
}

Vector CarAlgebra::modular_diagonal(double power) const {
  const Eigen::Index dim = dimension();
  Vector d(dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    double acc = 1.0;
    for (Element x : SlaterIndex::from_mask(static_cast<std::uint64_t>(s))) acc /= rep_.eigenvalue(x);
    d[s] = std::pow(acc, power);
  }
  return d;
}

FockOperator CarAlgebra::modular_operator() const {
  return FockOperator(Matrix(modular_diagonal(1.0).asDiagonal()));
}

FockOperator CarAlgebra::modular_sqrt() const {
  // Exact square roots per site rather than pow(...,0.5) of the product.
  const Eigen::Index dim = dimension();
  Vector d(dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    double acc = 1.0;
    for (Element x : SlaterIndex::from_mask(static_cast<std::uint64_t>(s))) acc /= std::sqrt(rep_.eigenvalue(x));
    d[s] = acc;
  }
  return FockOperator(Matrix(d.asDiagonal()));
}

FockOperator CarAlgebra::modular_unitary(double t) const {
  const Eigen::Index dim = dimension();
  Vector d(dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    double phase = 0.0;
    for (Element x : SlaterIndex::from_mask(static_cast<std::uint64_t>(s))) phase -= t * std::log(rep_.eigenvalue(x));
    d[s] = std::polar(1.0, phase);
  }
  return FockOperator(Matrix(d.asDiagonal()));
}

FockOperator CarAlgebra::tomita() const { return j_ * modular_sqrt(); }

}  // namespace afock
