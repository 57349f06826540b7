// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/key_decomposition.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace afock {

std::vector<std::vector<Element>> subsets(const std::vector<Element>& s) {
  if (s.size() > 20) throw InputError("subsets: set too large");
  std::vector<std::vector<Element>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m) {
    std::vector<Element> f;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (m >> i & 1u) f.push_back(s[i]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

void DecompositionCertificate::require(double tol_max, double tol_spectral) const {
  if (residual_max < tol_max && residual_spectral < tol_spectral) return;
  std::ostringstream os;
  os << "key decomposition failed for element " << g << ": max-entry " << residual_max << ", spectral "
     << residual_spectral << "; worst " << witness;
  throw VerificationError(os.str());
}

namespace {

SparseMatrix sparse_identity(Eigen::Index n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

std::string describe_set(const IndexSet& idx, const std::vector<Element>& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + idx.label(f[i]);
  return s + "}";
}

}  // namespace

KeyDecomposition::KeyDecomposition(const BernoulliModel& model) : model_(&model) {}

PairIsometries KeyDecomposition::pair_isometries(Element x) const {
  const auto& idx = model_->car().index();
  if (!idx.is_base(x)) throw InputError("pair isometries: x must lie in X0");
  const auto& fock = model_->car().fock();
  const SparseMatrix& lx = fock.left_creator(x);
  const SparseMatrix& lix = fock.left_creator(idx.partner(x));
  const SparseMatrix lxs = lx.adjoint();
  const SparseMatrix lixs = lix.adjoint();
  SparseMatrix v = lx * lix;
  SparseMatrix w = lx * lixs;
  w += lix * lxs;
  w += lxs * lixs;
  return {FockOperator(Matrix(v)), FockOperator(Matrix(w))};
}

std::vector<SlaterIndex> KeyDecomposition::sector_basis(std::size_t g, const std::vector<Element>& f) const {
  const auto& idx = model_->car().index();
  const auto supp = model_->system().support(g);
  const Eigen::Index dim = model_->dimension();
  std::vector<SlaterIndex> out;
  for (Eigen::Index s = 0; s < dim; ++s) {
    const auto S = SlaterIndex::from_mask(static_cast<std::uint64_t>(s));
    bool ok = true;
    for (Element x : f) ok = ok && S.contains(x) && S.contains(idx.partner(x));
    for (Element y : supp) {
      if (std::find(f.begin(), f.end(), y) != f.end()) continue;
      ok = ok && !(S.contains(y) && S.contains(idx.partner(y)));
    }
    if (ok) out.push_back(S);
  }
  return out;
}

SectorProjection KeyDecomposition::sector_projection(std::size_t g, const std::vector<Element>& f) const {
  const auto supp = model_->system().support(g);
  for (Element x : f) {
    if (std::find(supp.begin(), supp.end(), x) == supp.end()) throw InputError("sector projection: F is not inside supp(g)");
  }
  const auto& idx = model_->car().index();
  const auto& fock = model_->car().fock();
  const Eigen::Index dim = model_->dimension();
  SparseMatrix acc = sparse_identity(dim);
  for (Element y : supp) {
    const SparseMatrix& lx = fock.left_creator(y);
    const SparseMatrix& lix = fock.left_creator(idx.partner(y));
    const SparseMatrix lxs = lx.adjoint();
    const SparseMatrix lixs = lix.adjoint();
    const SparseMatrix v = lx * lix;
    const SparseMatrix vs = v.adjoint();
    if (std::find(f.begin(), f.end(), y) != f.end()) {
      acc = acc * SparseMatrix(v * vs);
    } else {
      SparseMatrix w = lx * lixs;
      w += lix * lxs;
      w += lxs * lixs;
      const SparseMatrix ws = w.adjoint();
      acc = acc * SparseMatrix(w * ws);
    }
  }
  SectorProjection p;
  p.g = g;
  p.f = f;
  p.product = FockOperator(Matrix(acc));
  p.basis = sector_basis(g, f);
  Matrix direct = Matrix::Zero(dim, dim);
  for (const auto& s : p.basis) {
    const auto i = static_cast<Eigen::Index>(s.mask());
    direct(i, i) = 1.0;
  }
  p.residual = max_entry(Matrix(p.product.matrix() - direct));
  return p;
}

double KeyDecomposition::resolution_residual(std::size_t g) const {
  const Eigen::Index dim = model_->dimension();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& f : subsets(model_->system().support(g))) sum += sector_projection(g, f).product.matrix();
  return max_entry(Matrix(Matrix::Identity(dim, dim) - sum));
}

namespace {

SparseMatrix scaling_from(const SparseMatrix& c, double dx2, double dix2) {
  const SparseMatrix cs = c.adjoint();
  SparseMatrix z = dx2 * SparseMatrix(c * cs);
  z -= dix2 * SparseMatrix(cs * c);
  return z;
}

SparseMatrix scaling_inverse_from(const SparseMatrix& c, double dx2, double dix2) {
  // c c* and c* c are complementary projections.
  const SparseMatrix cs = c.adjoint();
  SparseMatrix z = (1.0 / dx2) * SparseMatrix(c * cs);
  z -= (1.0 / dix2) * SparseMatrix(cs * c);
  return z;
}

}  // namespace

FockOperator KeyDecomposition::scaling_element(Element x) const {
  return scaling_product({x});
}

FockOperator KeyDecomposition::scaling_product(const std::vector<Element>& f) const {
  const auto& car = model_->car();
  SparseMatrix acc = sparse_identity(model_->dimension());
  for (Element x : f) {
    if (!car.index().is_base(x)) throw InputError("scaling element: x must lie in X0");
    const double dx = car.rep().scale(x);
    const double dix = car.rep().scale(car.index().partner(x));
    acc = acc * scaling_from(car.car_sparse(x), dx * dx, dix * dix);
  }
  return FockOperator(Matrix(acc));
}

FockOperator KeyDecomposition::relabeled_scaling_product(std::size_t g, const std::vector<Element>& f) const {
  const auto& car = model_->car();
  SparseMatrix acc = sparse_identity(model_->dimension());
  for (Element x : f) {
    const double dx = car.rep().scale(x);
    const double dix = car.rep().scale(car.index().partner(x));
    acc = acc * scaling_from(car.car_sparse(model_->action().act(g, x)), dx * dx, dix * dix);
  }
  return FockOperator(Matrix(acc));
}

double KeyDecomposition::scaling_constant(std::size_t n, std::size_t m) {
  double r = 1.0;
  for (std::size_t i = m + 1; i <= m + 2 * n; ++i) r *= std::sqrt(static_cast<double>(i));
  return r;
}

namespace {

void check_samples(const IndexSet& idx, const std::vector<Element>& f, const std::vector<Element>& ys) {
  std::vector<Element> sorted = ys;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("samples must be distinct");
  for (Element y : ys) {
    if (y >= idx.size()) throw InputError("sample label out of range");
    for (Element x : f) {
      if (y == x || y == idx.partner(x)) throw InputError("samples must avoid F and IF");
    }
  }
}

}  // namespace

double KeyDecomposition::zf_action_residual(const std::vector<Element>& f, const std::vector<Element>& ys) const {
  const auto& car = model_->car();
  const auto& idx = car.index();
  check_samples(idx, f, ys);
  const auto n = static_cast<Eigen::Index>(idx.size());
  const Vector xi = car.fock().to_dense(wedge_deltas(ys));
  const Vector lhs = scaling_product(f).matrix() * xi;

  std::vector<Vector> parts;
  for (Element x : f) {
    Vector a = Vector::Zero(n);
    a[x] = car.rep().scale(x);
    Vector b = Vector::Zero(n);
    b[idx.partner(x)] = car.rep().scale(idx.partner(x));
    parts.push_back(a);
    parts.push_back(b);
  }
  for (Element y : ys) {
    Vector d = Vector::Zero(n);
    d[y] = 1.0;
    parts.push_back(d);
  }
  const Vector rhs = scaling_constant(f.size(), ys.size()) * car.fock().to_dense(wedge(parts));
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double KeyDecomposition::pair_annihilation_residual(Element x, const std::vector<Element>& ys) const {
  const auto& car = model_->car();
  const auto& idx = car.index();
  check_samples(idx, {x}, ys);
  const auto n = static_cast<Eigen::Index>(idx.size());
  const std::size_t m = ys.size();
  const Vector xi = car.fock().to_dense(wedge_deltas(ys));
  const Matrix c = car.car(x).matrix();
  const Vector lhs = c * (c.adjoint() * xi);
  std::vector<Vector> parts;
  Vector a = Vector::Zero(n);
  a[x] = car.rep().scale(x);
  Vector b = Vector::Zero(n);
  const Element ix = idx.partner(x);
  b[ix] = car.rep().scale(ix);
  parts.push_back(a);
  parts.push_back(b);
  for (Element y : ys) {
    Vector d = Vector::Zero(n);
    d[y] = 1.0;
    parts.push_back(d);
  }
  const double r = std::sqrt(static_cast<double>(m + 1)) * std::sqrt(static_cast<double>(m + 2));
  const double dix = car.rep().scale(ix);
  const Vector rhs = 0.5 * (r * car.fock().to_dense(wedge(parts)) + dix * dix * xi);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

bool KeyDecomposition::admissible(std::size_t g, const std::vector<Element>& f) const {
  const auto& idx = model_->car().index();
  const auto supp = model_->system().support(g);
  for (Element x : f) {
    if (!idx.is_base(x)) continue;
    const bool paired = std::find(f.begin(), f.end(), idx.partner(x)) != f.end();
    if (paired && std::find(supp.begin(), supp.end(), x) != supp.end()) return false;
  }
  return true;
}

Vector KeyDecomposition::hatted_wedge(const std::vector<Element>& xs) const {
  const auto& car = model_->car();
  const auto n = static_cast<Eigen::Index>(car.index().size());
  std::vector<Vector> parts;
  for (Element x : xs) {
    if (x >= static_cast<Element>(n)) throw InputError("label out of range");
    Vector a = Vector::Zero(n);
    a[x] = car.rep().scale(x);
    parts.push_back(a);
  }
  return car.fock().to_dense(wedge(parts));
}

double KeyDecomposition::vanishing_residual(std::size_t g, const std::vector<Element>& f) const {
  const Vector xi = hatted_wedge(f);
  const Vector a = model_->standard_implementation(g).matrix() * xi;
  const auto& j = model_->car().modular_conjugation();
  const Vector b = j.apply(model_->radon_nikodym_sqrt(g).apply(j.apply(model_->shift_operator(g).apply(xi))));
  return (a - b).norm();
}

DecompositionCertificate KeyDecomposition::decompose(std::size_t g) const {
  const auto& car = model_->car();
  const auto& idx = car.index();
  const Eigen::Index dim = model_->dimension();
  const Matrix& u = model_->standard_implementation(g).matrix();
  const Matrix jhj = model_->conjugated_rn_sqrt(g).matrix();
  const SparseMatrix v = model_->shift_operator(g).matrix().sparseView();

  DecompositionCertificate cert;
  cert.g = g;
  Matrix total = Matrix::Zero(dim, dim);
  double worst_sector = -1.0;
  for (const auto& f : subsets(model_->system().support(g))) {
    const SparseMatrix p = sector_projection(g, f).product.matrix().sparseView();
    DecompositionTerm t;
    t.f = f;
    if (f.empty()) {
      t.op = FockOperator(Matrix(jhj * SparseMatrix(v * p)));
    } else {
      SparseMatrix z = sparse_identity(dim);
      SparseMatrix zinv = sparse_identity(dim);
      SparseMatrix az = sparse_identity(dim);
      for (Element x : f) {
        const double dx = car.rep().scale(x);
        const double dix = car.rep().scale(idx.partner(x));
        z = z * scaling_from(car.car_sparse(x), dx * dx, dix * dix);
        zinv = zinv * scaling_inverse_from(car.car_sparse(x), dx * dx, dix * dix);
        az = az * scaling_from(car.car_sparse(model_->action().act(g, x)), dx * dx, dix * dix);
      }
      const SparseMatrix right = v * SparseMatrix(zinv * p);
      t.op = FockOperator(Matrix((jhj * az) * right));
      // α_g(Z_F) U = U Z_F, equivalent to α_g(Z_F) = U Z_F U* for unitary U.
      t.alpha_residual = max_entry(Matrix(az * u - u * z));
    }
    t.sector_residual = max_entry(Matrix(u * p - t.op.matrix()));
    if (t.sector_residual > worst_sector) {
      worst_sector = t.sector_residual;
      cert.witness = "F=" + describe_set(idx, f);
    }
    total += t.op.matrix();
    cert.terms.push_back(std::move(t));
  }
  const Matrix diff = u - total;
  cert.residual_max = max_entry(diff);
  cert.residual_spectral = spectral_norm(diff);
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  diff.cwiseAbs().maxCoeff(&row, &col);
  cert.witness += ", column b_" + std::to_string(col);
  return cert;
}

}  // namespace afock
