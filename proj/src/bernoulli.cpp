// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/bernoulli.hpp>

#include <cmath>
#include <set>

namespace afock {

BernoulliSystem::BernoulliSystem(GroupAction action, std::vector<Rational> p)
    : action_(std::move(action)), p_(std::move(p)) {
  if (p_.size() != action_.index().base_size()) throw InputError("bernoulli: need one marginal per base label");
  for (const auto& px : p_) {
    if (px <= 0 || px >= 1) throw InputError("bernoulli: marginals must lie strictly between 0 and 1");
  }
}

std::vector<Element> BernoulliSystem::support(std::size_t g) const {
  std::vector<Element> out;
  for (Element x = 0; x < p_.size(); ++x) {
    if (p_[x] != p_[action_.act(g, x)]) out.push_back(x);
  }
  return out;
}

bool BernoulliSystem::generic() const {
  std::set<Rational> seen(p_.begin(), p_.end());
  return seen.size() == p_.size();
}

AlmostPeriodicRep BernoulliSystem::representation() const {
  return AlmostPeriodicRep::from_marginals(index(), p_);
}

std::string to_string(RadonNikodymOrdering o) {
  return o == RadonNikodymOrdering::occupied ? "p-ratio on c*c" : "p-ratio on cc*";
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kStateTol = 1e-9;

}  // namespace

BernoulliModel::BernoulliModel(BernoulliSystem system)
    : system_(std::move(system)), car_(system_.representation()), basis_(car_) {
  kinv_ = basis_.vacuum_images().inverse();
  const std::size_t n = action().order();

  bool occ_all = true;
  bool vac_all = true;
  std::vector<FockOperator> occ(n);
  std::vector<FockOperator> vac(n);
  for (std::size_t g = 0; g < n; ++g) {
    occ[g] = radon_nikodym_candidate(g, RadonNikodymOrdering::occupied);
    vac[g] = radon_nikodym_candidate(g, RadonNikodymOrdering::vacant);
    const double ro = state_identity_residual(g, occ[g]);
    const double rv = state_identity_residual(g, vac[g]);
    ordering_.residual_occupied = std::max(ordering_.residual_occupied, ro);
    ordering_.residual_vacant = std::max(ordering_.residual_vacant, rv);
    occ_all = occ_all && ro < kStateTol;
    vac_all = vac_all && rv < kStateTol;
  }
  if (!occ_all && !vac_all) throw VerificationError("radon-nikodym: neither ordering satisfies the state identity");
  if (occ_all && vac_all) {
    if (system_.generic() && n > 1) {
      throw VerificationError("radon-nikodym: both orderings pass on a generic system");
    }
    ordering_.coincide = true;
  }
  ordering_.chosen = occ_all ? RadonNikodymOrdering::occupied : RadonNikodymOrdering::vacant;
  h_ = ordering_.chosen == RadonNikodymOrdering::occupied ? std::move(occ) : std::move(vac);

  h_half_.reserve(n);
  pi_.reserve(n);
  u_.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    h_half_.push_back(radon_nikodym_candidate(g, ordering_.chosen, 0.5));
    const auto img = action().on_full(g);
    pi_.push_back(car_.fock().permutation_operator(img));
    u_.push_back(solve_implementation(g));
  }
}

FockOperator BernoulliModel::radon_nikodym_candidate(std::size_t g, RadonNikodymOrdering o, double power) const {
  const Eigen::Index dim = dimension();
  const std::size_t ginv = action().inverse(g);
  Matrix acc = Matrix::Identity(dim, dim);
  for (Element x = 0; x < system_.base_size(); ++x) {
    const Element y = action().act(ginv, x);
    const double rp = std::pow(to_double(system_.p(y) / system_.p(x)), power);
    const double rq = std::pow(to_double(system_.q(y) / system_.q(x)), power);
    const SparseMatrix& c = car_.car_sparse(x);
    const SparseMatrix cs = c.adjoint();
    const Matrix occ = Matrix(cs * c);
    const Matrix vac = Matrix(c * cs);
    const Matrix factor = (o == RadonNikodymOrdering::occupied) ? Matrix(rp * occ + rq * vac)
                                                                 : Matrix(rp * vac + rq * occ);
    acc = acc * factor;
  }
  return FockOperator(std::move(acc));
}

double BernoulliModel::state_identity_residual(std::size_t g, const FockOperator& h) const {
  const auto gens = relabeled_generators(action().inverse(g));
  const Vector h0 = h.matrix().col(0);
  double worst = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const SparseMatrix m = basis_.monomial_over(i, gens);
    const cplx lhs = m.coeff(0, 0);
    const cplx rhs = (basis_.monomial(i) * h0)[0];
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::vector<SparseMatrix> BernoulliModel::relabeled_generators(std::size_t g) const {
  std::vector<SparseMatrix> gens;
  for (Element x = 0; x < system_.base_size(); ++x) gens.push_back(car_.car_sparse(action().act(g, x)));
  return gens;
}

FockOperator BernoulliModel::alpha(std::size_t g, const FockOperator& a) const {
  double residual = 0.0;
  const Vector coeffs = basis_.expand(a, &residual);
  if (residual > 1e-8 * std::max(1.0, max_entry(a))) {
    throw VerificationError("alpha: operator is not in the generated algebra");
  }
  return FockOperator(basis_.assemble_over(coeffs, relabeled_generators(g)));
}

FockOperator BernoulliModel::solve_implementation(std::size_t g) const {
  const auto gens = relabeled_generators(g);
  const Vector hv = h_half_.at(g).matrix().col(0);
  Matrix kp(dimension(), static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    kp.col(static_cast<Eigen::Index>(i)) = basis_.monomial_over(i, gens) * hv;
  }
  Matrix u = kp * kinv_;
  const double unitarity = max_entry(Matrix(u.adjoint() * u - Matrix::Identity(dimension(), dimension())));
  if (unitarity > 1e-6) throw VerificationError("standard implementation: solve is not unitary");
  return FockOperator(std::move(u));
}

FockOperator BernoulliModel::shift_operator(std::size_t g) const {
  const Eigen::Index dim = dimension();
  const auto img = action().on_full(g);
  const auto& rep = car_.rep();
  Matrix v = Matrix::Zero(dim, dim);
  std::vector<Element> seq;
  for (Eigen::Index s = 0; s < dim; ++s) {
    seq.clear();
    std::uint64_t t = 0;
    double ratio = 1.0;
    for (Element x : SlaterIndex::from_mask(static_cast<std::uint64_t>(s))) {
      seq.push_back(img[x]);
      t |= std::uint64_t{1} << img[x];
      ratio *= rep.scale(img[x]) / rep.scale(x);
    }
    v(static_cast<Eigen::Index>(t), s) = ratio * sorting_sign(seq);
  }
  return FockOperator(std::move(v));
}

SymbolFunction BernoulliModel::multiplier(std::size_t g) const {
  const auto inv = action().on_full(action().inverse(g));
  const auto& rep = car_.rep();
  return [inv, &rep](const SlaterIndex& s) -> cplx {
    double f = 1.0;
    for (Element t : s) f *= rep.scale(t) / rep.scale(inv.at(t));
    return f;
  };
}

FockOperator BernoulliModel::multiplier_operator(std::size_t g) const {
  return car_.fock().diagonal_embed(multiplier(g));
}

FockOperator BernoulliModel::conjugated_rn_sqrt(std::size_t g) const {
  const auto& j = car_.modular_conjugation();
  return j * h_half_.at(g) * j;
}

std::vector<SlaterIndex> BernoulliModel::bernoulli_basis() const {
  const std::size_t k = system_.base_size();
  std::vector<SlaterIndex> out;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << k); ++f) out.push_back(SlaterIndex::from_mask(f | (f << k)));
  return out;
}

FockOperator BernoulliModel::bernoulli_projection() const {
  Matrix e = Matrix::Zero(dimension(), dimension());
  for (const auto& s : bernoulli_basis()) {
    const auto i = static_cast<Eigen::Index>(s.mask());
    e(i, i) = 1.0;
  }
  return FockOperator(std::move(e));
}

BoundaryIdentityReport BernoulliModel::bernoulli_boundary_identities() const {
  BoundaryIdentityReport r;
  const auto& fock = car_.fock();
  const auto& rep = car_.rep();
  const auto& idx = car_.index();
  const Matrix e = bernoulli_projection().matrix();
  for (Element x = 0; x < idx.size(); ++x) {
    const Element ix = idx.partner(x);
    const Matrix lx = fock.create_left(x).matrix();
    const Matrix lix = fock.create_left(ix).matrix();
    const Matrix c = car_.car(x).matrix();
    const double dx = rep.scale(x);
    const double dix = rep.scale(ix);
    const Matrix lhs = 2.0 * c * c.adjoint();
    const Matrix rhs = dx * dix * lx * lix + dx * dx * lx * lx.adjoint() + dix * dix * lix.adjoint() * lix +
                       dix * dx * lix.adjoint() * lx.adjoint();
    r.expansion_residual = std::max(r.expansion_residual, max_entry(Matrix(lhs - rhs)));

    const Matrix a = lx * lix * e;
    const Matrix pa = a.adjoint() * a;
    r.partial_isometry_residual =
        std::max({r.partial_isometry_residual, max_entry(Matrix(pa * pa - pa)), max_entry(Matrix(a * pa - a))});

    const Matrix b = lix * lx * e;
    r.factorization_residual =
        std::max(r.factorization_residual, max_entry(Matrix(lx * lx.adjoint() * e - b * b.adjoint())));
  }

  // Diagonal monomials (digits 0 and 3 only) applied to Ω.
  std::vector<Eigen::Index> cols;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    bool diag = true;
    for (Element x = 0; x < system_.base_size(); ++x) {
      const int d = basis_.digit(i, x);
      diag = diag && (d == 0 || d == 3);
    }
    if (diag) cols.push_back(static_cast<Eigen::Index>(i));
  }
  Matrix span(dimension(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) span.col(static_cast<Eigen::Index>(j)) = basis_.vacuum_images().col(cols[j]);
  Eigen::HouseholderQR<Matrix> qr(span);
  const Matrix q = qr.householderQ() * Matrix::Identity(dimension(), span.cols());
  r.span_residual = max_entry(Matrix(q * q.adjoint() - e));
  return r;
}

}  // namespace afock
