// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/crossed_product.hpp>

#include <afock/linalg.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <random>

namespace afock {

CrossedRep::CrossedRep(const BernoulliModel& model, Eigen::Index cap)
    : model_(&model), n_(model.action().order()), d_(model.dimension()) {
  if (static_cast<Eigen::Index>(n_) * d_ > cap) {
    throw InputError("crossed product: dimension " + std::to_string(static_cast<Eigen::Index>(n_) * d_) +
                     " exceeds the cap " + std::to_string(cap));
  }
  const auto& act = model.action();
  const Matrix& jm = model.car().modular_conjugation().matrix();
  j_ = BlockOperator(n_, d_, Linearity::antilinear);
  for (std::size_t h = 0; h < n_; ++h) {
    j_.add_block(h, act.inverse(h), model.standard_implementation(h).matrix() * jm);
  }

  const auto& idx = model.system().index();
  for (std::size_t s : act.generators()) {
    left_.push_back(left_group(s));
    left_names_.push_back("U" + act.describe(s) + "⊗λ");
    right_.push_back(right_group(s));
    right_names_.push_back("1⊗ρ" + act.describe(s));
  }
  const FockOperator jop = model.car().modular_conjugation();
  for (Element x = 0; x < idx.size(); ++x) {
    const FockOperator c = model.car().car(x);
    left_.push_back(left_algebra(c.matrix()));
    left_names_.push_back("c(" + idx.label(x) + ")⊗1");
    right_.push_back(right_algebra((jop * c * jop).matrix()));
    right_names_.push_back("π_r(J c(" + idx.label(x) + ") J)");
  }
}

BlockOperator CrossedRep::left_group(std::size_t g) const {
  const auto& act = model_->action();
  BlockOperator b(n_, d_);
  const Matrix& u = model_->standard_implementation(g).matrix();
  for (std::size_t k = 0; k < n_; ++k) b.add_block(act.multiply(g, k), k, u);
  return b;
}

BlockOperator CrossedRep::left_algebra(const Matrix& a) const {
  BlockOperator b(n_, d_);
  for (std::size_t k = 0; k < n_; ++k) b.add_block(k, k, a);
  return b;
}

BlockOperator CrossedRep::right_group(std::size_t g) const {
  const auto& act = model_->action();
  BlockOperator b(n_, d_);
  const std::size_t gi = act.inverse(g);
  for (std::size_t k = 0; k < n_; ++k) b.add_block(act.multiply(k, gi), k, Matrix::Identity(d_, d_));
  return b;
}

BlockOperator CrossedRep::right_algebra(const Matrix& m) const {
  BlockOperator b(n_, d_);
  for (std::size_t h = 0; h < n_; ++h) {
    const Matrix& u = model_->standard_implementation(h).matrix();
    b.add_block(h, h, u * m * u.adjoint());
  }
  return b;
}

BlockOperator CrossedRep::regular_left(std::size_t g) const {
  const auto& act = model_->action();
  BlockOperator b(n_, d_);
  for (std::size_t k = 0; k < n_; ++k) b.add_block(act.multiply(g, k), k, Matrix::Identity(d_, d_));
  return b;
}

// ---------------------------------------------------------------------------

std::vector<Matrix> fock_commutant_basis(const CarAlgebra& car, std::uint64_t seed) {
  const Eigen::Index dim = car.dimension();
  const std::size_t k = car.base_size();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;

  // A generic self-adjoint element of M: random combination of all monomials.
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= 4;
  Matrix a = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < count; ++i) {
    Matrix m = Matrix::Identity(dim, dim);
    std::size_t code = i;
    for (Element x = 0; x < k; ++x, code /= 4) {
      const Matrix c = car.car(x).matrix();
      switch (code % 4) {
        case 1: m = m * c; break;
        case 2: m = m * c.adjoint(); break;
        case 3: m = m * (c.adjoint() * c); break;
        default: break;
      }
    }
    a += cplx(normal(rng), normal(rng)) * m;
  }
  const Matrix h = a + a.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Matrix& v = es.eigenvectors();
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  const auto clusters = linalg::cluster_spectrum(es.eigenvalues(), 1e-8 * scale);

  // The commutant of h is block diagonal in its eigenbasis; enumerate its matrix units.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> units;
  for (const auto& [start, len] : clusters) {
    for (Eigen::Index i = start; i < start + len; ++i) {
      for (Eigen::Index j = start; j < start + len; ++j) units.emplace_back(i, j);
    }
  }
  const auto nu = static_cast<Eigen::Index>(units.size());

  // Gram matrix of T ↦ ([T, c_x])_x restricted to those units, assembled sparsely.
  Matrix gram = Matrix::Zero(nu, nu);
  for (Element x = 0; x < car.index().size(); ++x) {
    const Matrix c = v.adjoint() * car.car(x).matrix() * v;
    std::vector<Eigen::Triplet<cplx>> trip;
    for (Eigen::Index u = 0; u < nu; ++u) {
      const auto [ra, cb] = units[static_cast<std::size_t>(u)];
      // [E_ab, c] = E_a· c_{b·} − c_{·a} E_·b, column-major vec index i + j·dim.
      for (Eigen::Index j = 0; j < dim; ++j) {
        if (c(cb, j) != cplx{}) trip.emplace_back(ra + j * dim, u, c(cb, j));
      }
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (c(i, ra) != cplx{}) trip.emplace_back(i + cb * dim, u, -c(i, ra));
      }
    }
    SparseMatrix cm(dim * dim, nu);
    cm.setFromTriplets(trip.begin(), trip.end());
    cm.prune(1e-14, 1.0);
    const SparseMatrix g = SparseMatrix(cm.adjoint()) * cm;
    gram += Matrix(g);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> gs(gram);
  const double gmax = std::max(1.0, gs.eigenvalues().cwiseAbs().maxCoeff());

  std::vector<Matrix> basis;
  for (Eigen::Index e = 0; e < nu; ++e) {
    if (gs.eigenvalues()[e] > 1e-9 * gmax) continue;
    Matrix t = Matrix::Zero(dim, dim);
    for (Eigen::Index u = 0; u < nu; ++u) {
      const auto [ra, cb] = units[static_cast<std::size_t>(u)];
      t(ra, cb) = gs.eigenvectors()(u, e);
    }
    basis.push_back(v * t * v.adjoint());
  }
  for (const auto& t : basis) {
    for (Element x = 0; x < car.index().size(); ++x) {
      const Matrix c = car.car(x).matrix();
      if (max_entry(Matrix(t * c - c * t)) > 1e-8) {
        throw VerificationError("commutant basis: kernel element fails to commute with c(" +
                                car.index().label(x) + ")");
      }
    }
  }
  return basis;
}

namespace {

std::size_t grade_of(const GroupAction& act, std::size_t i, std::size_t j) {
  return act.multiply(act.inverse(i), j);
}

/// Grade of a homogeneous block operator, blocks (i, j) with i⁻¹j fixed.
std::size_t homogeneous_grade(const GroupAction& act, const BlockOperator& b) {
  if (b.blocks().empty()) return act.identity();
  const std::size_t g = grade_of(act, b.blocks().begin()->first.first, b.blocks().begin()->first.second);
  for (const auto& [key, m] : b.blocks()) {
    if (grade_of(act, key.first, key.second) != g) {
      throw VerificationError("right algebra closure: product left the graded pieces");
    }
  }
  return g;
}

/// The blocks of grade g, ordered by column: (j g⁻¹, j).
Vector graded_flatten(const GroupAction& act, const BlockOperator& b, std::size_t g) {
  const Eigen::Index d = b.block_dim();
  const Eigen::Index bs = d * d;
  const std::size_t gi = act.inverse(g);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(b.grid()) * bs);
  for (std::size_t j = 0; j < b.grid(); ++j) {
    auto it = b.blocks().find({act.multiply(j, gi), j});
    if (it == b.blocks().end()) continue;
    v.segment(static_cast<Eigen::Index>(j) * bs, bs) = Eigen::Map<const Vector>(it->second.data(), bs);
  }
  return v;
}

}  // namespace

DimensionReport crossed_dimensions(const CrossedRep& rep, std::size_t budget) {
  const BernoulliModel& model = rep.model();
  const GroupAction& act = model.action();
  const std::size_t n = rep.group_order();
  const Eigen::Index d = rep.block_dim();
  const std::size_t dd = static_cast<std::size_t>(d * d);
  // The right algebra is expected to have dimension |G|·dim F; its span stores that many graded vectors.
  if (n * static_cast<std::size_t>(d) * n * dd > budget) {
    throw InputError("crossed dimensions: scenario too large for the rank computations");
  }
  DimensionReport r;

  // Commutant of the left algebra. Blocks t_ab lie in M′ and satisfy t_{sa,sb} = Ad U_s(t_ab).
  const std::vector<Matrix> mc = fock_commutant_basis(model.car());
  const auto dc = static_cast<Eigen::Index>(mc.size());
  r.fock_commutant = mc.size();
  std::map<std::size_t, Matrix> ad;
  for (std::size_t s : act.generators()) {
    const Matrix& u = model.standard_implementation(s).matrix();
    Matrix a(dc, dc);
    for (Eigen::Index j = 0; j < dc; ++j) {
      const Matrix img = u * mc[static_cast<std::size_t>(j)] * u.adjoint();
      Matrix rest = img;
      for (Eigen::Index i = 0; i < dc; ++i) {
        a(i, j) = (mc[static_cast<std::size_t>(i)].adjoint() * img).trace();
        rest -= a(i, j) * mc[static_cast<std::size_t>(i)];
      }
      r.action_residual = std::max(r.action_residual, max_entry(rest));
    }
    ad.emplace(s, std::move(a));
  }
  std::vector<bool> seen(n * n, false);
  for (std::size_t root = 0; root < n * n; ++root) {
    if (seen[root]) continue;
    std::map<std::size_t, Matrix> transport;
    std::vector<Matrix> constraints;
    std::queue<std::size_t> q;
    transport.emplace(root, Matrix::Identity(dc, dc));
    seen[root] = true;
    q.push(root);
    while (!q.empty()) {
      const std::size_t node = q.front();
      q.pop();
      const std::size_t a = node / n;
      const std::size_t b = node % n;
      for (std::size_t s : act.generators()) {
        const std::size_t next = act.multiply(s, a) * n + act.multiply(s, b);
        const Matrix moved = ad.at(s) * transport.at(node);
        auto it = transport.find(next);
        if (it == transport.end()) {
          transport.emplace(next, moved);
          seen[next] = true;
          q.push(next);
        } else {
          constraints.push_back(moved - it->second);
        }
      }
    }
    Matrix stacked(static_cast<Eigen::Index>(constraints.size()) * dc, dc);
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      stacked.middleRows(static_cast<Eigen::Index>(i) * dc, dc) = constraints[i];
    }
    r.commutant += mc.size() - (constraints.empty() ? 0 : linalg::numerical_rank(stacked, 1e-9));
  }

  // Algebra generated by the right generators: closure from 1, graded by i⁻¹j.
  const auto len = static_cast<Eigen::Index>(n * dd);
  std::vector<HSSpan> spans;
  spans.reserve(n);
  for (std::size_t g = 0; g < n; ++g) spans.emplace_back(len, static_cast<std::size_t>(dc));
  std::vector<BlockOperator> frontier{BlockOperator::identity(n, d)};
  spans[act.identity()].add(graded_flatten(act, frontier.front(), act.identity()));
  while (!frontier.empty()) {
    std::map<std::size_t, std::vector<BlockOperator>> by_grade;
    for (const auto& f : frontier) {
      for (const auto& gen : rep.right_generators()) {
        BlockOperator c = gen * f;
        if (c.blocks().empty()) continue;
        by_grade[homogeneous_grade(act, c)].push_back(std::move(c));
      }
    }
    frontier.clear();
    for (auto& [g, cands] : by_grade) {
      Matrix cols(len, static_cast<Eigen::Index>(cands.size()));
      for (std::size_t i = 0; i < cands.size(); ++i) {
        cols.col(static_cast<Eigen::Index>(i)) = graded_flatten(act, cands[i], g);
      }
      const std::vector<bool> added = spans[g].add_batch(cols);
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (added[i]) frontier.push_back(std::move(cands[i]));
      }
    }
    std::size_t total = 0;
    for (const auto& s : spans) total += s.size();
    if (total * static_cast<std::size_t>(len) > budget) {
      throw InputError("crossed dimensions: right algebra exceeds the rank budget");
    }
  }
  for (const auto& s : spans) r.right_algebra += s.size();

  // J·(left generator)·J against the graded span.
  const BlockOperator& j = rep.conjugation();
  for (const auto& gen : rep.left_generators()) {
    const BlockOperator t = j * gen * j;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t g = 0; g < n; ++g) {
      const Vector piece = graded_flatten(act, t, g);
      const double pn = piece.norm();
      if (pn == 0.0) continue;
      const double dist = spans[g].relative_distance(piece) * pn;
      num += dist * dist;
      den += pn * pn;
    }
    r.membership.push_back(den == 0.0 ? 0.0 : std::sqrt(num / den));
  }
  return r;
}

CrossedCommutationReport commutation_suite(const CrossedRep& rep) {
  CrossedCommutationReport r;
  const auto& act = rep.model().action();
  const std::size_t n = rep.group_order();
  const Eigen::Index d = rep.block_dim();
  const BlockOperator one = BlockOperator::identity(n, d);
  const BlockOperator& j = rep.conjugation();

  for (std::size_t a = 0; a < rep.left_generators().size(); ++a) {
    for (std::size_t b = 0; b < rep.right_generators().size(); ++b) {
      const double e = commutator(rep.left_generators()[a], rep.right_generators()[b]).max_entry();
      if (e > r.left_right || r.worst_pair.empty()) {
        r.left_right = std::max(r.left_right, e);
        r.worst_pair = rep.left_names()[a] + " vs " + rep.right_names()[b];
      }
    }
  }

  r.j_square = (j * j - one).max_entry();
  r.j_unitary = std::max((j.adjoint() * j - one).max_entry(), (j * j.adjoint() - one).max_entry());
  r.j_identity_block =
      max_entry(Matrix(j.block(act.identity(), act.identity()) - rep.model().car().modular_conjugation().matrix()));

  const FockOperator jm = rep.model().car().modular_conjugation();
  for (Element x = 0; x < rep.model().system().index().size(); ++x) {
    const FockOperator c = rep.model().car().car(x);
    const BlockOperator lhs = j * rep.left_algebra(c.matrix()) * j;
    r.j_left_algebra = std::max(r.j_left_algebra, (lhs - rep.right_algebra((jm * c * jm).matrix())).max_entry());
  }
  for (std::size_t g = 0; g < n; ++g) {
    const BlockOperator u = rep.left_group(g);
    const BlockOperator rho = rep.right_group(g);
    r.j_left_group = std::max(r.j_left_group, (j * u * j - rho).max_entry());
    const BlockOperator w = u * rho;
    r.j_implementation = std::max(r.j_implementation, (w * j - j * w).max_entry());
    r.j_inner_unitary = std::max(r.j_inner_unitary, (u * j - j * u).max_entry());
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = act.multiply(g, h);
      r.regular = std::max(r.regular, (rep.regular_left(g) * rep.regular_left(h) - rep.regular_left(gh)).max_entry());
      r.regular = std::max(r.regular, (rho * rep.right_group(h) - rep.right_group(gh)).max_entry());
    }
  }
  return r;
}

}  // namespace afock
