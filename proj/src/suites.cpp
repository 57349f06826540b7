// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/suites.hpp>

#include <afock/boundary.hpp>
#include <afock/crossed_product.hpp>
#include <afock/kakutani.hpp>
#include <afock/key_decomposition.hpp>
#include <afock/linalg.hpp>
#include <afock/wick.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <iostream>
#include <limits>
#include <numeric>
#include <random>
#include <set>

namespace afock {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string describe_set(const IndexSet& idx, const std::vector<Element>& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + idx.label(f[i]);
  return out + "}";
}

std::string group_label(const GroupAction& act, std::size_t g) {
  const std::string d = act.describe(g);
  return d.empty() ? "e" : d;
}

/// Uniform random subset of {0..n-1} of the given size, sorted.
std::vector<Element> random_subset(std::size_t n, std::size_t size, std::mt19937_64& rng) {
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), Element{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

FockOperator word_operator(const CarAlgebra& car, const std::vector<Element>& word) {
  FockOperator a = FockOperator::identity(car.dimension());
  for (Element x : word) a = a * car.car(x);
  return a;
}

}  // namespace

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite) {
  // FNV-1a over the name, folded with the scenario seed through splitmix64.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : suite) h = (h ^ c) * 1099511628211ull;
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool suite_needs_model(const std::string& suite) { return suite != "boundary" && suite != "kakutani"; }

// ---------------------------------------------------------------------------
// car
//
// Products are taken in sparse form: at |X0| = 4 the dense versions dominate the run time.

namespace {

double sparse_max(const SparseMatrix& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) v = std::max(v, std::abs(it.value()));
  }
  return v;
}

SparseMatrix sparse_identity(Eigen::Index dim) {
  SparseMatrix id(dim, dim);
  id.setIdentity();
  return id;
}

SparseMatrix sparse_of(const FockOperator& a) { return a.matrix().sparseView(); }

/// Matrix of the linear operator J A J, J = (M, antilinear): v ↦ M conj(A) conj(M) v.
SparseMatrix conjugate_by(const SparseMatrix& m, const SparseMatrix& a) {
  return m * SparseMatrix(a.conjugate()) * SparseMatrix(m.conjugate());
}

SparseMatrix sparse_combination(const CarAlgebra& car, const Vector& xi) {
  SparseMatrix out(car.dimension(), car.dimension());
  for (Element x = 0; x < car.index().size(); ++x) out += xi[x] * car.car_sparse(x);
  return out;
}

}  // namespace

SuiteResult run_car(const Scenario& s, const BernoulliModel& model, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "car";
  std::mt19937_64 rng(seed);
  const CarAlgebra& car = model.car();
  const IndexSet& idx = car.index();
  const auto& rep = car.rep();
  const std::size_t k = idx.base_size();
  const Eigen::Index dim = car.dimension();
  const SparseMatrix one = sparse_identity(dim);
  const double tol = s.tol.car;

  double ac = 0.0;
  double aa = 0.0;
  for (Element x = 0; x < k; ++x) {
    for (Element y = 0; y < k; ++y) {
      const SparseMatrix& cx = car.car_sparse(x);
      const SparseMatrix& cy = car.car_sparse(y);
      const SparseMatrix cys = cy.adjoint();
      SparseMatrix acomm = cx * cys;
      acomm += cys * cx;
      if (x == y) acomm -= one;
      ac = std::max(ac, sparse_max(acomm));
      SparseMatrix plain = cx * cy;
      plain += cy * cx;
      aa = std::max(aa, sparse_max(plain));
    }
  }
  r.check("car.anticommutation", "{c_x, c_y*} = δ_xy, x, y ∈ X0", ac, tol);
  r.check("car.anticommutation", "{c_x, c_y} = 0, x, y ∈ X0", aa, tol);

  double partner = 0.0;
  for (Element x = 0; x < k; ++x) {
    partner = std::max(partner, sparse_max(SparseMatrix(car.car_sparse(idx.partner(x)) - SparseMatrix(car.car_sparse(x).adjoint()))));
  }
  r.check("car.partner", "c_{Ix} = c_x*", partner, tol);

  // B(ξ) from its definition through ℓ, hat and I; the products in sparse form.
  double dual_star = 0.0;
  double dual_car = 0.0;
  double dual_linear = 0.0;
  for (std::size_t i = 0; i < s.samples.commutation; ++i) {
    const Vector xi = linalg::random_vector(static_cast<Eigen::Index>(idx.size()), rng);
    const Vector eta = linalg::random_vector(static_cast<Eigen::Index>(idx.size()), rng);
    const SparseMatrix bx = sparse_of(car.self_dual(xi));
    const SparseMatrix be = sparse_of(car.self_dual(eta));
    const SparseMatrix bes = be.adjoint();
    dual_star = std::max(dual_star, sparse_max(SparseMatrix(SparseMatrix(bx.adjoint()) - sparse_of(car.self_dual(rep.involution(xi))))));
    SparseMatrix acomm = bx * bes;
    acomm += bes * bx;
    acomm -= AlmostPeriodicRep::inner(xi, eta) * one;
    dual_car = std::max(dual_car, sparse_max(acomm));
    dual_linear = std::max(dual_linear, sparse_max(SparseMatrix(bx - sparse_combination(car, xi))));
  }
  r.check("car.self_dual", "B(ξ)* = B(Iξ), random complex ξ", dual_star, tol);
  r.check("car.self_dual", "B(ξ)B(η)* + B(η)*B(ξ) = ⟨ξ,η⟩1, random complex ξ, η", dual_car, tol);
  r.check("car.self_dual_linear", "B(ξ) = Σ ξ(x) c_x", dual_linear, tol);

  const std::size_t rank = linalg::numerical_rank(model.basis().vacuum_images(), 1e-10);
  const std::size_t expected = std::size_t{1} << (2 * k);
  r.require("car.algebra_dimension", "dim *-alg{c_x} = 4^|X0| = " + std::to_string(expected), rank == expected,
            "rank " + std::to_string(rank));

  double mu_rel = 0.0;
  double mu_comm = 0.0;
  std::vector<std::array<std::array<SparseMatrix, 2>, 2>> units;
  for (const auto& b : car.matrix_units()) {
    std::array<std::array<SparseMatrix, 2>, 2> e;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) e[i][j] = sparse_of(b.e[i][j]);
    }
    units.push_back(std::move(e));
  }
  for (std::size_t n = 0; n < units.size(); ++n) {
    const auto& e = units[n];
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int kk = 0; kk < 2; ++kk) {
          for (int l = 0; l < 2; ++l) {
            SparseMatrix d = e[i][j] * e[kk][l];
            if (j == kk) d -= e[i][l];
            mu_rel = std::max(mu_rel, sparse_max(d));
          }
        }
        for (std::size_t m = n + 1; m < units.size(); ++m) {
          for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
              SparseMatrix c = e[i][j] * units[m][a][b];
              c -= units[m][a][b] * e[i][j];
              mu_comm = std::max(mu_comm, sparse_max(c));
            }
          }
        }
      }
    }
    mu_rel = std::max(mu_rel, sparse_max(SparseMatrix(e[0][0] + e[1][1] - one)));
  }
  r.check("car.matrix_units", "e_ij e_kl = δ_jk e_il, e_11 + e_22 = 1", mu_rel, tol);
  r.check("car.matrix_units", "units at different labels commute", mu_comm, tol);

  const SparseMatrix jm = SparseMatrix(car.modular_conjugation().matrix().sparseView());
  double jl = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    const Vector xi = linalg::random_vector(static_cast<Eigen::Index>(idx.size()), rng);
    const SparseMatrix left = sparse_of(car.fock().create_left(xi));
    const SparseMatrix right = sparse_of(car.fock().create_right(rep.involution(xi)));
    jl = std::max(jl, sparse_max(SparseMatrix(conjugate_by(jm, left) - right)));
  }
  r.check("car.conjugation_left_right", "Jℓ(ξ)J = r(Iξ), random complex ξ", jl, tol);

  double jw = 0.0;
  for (Element x = 0; x < idx.size(); ++x) {
    const SparseMatrix right = conjugate_by(jm, car.field_sparse(x));
    for (Element y = 0; y < idx.size(); ++y) {
      SparseMatrix c = right * car.field_sparse(y);
      c -= car.field_sparse(y) * right;
      jw = std::max(jw, sparse_max(c));
    }
  }
  r.check("car.right_fields_commute", "[JW(x̂)J, W(ŷ)] = 0, x, y ∈ X", jw, tol);

  // Δ^{it} is diagonal, so the flow acts entrywise: (Δ^{it} ℓ Δ^{-it})_{ST} = δ_S^{it} ℓ_{ST} δ_T^{-it}.
  double flow = 0.0;
  for (double t : {0.3, -1.7, 2.9}) {
    const Vector dt = car.modular_unitary(t).matrix().diagonal();
    for (Element x = 0; x < idx.size(); ++x) {
      const SparseMatrix& lx = car.fock().left_creator(x);
      const cplx phase = std::exp(cplx(0.0, -t * std::log(rep.eigenvalue(x))));
      for (int c = 0; c < lx.outerSize(); ++c) {
        for (SparseMatrix::InnerIterator it(lx, c); it; ++it) {
          const cplx got = dt[it.row()] * it.value() * std::conj(dt[it.col()]);
          flow = std::max(flow, std::abs(got - phase * it.value()));
        }
      }
    }
  }
  r.check("car.modular_flow", "Δ^{it}ℓ(x)Δ^{-it} = a(x)^{-it}ℓ(x)", flow, tol);
  return r;
}

// ---------------------------------------------------------------------------
// quasifree

SuiteResult run_quasifree(const Scenario& s, const BernoulliModel& model, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "quasifree";
  std::mt19937_64 rng(seed);
  const CarAlgebra& car = model.car();
  const auto k = static_cast<Eigen::Index>(car.base_size());
  const std::size_t degree = std::max<std::size_t>(1, s.samples.moment_degree);

  double worst = 0.0;
  for (std::size_t i = 0; i < s.samples.moments; ++i) {
    const std::size_t n = 1 + i % degree;
    std::vector<Vector> xi;
    std::vector<Vector> eta;
    for (std::size_t a = 0; a < n; ++a) {
      xi.push_back(linalg::random_vector(k, rng));
      eta.push_back(linalg::random_vector(k, rng));
    }
    worst = std::max(worst, std::abs(car.moment(xi, eta) - car.quasi_free_moment(xi, eta)));
  }
  r.check("quasifree.moments", std::to_string(s.samples.moments) + " random moments, n = m ≤ " +
                                   std::to_string(degree),
          worst, s.tol.moment);

  double unequal = 0.0;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 0; m <= 2; ++m) {
      if (n == m) continue;
      std::vector<Vector> xi;
      std::vector<Vector> eta;
      for (std::size_t a = 0; a < n; ++a) xi.push_back(linalg::random_vector(k, rng));
      for (std::size_t a = 0; a < m; ++a) eta.push_back(linalg::random_vector(k, rng));
      unequal = std::max(unequal, std::abs(car.moment(xi, eta)));
    }
  }
  r.check("quasifree.degree_mismatch", "moments with n ≠ m vanish", unequal, s.tol.moment);

  // Every delta word up to degree min(|X0|, 3) on both sides.
  const std::size_t top = std::min<std::size_t>(car.base_size(), 3);
  double exhaustive = 0.0;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= top; ++n) {
    std::size_t words = 1;
    for (std::size_t a = 0; a < n; ++a) words *= car.base_size();
    for (std::size_t u = 0; u < words; ++u) {
      for (std::size_t v = 0; v < words; ++v) {
        std::vector<Vector> xi;
        std::vector<Vector> eta;
        std::size_t cu = u;
        std::size_t cv = v;
        for (std::size_t a = 0; a < n; ++a, cu /= car.base_size(), cv /= car.base_size()) {
          xi.push_back(Vector::Unit(k, static_cast<Eigen::Index>(cu % car.base_size())));
          eta.push_back(Vector::Unit(k, static_cast<Eigen::Index>(cv % car.base_size())));
        }
        exhaustive = std::max(exhaustive, std::abs(car.moment(xi, eta) - car.quasi_free_moment(xi, eta)));
        ++count;
      }
    }
  }
  r.check("quasifree.delta_words", std::to_string(count) + " delta-word moments up to degree " + std::to_string(top),
          exhaustive, s.tol.moment);
  return r;
}

// ---------------------------------------------------------------------------
// tomita

SuiteResult run_tomita(const Scenario& s, const BernoulliModel& model, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "tomita";
  std::mt19937_64 rng(seed);
  const CarAlgebra& car = model.car();
  const IndexSet& idx = car.index();
  const Eigen::Index dim = car.dimension();
  const FockOperator one = FockOperator::identity(dim);
  const FockOperator st = car.tomita();
  const Vector omega = car.fock().vacuum();
  const FockOperator& j = car.modular_conjugation();

  double gen = 0.0;
  for (Element x = 0; x < idx.size(); ++x) {
    const FockOperator c = car.car(x);
    gen = std::max(gen, (st.apply(c.apply(omega)) - c.adjoint().apply(omega)).cwiseAbs().maxCoeff());
  }
  r.check("tomita.generators", "S c_xΩ = c_x*Ω, x ∈ X", gen, s.tol.tomita);

  std::uniform_int_distribution<std::size_t> len(1, 2 * idx.base_size());
  std::uniform_int_distribution<Element> site(0, static_cast<Element>(idx.size() - 1));
  std::normal_distribution<double> normal;
  double mono = 0.0;
  for (std::size_t i = 0; i < s.samples.tomita; ++i) {
    std::vector<Element> word(len(rng));
    for (auto& x : word) x = site(rng);
    // aΩ and a*Ω by successive sparse applications; c_x* = c_{Ix}.
    const cplx z(normal(rng), normal(rng));
    Vector av = omega;
    for (auto it = word.rbegin(); it != word.rend(); ++it) av = car.car_sparse(*it) * av;
    Vector astar = omega;
    for (Element x : word) astar = car.car_sparse(idx.partner(x)) * astar;
    mono = std::max(mono, (st.apply(z * av) - std::conj(z) * astar).cwiseAbs().maxCoeff());
  }
  r.check("tomita.monomials", std::to_string(s.samples.tomita) + " random monomials: S aΩ = a*Ω", mono,
          s.tol.tomita);

  r.check("tomita.involution", "J² = 1", distance(j * j, one), s.tol.car);
  r.check("tomita.antiunitary", "J*J = 1", distance(j.adjoint() * j, one), s.tol.car);
  r.check("tomita.vacuum", "JΩ = Ω, ΔΩ = Ω",
          std::max((j.apply(omega) - omega).norm(), (car.modular_operator().apply(omega) - omega).norm()), s.tol.car);
  const FockOperator delta = car.modular_operator();
  const FockOperator inv(Matrix(delta.matrix().diagonal().cwiseInverse().asDiagonal()));
  r.check("tomita.conjugation_inverts", "JΔJ = Δ⁻¹", distance(j * delta * j, inv), s.tol.tomita);
  const Eigen::VectorXd diag = delta.matrix().diagonal().real();
  r.require("tomita.positive", "Δ is diagonal and positive",
            diag.minCoeff() > 0 && max_entry(Matrix(delta.matrix() - Matrix(delta.matrix().diagonal().asDiagonal()))) == 0);

  // The closed form applies where I preserves the order, i.e. on subsets of X0.
  bool closed = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idx.base_size()); ++mask) {
    const auto sidx = SlaterIndex::from_mask(mask);
    const auto n = static_cast<long>(sidx.size());
    const int expect = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
    closed = closed && car.conjugation_sign(sidx) == expect;
  }
  r.require("tomita.sign_closed_form", "J sign equals (-1)^{n(n-1)/2} on S ⊆ X0", closed);

  const SparseMatrix jm = j.matrix().sparseView();
  double mp = 0.0;
  for (Element x = 0; x < idx.size(); ++x) {
    const SparseMatrix right = conjugate_by(jm, car.car_sparse(x));
    for (Element y = 0; y < idx.size(); ++y) {
      SparseMatrix c = right * car.car_sparse(y);
      c -= car.car_sparse(y) * right;
      mp = std::max(mp, sparse_max(c));
    }
  }
  r.check("tomita.commutant", "[J c_x J, c_y] = 0", mp, s.tol.car);
  return r;
}

// ---------------------------------------------------------------------------
// wick

SuiteResult run_wick(const Scenario& s, const BernoulliModel& model, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "wick";
  std::mt19937_64 rng(seed);
  const CarAlgebra& car = model.car();
  const IndexSet& idx = car.index();
  const WickCalculus wick(car);

  {
    bool ok = true;
    std::vector<std::size_t> tel{1, 1};
    for (std::size_t n = 2; n <= 10; ++n) tel.push_back(tel[n - 1] + (n - 1) * tel[n - 2]);
    for (std::size_t n = 0; n <= 10; ++n) {
      const auto parts = enumerate_partitions(n);
      std::set<std::pair<std::vector<std::pair<std::size_t, std::size_t>>, std::vector<std::size_t>>> uniq;
      for (const auto& p : parts) uniq.insert({p.pairs, p.singletons});
      ok = ok && parts.size() == tel[n] && uniq.size() == parts.size();
    }
    r.require("wick.partition_count", "partition counts are the telephone numbers, n ≤ 10, no duplicates", ok);
  }

  const std::size_t top = std::min(s.samples.wick_n, idx.size());
  std::set<std::string> winners;
  std::size_t distinguishing = 0;
  double worst_winner = 0.0;
  double best_loser = std::numeric_limits<double>::infinity();
  nlohmann::json per_n = nlohmann::json::array();
  for (std::size_t n = 1; n <= top; ++n) {
    std::size_t coincide = 0;
    std::size_t failures = 0;
    std::string first_error;
    for (std::size_t t = 0; t < s.samples.wick_tuples; ++t) {
      std::vector<Vector> xs;
      for (std::size_t a = 0; a < n; ++a) xs.push_back(linalg::random_vector(static_cast<Eigen::Index>(idx.size()), rng));
      try {
        const WickExpansion e = wick.expand(xs, s.tol.wick);
        if (e.coincide) {
          ++coincide;
          worst_winner = std::max(worst_winner, e.residual_sqrt);
          continue;
        }
        ++distinguishing;
        winners.insert(to_string(e.winner));
        const bool sq = e.winner == WickNormalization::sqrt_factorial;
        worst_winner = std::max(worst_winner, sq ? e.residual_sqrt : e.residual_inverse_sqrt);
        best_loser = std::min(best_loser, sq ? e.residual_inverse_sqrt : e.residual_sqrt);
      } catch (const VerificationError& err) {
        ++failures;
        if (first_error.empty()) first_error = err.what();
      }
    }
    per_n.push_back({{"n", n}, {"tuples", s.samples.wick_tuples}, {"coincide", coincide}, {"failures", failures}});
    r.require("wick.unique_candidate",
              "n = " + std::to_string(n) + ": exactly one normalisation matches, " +
                  std::to_string(s.samples.wick_tuples) + " random complex tuples",
              failures == 0 && (n < 2 ? coincide == s.samples.wick_tuples : coincide == 0), first_error);
  }
  r.check("wick.winner_residual", "winning expansion vs dense product", worst_winner, s.tol.wick);
  if (distinguishing > 0) {
    r.record("wick.loser_residual", "smallest residual of the losing normalisation", best_loser, s.tol.wick,
             "must exceed the tolerance");
    r.require("wick.loser_separated", "losing normalisation is off by more than the tolerance", best_loser > s.tol.wick);
  }
  r.require("wick.uniform_winner", "the same normalisation wins for every tuple", winners.size() == 1);
  r.records["wick.resolution"] = {
      {"winner", winners.size() == 1 ? *winners.begin() : std::string("unresolved")},
      {"distinguishing_tuples", distinguishing},
      {"per_n", per_n},
  };
  r.records["wick.winner"] = winners.size() == 1 ? *winners.begin() : std::string("unresolved");

  // Delta tuples: distinct elements of X; the expansion and the recursive construction.
  double delta_res = 0.0;
  double recursive = 0.0;
  std::size_t delta_fail = 0;
  for (std::size_t n = 1; n <= top; ++n) {
    for (std::size_t t = 0; t < std::max<std::size_t>(1, s.samples.wick_tuples / 5); ++t) {
      std::vector<Element> xs = random_subset(idx.size(), n, rng);
      std::shuffle(xs.begin(), xs.end(), rng);
      try {
        const WickExpansion e = wick.expand(std::span<const Element>(xs), s.tol.wick);
        delta_res = std::max(delta_res, e.winner == WickNormalization::sqrt_factorial || e.coincide
                                            ? e.residual_sqrt
                                            : e.residual_inverse_sqrt);
        if (!e.coincide && to_string(e.winner) != (winners.empty() ? "" : *winners.begin())) ++delta_fail;
      } catch (const VerificationError&) {
        ++delta_fail;
      }
      const auto d = wick.deltas(xs);
      recursive = std::max(recursive, distance(wick.wick_word(std::span<const Element>(xs)),
                                               wick.wick_word_recursive(d, WickNormalization::sqrt_factorial)));
    }
  }
  r.check("wick.delta_tuples", "δ̂ tuples of distinct labels follow the same winner", delta_res, s.tol.wick,
          std::to_string(delta_fail) + " disagreements");
  r.require("wick.delta_agreement", "no δ̂ tuple contradicts the winner", delta_fail == 0);
  r.check("wick.recursive_cross_check", "linear-solve Wick word vs recursive construction", recursive, s.tol.wick);
  return r;
}

// ---------------------------------------------------------------------------
// keylemma (Radon–Nikodym derivative, standard implementation, decomposition)

SuiteResult run_keylemma(const Scenario& s, const BernoulliModel& model, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "keylemma";
  std::mt19937_64 rng(seed);
  const BernoulliSystem& sys = model.system();
  const GroupAction& act = model.action();
  const CarAlgebra& car = model.car();
  const IndexSet& idx = car.index();
  const Eigen::Index dim = model.dimension();
  const FockOperator one = FockOperator::identity(dim);
  const FockOperator& j = car.modular_conjugation();
  const auto& tol = s.tol;
  const std::size_t n = act.order();

  // Radon–Nikodym ordering.
  const auto& ord = model.ordering();
  r.records["rn.ordering"] = {{"chosen", to_string(ord.chosen)},
                              {"coincide", ord.coincide},
                              {"residual_occupied", ord.residual_occupied},
                              {"residual_vacant", ord.residual_vacant}};
  const double chosen = ord.chosen == RadonNikodymOrdering::occupied ? ord.residual_occupied : ord.residual_vacant;
  const double other = ord.chosen == RadonNikodymOrdering::occupied ? ord.residual_vacant : ord.residual_occupied;
  r.check("rn.state_identity", "φ∘α_g⁻¹ = φ(·h_g) on all monomials, all g, ordering " + to_string(ord.chosen),
          chosen, tol.rn_state);
  if (sys.generic() && n > 1) {
    r.require("rn.unique_ordering", "generic system: the other ordering fails", !ord.coincide && other > tol.rn_state,
              "other residual " + format_number(other));
  } else {
    r.record("rn.other_ordering", "residual of the other ordering", other, tol.rn_state,
             ord.coincide ? "candidates coincide on this system" : "");
  }

  double norm = 0.0;
  double cocycle = 0.0;
  double positive = std::numeric_limits<double>::infinity();
  double spectrum = 0.0;
  double diag_span = 0.0;
  double unitary = 0.0;
  double mult = 0.0;
  double commutes = 0.0;
  double perm = 0.0;
  double ad = 0.0;
  double intertwine = 0.0;
  double multiplier = 0.0;
  double restriction = 0.0;
  for (std::size_t g = 0; g < n; ++g) {
    const FockOperator& h = model.radon_nikodym(g);
    norm = std::max(norm, std::abs(car.vacuum_state(h) - 1.0));
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const FockOperator lhs = model.radon_nikodym(act.multiply(g, k2));
      const FockOperator rhs = model.alpha(g, model.radon_nikodym(k2)) * h;
      cocycle = std::max(cocycle, distance(lhs, rhs));
      mult = std::max(mult, distance(model.standard_implementation(g) * model.standard_implementation(k2),
                                     model.standard_implementation(act.multiply(g, k2))));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
    positive = std::min(positive, es.eigenvalues().minCoeff());
    // Spectrum: the products of the per-site ratios.
    std::vector<double> expect{1.0};
    const std::size_t gi = act.inverse(g);
    for (Element x = 0; x < sys.base_size(); ++x) {
      const Element y = act.act(gi, x);
      const double rp = to_double(Rational(sys.p(y) / sys.p(x)));
      const double rq = to_double(Rational(sys.q(y) / sys.q(x)));
      std::vector<double> next;
      for (double v : expect) {
        next.push_back(v * rp);
        next.push_back(v * rq);
      }
      expect = std::move(next);
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                 expect.end());
    std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    got.erase(std::unique(got.begin(), got.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }), got.end());
    if (got.size() != expect.size()) {
      spectrum = std::max(spectrum, 1.0);
    } else {
      for (std::size_t i = 0; i < got.size(); ++i) spectrum = std::max(spectrum, std::abs(got[i] - expect[i]));
    }
    double res = 0.0;
    const Vector coeffs = model.basis().expand(h, &res);
    double off = res;
    for (std::size_t i = 0; i < model.basis().size(); ++i) {
      bool diagonal = true;
      for (Element x = 0; x < sys.base_size(); ++x) {
        const int d = model.basis().digit(i, x);
        diagonal = diagonal && (d == 0 || d == 3);
      }
      if (!diagonal) off = std::max(off, std::abs(coeffs[static_cast<Eigen::Index>(i)]));
    }
    diag_span = std::max(diag_span, off);

    const FockOperator& u = model.standard_implementation(g);
    unitary = std::max(unitary, std::max(distance(u.adjoint() * u, one), distance(u * u.adjoint(), one)));
    commutes = std::max(commutes, distance(u * j, j * u));
    if (sys.support(g).empty()) perm = std::max(perm, distance(u, model.permutation(g)));
    // U c U* = c' checked as U c = c' U, which is equivalent for unitary U and keeps one factor sparse.
    for (Element x = 0; x < idx.size(); ++x) {
      const SparseMatrix& c = car.car_sparse(x);
      const SparseMatrix& cg = car.car_sparse(act.on_full(g)[x]);
      ad = std::max(ad, max_entry(Matrix(u.matrix() * c - cg * u.matrix())));
      const SparseMatrix n0 = SparseMatrix(c.adjoint()) * c;
      const SparseMatrix ng = SparseMatrix(cg.adjoint()) * cg;
      restriction = std::max(restriction, max_entry(Matrix(u.matrix() * n0 - ng * u.matrix())));
    }
    const FockOperator jhjv = model.conjugated_rn_sqrt(g) * model.shift_operator(g);
    for (std::uint64_t mask = 0; mask < static_cast<std::uint64_t>(dim); ++mask) {
      if (std::popcount(mask) > 1) continue;
      const Vector b = car.fock().basis_vector(SlaterIndex::from_mask(mask));
      intertwine = std::max(intertwine, (u.apply(b) - jhjv.apply(b)).norm());
    }
    multiplier = std::max(multiplier, distance(model.shift_operator(g), model.multiplier_operator(g) * model.permutation(g)));
  }
  r.check("rn.normalisation", "φ(h_g) = 1, all g", norm, tol.rn_normalisation);
  r.check("rn.cocycle", "h_{gk} = α_g(h_k) h_g, all g, k", cocycle, tol.cocycle);
  r.require("rn.positive", "h_g is positive and invertible", positive > 0, "min eigenvalue " + format_number(positive));
  r.check("rn.spectrum", "spec h_g = products of p- and q-ratios", spectrum, 1e-9);
  r.check("rn.diagonal_span", "h_g lies in the span of diagonal monomials", diag_span, tol.key_max);
  r.check("implementation.unitary", "U_g unitary, all g", unitary, tol.unitary);
  r.check("implementation.multiplicative", "U_g U_k = U_{gk}, all g, k", mult, tol.multiplicative);
  r.check("implementation.commutes_j", "U_g J = J U_g, all g", commutes, tol.commutes_j);
  r.check("implementation.measure_preserving", "U_g = π_g when supp(g) = ∅", perm, tol.permutation);
  r.check("implementation.covariance", "U_g c_x = c_{gx} U_g", ad, tol.key_max);
  r.check("implementation.bernoulli_restriction", "U_g c_x*c_x = c_{gx}*c_{gx} U_g", restriction, tol.key_max);
  r.check("implementation.intertwining", "U_g = J h_g^{1/2} J V_g on the 0- and 1-particle sectors", intertwine,
          tol.key_max);
  r.check("shift.multiplier", "V_g = ι(f_g) π_g", multiplier, tol.permutation);

  double hom = 0.0;
  double star = 0.0;
  std::uniform_int_distribution<std::size_t> pick_g(0, n - 1);
  std::uniform_int_distribution<Element> site(0, static_cast<Element>(idx.size() - 1));
  std::uniform_int_distribution<std::size_t> len(1, 3);
  for (std::size_t i = 0; i < s.samples.alpha_products; ++i) {
    const std::size_t g = pick_g(rng);
    std::vector<Element> wa(len(rng));
    std::vector<Element> wb(len(rng));
    for (auto& x : wa) x = site(rng);
    for (auto& x : wb) x = site(rng);
    const FockOperator a = word_operator(car, wa);
    const FockOperator b = word_operator(car, wb);
    hom = std::max(hom, distance(model.alpha(g, a * b), model.alpha(g, a) * model.alpha(g, b)));
    star = std::max(star, distance(model.alpha(g, a.adjoint()), model.alpha(g, a).adjoint()));
  }
  r.check("alpha.multiplicative", "α_g(ab) = α_g(a)α_g(b) on random products", hom, tol.key_max);
  r.check("alpha.star", "α_g(a*) = α_g(a)* on random products", star, tol.key_max);

  const BoundaryIdentityReport bi = model.bernoulli_boundary_identities();
  r.check("bernoulli.expansion", "2c_x c_x* four-term expansion", bi.expansion_residual, s.tol.car);
  r.check("bernoulli.partial_isometry", "ℓ(x)ℓ(Ix)e is a partial isometry", bi.partial_isometry_residual, s.tol.car);
  r.check("bernoulli.factorisation", "ℓ(x)ℓ(x)*e factorisation", bi.factorization_residual, s.tol.car);
  r.check("bernoulli.span", "range(e) = span of diagonal monomials applied to Ω", bi.span_residual, tol.key_max);

  // Decomposition.
  const KeyDecomposition kd(model);
  double pair_iso = 0.0;
  double z_inv = 0.0;
  double z_in_alg = 0.0;
  for (Element x = 0; x < sys.base_size(); ++x) {
    const PairIsometries pi = kd.pair_isometries(x);
    pair_iso = std::max(pair_iso, distance(pi.v * pi.v.adjoint() * pi.v, pi.v));
    pair_iso = std::max(pair_iso, distance(pi.w * pi.w.adjoint() * pi.w, pi.w));
    pair_iso = std::max(pair_iso, distance(pi.v * pi.v.adjoint() + pi.w * pi.w.adjoint(), one));
    const FockOperator z = kd.scaling_element(x);
    const FockOperator c = car.car(x);
    const double dx2 = std::pow(car.rep().scale(x), 2);
    const double dix2 = std::pow(car.rep().scale(idx.partner(x)), 2);
    const FockOperator zi = (1.0 / dx2) * (c * c.adjoint()) - (1.0 / dix2) * (c.adjoint() * c);
    z_inv = std::max(z_inv, std::max(distance(z * zi, one), distance(zi * z, one)));
  }
  std::size_t sector_count = 0;
  double sector = 0.0;
  double resolution = 0.0;
  double orthogonal = 0.0;
  double sector_diag = 0.0;
  double decomposition_max = 0.0;
  double decomposition_spec = 0.0;
  double per_f = 0.0;
  double alpha_z = 0.0;
  double vanishing = 0.0;
  double sharp = 0.0;
  std::string sharp_where;
  std::string witness;
  std::size_t admissible_count = 0;
  std::size_t inadmissible_count = 0;
  std::size_t term_mismatch = 0;
  for (std::size_t g = 0; g < n; ++g) {
    const auto supp = sys.support(g);
    const auto fs = subsets(supp);
    std::vector<FockOperator> ps;
    for (const auto& f : fs) {
      const SectorProjection sp = kd.sector_projection(g, f);
      sector = std::max(sector, sp.residual);
      const Matrix& m = sp.product.matrix();
      sector_diag = std::max(sector_diag, max_entry(Matrix(m - Matrix(m.diagonal().asDiagonal()))));
      ps.push_back(sp.product);
      ++sector_count;
      const FockOperator zf = kd.scaling_product(f);
      double res = 0.0;
      (void)model.basis().expand(zf, &res);
      z_in_alg = std::max(z_in_alg, res);
    }
    for (std::size_t a = 0; a < ps.size(); ++a) {
      for (std::size_t b = a + 1; b < ps.size(); ++b) orthogonal = std::max(orthogonal, max_entry(ps[a] * ps[b]));
    }
    resolution = std::max(resolution, kd.resolution_residual(g));

    const DecompositionCertificate cert = kd.decompose(g);
    if (cert.terms.size() != fs.size()) ++term_mismatch;
    if (cert.residual_max > decomposition_max) witness = group_label(act, g) + " " + cert.witness;
    decomposition_max = std::max(decomposition_max, cert.residual_max);
    decomposition_spec = std::max(decomposition_spec, cert.residual_spectral);
    for (const auto& t : cert.terms) {
      per_f = std::max(per_f, t.sector_residual);
      alpha_z = std::max(alpha_z, t.alpha_residual);
    }

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idx.size()); ++mask) {
      const auto fv = SlaterIndex::from_mask(mask);
      const std::vector<Element> f(fv.begin(), fv.end());
      const double res = kd.vanishing_residual(g, f);
      if (kd.admissible(g, f)) {
        vanishing = std::max(vanishing, res);
        ++admissible_count;
      } else {
        ++inadmissible_count;
        if (res > sharp) {
          sharp = res;
          sharp_where = group_label(act, g) + " F=" + describe_set(idx, f);
        }
      }
    }
  }
  r.check("keylemma.pair_isometries", "v, w partial isometries, vv* + ww* = 1", pair_iso, s.tol.car);
  r.check("keylemma.scaling_inverse", "Z_x invertible with the closed-form inverse", z_inv, s.tol.car);
  r.check("keylemma.scaling_in_algebra", "Z_F lies in the span of the monomial basis", z_in_alg, tol.key_max);
  r.check("keylemma.sector_basis", std::to_string(sector_count) + " sector projections: product = combinatorial range",
          sector, tol.resolution);
  r.check("keylemma.sector_diagonal", "P_{g,F} diagonal in the Slater basis", sector_diag, tol.resolution);
  r.check("keylemma.resolution", "‖1 − Σ_F P_{g,F}‖, all g", resolution, tol.resolution);
  r.check("keylemma.orthogonality", "P_{g,F} P_{g,F'} = 0 for F ≠ F'", orthogonal, tol.resolution);
  r.require("keylemma.term_count", "2^|supp(g)| terms per certificate", term_mismatch == 0);
  r.check("keylemma.decomposition", "full identity, max entry, all g", decomposition_max, tol.key_max, witness);
  r.check("keylemma.decomposition_spectral", "full identity, spectral norm, all g", decomposition_spec,
          tol.key_spectral);
  r.check("keylemma.per_sector", "U_g P_{g,F} = J h^{1/2} J α_g(Z_F) V_g Z_F⁻¹ P_{g,F}", per_f, tol.key_max);
  r.check("keylemma.alpha_scaling", "α_g(Z_F) U_g = U_g Z_F", alpha_z, tol.key_max);
  r.check("keylemma.vanishing", std::to_string(admissible_count) + " admissible (g, F)", vanishing, tol.vanishing);
  if (inadmissible_count > 0) {
    r.record("keylemma.vanishing_sharpness", "largest residual over inadmissible (g, F)", sharp, tol.sharpness,
             sharp > tol.sharpness ? "nonvanishing witness " + sharp_where : "no witness above threshold");
  }
  r.records["keylemma.sharpness_witness"] = sharp_where;

  // Z_F action and the pair-annihilation identity on sampled wedges.
  double zf = 0.0;
  double pa = 0.0;
  for (std::size_t i = 0; i < s.samples.zf; ++i) {
    const std::size_t fsize = std::uniform_int_distribution<std::size_t>(0, sys.base_size())(rng);
    const std::vector<Element> f = random_subset(sys.base_size(), fsize, rng);
    std::vector<Element> free;
    for (Element y = 0; y < idx.size(); ++y) {
      if (std::find(f.begin(), f.end(), idx.base_of(y)) == f.end()) free.push_back(y);
    }
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, free.size())(rng);
    std::shuffle(free.begin(), free.end(), rng);
    std::vector<Element> ys(free.begin(), free.begin() + static_cast<std::ptrdiff_t>(m));
    zf = std::max(zf, kd.zf_action_residual(f, ys));

    const Element x = std::uniform_int_distribution<Element>(0, static_cast<Element>(sys.base_size() - 1))(rng);
    std::vector<Element> avoid;
    for (Element y = 0; y < idx.size(); ++y) {
      if (idx.base_of(y) != x) avoid.push_back(y);
    }
    std::shuffle(avoid.begin(), avoid.end(), rng);
    avoid.resize(std::uniform_int_distribution<std::size_t>(0, avoid.size())(rng));
    pa = std::max(pa, kd.pair_annihilation_residual(x, avoid));
  }
  r.check("keylemma.scaling_action", std::to_string(s.samples.zf) + " sampled wedges: Z_F action", zf, tol.key_max);
  r.check("keylemma.pair_annihilation", "c_x c_x* on wedges avoiding {x, Ix}", pa, tol.key_max);
  return r;
}

// ---------------------------------------------------------------------------
// crossed

SuiteResult run_crossed(const Scenario& s, const BernoulliModel& model, std::uint64_t /*seed*/) {
  SuiteResult r;
  r.suite = "crossed";
  const CrossedRep rep(model, s.caps.crossed_dimension);
  r.records["dimension"] = rep.dimension();
  const CrossedCommutationReport c = commutation_suite(rep);
  const double tol = s.tol.crossed;
  r.check("crossed.left_right", "every left generator commutes with every right generator", c.left_right, tol,
          c.worst_pair);
  r.check("crossed.j_square", "J² = 1", c.j_square, tol);
  r.check("crossed.j_antiunitary", "J*J = JJ* = 1", c.j_unitary, tol);
  r.check("crossed.j_identity_block", "J restricted to the e-block is J_M", c.j_identity_block, tol);
  r.check("crossed.j_left_algebra", "J(a⊗1)J = π_r(J_M a J_M)", c.j_left_algebra, tol);
  r.check("crossed.j_left_group", "J(U_g⊗λ_g)J = 1⊗ρ_g", c.j_left_group, tol);
  r.check("crossed.j_implementation", "(U_g⊗λ_g)(1⊗ρ_g) commutes with J", c.j_implementation, tol);
  r.record("crossed.inner_unitary_vs_j", "[U_g⊗λ_g, J]", c.j_inner_unitary, tol,
           "U_g⊗λ_g is an inner unitary of the crossed product; it commutes with J only for g = e");
  r.check("crossed.regular", "λ and ρ are representations", c.regular, tol);

  try {
    const DimensionReport d = crossed_dimensions(rep, s.caps.rank_budget);
    r.require("crossed.commutant_dimension",
              "dim(left algebra)′ = dim(right algebra) = " + std::to_string(d.commutant) + " vs " +
                  std::to_string(d.right_algebra),
              d.commutant == d.right_algebra);
    r.records["dim_commutant"] = d.commutant;
    r.records["dim_right_algebra"] = d.right_algebra;
    r.records["dim_fock_commutant"] = d.fock_commutant;
    r.check("crossed.commutant_invariance", "Ad U_g maps M′ onto itself", d.action_residual, s.tol.key_max);
    double member = 0.0;
    for (double m : d.membership) member = std::max(member, m);
    r.check("crossed.membership", "J·(left generator)·J lies in the right algebra", member, s.tol.membership);
  } catch (const InputError& e) {
    r.record("crossed.commutant_dimension", std::string("skipped: ") + e.what(), 0.0, 0.0);
  }
  return r;
}

// ---------------------------------------------------------------------------
// boundary

SuiteResult run_boundary(const Scenario& s, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "boundary";
  std::mt19937_64 rng(seed);
  const GroupAction act = s.action();
  const IndexSet& idx = act.index();
  const std::size_t sites = idx.size();
  const std::size_t n = act.order();
  const LengthPair lengths = build_lengths(act);

  const LengthAxiomReport ax = check_length_axioms(act, lengths);
  r.require("lengths.kernel", "|g| = 0 iff g acts trivially", ax.kernel);
  r.require("lengths.subadditive", "|gh| ≤ |g| + |h|", ax.subadditive);
  r.require("lengths.symmetric", "|g⁻¹| = |g|", ax.symmetric);
  r.require("lengths.proper", "sublevel sets finite and monotone", ax.proper);
  r.require("lengths.action", "|g·x| ≤ |g| + |x|", ax.action);
  {
    LengthPair alt = lengths;
    alt.group = stabilizer_max_lengths(act, lengths);
    const LengthAxiomReport alt_ax = check_length_axioms(act, alt);
    r.record("lengths.stabilizer_recipe", "max-over-orbits coset recipe satisfies the axioms", alt_ax.all() ? 1.0 : 0.0,
             1.0, alt_ax.all() ? "holds here" : "fails here; word lengths are used instead");
  }

  const std::size_t max_z = std::max<std::size_t>(1, std::min(s.samples.boundary_max_z, sites));
  std::uniform_int_distribution<std::size_t> size_d(1, max_z);
  std::uniform_int_distribution<std::size_t> g_d(0, n - 1);

  bool norm_ok = true;
  std::size_t eq_fail = 0;
  std::size_t ext_fail = 0;
  std::size_t omega_fail = 0;
  Rational worst_eq_ratio = 0;
  Rational worst_ext_ratio = 0;
  std::size_t ext_samples = 0;
  for (std::size_t i = 0; i < s.samples.boundary; ++i) {
    const auto z = ZSymbol::from_unsorted(random_subset(sites, size_d(rng), rng));
    const WeightVector w = omega(z, lengths);
    const auto nz = static_cast<std::int64_t>(z0(z));
    norm_ok = norm_ok && l1_norm(w) == Rational(nz * nz + z1(z, lengths));

    const std::size_t g = g_d(rng);
    const DefectReport e = equivariance_defect(act, lengths, g, z);
    if (!(e.defect <= e.bound)) ++eq_fail;
    if (!(e.omega_defect <= e.omega_bound)) ++omega_fail;
    if (e.bound > 0) worst_eq_ratio = std::max(worst_eq_ratio, Rational(e.defect / e.bound));

    if (z.size() < sites) {
      Element x = 0;
      do {
        x = std::uniform_int_distribution<Element>(0, static_cast<Element>(sites - 1))(rng);
      } while (z.contains(x));
      const DefectReport d = extension_defect(lengths, x, z);
      ++ext_samples;
      if (!(d.defect <= d.bound)) ++ext_fail;
      if (!(d.omega_defect <= d.omega_bound)) ++omega_fail;
      if (d.bound > 0) worst_ext_ratio = std::max(worst_ext_ratio, Rational(d.defect / d.bound));
    }
  }
  const std::string sz = "|z|₀ ≤ " + std::to_string(max_z) + ", |X| = " + std::to_string(sites);
  r.require("boundary.omega_norm", "‖ω(z)‖₁ = |z|₀² + |z|₁ exactly", norm_ok);
  r.check("boundary.equivariance", std::to_string(s.samples.boundary) + " (g, z), " + sz + ": violations",
          static_cast<double>(eq_fail), 0.0);
  r.check("boundary.extension", std::to_string(ext_samples) + " (x, z), " + sz + ": violations",
          static_cast<double>(ext_fail), 0.0);
  r.check("boundary.omega_level", "ω-level inequalities: violations", static_cast<double>(omega_fail), 0.0);
  r.records["equivariance_worst_ratio"] = to_double(worst_eq_ratio);
  r.records["extension_worst_ratio"] = to_double(worst_ext_ratio);

  {
    bool monotone = true;
    std::uint64_t prev = 0;
    for (std::int64_t radius = 0; radius <= 8; ++radius) {
      const std::uint64_t c = sublevel_count(lengths, radius);
      monotone = monotone && c >= prev;
      prev = c;
    }
    r.require("boundary.properness", "#{z : |z|₀ + |z|₁ ≤ R} finite and monotone in R", monotone);
  }

  // ι∘μ*: unital and positive.
  {
    std::vector<double> ones(sites, 1.0);
    std::vector<double> nonneg(sites);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (auto& v : nonneg) v = u01(rng);
    double unital = 0.0;
    bool positive = true;
    for (std::size_t i = 0; i < 64; ++i) {
      const auto z = ZSymbol::from_unsorted(random_subset(sites, size_d(rng), rng));
      unital = std::max(unital, std::abs(mu_star(ones, z, lengths) - 1.0));
      positive = positive && mu_star(nonneg, z, lengths) >= 0.0;
    }
    unital = std::max(unital, std::abs(mu_star(ones, ZSymbol{}, lengths) - 1.0));
    r.check("boundary.mu_star_unital", "μ*(1) = 1", unital, 1e-12);
    r.require("boundary.mu_star_positive", "μ*(φ) ≥ 0 for φ ≥ 0", positive);
  }

  // Commutation identities through the apply path.
  {
    std::vector<double> phi(sites);
    std::uniform_real_distribution<double> u11(-1.0, 1.0);
    for (auto& v : phi) v = u11(rng);
    const SymbolFunction f = mu_star_symbol(phi, lengths);
    double worst = 0.0;
    for (std::size_t i = 0; i < std::max<std::size_t>(1, s.samples.commutation / 8); ++i) {
      const Element x = std::uniform_int_distribution<Element>(0, static_cast<Element>(sites - 1))(rng);
      std::vector<ZSymbol> samples;
      for (std::size_t t = 0; t < 8; ++t) {
        samples.push_back(ZSymbol::from_unsorted(random_subset(sites, size_d(rng) - 1, rng)));
      }
      worst = std::max(worst, commutation_identities(f, x, samples, sites).worst());
    }
    r.check("boundary.commutation", "f ℓ(x) = ℓ(x) f([x,·]) and ℓ(x) f = ℓ(x) f 1_{x∉·}, left and right", worst,
            1e-12);
  }

  // Commutator decay along a growing sequence that avoids x.
  {
    std::vector<double> phi(sites);
    std::uniform_real_distribution<double> u11(-1.0, 1.0);
    for (auto& v : phi) v = u11(rng);
    double sup = 0.0;
    for (double v : phi) sup = std::max(sup, std::abs(v));
    for (auto& v : phi) v /= sup;  // ‖φ‖∞ = 1
    const Element x = 0;
    std::vector<Element> rest;
    for (Element y = 1; y < sites; ++y) rest.push_back(y);
    std::vector<ZSymbol> seq;
    for (std::size_t m = 1; m <= std::min(max_z, rest.size()); ++m) {
      seq.push_back(ZSymbol::from_unsorted(std::vector<Element>(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(m))));
    }
    if (!seq.empty()) {
      const DecayTable t = commutator_decay(phi, x, seq, lengths);
      double ratio = 0.0;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : t.rows) {
        ratio = std::max(ratio, row.measured / row.bound);
        rows.push_back({{"n", row.n}, {"weighted", row.weighted}, {"measured", row.measured}, {"bound", row.bound}});
      }
      r.check("boundary.decay_dominated", "‖[ι(μ*φ), ℓ(x)]b_z‖ ≤ bound along " + std::to_string(seq.size()) + " symbols",
              ratio, 1.0, "largest measured/bound");
      r.require("boundary.decay_decreasing", "bound strictly decreasing along the sequence", t.decreasing);
      r.records["decay_final_bound"] = t.rows.back().bound;
      r.records["decay_table"] = rows;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// kakutani

SuiteResult run_kakutani(const Scenario& s, std::uint64_t /*seed*/) {
  SuiteResult r;
  r.suite = "kakutani";
  const GroupAction act = s.action();
  const BernoulliSystem sys(act, s.marginals);
  const std::size_t k = sys.base_size();

  MarginalTable table;
  for (Element x = 0; x < k; ++x) table.set(static_cast<std::int64_t>(x), sys.p(x));
  const std::size_t window = s.caps.kakutani_window == 0 ? k : std::min(k, s.caps.kakutani_window);

  bool monotone = true;
  bool zero_iff = true;
  std::size_t truncated = 0;
  nlohmann::json sums = nlohmann::json::object();
  for (std::size_t g = 0; g < act.order(); ++g) {
    auto gf = [&](std::int64_t i) { return static_cast<std::int64_t>(act.act(g, static_cast<Element>(i))); };
    double prev = 0.0;
    for (std::size_t w = 0; w <= window; ++w) {
      const PartialSum ps = kakutani_partial_sum(gf, table, w);
      monotone = monotone && ps.value >= prev && ps.value >= 0.0;
      prev = ps.value;
      truncated += ps.truncated;
    }
    if (window == k) zero_iff = zero_iff && ((prev == 0.0) == sys.support(g).empty());
    sums[group_label(act, g)] = prev;
  }
  r.require("kakutani.monotone", "partial sums non-negative and non-decreasing in the window", monotone);
  r.require("kakutani.support", "full-window sum vanishes exactly when supp(g) = ∅", zero_iff);
  r.check("kakutani.truncation", "translated indices resolvable inside the table", static_cast<double>(truncated), 0.0);
  r.records["partial_sums"] = sums;

  // Window {i0}: p = 1/2 against p(g·i0) = 2/3.
  {
    MarginalTable t;
    t.set(0, Rational(1, 2));
    t.set(1, Rational(2, 3));
    const PartialSum ps = kakutani_partial_sum([](std::int64_t i) { return i + 1; }, t, 1);
    const double expect = std::pow(std::sqrt(0.5) - std::sqrt(2.0 / 3.0), 2) + std::pow(std::sqrt(0.5) - std::sqrt(1.0 / 3.0), 2);
    r.check("kakutani.single_term", "window {i0}, p = 1/2 vs 2/3", std::abs(ps.value - expect), 1e-15);
  }

  // A translation with p_i = p_{i+1} off a finite set: sums stabilise once the window covers it.
  {
    MarginalTable t;
    const std::int64_t radius = 12;
    for (std::int64_t d = 0; d <= radius; ++d) {
      for (std::int64_t i : d == 0 ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{d, -d}) {
        Rational p(1, 3);
        if (i == 0) p = Rational(1, 2);
        if (i == 1) p = Rational(2, 5);
        if (i == 2) p = Rational(3, 7);
        t.set(i, p);
      }
    }
    auto shift = [](std::int64_t i) { return i + 1; };
    const double settled = kakutani_partial_sum(shift, t, 7).value;
    bool stable = true;
    for (std::size_t w = 7; w < t.order.size(); ++w) stable = stable && kakutani_partial_sum(shift, t, w).value == settled;
    r.require("kakutani.stabilises", "finitely many differing marginals: partial sums settle", stable);
  }

  {
    bool positive = true;
    bool mono = true;
    double prev = 0.0;
    for (std::size_t w = 0; w <= k; ++w) {
      const double v = atomless_partial_sum(table, w).value;
      if (w > 0) positive = positive && v > 0.0;
      mono = mono && v >= prev;
      prev = v;
    }
    MarginalTable half;
    for (std::int64_t i = 0; i < 10; ++i) half.set(i, Rational(1, 2));
    r.require("kakutani.atomless", "Σ min(p, q) positive and monotone", positive && mono);
    r.check("kakutani.atomless_half", "p ≡ 1/2 over 10 sites gives 5", std::abs(atomless_partial_sum(half, 10).value - 5.0),
            1e-15);
  }
  return r;
}

// ---------------------------------------------------------------------------

Report run_scenario(const Scenario& s, const RunOptions& opts) {
  std::vector<std::string> names;
  const std::set<std::string> wanted(opts.suites.begin(), opts.suites.end());
  for (const auto& n : suite_names()) {
    if (!opts.suites.empty() ? wanted.count(n) > 0 : s.selected(n)) names.push_back(n);
  }
  for (const auto& n : wanted) {
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end()) {
      throw InputError("unknown suite '" + n + "'");
    }
  }

  std::unique_ptr<BernoulliModel> model;
  if (std::any_of(names.begin(), names.end(), suite_needs_model)) {
    model = std::make_unique<BernoulliModel>(s.system());
  }

  auto run_one = [&](const std::string& name) -> SuiteResult {
    const auto t0 = Clock::now();
    const std::uint64_t seed = suite_seed(s.seed, name);
    SuiteResult out;
    try {
      if (name == "car") out = run_car(s, *model, seed);
      if (name == "quasifree") out = run_quasifree(s, *model, seed);
      if (name == "tomita") out = run_tomita(s, *model, seed);
      if (name == "wick") out = run_wick(s, *model, seed);
      if (name == "keylemma") out = run_keylemma(s, *model, seed);
      if (name == "crossed") out = run_crossed(s, *model, seed);
      if (name == "boundary") out = run_boundary(s, seed);
      if (name == "kakutani") out = run_kakutani(s, seed);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      out.suite = name;
      out.error = e.what();
    }
    if (opts.verbose) std::cerr << "  " << name << ": " << seconds_since(t0) << " s\n";
    return out;
  };

  Report report;
  report.scenario = s;
  if (opts.parallel) {
    std::vector<std::future<SuiteResult>> jobs;
    for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_one, n));
    for (auto& j : jobs) report.suites.push_back(j.get());
  } else {
    for (const auto& n : names) report.suites.push_back(run_one(n));
  }
  return report;
}

}  // namespace afock
