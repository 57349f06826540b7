// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion. Exit status 0 iff every line passes.

#include <afock/boundary.hpp>
#include <afock/crossed_product.hpp>
#include <afock/key_decomposition.hpp>
#include <afock/suites.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace afock;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Scenario make(std::string name, std::vector<std::string> labels, std::vector<Rational> p,
              std::vector<std::vector<std::vector<std::string>>> gens) {
  Scenario s;
  s.name = std::move(name);
  s.labels = std::move(labels);
  s.marginals = std::move(p);
  s.generators = std::move(gens);
  return s;
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

/// Largest value over assertions with this reference; NaN when absent.
double worst(const SuiteResult& r, const std::string& ref) {
  double v = std::numeric_limits<double>::quiet_NaN();
  for (const auto& a : r.assertions) {
    if (a.reference == ref) v = std::isnan(v) ? a.value : std::max(v, a.value);
  }
  return v;
}

bool all_pass(const SuiteResult& r, const std::string& ref) {
  bool seen = false;
  for (const auto& a : r.assertions) {
    if (a.reference != ref) continue;
    seen = true;
    if (!a.pass) return false;
  }
  return seen;
}

int failures = 0;

void line(int id, const std::string& title, bool pass, const std::string& detail) {
  std::printf("criterion %2d  %s  %s  %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string num(double v) { return format_number(v); }

/// Runs a criterion body, turning an escaped exception into a FAIL line.
void criterion(int id, const std::string& title, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    line(id, title, false, std::string("exception: ") + e.what());
  }
}

const std::vector<Rational> kP4{Rational(1, 2), Rational(1, 3), Rational(2, 5), Rational(3, 7)};

}  // namespace

int main() {
  const Scenario def = default_scenario();

  criterion(1, "CAR relations, |X0| = 2, 3, 4", [&] {
    double res = 0.0;
    double slowest = 0.0;
    for (std::size_t k = 2; k <= 4; ++k) {
      const auto t0 = Clock::now();
      std::vector<std::string> labels = numbered(k);
      std::vector<std::string> cyc = labels;
      const Scenario s = make("car" + std::to_string(k), labels, {kP4.begin(), kP4.begin() + static_cast<long>(k)}, {{cyc}});
      const BernoulliModel model(s.system());
      const SuiteResult r = run_car(s, model, suite_seed(s.seed, "car"));
      res = std::max({res, worst(r, "car.anticommutation"), worst(r, "car.self_dual")});
      slowest = std::max(slowest, since(t0));
    }
    line(1, "CAR relations, |X0| = 2, 3, 4", res < 1e-10 && slowest < 10.0,
         "max residual " + num(res) + " < 1e-10, slowest " + num(slowest) + " s < 10 s");
  });

  // One model for the default scenario serves criteria 2-4, 7, 10-12.
  const BernoulliModel def_model(def.system());

  criterion(2, "quasi-free determinant, 200 moments, |X0| = 3", [&] {
    Scenario s = def;
    s.samples.moments = 200;
    s.samples.moment_degree = 3;
    const SuiteResult r = run_quasifree(s, def_model, suite_seed(s.seed, "quasifree"));
    const double v = worst(r, "quasifree.moments");
    line(2, "quasi-free determinant, 200 moments, |X0| = 3", v < 1e-8, "max residual " + num(v) + " < 1e-8");
  });

  criterion(3, "Tomita S aΩ = a*Ω, generators and 100 monomials", [&] {
    Scenario s = def;
    s.samples.tomita = 100;
    const SuiteResult r = run_tomita(s, def_model, suite_seed(s.seed, "tomita"));
    const double v = std::max(worst(r, "tomita.generators"), worst(r, "tomita.monomials"));
    line(3, "Tomita S aΩ = a*Ω, generators and 100 monomials", v < 1e-8, "max residual " + num(v) + " < 1e-8");
  });

  criterion(4, "Wick constant, n ≤ 5, 50 tuples, |X0| = 3", [&] {
    Scenario s = def;
    s.samples.wick_n = 5;
    s.samples.wick_tuples = 50;
    const SuiteResult r = run_wick(s, def_model, suite_seed(s.seed, "wick"));
    const bool ok = r.error.empty() && all_pass(r, "wick.unique_candidate") && all_pass(r, "wick.uniform_winner") &&
                    all_pass(r, "wick.winner_residual");
    const std::string winner = r.records.value("wick.winner", std::string("unresolved"));
    line(4, "Wick constant, n ≤ 5, 50 tuples, |X0| = 3", ok && winner != "unresolved",
         "winner " + winner + ", residual " + num(worst(r, "wick.winner_residual")) + " < 1e-8" +
             (r.error.empty() ? "" : ", error: " + r.error));
  });

  // Criteria 5 and 6: S3 on three labels and S4 on four (dim 256).
  const Scenario s3 = make("S3", {"a", "b", "c"}, {Rational(1, 10), Rational(1, 2), Rational(9, 10)},
                           {{{"a", "b"}}, {{"a", "b", "c"}}});
  const Scenario s4 = make("S4", {"a", "b", "c", "d"}, kP4, {{{"a", "b"}}, {{"a", "b", "c", "d"}}});
  std::unique_ptr<const BernoulliModel> s3_model;
  std::unique_ptr<const BernoulliModel> s4_model;
  double s4_build = 0.0;

  criterion(5, "key decomposition, all g, S3 on 3 and S4 on 4 (dim 256)", [&] {
    s3_model = std::make_unique<BernoulliModel>(s3.system());
    const auto t0 = Clock::now();
    s4_model = std::make_unique<BernoulliModel>(s4.system());
    double full = 0.0;
    double per_f = 0.0;
    std::size_t elements = 0;
    for (const BernoulliModel* m : {s3_model.get(), s4_model.get()}) {
      const KeyDecomposition kd(*m);
      for (std::size_t g = 0; g < m->action().order(); ++g) {
        const DecompositionCertificate c = kd.decompose(g);
        full = std::max(full, c.residual_max);
        for (const auto& t : c.terms) per_f = std::max(per_f, t.sector_residual);
        ++elements;
      }
      if (m == s4_model.get()) s4_build = since(t0);
    }
    const bool ok = full < 1e-8 && per_f < 1e-8 && s4_build < 120.0 && s4_model->dimension() == 256 &&
                    s4_model->action().order() == 24;
    line(5, "key decomposition, all g, S3 on 3 and S4 on 4 (dim 256)", ok,
         std::to_string(elements) + " elements, full " + num(full) + ", per-F " + num(per_f) + " < 1e-8, S4 " +
             num(s4_build) + " s < 120 s");
  });

  criterion(6, "resolution of identity and orthogonality", [&] {
    double res = 0.0;
    double ortho = 0.0;
    for (const BernoulliModel* m : {&def_model, s3_model.get(), s4_model.get()}) {
      if (m == nullptr) throw std::runtime_error("model unavailable");
      const KeyDecomposition kd(*m);
      for (std::size_t g = 0; g < m->action().order(); ++g) {
        res = std::max(res, kd.resolution_residual(g));
        // P = D + O with D diagonal: ‖P_a P_b‖ ≤ max|d_a d_b| + dim·(‖O_a‖max + ‖O_b‖max).
        std::vector<Vector> diag;
        std::vector<double> off;
        for (const auto& f : subsets(m->system().support(g))) {
          const Matrix& p = kd.sector_projection(g, f).product.matrix();
          diag.push_back(p.diagonal());
          off.push_back(max_entry(Matrix(p - Matrix(p.diagonal().asDiagonal()))));
        }
        const auto dim = static_cast<double>(m->dimension());
        for (std::size_t a = 0; a < diag.size(); ++a) {
          for (std::size_t b = a + 1; b < diag.size(); ++b) {
            const double d = diag[a].cwiseProduct(diag[b]).cwiseAbs().maxCoeff();
            ortho = std::max(ortho, d + dim * (off[a] + off[b]));
          }
        }
      }
    }
    line(6, "resolution of identity and orthogonality", res < 1e-12 && ortho < 1e-12,
         "‖1 − Σ P‖ " + num(res) + ", max ‖P P′‖ " + num(ortho) + " < 1e-12");
  });

  criterion(7, "vanishing on admissible F; sharpness probe recorded", [&] {
    double van = 0.0;
    double sharp = 0.0;
    std::size_t admissible = 0;
    for (const BernoulliModel* m : {&def_model, s3_model.get()}) {
      if (m == nullptr) throw std::runtime_error("model unavailable");
      const KeyDecomposition kd(*m);
      const std::size_t sites = m->car().index().size();
      for (std::size_t g = 0; g < m->action().order(); ++g) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sites); ++mask) {
          const auto f = SlaterIndex::from_mask(mask).elements();
          const double r = kd.vanishing_residual(g, f);
          if (kd.admissible(g, f)) {
            van = std::max(van, r);
            ++admissible;
          } else {
            sharp = std::max(sharp, r);
          }
        }
      }
    }
    line(7, "vanishing on admissible F; sharpness probe recorded", van < 1e-8,
         std::to_string(admissible) + " admissible, max " + num(van) + " < 1e-8; probe " + num(sharp) +
             (sharp > 1e-3 ? " > 1e-3 (found)" : " (no witness)"));
  });

  criterion(8, "boundary inequalities, 10^4 samples, |z|0 ≤ 50, |X| = 200", [&] {
    // Z10 × Z10 on 100 labels: rotation inside blocks of ten, and translation by ten.
    std::vector<std::string> labels = numbered(100);
    std::vector<std::vector<std::string>> rot;
    std::vector<std::vector<std::string>> shift;
    for (std::size_t b = 0; b < 10; ++b) {
      std::vector<std::string> c;
      std::vector<std::string> d;
      for (std::size_t i = 0; i < 10; ++i) {
        c.push_back(labels[10 * b + i]);
        d.push_back(labels[b + 10 * i]);
      }
      rot.push_back(c);
      shift.push_back(d);
    }
    Scenario s = make("boundary200", labels, std::vector<Rational>(100, Rational(1, 2)), {rot, shift});
    s.samples.boundary = 10000;
    s.samples.boundary_max_z = 50;
    const auto t0 = Clock::now();
    const SuiteResult r = run_boundary(s, suite_seed(s.seed, "boundary"));
    const double t = since(t0);
    const bool ok = r.error.empty() && all_pass(r, "boundary.equivariance") && all_pass(r, "boundary.extension") &&
                    all_pass(r, "boundary.omega_level") && t < 30.0;
    line(8, "boundary inequalities, 10^4 samples, |z|0 ≤ 50, |X| = 200", ok,
         "violations " + num(worst(r, "boundary.equivariance") + worst(r, "boundary.extension") +
                             worst(r, "boundary.omega_level")) +
             ", " + num(t) + " s < 30 s" + (r.error.empty() ? "" : ", error: " + r.error));
  });

  criterion(9, "commutator decay, |z|0 = 1..50, zero-length regime", [&] {
    const IndexSet idx = IndexSet::numbered(100);
    const GroupAction act = GroupAction::trivial(idx);
    const LengthPair lengths = build_lengths(act);
    std::vector<double> phi(idx.size());
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = std::cos(0.7 * static_cast<double>(i));
    phi[1] = 1.0;  // ‖φ‖∞ = 1
    std::vector<ZSymbol> seq;
    std::vector<Element> z;
    for (Element y = 1; z.size() < 50; ++y) {
      z.push_back(y);
      seq.push_back(ZSymbol(z));
    }
    const DecayTable t = commutator_decay(phi, 0, seq, lengths);
    const double at40 = t.rows.at(39).bound;
    line(9, "commutator decay, |z|0 = 1..50, zero-length regime", t.dominated && t.decreasing && at40 < 0.1,
         std::string("dominated ") + (t.dominated ? "yes" : "no") + ", decreasing " + (t.decreasing ? "yes" : "no") +
             ", bound at 40 = " + num(at40) + " < 0.1 required");
  });

  criterion(10, "Radon–Nikodym ordering, normalisation, cocycle", [&] {
    Scenario s = def;
    const SuiteResult r = run_keylemma(s, def_model, suite_seed(s.seed, "keylemma"));
    const auto& o = def_model.ordering();
    const bool unique = (o.residual_occupied < 1e-10) != (o.residual_vacant < 1e-10);
    const bool ok = def.system().generic() && unique && all_pass(r, "rn.state_identity") &&
                    all_pass(r, "rn.normalisation") && all_pass(r, "rn.cocycle");
    line(10, "Radon–Nikodym ordering, normalisation, cocycle", ok,
         "chosen " + to_string(o.chosen) + " (" + num(std::min(o.residual_occupied, o.residual_vacant)) + " vs " +
             num(std::max(o.residual_occupied, o.residual_vacant)) + "), φ(h)−1 " + num(worst(r, "rn.normalisation")) +
             ", cocycle " + num(worst(r, "rn.cocycle")));
  });

  criterion(11, "standard implementation", [&] {
    // (a b) preserves the measure here, (c d) does not.
    const Scenario s = make("pairs", {"a", "b", "c", "d"}, {Rational(1, 3), Rational(1, 3), Rational(2, 5), Rational(3, 7)},
                            {{{"a", "b"}}, {{"c", "d"}}});
    const BernoulliModel m(s.system());
    double unitary = 0.0;
    double mult = 0.0;
    double commutes = 0.0;
    double perm = 0.0;
    std::size_t preserving = 0;
    for (const BernoulliModel* mp : {&m, &def_model, s3_model.get()}) {
      if (mp == nullptr) throw std::runtime_error("model unavailable");
      const GroupAction& act = mp->action();
      const FockOperator& jj = mp->car().modular_conjugation();
      const FockOperator id = FockOperator::identity(mp->dimension());
      for (std::size_t g = 0; g < act.order(); ++g) {
        const FockOperator& u = mp->standard_implementation(g);
        unitary = std::max({unitary, distance(u.adjoint() * u, id), distance(u * u.adjoint(), id)});
        commutes = std::max(commutes, distance(u * jj, jj * u));
        if (mp->system().support(g).empty()) {
          perm = std::max(perm, distance(u, mp->permutation(g)));
          ++preserving;
        }
        for (std::size_t h = 0; h < act.order(); ++h) {
          mult = std::max(mult, distance(u * mp->standard_implementation(h),
                                         mp->standard_implementation(act.multiply(g, h))));
        }
      }
    }
    const bool ok = unitary < 1e-9 && mult < 1e-8 && commutes < 1e-9 && perm < 1e-10 && preserving > 3;
    line(11, "standard implementation", ok,
         "unitary " + num(unitary) + ", multiplicative " + num(mult) + ", [U, J] " + num(commutes) + ", U − π " +
             num(perm) + " on " + std::to_string(preserving) + " measure-preserving g");
  });

  criterion(12, "crossed product commutation and dimensions", [&] {
    const Scenario s2 = make("S2", {"a", "b"}, {Rational(1, 2), Rational(1, 3)}, {{{"a", "b"}}});
    const BernoulliModel m2(s2.system());
    double comm = 0.0;
    double jsq = 0.0;
    bool dims = true;
    std::string detail;
    for (const BernoulliModel* m : {&m2, &def_model}) {
      const CrossedRep rep(*m, 4096);
      const CrossedCommutationReport c = commutation_suite(rep);
      comm = std::max(comm, c.left_right);
      jsq = std::max(jsq, c.j_square);
      const DimensionReport d = crossed_dimensions(rep);
      dims = dims && d.commutant == d.right_algebra;
      detail += " D=" + std::to_string(rep.dimension()) + ": " + std::to_string(d.commutant) + " = " +
                std::to_string(d.right_algebra) + ";";
    }
    line(12, "crossed product commutation and dimensions", comm < 1e-10 && jsq < 1e-10 && dims,
         "left/right " + num(comm) + ", J² − 1 " + num(jsq) + ";" + detail);
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
