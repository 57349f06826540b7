// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/bernoulli.hpp>

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <algorithm>

using namespace afock;

namespace {

BernoulliSystem swap_system() {
  const IndexSet idx({"a", "b"});
  return BernoulliSystem(GroupAction::from_cycles(idx, {{{"a", "b"}}}), {Rational(1, 2), Rational(1, 3)});
}

}  // namespace

TEST_CASE("group enumeration") {
  const IndexSet idx({"a", "b", "c"});
  const GroupAction s3 = GroupAction::from_cycles(idx, {{{"a", "b"}}, {{"a", "b", "c"}}});
  CHECK(s3.order() == 6);
  CHECK(s3.describe(s3.identity()) == "e");
  for (std::size_t g = 0; g < 6; ++g) {
    CHECK(s3.multiply(g, s3.inverse(g)) == s3.identity());
    for (std::size_t h = 0; h < 6; ++h) {
      for (Element x = 0; x < 3; ++x) CHECK(s3.act(s3.multiply(g, h), x) == s3.act(g, s3.act(h, x)));
    }
    const auto full = s3.on_full(g);
    for (Element x = 0; x < 3; ++x) CHECK(full[x + 3] == full[x] + 3);
  }
  CHECK_THROWS_AS(GroupAction::from_cycles(idx, {{{"a", "z"}}}), InputError);
  CHECK_THROWS_AS(GroupAction::from_cycles(idx, {{{"a", "a"}}}), InputError);
  CHECK_THROWS_AS(GroupAction::from_cycles(IndexSet::numbered(7), {{{"0", "1"}}, {{"0", "1", "2", "3", "4", "5", "6"}}}, 720),
                  InputError);
}

TEST_CASE("support is exact") {
  const IndexSet idx({"a", "b", "c"});
  const BernoulliSystem sys(GroupAction::from_cycles(idx, {{{"a", "b"}}}), {Rational(1, 3), Rational(2, 6), Rational(1, 2)});
  CHECK(sys.support(1).empty());  // 1/3 = 2/6
  CHECK_FALSE(sys.generic());
  const BernoulliSystem sw = swap_system();
  CHECK(sw.support(1) == std::vector<Element>{0, 1});
  CHECK(sw.generic());
}

TEST_CASE("radon-nikodym derivative of the swap by hand") {
  // Site a carries p_b/p_a = 2/3 (occupied) and q_b/q_a = 4/3; site b carries 3/2 and 3/4.
  // Joint spectrum {1, 1/2, 2, 1}, each with multiplicity 4 in the 16-dimensional space.
  const BernoulliModel m(swap_system());
  const FockOperator& h = m.radon_nikodym(1);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  const Eigen::VectorXd ev = es.eigenvalues();
  REQUIRE(ev.size() == 16);
  for (Eigen::Index i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - 0.5) < 1e-12);
  for (Eigen::Index i = 4; i < 12; ++i) CHECK(std::abs(ev[i] - 1.0) < 1e-12);
  for (Eigen::Index i = 12; i < 16; ++i) CHECK(std::abs(ev[i] - 2.0) < 1e-12);
  // φ(h) = p_a p_b + p_a q_b/2 + 2 q_a p_b + q_a q_b = 1.
  CHECK(std::abs(m.car().vacuum_state(h) - 1.0) < 1e-14);
  CHECK(m.ordering().chosen == RadonNikodymOrdering::occupied);
  CHECK(distance(m.radon_nikodym(0), FockOperator::identity(16)) < 1e-14);
}

TEST_CASE("state identity separates the orderings") {
  const BernoulliModel m(swap_system());
  const FockOperator occ = m.radon_nikodym_candidate(1, RadonNikodymOrdering::occupied);
  const FockOperator vac = m.radon_nikodym_candidate(1, RadonNikodymOrdering::vacant);
  CHECK(m.state_identity_residual(1, occ) < 1e-14);
  CHECK(m.state_identity_residual(1, vac) > 0.1);
  const FockOperator half = m.radon_nikodym_candidate(1, RadonNikodymOrdering::occupied, 0.5);
  CHECK(distance(half * half, occ) < 1e-14);
  CHECK(distance(m.radon_nikodym_sqrt(1), half) < 1e-14);
}

TEST_CASE("standard implementation of the swap") {
  const BernoulliModel m(swap_system());
  const FockOperator& u = m.standard_implementation(1);
  const FockOperator one = FockOperator::identity(16);
  CHECK(distance(u * u, one) < 1e-12);
  CHECK(distance(u.adjoint() * u, one) < 1e-12);
  const Vector omega = m.car().fock().vacuum();
  // UΩ = h^{1/2}Ω.
  CHECK((u.apply(omega) - m.radon_nikodym_sqrt(1).apply(omega)).norm() < 1e-12);
  // U c_a U* = c_b.
  CHECK(distance(u * m.car().car(Element{0}) * u.adjoint(), m.car().car(Element{1})) < 1e-12);
  CHECK(distance(u * m.car().modular_conjugation(), m.car().modular_conjugation() * u) < 1e-12);
}

TEST_CASE("measure-preserving elements are implemented by the permutation") {
  const IndexSet idx({"a", "b", "c"});
  const BernoulliModel m(BernoulliSystem(GroupAction::from_cycles(idx, {{{"a", "b"}}}),
                                         {Rational(1, 3), Rational(1, 3), Rational(1, 2)}));
  CHECK(distance(m.standard_implementation(1), m.permutation(1)) < 1e-12);
  CHECK(distance(m.radon_nikodym(1), FockOperator::identity(m.dimension())) < 1e-12);
}

TEST_CASE("shift operator moves hatted deltas") {
  const BernoulliModel m(swap_system());
  const auto& rep = m.car().rep();
  const FockOperator v = m.shift_operator(1);
  const auto& fs = m.car().fock();
  // V(δ̂_a) = δ̂_b, i.e. V δ_a = (d(b)/d(a)) δ_b.
  const Vector da = fs.basis_vector(SlaterIndex{0});
  const Vector db = fs.basis_vector(SlaterIndex{1});
  CHECK((v.apply(da) - (rep.scale(1) / rep.scale(0)) * db).norm() < 1e-14);
  CHECK(distance(v, m.multiplier_operator(1) * m.permutation(1)) < 1e-14);
  CHECK(std::abs(m.multiplier(1)(SlaterIndex{1}) - rep.scale(1) / rep.scale(0)) < 1e-14);
}

TEST_CASE("alpha rejects elements outside the algebra") {
  const BernoulliModel m(swap_system());
  // The right creator is in the commutant, not in the algebra.
  CHECK_THROWS_AS((void)m.alpha(1, m.car().fock().create_right(Element{0})), VerificationError);
  const FockOperator c = m.car().car(Element{0});
  CHECK(distance(m.alpha(1, c.adjoint() * c), m.car().car(Element{1}).adjoint() * m.car().car(Element{1})) < 1e-12);
}

TEST_CASE("bernoulli projection and boundary identities") {
  const BernoulliModel m(swap_system());
  const FockOperator e = m.bernoulli_projection();
  CHECK(distance(e * e, e) < 1e-14);
  CHECK(m.bernoulli_basis().size() == 4);
  const BoundaryIdentityReport r = m.bernoulli_boundary_identities();
  CHECK(r.expansion_residual < 1e-12);
  CHECK(r.partial_isometry_residual < 1e-12);
  CHECK(r.factorization_residual < 1e-12);
  CHECK(r.span_residual < 1e-12);
}
