// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/crossed_product.hpp>

#include <doctest.h>

#include <random>

using namespace afock;

namespace {

BernoulliModel swap_model() {
  const IndexSet idx({"a", "b"});
  return BernoulliModel(BernoulliSystem(GroupAction::from_cycles(idx, {{{"a", "b"}}}), {Rational(1, 2), Rational(1, 3)}));
}

}  // namespace

TEST_CASE("block operator algebra") {
  const BlockOperator one = BlockOperator::identity(2, 3);
  CHECK(one.dimension() == 6);
  BlockOperator a(2, 3, Linearity::linear);
  Matrix m = Matrix::Random(3, 3);
  a.add_block(1, 0, m);
  CHECK(max_entry(Matrix(a.block(1, 0) - m)) == 0.0);
  CHECK(a.block(0, 1).isZero());
  const BlockOperator aa = a.adjoint();
  CHECK(max_entry(Matrix(aa.block(0, 1) - m.adjoint())) == 0.0);
  CHECK(max_entry(Matrix((a * one).to_dense() - a.to_dense())) == 0.0);
  CHECK(max_entry(Matrix((a * a).to_dense())) == 0.0);  // nilpotent
  // Antilinear left factor conjugates the right factor.
  BlockOperator j(1, 2, Linearity::antilinear);
  j.add_block(0, 0, Matrix::Identity(2, 2));
  BlockOperator c(1, 2, Linearity::linear);
  Matrix ci(2, 2);
  ci << cplx(0, 1), 0, 0, cplx(0, 1);
  c.add_block(0, 0, ci);
  const BlockOperator jc = j * c;
  CHECK(jc.antilinear());
  CHECK(max_entry(Matrix(jc.block(0, 0) + ci)) < 1e-15);
}

TEST_CASE("hilbert-schmidt span ignores round-off directions") {
  HSSpan span(4);
  Vector v(4);
  v << 1, 0, 0, 0;
  CHECK(span.add(v));
  CHECK_FALSE(span.add(2.0 * v));
  Vector tiny(4);
  tiny << 0, 1e-17, 0, 0;
  CHECK_FALSE(span.add(tiny));
  Vector w(4);
  w << 1, 1, 0, 0;
  CHECK(span.add(w));
  CHECK(span.size() == 2);
  Vector u(4);
  u << 0, 0, 3, 0;
  CHECK(span.relative_distance(u) > 0.99);
  CHECK(span.relative_distance(w - v) < 1e-15);
}

TEST_CASE("crossed product of the swap") {
  const BernoulliModel m = swap_model();
  const CrossedRep rep(m);
  CHECK(rep.dimension() == 32);
  const CrossedCommutationReport c = commutation_suite(rep);
  CHECK(c.left_right < 1e-12);
  CHECK(c.j_square < 1e-12);
  CHECK(c.j_unitary < 1e-12);
  CHECK(c.j_left_group < 1e-12);
  CHECK(c.j_implementation < 1e-12);
  // U_g ⊗ λ_g does not commute with J once g ≠ e.
  CHECK(c.j_inner_unitary > 0.5);
  const DimensionReport d = crossed_dimensions(rep);
  CHECK(d.fock_commutant == 16);
  CHECK(d.commutant == 32);
  CHECK(d.right_algebra == 32);
  for (double r : d.membership) CHECK(r < 1e-10);
}

TEST_CASE("fock commutant of the car algebra") {
  const BernoulliModel m = swap_model();
  const auto basis = fock_commutant_basis(m.car());
  CHECK(basis.size() == 16);
  for (const auto& b : basis) {
    for (Element x = 0; x < 4; ++x) {
      const Matrix c(m.car().car_sparse(x));
      CHECK(max_entry(Matrix(b * c - c * b)) < 1e-10);
    }
  }
}

TEST_CASE("caps are enforced") {
  const BernoulliModel m = swap_model();
  CHECK_THROWS_AS(CrossedRep(m, 16), InputError);
  const CrossedRep rep(m);
  CHECK_THROWS_AS((void)crossed_dimensions(rep, 1000), InputError);
}
