// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/key_decomposition.hpp>

#include <doctest.h>

using namespace afock;

namespace {

BernoulliModel default_model() {
  const IndexSet idx({"a", "b", "c"});
  return BernoulliModel(BernoulliSystem(GroupAction::from_cycles(idx, {{{"a", "b", "c"}}}),
                                        {Rational(1, 2), Rational(1, 3), Rational(2, 5)}));
}

}  // namespace

TEST_CASE("subsets in bitmask order") {
  const auto s = subsets({2, 5});
  REQUIRE(s.size() == 4);
  CHECK(s[0].empty());
  CHECK(s[1] == std::vector<Element>{2});
  CHECK(s[2] == std::vector<Element>{5});
  CHECK(s[3] == std::vector<Element>{2, 5});
}

TEST_CASE("scaling constant") {
  CHECK(KeyDecomposition::scaling_constant(0, 3) == 1.0);
  CHECK(std::abs(KeyDecomposition::scaling_constant(1, 0) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(KeyDecomposition::scaling_constant(2, 1) - std::sqrt(2.0 * 3 * 4 * 5)) < 1e-12);
}

TEST_CASE("admissibility") {
  const BernoulliModel m = default_model();
  const KeyDecomposition kd(m);
  // For the 3-cycle every label is in the support.
  CHECK(kd.admissible(1, {0, 1, 2}));
  CHECK(kd.admissible(1, {0, 4}));
  CHECK_FALSE(kd.admissible(1, {0, 3}));
  CHECK(kd.admissible(0, {0, 3}));  // identity: empty support
}

TEST_CASE("pair isometries and sector projections") {
  const BernoulliModel m = default_model();
  const KeyDecomposition kd(m);
  const FockOperator one = FockOperator::identity(m.dimension());
  for (Element x = 0; x < 3; ++x) {
    const PairIsometries p = kd.pair_isometries(x);
    CHECK(distance(p.v * p.v.adjoint() + p.w * p.w.adjoint(), one) == 0.0);
  }
  CHECK_THROWS_AS((void)kd.pair_isometries(3), InputError);
  for (std::size_t g = 0; g < 3; ++g) {
    CHECK(kd.resolution_residual(g) == 0.0);
    for (const auto& f : subsets(m.system().support(g))) {
      const SectorProjection sp = kd.sector_projection(g, f);
      CHECK(sp.residual == 0.0);
      CHECK(distance(sp.product * sp.product, sp.product) == 0.0);
      // Counting oracle: S ⊇ F ∪ IF, and each of the other support labels avoids one of its two states.
      const std::size_t other = m.system().support(g).size() - f.size();
      std::size_t expect = 1;
      for (std::size_t i = 0; i < other; ++i) expect *= 3;
      for (std::size_t i = 0; i < 3 - m.system().support(g).size(); ++i) expect *= 4;
      CHECK(sp.basis.size() == expect);
    }
  }
  CHECK_THROWS_AS((void)kd.sector_projection(0, {0}), InputError);
}

TEST_CASE("scaling elements") {
  const BernoulliModel m = default_model();
  const KeyDecomposition kd(m);
  for (Element x = 0; x < 3; ++x) {
    const FockOperator z = kd.scaling_element(x);
    // Z_x Ω = d(x)² c c*Ω − d(Ix)² c*cΩ; φ(Z_x) = 2p q − 2q p = 0.
    CHECK(std::abs(m.car().vacuum_state(z)) < 1e-14);
    CHECK(kd.zf_action_residual({x}, {}) < 1e-13);
  }
  CHECK(kd.zf_action_residual({0, 2}, {1}) < 1e-13);
  CHECK(kd.zf_action_residual({0}, {4, 1}) < 1e-13);
  CHECK(kd.pair_annihilation_residual(1, {0, 5}) < 1e-13);
  CHECK(distance(kd.relabeled_scaling_product(1, {0}), m.alpha(1, kd.scaling_product({0}))) < 1e-12);
}

TEST_CASE("decomposition certificate and vanishing") {
  const BernoulliModel m = default_model();
  const KeyDecomposition kd(m);
  for (std::size_t g = 0; g < 3; ++g) {
    const DecompositionCertificate c = kd.decompose(g);
    CHECK(c.terms.size() == (std::size_t{1} << m.system().support(g).size()));
    CHECK(c.residual_max < 1e-12);
    CHECK(c.residual_spectral < 1e-12);
    CHECK_NOTHROW(c.require(1e-8, 1e-7));
  }
  CHECK(kd.vanishing_residual(1, {0, 1, 2}) < 1e-12);
  CHECK(kd.vanishing_residual(1, {0, 5}) < 1e-12);
  // A full pair inside the support breaks the identity; the 3-cycle with F = {a, Ia} is a witness.
  CHECK(kd.vanishing_residual(1, {0, 3}) > 1e-3);
}
