// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/boundary.hpp>

#include <doctest.h>

#include <random>

using namespace afock;

namespace {

GroupAction s3() {
  return GroupAction::from_cycles(IndexSet({"a", "b", "c"}), {{{"a", "b"}}, {{"a", "b", "c"}}});
}

// Brute-force count of subsets z of X with |z|₀ + |z|₁ ≤ radius.
std::uint64_t brute_sublevel(const LengthPair& l, std::int64_t radius) {
  const std::size_t n = l.site.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) w += 1 + l.site[i];
    }
    count += w <= radius ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("word lengths on S3") {
  const GroupAction act = s3();
  const LengthPair l = build_lengths(act);
  CHECK(check_length_axioms(act, l).all());
  CHECK(l.of_group(act.identity()) == 0);
  for (std::size_t g : act.generators()) CHECK(l.of_group(g) == 1);
  // The orbit of a is everything; a itself has length 0 and so does Ia.
  CHECK(l.of_site(0) == 0);
  CHECK(l.of_site(3) == 0);
  for (Element x = 0; x < 6; ++x) CHECK(l.of_site(x) <= 2);
}

TEST_CASE("the stabilizer-coset recipe is not a length function on S3") {
  const GroupAction act = s3();
  LengthPair alt = build_lengths(act);
  alt.group = stabilizer_max_lengths(act, alt);
  const LengthAxiomReport r = check_length_axioms(act, alt);
  CHECK_FALSE(r.all());
  CHECK_FALSE(r.kernel);  // a nontrivial element gets length 0
}

TEST_CASE("omega and mu by hand") {
  const GroupAction act = GroupAction::from_cycles(IndexSet({"a", "b", "c"}), {{{"a", "b", "c"}}});
  const LengthPair l = build_lengths(act);
  REQUIRE(l.of_site(0) == 0);
  REQUIRE(l.of_site(1) == 1);
  REQUIRE(l.of_site(2) == 1);
  // z = [a, b]: |z|₀ = 2, |z|₁ = 1, ω = 2δ_a + 3δ_b.
  const ZSymbol z{0, 1};
  CHECK(z1(z, l) == 1);
  const WeightVector w = omega(z, l);
  CHECK(w.at(0) == 2);
  CHECK(w.at(1) == 3);
  CHECK(l1_norm(w) == 5);
  const WeightVector m = mu(z, l);
  CHECK(m.at(0) == Rational(2, 5));
  CHECK(m.at(1) == Rational(3, 5));
  const WeightVector star = mu(ZSymbol{}, l);
  CHECK(star.size() == 1);
  CHECK(star.at(0) == 1);
}

TEST_CASE("pushforward and symbol action") {
  const GroupAction grp = s3();
  const LengthPair l = build_lengths(grp);
  const ZSymbol z{0, 4};
  for (std::size_t g = 0; g < grp.order(); ++g) {
    const auto pushed = pushforward(grp, g, omega(z, l));
    CHECK(l1_norm(pushed) == l1_norm(omega(z, l)));
    CHECK(act(grp, grp.inverse(g), act(grp, g, z)) == z);
  }
}

TEST_CASE("equivariance and extension defects within their bounds") {
  const GroupAction act = s3();
  const LengthPair l = build_lengths(act);
  for (std::uint64_t mask = 1; mask < 64; ++mask) {
    const auto z = ZSymbol::from_mask(mask);
    for (std::size_t g = 0; g < act.order(); ++g) CHECK(equivariance_defect(act, l, g, z).holds());
    for (Element x = 0; x < 6; ++x) {
      if (!z.contains(x)) CHECK(extension_defect(l, x, z).holds());
    }
  }
  // The identity has no defect at all.
  const DefectReport e = equivariance_defect(act, l, act.identity(), ZSymbol{0, 1});
  CHECK(e.defect == 0);
  CHECK(e.bound == 0);
}

TEST_CASE("sublevel counts match enumeration") {
  const GroupAction act = s3();
  const LengthPair l = build_lengths(act);
  for (std::int64_t r = -1; r <= 12; ++r) CHECK(sublevel_count(l, r) == brute_sublevel(l, r));
}

TEST_CASE("mu star of constants and the commutation identities") {
  const GroupAction act = s3();
  const LengthPair l = build_lengths(act);
  const std::vector<double> ones(6, 1.0);
  CHECK(std::abs(mu_star(ones, ZSymbol{1, 2, 5}, l) - 1.0) < 1e-15);
  const std::vector<double> phi{0.3, -0.2, 1.0, 0.5, -0.9, 0.1};
  const SymbolFunction f = mu_star_symbol(phi, l);
  CHECK(std::abs(f(ZSymbol{}).real() - phi[0]) < 1e-15);
  std::vector<ZSymbol> samples;
  for (std::uint64_t mask = 0; mask < 64; ++mask) samples.push_back(ZSymbol::from_mask(mask));
  for (Element x = 0; x < 6; ++x) CHECK(commutation_identities(f, x, samples, 6).worst() == 0.0);
}

TEST_CASE("decay bound in the zero-length regime") {
  // Trivial group: every length vanishes, the bound is 2(2n+1)/n² ‖φ‖∞.
  const IndexSet idx = IndexSet::numbered(60);
  const LengthPair l = build_lengths(GroupAction::trivial(idx));
  std::vector<double> phi(idx.size(), 0.25);
  phi[7] = -1.0;
  std::vector<ZSymbol> seq;
  std::vector<Element> z;
  for (Element y = 1; y <= 50; ++y) {
    z.push_back(y);
    seq.push_back(ZSymbol(z));
  }
  const DecayTable t = commutator_decay(phi, 0, seq, l);
  CHECK(t.dominated);
  CHECK(t.decreasing);
  CHECK(std::abs(t.rows[0].bound - 6.0) < 1e-12);
  CHECK(std::abs(t.rows[39].bound - 2.0 * 81.0 / 1600.0) < 1e-15);  // 0.10125
  CHECK(t.rows[39].bound > 0.1);
  CHECK(t.rows[40].bound < 0.1);  // n = 41: 166/1681
}
