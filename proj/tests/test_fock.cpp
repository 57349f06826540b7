// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/fock_space.hpp>
#include <afock/linalg.hpp>
#include <afock/word.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace afock;

namespace {

// Inversion parity, independent of the library's sorting routine.
int inversion_sign(const std::vector<Element>& v) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j] ? 1 : 0;
  }
  return inv % 2 ? -1 : 1;
}

// Leibniz expansion over all permutations.
cplx leibniz_det(const std::vector<std::vector<cplx>>& m) {
  const std::size_t n = m.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  cplx total = 0.0;
  do {
    cplx term = static_cast<double>(inversion_sign(perm));
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

double factorial(std::size_t n) { return n <= 1 ? 1.0 : static_cast<double>(n) * factorial(n - 1); }

}  // namespace

TEST_CASE("sorting sign matches inversion parity") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 0; n <= 7; ++n) {
    std::vector<Element> v(n);
    std::iota(v.begin(), v.end(), Element{10});
    for (int t = 0; t < 20; ++t) {
      std::shuffle(v.begin(), v.end(), rng);
      CHECK(sorting_sign(v) == inversion_sign(v));
    }
  }
}

TEST_CASE("slater index set operations") {
  const SlaterIndex s{1, 4, 6};
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(5));
  CHECK(s.count_below(5) == 2);
  CHECK(s.count_above(1) == 2);
  CHECK(s.with(5) == SlaterIndex{1, 4, 5, 6});
  CHECK(s.without(4) == SlaterIndex{1, 6});
  CHECK(s.mask() == ((1u << 1) | (1u << 4) | (1u << 6)));
  CHECK(SlaterIndex::from_mask(s.mask()) == s);
  CHECK(SlaterIndex::from_unsorted({6, 1, 4}) == s);
  CHECK_THROWS(SlaterIndex::from_unsorted({1, 1}));
  CHECK_THROWS(SlaterIndex(std::vector<Element>{2, 1}));
}

TEST_CASE("wedge coefficients are determinants over sqrt(n!)") {
  std::mt19937_64 rng(11);
  const Eigen::Index sites = 5;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Vector> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(linalg::random_vector(sites, rng));
    const FockVector w = wedge(xs);
    for (std::uint64_t mask = 0; mask < (1u << sites); ++mask) {
      const auto s = SlaterIndex::from_mask(mask);
      if (s.size() != n) continue;
      std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = xs[i][s[j]];
      }
      const cplx expect = leibniz_det(m) / std::sqrt(factorial(n));
      CHECK(std::abs(w.coefficient(s) - expect) < 1e-12);
    }
  }
}

TEST_CASE("wedge of deltas: antisymmetry and norm") {
  const std::vector<Element> ab{0, 2};
  const std::vector<Element> ba{2, 0};
  const std::vector<Element> aa{1, 1};
  CHECK(std::abs(wedge_deltas(ab).coefficient(SlaterIndex{0, 2}) + wedge_deltas(ba).coefficient(SlaterIndex{0, 2})) <
        1e-15);
  CHECK(wedge_deltas(aa).empty());
  // ‖δ_a ∧ δ_b‖² = 1/2 in the 1/n! normalisation.
  CHECK(std::abs(wedge_deltas(ab).norm() * wedge_deltas(ab).norm() - 0.5) < 1e-15);
}

TEST_CASE("left and right creators follow the sign rule") {
  const FockSpace fs(IndexSet::numbered(2));
  const Eigen::Index dim = fs.dimension();
  REQUIRE(dim == 16);
  for (Element x = 0; x < 4; ++x) {
    const Matrix l(fs.left_creator(x));
    const Matrix r(fs.right_creator(x));
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      const auto s = SlaterIndex::from_mask(mask);
      const Vector lb = l * fs.basis_vector(s);
      const Vector rb = r * fs.basis_vector(s);
      if (s.contains(x)) {
        CHECK(lb.norm() == 0.0);
        CHECK(rb.norm() == 0.0);
        continue;
      }
      // Sign of moving x from the front (left) or the back (right) into sorted position.
      std::vector<Element> front{x};
      front.insert(front.end(), s.begin(), s.end());
      std::vector<Element> back(s.begin(), s.end());
      back.push_back(x);
      const Vector target = fs.basis_vector(s.with(x));
      CHECK((lb - static_cast<double>(inversion_sign(front)) * target).norm() < 1e-15);
      CHECK((rb - static_cast<double>(inversion_sign(back)) * target).norm() < 1e-15);
    }
  }
}

TEST_CASE("canonical anticommutation of the free creators") {
  const FockSpace fs(IndexSet::numbered(2));
  const FockOperator one = FockOperator::identity(fs.dimension());
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      const FockOperator lx = fs.create_left(x);
      const FockOperator ly = fs.create_left(y);
      CHECK(distance(anticommutator(lx.adjoint(), ly), x == y ? one : FockOperator::zero(fs.dimension())) < 1e-15);
      CHECK(max_entry(anticommutator(lx, ly)) < 1e-15);
      // With these signs left and right creators commute, and so do ℓ(x), r(y)* for x ≠ y.
      CHECK(max_entry(commutator(lx, fs.create_right(y))) < 1e-15);
      if (x != y) CHECK(max_entry(commutator(lx, fs.annihilate_right(y))) < 1e-15);
    }
  }
}

TEST_CASE("creators act on wedges by prepending and appending") {
  std::mt19937_64 rng(5);
  const FockSpace fs(IndexSet::numbered(2));
  const Vector xi = linalg::random_vector(4, rng);
  const Vector y1 = linalg::random_vector(4, rng);
  const Vector y2 = linalg::random_vector(4, rng);
  const Vector w2 = fs.to_dense(wedge(std::vector<Vector>{y1, y2}));
  const Vector w3l = fs.to_dense(wedge(std::vector<Vector>{xi, y1, y2}));
  const Vector w3r = fs.to_dense(wedge(std::vector<Vector>{y1, y2, xi}));
  // b_S = sqrt(n!) wedge, so ℓ(ξ)(η1∧η2) = sqrt(3) ξ∧η1∧η2.
  CHECK((fs.create_left(xi).apply(w2) - std::sqrt(3.0) * w3l).norm() < 1e-13);
  CHECK((fs.create_right(xi).apply(w2) - std::sqrt(3.0) * w3r).norm() < 1e-13);
}

TEST_CASE("permutation operator moves slater vectors with the sorting sign") {
  const IndexSet idx = IndexSet::numbered(3);
  const FockSpace fs(idx);
  // The 3-cycle 0→1→2→0 extended diagonally to the mirrors.
  const std::vector<Element> image{1, 2, 0, 4, 5, 3};
  const Matrix p = fs.permutation_operator(image).matrix();
  CHECK(max_entry(Matrix(p.adjoint() * p - Matrix::Identity(p.rows(), p.cols()))) < 1e-15);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto s = SlaterIndex::from_mask(mask);
    std::vector<Element> moved;
    for (Element x : s) moved.push_back(image[x]);
    const Vector expect = static_cast<double>(inversion_sign(moved)) * fs.basis_vector(SlaterIndex::from_unsorted(moved));
    CHECK((p * fs.basis_vector(s) - expect).norm() < 1e-15);
  }
}

TEST_CASE("sparse words agree with dense operators") {
  const FockSpace fs(IndexSet::numbered(2));
  const SymbolFunction f = [](const SlaterIndex& s) { return cplx(1.0 + static_cast<double>(s.size()), 0.5); };
  OpWord w;
  w.then(letter::CreateLeft{1}).then(letter::Diagonal{f}).then(letter::AnnihilateRight{3}).then(letter::Scale{cplx(0, 2)});
  const FockOperator dense = fs.create_left(Element{1}) * fs.diagonal_embed(f) * fs.annihilate_right(Element{3});
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const auto s = SlaterIndex::from_mask(mask);
    const Vector got = fs.to_dense(apply(w, FockVector::basis(s), fs.sites()));
    CHECK((got - cplx(0, 2) * dense.apply(fs.basis_vector(s))).norm() < 1e-14);
  }
  CHECK_THROWS_AS(apply(OpWord{}.then(letter::CreateLeft{9}), FockVector::vacuum(), fs.sites()), InputError);
}

TEST_CASE("fock vector inner product is linear in the first slot") {
  const FockVector a = FockVector::basis(SlaterIndex{0}, cplx(0, 1));
  const FockVector b = FockVector::basis(SlaterIndex{0}, 2.0);
  CHECK(std::abs(a.inner(b) - cplx(0, 2)) < 1e-15);
  CHECK(std::abs(b.inner(a) - cplx(0, -2)) < 1e-15);
}

TEST_CASE("particle projections resolve the identity") {
  const FockSpace fs(IndexSet::numbered(2));
  FockOperator sum = FockOperator::zero(fs.dimension());
  for (std::size_t n = 0; n <= 4; ++n) sum += fs.particle_projection(n);
  CHECK(distance(sum, FockOperator::identity(fs.dimension())) == 0.0);
}

TEST_CASE("oversized spaces are rejected") {
  CHECK_THROWS_AS(FockSpace(IndexSet::numbered(7)), InputError);
}

TEST_CASE("null space and rank") {
  Matrix a(3, 3);
  a << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  CHECK(linalg::numerical_rank(a) == 2);
  const Matrix k = linalg::null_space(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).norm() < 1e-12);
}
