// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/linalg.hpp>
#include <afock/wick.hpp>

#include <doctest.h>

#include <random>

using namespace afock;

namespace {

CarAlgebra make_car() {
  return CarAlgebra(AlmostPeriodicRep::from_marginals(IndexSet::numbered(3), {Rational(1, 2), Rational(1, 3), Rational(2, 5)}));
}

}  // namespace

TEST_CASE("partitions into singletons and pairs are counted by the involution numbers") {
  // 1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496.
  const std::vector<std::size_t> expect{1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (std::size_t n = 0; n < expect.size(); ++n) CHECK(enumerate_partitions(n).size() == expect[n]);
}

TEST_CASE("crossing count") {
  WickPartition crossed{{{0, 2}, {1, 3}}, {}};
  WickPartition nested{{{0, 3}, {1, 2}}, {}};
  WickPartition inside{{{0, 2}}, {1}};
  WickPartition outside{{{1, 2}}, {0}};
  CHECK(crossing_count(crossed) == 1);
  CHECK(crossing_count(nested) == 0);
  CHECK(crossing_count(inside) == 1);
  CHECK(crossing_count(outside) == 0);
  CHECK(wick_coefficient(crossed, WickNormalization::sqrt_factorial) == -1.0);
  WickPartition three{{}, {0, 1, 2}};
  CHECK(std::abs(wick_coefficient(three, WickNormalization::sqrt_factorial) - std::sqrt(6.0)) < 1e-15);
  CHECK(std::abs(wick_coefficient(three, WickNormalization::inverse_sqrt_factorial) - 1.0 / std::sqrt(6.0)) < 1e-15);
}

TEST_CASE("wick words create hatted wedges from the vacuum") {
  const CarAlgebra car = make_car();
  const WickCalculus wick(car);
  std::mt19937_64 rng(8);
  const Vector omega = car.fock().vacuum();
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Vector> xs;
    std::vector<Vector> hats;
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back(linalg::random_vector(6, rng));
      hats.push_back(car.rep().hat(xs.back()));
    }
    const Vector target = car.fock().to_dense(wedge(hats));
    CHECK((wick.wick_word(xs).apply(omega) - target).norm() < 1e-12);
  }
}

TEST_CASE("two fields on the vacuum pin the normalisation") {
  // W(δ̂x)W(δ̂y)Ω = d(x)d(y) ℓ(δ_x)δ_y = sqrt(2!) δ̂x∧δ̂y for x ≠ y, Iy.
  const CarAlgebra car = make_car();
  const WickCalculus wick(car);
  const std::vector<Element> xy{0, 1};
  const auto d = wick.deltas(xy);
  const Vector omega = car.fock().vacuum();
  const Vector prod = wick.field_product(d).apply(omega);
  std::vector<Vector> hats{car.rep().hat(d[0]), car.rep().hat(d[1])};
  const Vector wedge2 = car.fock().to_dense(wedge(hats));
  CHECK((prod - std::sqrt(2.0) * wedge2).norm() < 1e-14);
  const WickExpansion e = wick.expand(std::span<const Element>(xy), 1e-10);
  CHECK_FALSE(e.coincide);
  CHECK(e.winner == WickNormalization::sqrt_factorial);
}

TEST_CASE("pairing is linear in the first slot of the inner product") {
  const CarAlgebra car = make_car();
  const WickCalculus wick(car);
  std::mt19937_64 rng(9);
  const Vector a = linalg::random_vector(6, rng);
  const Vector b = linalg::random_vector(6, rng);
  const cplx expect = car.rep().hat(car.rep().involution(a)).dot(car.rep().hat(b));
  CHECK(std::abs(wick.pairing(a, b) - expect) < 1e-14);
  // W(ξ̂)W(η̂) has vacuum expectation equal to the pairing.
  const std::vector<Vector> ab{a, b};
  CHECK(std::abs(car.vacuum_state(wick.field_product(ab)) - expect) < 1e-12);
}

TEST_CASE("expansion resolves to sqrt(m!) for n = 2..5") {
  const CarAlgebra car = make_car();
  const WickCalculus wick(car);
  std::mt19937_64 rng(10);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Vector> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(linalg::random_vector(6, rng));
    const WickExpansion e = wick.expand(xs, 1e-8);
    CHECK(e.partitions == enumerate_partitions(n).size());
    if (n == 1) {
      CHECK(e.coincide);
    } else {
      CHECK_FALSE(e.coincide);
      CHECK(e.winner == WickNormalization::sqrt_factorial);
      CHECK(e.residual_inverse_sqrt > 1e-3);
    }
    CHECK(distance(wick.wick_word(xs), wick.wick_word_recursive(xs, WickNormalization::sqrt_factorial)) < 1e-10);
  }
}
