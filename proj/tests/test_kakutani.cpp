// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/kakutani.hpp>

#include <doctest.h>

#include <cmath>

using namespace afock;

TEST_CASE("single-term Kakutani sum") {
  MarginalTable t;
  t.set(0, Rational(1, 2));
  t.set(1, Rational(2, 3));
  const PartialSum s = kakutani_partial_sum([](std::int64_t i) { return i + 1; }, t, 1);
  const double expect = std::pow(std::sqrt(0.5) - std::sqrt(2.0 / 3.0), 2) + std::pow(std::sqrt(0.5) - std::sqrt(1.0 / 3.0), 2);
  CHECK(std::abs(s.value - expect) < 1e-16);
  CHECK(s.terms == 1);
  CHECK(s.truncated == 0);
}

TEST_CASE("constant marginals and truncation") {
  MarginalTable t;
  for (std::int64_t i = -5; i <= 5; ++i) t.set(i, Rational(1, 3));
  const auto shift = [](std::int64_t i) { return i + 1; };
  const PartialSum s = kakutani_partial_sum(shift, t, t.order.size());
  CHECK(s.value == 0.0);
  CHECK(s.truncated == 1);  // 5 ↦ 6 leaves the table
  CHECK(s.terms == t.order.size() - 1);
}

TEST_CASE("window follows insertion order and grows monotonically") {
  MarginalTable t;
  t.set(3, Rational(1, 10));
  t.set(0, Rational(9, 10));
  t.set(1, Rational(1, 2));
  CHECK(t.order == std::vector<std::int64_t>{3, 0, 1});
  t.set(3, Rational(1, 5));  // overwrite keeps the position
  CHECK(t.order.size() == 3);
  const auto swap = [](std::int64_t i) { return i == 0 ? 1 : i == 1 ? 0 : i; };
  double prev = 0.0;
  for (std::size_t w = 0; w <= 3; ++w) {
    const double v = kakutani_partial_sum(swap, t, w).value;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("atomless sum") {
  MarginalTable t;
  t.set(0, Rational(1, 10));
  t.set(1, Rational(7, 10));
  CHECK(std::abs(atomless_partial_sum(t, 2).value - 0.4) < 1e-15);
  CHECK(atomless_partial_sum(t, 0).value == 0.0);
}
