// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/kakutani.hpp>

#include <afock/common.hpp>

#include <algorithm>
#include <cmath>

namespace afock {

void MarginalTable::set(std::int64_t i, Rational value) {
  if (value <= 0 || value >= 1) throw InputError("marginal table: p must lie strictly between 0 and 1");
  if (p.emplace(i, value).second) {
    order.push_back(i);
  } else {
    p[i] = value;
  }
}

namespace {

void check_window(const MarginalTable& table, std::size_t window) {
  if (window > table.order.size()) throw InputError("window larger than the marginal table");
}

}  // namespace

PartialSum kakutani_partial_sum(const std::function<std::int64_t(std::int64_t)>& g, const MarginalTable& table,
                                std::size_t window) {
  check_window(table, window);
  PartialSum out;
  for (std::size_t n = 0; n < window; ++n) {
    const std::int64_t i = table.order[n];
    auto it = table.p.find(g(i));
    if (it == table.p.end()) {
      ++out.truncated;
      continue;
    }
    const Rational& pi = table.p.at(i);
    const Rational& pg = it->second;
    const double a = std::sqrt(to_double(pi)) - std::sqrt(to_double(pg));
    const double b = std::sqrt(to_double(1 - pi)) - std::sqrt(to_double(1 - pg));
    out.value += a * a + b * b;
    ++out.terms;
  }
  return out;
}

PartialSum atomless_partial_sum(const MarginalTable& table, std::size_t window) {
  check_window(table, window);
  PartialSum out;
  for (std::size_t n = 0; n < window; ++n) {
    const Rational& pi = table.p.at(table.order[n]);
    out.value += to_double(std::min(pi, Rational(1 - pi)));
    ++out.terms;
  }
  return out;
}

}  // namespace afock
