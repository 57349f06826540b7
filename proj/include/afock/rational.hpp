// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rational.hpp
 * @brief Exact rationals for marginals, eigenvalue ratios and boundary weights.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace afock {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "n/d" or "n"; throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Like parse_rational but requires 0 < p < 1.
Rational parse_marginal(std::string_view text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace afock
