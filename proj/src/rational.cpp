// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/rational.hpp>

#include <afock/common.hpp>

#include <cctype>

namespace afock {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw InputError("malformed rational: '" + std::string(whole) + "'");
  boost::multiprecision::cpp_int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InputError("malformed rational: '" + std::string(whole) + "'");
    }
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const auto num = parse_integer(trim(t.substr(0, slash)), text);
  const auto den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw InputError("malformed rational: zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational parse_marginal(std::string_view text) {
  Rational p = parse_rational(text);
  if (p <= 0 || p >= 1) throw InputError("marginal must lie strictly between 0 and 1: '" + std::string(text) + "'");
  return p;
}

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace afock
