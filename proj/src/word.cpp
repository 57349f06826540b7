// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/word.hpp>

namespace afock {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double parity(std::size_t n) { return (n % 2) ? -1.0 : 1.0; }

}  // namespace

FockVector apply_create_left(Element x, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (!s.contains(x)) out.add(s.with(x), parity(s.count_below(x)) * c);
  }
  return out;
}

FockVector apply_annihilate_left(Element x, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (s.contains(x)) out.add(s.without(x), parity(s.count_below(x)) * c);
  }
  return out;
}

FockVector apply_create_right(Element x, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (!s.contains(x)) out.add(s.with(x), parity(s.count_above(x)) * c);
  }
  return out;
}

FockVector apply_annihilate_right(Element x, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (s.contains(x)) out.add(s.without(x), parity(s.count_above(x)) * c);
  }
  return out;
}

FockVector apply_diagonal(const SymbolFunction& f, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) out.add(s, f(s) * c);
  return out;
}

FockVector apply(const OpWord& word, const FockVector& v, std::size_t sites) {
  auto check = [sites](Element x) {
    if (x >= sites) throw InputError("word: label out of range");
  };
  FockVector cur = v;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    cur = std::visit(overloaded{
                         [&](const letter::CreateLeft& l) { check(l.x); return apply_create_left(l.x, cur); },
                         [&](const letter::AnnihilateLeft& l) { check(l.x); return apply_annihilate_left(l.x, cur); },
                         [&](const letter::CreateRight& l) { check(l.x); return apply_create_right(l.x, cur); },
                         [&](const letter::AnnihilateRight& l) { check(l.x); return apply_annihilate_right(l.x, cur); },
                         [&](const letter::Diagonal& l) { return apply_diagonal(l.f, cur); },
                         [&](const letter::Scale& l) { return l.c * cur; },
                     },
                     *it);
  }
  return cur;
}

}  // namespace afock
