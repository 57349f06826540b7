// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file word.hpp
 * @brief Words in creators, annihilators and diagonal symbols, applied to
 *        sparse Fock vectors without building a dense space.
 *
 * A word is written left to right as an operator product; the rightmost
 * letter acts first.
 */

#pragma once

#include <afock/fock_space.hpp>
#include <afock/slater.hpp>

#include <variant>
#include <vector>

namespace afock {

namespace letter {
struct CreateLeft { Element x; };
struct AnnihilateLeft { Element x; };
struct CreateRight { Element x; };
struct AnnihilateRight { Element x; };
struct Diagonal { SymbolFunction f; };
struct Scale { cplx c; };
}  // namespace letter

using Letter = std::variant<letter::CreateLeft, letter::AnnihilateLeft, letter::CreateRight,
                            letter::AnnihilateRight, letter::Diagonal, letter::Scale>;

struct OpWord {
  std::vector<Letter> letters;

  OpWord& then(Letter l) {  // append on the right
    letters.push_back(std::move(l));
    return *this;
  }
};

/// `sites` bounds the labels accepted; throws InputError otherwise.
FockVector apply(const OpWord& word, const FockVector& v, std::size_t sites);

FockVector apply_create_left(Element x, const FockVector& v);
FockVector apply_annihilate_left(Element x, const FockVector& v);
FockVector apply_create_right(Element x, const FockVector& v);
FockVector apply_annihilate_right(Element x, const FockVector& v);
FockVector apply_diagonal(const SymbolFunction& f, const FockVector& v);

}  // namespace afock
