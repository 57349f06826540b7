// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file wick.hpp
 * @brief Wick words W(ξ̂1∧...∧ξ̂n) and the expansion of field products over
 *        partitions into singletons and pairs.
 *
 * W(ξ̂1)⋯W(ξ̂n) = Σ_𝒲 C(𝒲) Π_pairs ⟨ξ̂_j, \widehat{Iξ_i}⟩ · W(∧_singletons ξ̂),
 * where the inner product is linear in its first slot. C(𝒲) = (-1)^{c(𝒲)}
 * times a factorial normalisation in the singleton count m; two candidates are
 * carried and the dense product decides between them.
 */

#pragma once

#include <afock/car_algebra.hpp>
#include <afock/monomial_basis.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace afock {

struct WickPartition {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< (i, j) with i < j
  std::vector<std::size_t> singletons;                     ///< increasing
};

/// All partitions of {0..n-1} into blocks of size one or two.
std::vector<WickPartition> enumerate_partitions(std::size_t n);

/// #{pair-pair crossings i<k<j<l} + #{(pair, singleton) with the singleton nested inside}.
std::size_t crossing_count(const WickPartition& w);

enum class WickNormalization { inverse_sqrt_factorial, sqrt_factorial };

std::string to_string(WickNormalization n);

/// (-1)^{c(𝒲)} · (m!)^{∓1/2}.
double wick_coefficient(const WickPartition& w, WickNormalization n);

struct WickExpansion {
  WickNormalization winner = WickNormalization::sqrt_factorial;
  bool coincide = false;  ///< both candidates give the same operator
  double residual_inverse_sqrt = 0.0;
  double residual_sqrt = 0.0;
  std::size_t partitions = 0;
};

class WickCalculus {
 public:
  explicit WickCalculus(const CarAlgebra& car);

  [[nodiscard]] const CarAlgebra& car() const noexcept { return *car_; }

  /// Unique algebra element with W(...)Ω = ξ̂1∧...∧ξ̂n; ξi ∈ ℓ²(X).
  [[nodiscard]] FockOperator wick_word(std::span<const Vector> xs) const;
  [[nodiscard]] FockOperator wick_word(std::span<const Element> xs) const;

  /// ⟨ξ̂_j, \widehat{Iξ_i}⟩.
  [[nodiscard]] cplx pairing(const Vector& xi_i, const Vector& xi_j) const;

  /// W(ξ̂1)⋯W(ξ̂n).
  [[nodiscard]] FockOperator field_product(std::span<const Vector> xs) const;
  /// Right-hand side of the partition expansion for one candidate.
  [[nodiscard]] FockOperator expansion(std::span<const Vector> xs, WickNormalization n) const;

  /// Compares both candidates with the dense product; throws if the outcome is not unique.
  [[nodiscard]] WickExpansion expand(std::span<const Vector> xs, double tol) const;
  [[nodiscard]] WickExpansion expand(std::span<const Element> xs, double tol) const;

  /// W(∧) from the expansion solved for its top term; cross-check of wick_word.
  [[nodiscard]] FockOperator wick_word_recursive(std::span<const Vector> xs, WickNormalization n) const;

  [[nodiscard]] std::vector<Vector> deltas(std::span<const Element> xs) const;

 private:
  FockOperator recursive_sub(std::span<const Vector> xs, std::uint64_t subset, WickNormalization n,
                             std::map<std::uint64_t, FockOperator>& memo) const;

  const CarAlgebra* car_;
  MonomialBasis basis_;
};

}  // namespace afock
