// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file boundary.hpp
 * @brief Symbols z = [x1,...,xn] of distinct elements, the weights
 *        ω(z) = Σ (|z|₀ + |x_i|) δ_{x_i}, μ(z) = ω(z)/‖ω(z)‖₁, and the
 *        quantitative estimates that make z ↦ μ(z) asymptotically
 *        equivariant and asymptotically insensitive to adding one element.
 *
 * All weights are exact rationals; lengths are integer word lengths.
 */

#pragma once

#include <afock/group_action.hpp>
#include <afock/lengths.hpp>
#include <afock/rational.hpp>
#include <afock/slater.hpp>
#include <afock/word.hpp>

#include <map>
#include <vector>

namespace afock {

/// A symbol in Z_n is a sorted tuple of distinct elements; the empty tuple is ⋆.
using ZSymbol = SlaterIndex;

using WeightVector = std::map<Element, Rational>;

[[nodiscard]] inline std::size_t z0(const ZSymbol& z) { return z.size(); }
[[nodiscard]] std::int64_t z1(const ZSymbol& z, const LengthPair& lengths);

[[nodiscard]] WeightVector omega(const ZSymbol& z, const LengthPair& lengths);
/// μ(⋆) is the point mass at element 0.
[[nodiscard]] WeightVector mu(const ZSymbol& z, const LengthPair& lengths);

[[nodiscard]] Rational l1_norm(const WeightVector& w);
[[nodiscard]] Rational l1_distance(const WeightVector& a, const WeightVector& b);
/// (g·w)(g·x) = w(x).
[[nodiscard]] WeightVector pushforward(const GroupAction& action, std::size_t g, const WeightVector& w);
[[nodiscard]] ZSymbol act(const GroupAction& action, std::size_t g, const ZSymbol& z);

struct DefectReport {
  Rational defect;        ///< on μ
  Rational bound;
  Rational omega_defect;  ///< on ω
  Rational omega_bound;
  bool excluded = false;  ///< z = ⋆; inequalities not asserted

  [[nodiscard]] bool holds() const { return excluded || (defect <= bound && omega_defect <= omega_bound); }
};

/// ‖g·μ(z) − μ(g·z)‖₁ ≤ 2|g||z|₀/(|z|₀²+|z|₁), with ω-level ≤ |z|₀|g|. Requires z ≠ ⋆.
[[nodiscard]] DefectReport equivariance_defect(const GroupAction& action, const LengthPair& lengths, std::size_t g,
                                               const ZSymbol& z);

/// ‖μ(z) − μ(x::z)‖₁ ≤ (2/(|z|₀²+|z|₁))(2|z|₀+1+|x|), ω-level ≤ 2|z|₀+1+|x|. Requires x ∉ z.
[[nodiscard]] DefectReport extension_defect(const LengthPair& lengths, Element x, const ZSymbol& z);

/// ⟨φ, μ(z)⟩ for a table φ on X.
[[nodiscard]] double mu_star(const std::vector<double>& phi, const ZSymbol& z, const LengthPair& lengths);
[[nodiscard]] SymbolFunction mu_star_symbol(std::vector<double> phi, const LengthPair& lengths);

/// Number of z with |z|₀ + |z|₁ ≤ radius.
[[nodiscard]] std::uint64_t sublevel_count(const LengthPair& lengths, std::int64_t radius);

struct CommutationReport {
  double left_shift = 0.0;   ///< f ℓ(x) − ℓ(x) f([x,·])
  double left_avoid = 0.0;   ///< ℓ(x) f − ℓ(x) f 1_{Z_x}
  double right_shift = 0.0;
  double right_avoid = 0.0;
  [[nodiscard]] double worst() const;
};

/// f([x,·]): z ↦ f(z ∪ {x}) when x ∉ z, else 0.
[[nodiscard]] SymbolFunction shifted_symbol(const SymbolFunction& f, Element x);
/// 1_{Z_x}: z ↦ [x ∉ z].
[[nodiscard]] SymbolFunction avoid_indicator(Element x);

/// Both identities checked on every sample b_z through the sparse apply path.
[[nodiscard]] CommutationReport commutation_identities(const SymbolFunction& f, Element x,
                                                       const std::vector<ZSymbol>& samples, std::size_t sites);

struct DecayRow {
  std::size_t n = 0;
  std::int64_t weighted = 0;
  double measured = 0.0;  ///< max of the ℓ and r commutators on b_z
  double bound = 0.0;
  [[nodiscard]] bool dominated() const { return measured <= bound + 1e-12; }
};

struct DecayTable {
  std::vector<DecayRow> rows;
  bool dominated = true;
  bool decreasing = true;  ///< bound strictly decreasing along the sequence
};

/// ‖[ι(μ*φ), ℓ(x)] b_z‖ and the r(x) analogue against (2/(n²+|z|₁))(2n+1+|x|)‖φ‖∞.
[[nodiscard]] DecayTable commutator_decay(const std::vector<double>& phi, Element x,
                                          const std::vector<ZSymbol>& sequence, const LengthPair& lengths);

}  // namespace afock
