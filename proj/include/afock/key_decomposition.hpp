// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file key_decomposition.hpp
 * @brief Finite decomposition of the standard implementation through the
 *        permutation unitary:
 *
 *   U_g = J h_g^{1/2} J V_g P_{g,∅} + Σ_{∅≠F⊆supp(g)} J h_g^{1/2} J α_g(Z_F) V_g Z_F^{-1} P_{g,F}.
 *
 * Built from the pair isometries v_x = ℓ(x)ℓ(Ix), w_x, the sector projections
 * P_{g,F} and the scaling elements Z_x = d(x)² c_x c_x* − d(Ix)² c_x* c_x.
 */

#pragma once

#include <afock/bernoulli.hpp>

#include <string>
#include <vector>

namespace afock {

struct PairIsometries {
  FockOperator v;
  FockOperator w;
};

struct SectorProjection {
  std::size_t g = 0;
  std::vector<Element> f;
  FockOperator product;                ///< Π v v* Π w w*
  std::vector<SlaterIndex> basis;      ///< combinatorial description of the range
  double residual = 0.0;               ///< product vs projection onto span(basis)
};

struct DecompositionTerm {
  std::vector<Element> f;
  FockOperator op;
  double sector_residual = 0.0;  ///< ‖U P_F − op‖ max-entry
  double alpha_residual = 0.0;   ///< α_g(Z_F) vs U Z_F U*
};

struct DecompositionCertificate {
  std::size_t g = 0;
  std::vector<DecompositionTerm> terms;  ///< terms[0] is F = ∅
  double residual_max = 0.0;
  double residual_spectral = 0.0;
  std::string witness;  ///< worst (F, basis column) pair

  /// Throws VerificationError naming the witness.
  void require(double tol_max, double tol_spectral) const;
};

class KeyDecomposition {
 public:
  explicit KeyDecomposition(const BernoulliModel& model);

  [[nodiscard]] const BernoulliModel& model() const noexcept { return *model_; }

  /// x ∈ X0.
  [[nodiscard]] PairIsometries pair_isometries(Element x) const;

  /// Throws InputError if F ⊄ supp(g).
  [[nodiscard]] SectorProjection sector_projection(std::size_t g, const std::vector<Element>& f) const;
  /// S ⊇ F∪IF and no full pair {y,Iy} ⊆ S with y ∈ supp(g)∖F.
  [[nodiscard]] std::vector<SlaterIndex> sector_basis(std::size_t g, const std::vector<Element>& f) const;
  /// ‖1 − Σ_F P_{g,F}‖ max-entry.
  [[nodiscard]] double resolution_residual(std::size_t g) const;

  [[nodiscard]] FockOperator scaling_element(Element x) const;
  [[nodiscard]] FockOperator scaling_product(const std::vector<Element>& f) const;
  /// α_g(Z_F) through the relabeled generators.
  [[nodiscard]] FockOperator relabeled_scaling_product(std::size_t g, const std::vector<Element>& f) const;
  /// √(m+1)⋯√(m+2n).
  [[nodiscard]] static double scaling_constant(std::size_t n, std::size_t m);

  /// Residual of Z_F(y1∧...∧ym) = r_{F,m} (x̂1∧Îx1)∧...∧(y1∧...∧ym) for the given y's,
  /// which must be distinct and avoid F ∪ IF.
  [[nodiscard]] double zf_action_residual(const std::vector<Element>& f, const std::vector<Element>& ys) const;
  /// c_x c_x* ξ = ½(r_{m+1} r_{m+2} x̂∧Îx∧ξ + d(Ix)² ξ) on ξ = y1∧...∧ym.
  [[nodiscard]] double pair_annihilation_residual(Element x, const std::vector<Element>& ys) const;

  /// F ∩ IF ∩ supp(g) = ∅.
  [[nodiscard]] bool admissible(std::size_t g, const std::vector<Element>& f) const;
  /// ‖(U_g − J h^{1/2} J V_g)(x̂1∧...∧x̂n)‖; works for any F, the hypothesis is not checked.
  [[nodiscard]] double vanishing_residual(std::size_t g, const std::vector<Element>& f) const;

  [[nodiscard]] DecompositionCertificate decompose(std::size_t g) const;

 private:
  [[nodiscard]] Vector hatted_wedge(const std::vector<Element>& xs) const;

  const BernoulliModel* model_;
};

/// All subsets of a small set, in increasing bitmask order (∅ first).
std::vector<std::vector<Element>> subsets(const std::vector<Element>& s);

}  // namespace afock
