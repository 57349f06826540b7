// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bernoulli.hpp
 * @brief Nonsingular Bernoulli actions realised on the CAR Fock space.
 *
 * With φ(c_x* c_x) = p_x the vacuum restricts to the product measure on
 * the diagonal algebra, and G acts by α_g(c_x) = c_{g·x}. The Radon–Nikodym
 * derivative satisfies φ∘α_g^{-1} = φ(·h_g), and U_g: aΩ ↦ α_g(a)h_g^{1/2}Ω.
 */

#pragma once

#include <afock/car_algebra.hpp>
#include <afock/group_action.hpp>
#include <afock/monomial_basis.hpp>
#include <afock/rational.hpp>

#include <string>
#include <vector>

namespace afock {

class BernoulliSystem {
 public:
  BernoulliSystem(GroupAction action, std::vector<Rational> p);

  [[nodiscard]] const IndexSet& index() const noexcept { return action_.index(); }
  [[nodiscard]] const GroupAction& action() const noexcept { return action_; }
  [[nodiscard]] std::size_t base_size() const noexcept { return p_.size(); }
  [[nodiscard]] const Rational& p(Element x) const { return p_.at(x); }
  [[nodiscard]] Rational q(Element x) const { return 1 - p_.at(x); }
  [[nodiscard]] const std::vector<Rational>& marginals() const noexcept { return p_; }

  /// {x ∈ X0 : p_x ≠ p_{g·x}}, exact.
  [[nodiscard]] std::vector<Element> support(std::size_t g) const;
  /// All p distinct.
  [[nodiscard]] bool generic() const;

  [[nodiscard]] AlmostPeriodicRep representation() const;

 private:
  GroupAction action_;
  std::vector<Rational> p_;
};

/// Which diagonal projection carries the p-ratio in h_g.
enum class RadonNikodymOrdering {
  occupied,  ///< p-ratio on c_x* c_x, q-ratio on c_x c_x*
  vacant,    ///< p-ratio on c_x c_x*, q-ratio on c_x* c_x
};

std::string to_string(RadonNikodymOrdering o);

struct OrderingResolution {
  RadonNikodymOrdering chosen = RadonNikodymOrdering::occupied;
  bool coincide = false;  ///< no element distinguishes the candidates
  double residual_occupied = 0.0;
  double residual_vacant = 0.0;
};

struct BoundaryIdentityReport {
  double expansion_residual = 0.0;        ///< 2c_x c_x* four-term expansion, max over X
  double partial_isometry_residual = 0.0; ///< ℓ(x)ℓ(Ix)e
  double factorization_residual = 0.0;    ///< ℓ(x)ℓ(x)*e = A A*, A = ℓ(Ix)ℓ(x)e
  double span_residual = 0.0;             ///< range(e) vs diagonal monomials·Ω
};

class BernoulliModel {
 public:
  explicit BernoulliModel(BernoulliSystem system);

  [[nodiscard]] const BernoulliSystem& system() const noexcept { return system_; }
  [[nodiscard]] const CarAlgebra& car() const noexcept { return car_; }
  [[nodiscard]] const MonomialBasis& basis() const noexcept { return basis_; }
  [[nodiscard]] const GroupAction& action() const noexcept { return system_.action(); }
  [[nodiscard]] Eigen::Index dimension() const noexcept { return car_.dimension(); }

  /// Either candidate h_g, built as a product over X0.
  [[nodiscard]] FockOperator radon_nikodym_candidate(std::size_t g, RadonNikodymOrdering o, double power = 1.0) const;
  /// max |φ(α_g^{-1}(m)) - φ(m h)| over the monomial basis.
  [[nodiscard]] double state_identity_residual(std::size_t g, const FockOperator& h) const;
  [[nodiscard]] const OrderingResolution& ordering() const noexcept { return ordering_; }

  [[nodiscard]] const FockOperator& radon_nikodym(std::size_t g) const { return h_.at(g); }
  [[nodiscard]] const FockOperator& radon_nikodym_sqrt(std::size_t g) const { return h_half_.at(g); }

  /// c_{g·x} for x ∈ X0.
  [[nodiscard]] std::vector<SparseMatrix> relabeled_generators(std::size_t g) const;
  /// Throws VerificationError if a is not in the algebra.
  [[nodiscard]] FockOperator alpha(std::size_t g, const FockOperator& a) const;

  [[nodiscard]] const FockOperator& standard_implementation(std::size_t g) const { return u_.at(g); }
  [[nodiscard]] const FockOperator& permutation(std::size_t g) const { return pi_.at(g); }
  /// V_g (δ̂_{x1}∧...) = δ̂_{gx1}∧...
  [[nodiscard]] FockOperator shift_operator(std::size_t g) const;
  /// f with V_g = ι(f)·π_g; f(T) = Π_{t∈T} d(t)/d(g^{-1}t).
  [[nodiscard]] SymbolFunction multiplier(std::size_t g) const;
  [[nodiscard]] FockOperator multiplier_operator(std::size_t g) const;
  /// J h_g^{1/2} J.
  [[nodiscard]] FockOperator conjugated_rn_sqrt(std::size_t g) const;

  [[nodiscard]] std::vector<SlaterIndex> bernoulli_basis() const;
  [[nodiscard]] FockOperator bernoulli_projection() const;
  [[nodiscard]] BoundaryIdentityReport bernoulli_boundary_identities() const;

 private:
  [[nodiscard]] FockOperator solve_implementation(std::size_t g) const;

  BernoulliSystem system_;
  CarAlgebra car_;
  MonomialBasis basis_;
  Matrix kinv_;
  OrderingResolution ordering_;
  std::vector<FockOperator> h_;
  std::vector<FockOperator> h_half_;
  std::vector<FockOperator> pi_;
  std::vector<FockOperator> u_;
};

}  // namespace afock
