// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file almost_periodic.hpp
 * @brief Diagonal one-parameter data on ℓ²(X): eigenvalues a(x) with
 *        a(Ix) = 1/a(x), and the scaling d(x) = sqrt(2a(x)/(1+a(x))).
 *
 * For a Bernoulli marginal p_x one takes a(x) = p_x/q_x, giving
 * d(x)² = 2p_x and d(Ix)² = 2q_x.
 */

#pragma once

#include <afock/common.hpp>
#include <afock/index_set.hpp>
#include <afock/rational.hpp>

#include <vector>

namespace afock {

class AlmostPeriodicRep {
 public:
  AlmostPeriodicRep() = default;
  /// One positive eigenvalue per base label.
  AlmostPeriodicRep(IndexSet index, std::vector<Rational> base_eigenvalues);
  static AlmostPeriodicRep from_marginals(IndexSet index, const std::vector<Rational>& p);

  [[nodiscard]] const IndexSet& index() const noexcept { return index_; }
  [[nodiscard]] const Rational& eigenvalue_exact(Element x) const { return eig_.at(x); }
  [[nodiscard]] double eigenvalue(Element x) const { return eig_d_.at(x); }
  [[nodiscard]] double scale(Element x) const { return scale_.at(x); }
  /// d(x)²/2 = a(x)/(1+a(x)); the marginal p_x on X0, q_x on IX0.
  [[nodiscard]] const Rational& weight_exact(Element x) const { return weight_.at(x); }

  /// ξ̂ = d·ξ pointwise.
  [[nodiscard]] Vector hat(const Vector& xi) const;
  /// (Iξ)(x) = conj(ξ(Ix)).
  [[nodiscard]] Vector involution(const Vector& xi) const;
  /// ⟨ξ, η⟩ on ℓ²(X), linear in ξ.
  [[nodiscard]] static cplx inner(const Vector& xi, const Vector& eta) { return eta.dot(xi); }

 private:
  IndexSet index_;
  std::vector<Rational> eig_;
  std::vector<Rational> weight_;
  std::vector<double> eig_d_;
  std::vector<double> scale_;
};

}  // namespace afock
