// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file slater.hpp
 * @brief Slater indices, sparse Fock vectors and the wedge product.
 *
 * The orthonormal basis vector attached to S = {s1 < ... < sn} is
 * b_S = sqrt(n!) δ_{s1} ∧ ... ∧ δ_{sn}, with the wedge normalised by 1/n!
 * (so ‖δ_a ∧ δ_b‖² = 1/2).
 */

#pragma once

#include <afock/common.hpp>

#include <compare>
#include <map>
#include <span>
#include <vector>

namespace afock {

/// Strictly increasing tuple of elements of X.
class SlaterIndex {
 public:
  SlaterIndex() = default;
  /// Requires strictly increasing input.
  explicit SlaterIndex(std::vector<Element> sorted);
  SlaterIndex(std::initializer_list<Element> sorted)
      : SlaterIndex(std::vector<Element>(sorted)) {}

  /// Sorts; throws on repeats.
  static SlaterIndex from_unsorted(std::vector<Element> elems);
  static SlaterIndex from_mask(std::uint64_t mask);

  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }
  [[nodiscard]] const std::vector<Element>& elements() const noexcept { return elems_; }
  [[nodiscard]] auto begin() const noexcept { return elems_.begin(); }
  [[nodiscard]] auto end() const noexcept { return elems_.end(); }
  [[nodiscard]] Element front() const { return elems_.front(); }
  [[nodiscard]] Element operator[](std::size_t i) const { return elems_[i]; }

  [[nodiscard]] bool contains(Element x) const noexcept;
  [[nodiscard]] std::size_t count_below(Element x) const noexcept;
  [[nodiscard]] std::size_t count_above(Element x) const noexcept;
  [[nodiscard]] SlaterIndex with(Element x) const;     ///< S ∪ {x}; x ∉ S
  [[nodiscard]] SlaterIndex without(Element x) const;  ///< S ∖ {x}; x ∈ S
  [[nodiscard]] bool includes(const SlaterIndex& sub) const noexcept;

  /// Bit i set iff i ∈ S. Only valid while every element is < 64.
  [[nodiscard]] std::uint64_t mask() const;

  auto operator<=>(const SlaterIndex&) const = default;
  bool operator==(const SlaterIndex&) const = default;

 private:
  std::vector<Element> elems_;
};

/// Finite linear combination of Slater basis vectors.
class FockVector {
 public:
  using Map = std::map<SlaterIndex, cplx>;

  FockVector() = default;
  static FockVector basis(const SlaterIndex& s, cplx c = 1.0);
  static FockVector vacuum() { return basis(SlaterIndex{}); }

  void add(const SlaterIndex& s, cplx c);
  [[nodiscard]] cplx coefficient(const SlaterIndex& s) const;
  [[nodiscard]] const Map& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

  [[nodiscard]] double norm() const;
  [[nodiscard]] double max_abs() const;
  /// ⟨this, other⟩, linear in this.
  [[nodiscard]] cplx inner(const FockVector& other) const;
  /// Drops coefficients with |c| ≤ tol.
  void prune(double tol = 0.0);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(cplx c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(cplx c, FockVector a) { return a *= c; }

 private:
  Map terms_;
};

/// Sign of the permutation that sorts a tuple of distinct elements.
int sorting_sign(std::span<const Element> seq);

/**
 * ξ1 ∧ ... ∧ ξn for ξi ∈ ℓ²(X) (dense length-|X| vectors).
 * Coefficient of b_S is det[ξi(sj)] / sqrt(n!).
 */
FockVector wedge(std::span<const Vector> xs);

/// δ_{x1} ∧ ... ∧ δ_{xn}; zero on repeats.
FockVector wedge_deltas(std::span<const Element> xs);

}  // namespace afock
