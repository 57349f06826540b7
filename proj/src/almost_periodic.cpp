// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/almost_periodic.hpp>

#include <cmath>

namespace afock {

AlmostPeriodicRep::AlmostPeriodicRep(IndexSet index, std::vector<Rational> base_eigenvalues)
    : index_(std::move(index)) {
  const std::size_t k = index_.base_size();
  if (base_eigenvalues.size() != k) throw InputError("almost periodic: need one eigenvalue per base label");
  eig_.resize(2 * k);
  weight_.resize(2 * k);
  eig_d_.resize(2 * k);
  scale_.resize(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (base_eigenvalues[i] <= 0) throw InputError("almost periodic: eigenvalues must be positive");
    eig_[i] = base_eigenvalues[i];
    eig_[i + k] = 1 / base_eigenvalues[i];
  }
  for (std::size_t x = 0; x < 2 * k; ++x) {
    weight_[x] = eig_[x] / (1 + eig_[x]);
    eig_d_[x] = to_double(eig_[x]);
    scale_[x] = std::sqrt(2.0 * to_double(weight_[x]));
  }
}

AlmostPeriodicRep AlmostPeriodicRep::from_marginals(IndexSet index, const std::vector<Rational>& p) {
  std::vector<Rational> mu;
  mu.reserve(p.size());
  for (const auto& px : p) {
    if (px <= 0 || px >= 1) throw InputError("marginal must lie strictly between 0 and 1");
    mu.push_back(px / (1 - px));
  }
  return AlmostPeriodicRep(std::move(index), std::move(mu));
}

Vector AlmostPeriodicRep::hat(const Vector& xi) const {
  if (static_cast<std::size_t>(xi.size()) != index_.size()) throw InputError("hat: vector length != |X|");
  Vector out(xi.size());
  for (Eigen::Index x = 0; x < xi.size(); ++x) out[x] = scale_[static_cast<std::size_t>(x)] * xi[x];
  return out;
}

Vector AlmostPeriodicRep::involution(const Vector& xi) const {
  if (static_cast<std::size_t>(xi.size()) != index_.size()) throw InputError("involution: vector length != |X|");
  Vector out(xi.size());
  for (Element x = 0; x < index_.size(); ++x) out[x] = std::conj(xi[index_.partner(x)]);
  return out;
}

}  // namespace afock
