// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file linalg.hpp
 * @brief Kernel, rank and small helpers shared by the algebra modules.
 */

#pragma once

#include <afock/common.hpp>

#include <random>

namespace afock::linalg {

/// Orthonormal basis (columns) of ker(a), singular values ≤ rel_tol·σ_max.
Matrix null_space(const Matrix& a, double rel_tol = 1e-9);

std::size_t numerical_rank(const Matrix& a, double rel_tol = 1e-9);

/// Column-major flattening.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Complex Gaussian vector with unit-variance real and imaginary parts.
Vector random_vector(Eigen::Index n, std::mt19937_64& rng);

/// Repeated-root-aware clustering of a sorted real spectrum.
std::vector<std::pair<Eigen::Index, Eigen::Index>> cluster_spectrum(const Eigen::VectorXd& sorted, double tol);

}  // namespace afock::linalg
