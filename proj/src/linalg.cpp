// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/linalg.hpp>

#include <Eigen/SVD>

namespace afock::linalg {

Matrix null_space(const Matrix& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Matrix::Identity(n, n);
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv[0] : 0.0;
  const double cut = rel_tol * std::max(smax, 1.0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv[r] > cut) ++r;
  return svd.matrixV().rightCols(n - r);
}

std::size_t numerical_rank(const Matrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  const double cut = rel_tol * std::max(sv[0], 1.0);
  std::size_t r = 0;
  while (r < static_cast<std::size_t>(sv.size()) && sv[static_cast<Eigen::Index>(r)] > cut) ++r;
  return r;
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Vector random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v[i] = cplx(re, im);
  }
  return v;
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> cluster_spectrum(const Eigen::VectorXd& sorted, double tol) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted[i] - sorted[i - 1] > tol) {
      out.emplace_back(start, i - start);
      start = i;
    }
  }
  return out;
}

}  // namespace afock::linalg
