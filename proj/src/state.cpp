// Copyright 2026 The kraus-vqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kvqa/state.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace kvqa {

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if (!is_hermitian(mat_, kHermitianTol)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
      std::abs(mat_.trace().imag()) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace must be 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix::pure: state not normalized");
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / double(dim));
}

Observable::Observable(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("Observable: matrix must be square");
  }
  if (!is_hermitian(mat_, kHermitianTol)) {
    throw std::invalid_argument("Observable: matrix is not Hermitian");
  }
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

Matrix partial_trace(const Matrix& m, int n, const std::vector<int>& discard) {
  const Eigen::Index d = Eigen::Index(1) << n;
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  std::vector<bool> drop(n, false);
  for (int q : discard) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("partial_trace: qubit index out of range");
    }
    drop[q] = true;
  }
  std::vector<int> kept;
  for (int q = 0; q < n; ++q) {
    if (!drop[q]) kept.push_back(q);
  }
  const int nk = static_cast<int>(kept.size());
  const int nd = n - nk;
  const Eigen::Index dk = Eigen::Index(1) << nk;
  const Eigen::Index dd = Eigen::Index(1) << nd;

  // Composes a full-register index from kept-subsystem and discarded-subsystem
  // indices, respecting the qubit-0-is-MSB convention.
  std::vector<int> dropped;
  for (int q = 0; q < n; ++q) {
    if (drop[q]) dropped.push_back(q);
  }
  const auto full_index = [&](Eigen::Index k, Eigen::Index t) {
    Eigen::Index idx = 0;
    for (int i = 0; i < nk; ++i) {
      if ((k >> (nk - 1 - i)) & 1) idx |= Eigen::Index(1) << (n - 1 - kept[i]);
    }
    for (int i = 0; i < nd; ++i) {
      if ((t >> (nd - 1 - i)) & 1) {
        idx |= Eigen::Index(1) << (n - 1 - dropped[i]);
      }
    }
    return idx;
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dd; ++t) {
        acc += m(full_index(i, t), full_index(j, t));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace kvqa
