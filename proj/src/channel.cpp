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

#include "kvqa/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace kvqa {

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops)
    : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) {
    throw std::invalid_argument("KrausChannel: empty Kraus list");
  }
  const Eigen::Index rows = ops_.front().rows();
  const Eigen::Index cols = ops_.front().cols();
  Matrix acc = Matrix::Zero(cols, cols);
  for (const Matrix& e : ops_) {
    if (e.rows() != rows || e.cols() != cols) {
      throw std::invalid_argument("KrausChannel: inconsistent operator sizes");
    }
    acc += e.adjoint() * e;
  }
  if ((acc - Matrix::Identity(cols, cols)).norm() > kTraceTol) {
    throw std::invalid_argument(
        "KrausChannel: completeness sum_k E_k^dag E_k != identity");
  }
}

KrausChannel KrausChannel::identity(Eigen::Index dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel KrausChannel::from_unitary(const Matrix& u) {
  return KrausChannel({u});
}

KrausChannel KrausChannel::depolarizing(double strength) {
  const double p = strength;
  std::vector<Matrix> ops;
  ops.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * pauli_i());
  ops.push_back(std::sqrt(p / 4.0) * pauli_x());
  ops.push_back(std::sqrt(p / 4.0) * pauli_y());
  ops.push_back(std::sqrt(p / 4.0) * pauli_z());
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::bit_flip(double strength) {
  return KrausChannel({std::sqrt(1.0 - strength) * pauli_i(),
                       std::sqrt(strength) * pauli_x()});
}

KrausChannel KrausChannel::phase_flip(double strength) {
  return KrausChannel({std::sqrt(1.0 - strength) * pauli_i(),
                       std::sqrt(strength) * pauli_z()});
}

KrausChannel KrausChannel::compose(const KrausChannel& other) const {
  if (other.dim_out() != dim_in()) {
    throw std::invalid_argument("KrausChannel::compose: dimension mismatch");
  }
  std::vector<Matrix> ops;
  ops.reserve(ops_.size() * other.ops_.size());
  for (const Matrix& a : ops_) {
    for (const Matrix& b : other.ops_) {
      ops.push_back(a * b);
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::tensor_with(const KrausChannel& other) const {
  std::vector<Matrix> ops;
  ops.reserve(ops_.size() * other.ops_.size());
  for (const Matrix& a : ops_) {
    for (const Matrix& b : other.ops_) {
      ops.push_back(tensor(a, b));
    }
  }
  return KrausChannel(std::move(ops));
}

Matrix apply_channel_raw(const KrausChannel& ch, const Matrix& rho) {
  if (rho.rows() != ch.dim_in()) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const Matrix& e : ch.kraus_ops()) {
    out.noalias() += e * rho * e.adjoint();
  }
  return out;
}

Matrix adjoint_apply_raw(const KrausChannel& ch, const Matrix& obs) {
  if (obs.rows() != ch.dim_out()) {
    throw std::invalid_argument("adjoint_apply: dimension mismatch");
  }
  Matrix out = Matrix::Zero(ch.dim_in(), ch.dim_in());
  for (const Matrix& e : ch.kraus_ops()) {
    out.noalias() += e.adjoint() * obs * e;
  }
  return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_channel_raw(ch, rho.matrix()));
}

Observable adjoint_apply(const KrausChannel& ch, const Observable& obs) {
  return Observable(adjoint_apply_raw(ch, obs.matrix()));
}

Matrix choi_matrix(const KrausChannel& ch) {
  if (ch.dim_in() != ch.dim_out()) {
    throw std::invalid_argument("choi_matrix: channel must be square");
  }
  const Eigen::Index d = ch.dim_in();
  Matrix choi = Matrix::Zero(d * d, d * d);
  for (const Matrix& e : ch.kraus_ops()) {
    // vec(E) built from sum_i (E|i>) (x) |i>.
    Vector v = Vector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index r = 0; r < d; ++r) {
        v(r * d + i) = e(r, i);
      }
    }
    choi.noalias() += v * v.adjoint();
  }
  return choi;
}

}  // namespace kvqa
