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

#include "kvqa/linalg.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace kvqa {

namespace {
const Complex kI(0.0, 1.0);
}

const Matrix& pauli_i() {
  static const Matrix m = Matrix::Identity(2, 2);
  return m;
}

const Matrix& pauli_x() {
  static const Matrix m = [] {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
  }();
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m = [] {
    Matrix y(2, 2);
    y << 0, -kI, kI, 0;
    return y;
  }();
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = [] {
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
  }();
  return m;
}

const Matrix& hadamard() {
  static const Matrix m = [] {
    Matrix h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
  }();
  return m;
}

const Matrix& cnot() {
  static const Matrix m = tensor(qubit_proj(0), pauli_i()) +
                          tensor(qubit_proj(1), pauli_x());
  return m;
}

const Matrix& swap2() {
  static const Matrix m = swap_copies(2);
  return m;
}

Matrix qubit_proj(int b) {
  Matrix p = Matrix::Zero(2, 2);
  p(b, b) = 1.0;
  return p;
}

Vector basis_ket(Eigen::Index dim, Eigen::Index index) {
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix embed_one_qubit(const Matrix& op, int n, int q) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw std::invalid_argument("embed_one_qubit: operator must be 2x2");
  }
  if (q < 0 || q >= n) {
    throw std::invalid_argument("embed_one_qubit: qubit index out of range");
  }
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    out = tensor(out, i == q ? op : pauli_i());
  }
  return out;
}

Matrix embed_two_qubit(const Matrix& op, int n, int q1, int q2) {
  if (op.rows() != 4 || op.cols() != 4) {
    throw std::invalid_argument("embed_two_qubit: operator must be 4x4");
  }
  if (q1 < 0 || q1 >= n || q2 < 0 || q2 >= n) {
    throw std::invalid_argument("embed_two_qubit: qubit index out of range");
  }
  if (q1 == q2) {
    throw std::invalid_argument("embed_two_qubit: qubit indices must differ");
  }
  const Eigen::Index d = Eigen::Index(1) << n;
  // Basis index bit of qubit q (qubit 0 = most significant bit).
  const auto bit = [n](Eigen::Index idx, int q) -> int {
    return static_cast<int>((idx >> (n - 1 - q)) & 1);
  };
  Matrix out = Matrix::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    const int b1 = bit(col, q1);
    const int b2 = bit(col, q2);
    for (int a1 = 0; a1 < 2; ++a1) {
      for (int a2 = 0; a2 < 2; ++a2) {
        const Complex amp = op(2 * a1 + a2, 2 * b1 + b2);
        if (amp == Complex(0.0, 0.0)) continue;
        Eigen::Index row = col;
        const Eigen::Index m1 = Eigen::Index(1) << (n - 1 - q1);
        const Eigen::Index m2 = Eigen::Index(1) << (n - 1 - q2);
        row = (row & ~m1) | (a1 ? m1 : 0);
        row = (row & ~m2) | (a2 ? m2 : 0);
        out(row, col) += amp;
      }
    }
  }
  return out;
}

namespace {

// Enumerates all basis indices whose listed qubit bits are zero, and the
// offsets that set the sub-index j on those bits.
struct SubsystemIndexing {
  Eigen::Index d = 0;
  std::vector<Eigen::Index> bases;
  std::vector<Eigen::Index> offsets;  // offsets[j] for sub-index j
};

SubsystemIndexing subsystem_indexing(int n, const std::vector<int>& qubits) {
  if (qubits.empty()) {
    throw std::invalid_argument("subsystem op: empty qubit list");
  }
  SubsystemIndexing ix;
  ix.d = Eigen::Index(1) << n;
  Eigen::Index mask = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("subsystem op: qubit index out of range");
    }
    const Eigen::Index bit = Eigen::Index(1) << (n - 1 - q);
    if (mask & bit) {
      throw std::invalid_argument("subsystem op: repeated qubit index");
    }
    mask |= bit;
  }
  const int s = static_cast<int>(qubits.size());
  const Eigen::Index sub_dim = Eigen::Index(1) << s;
  ix.offsets.resize(sub_dim);
  for (Eigen::Index j = 0; j < sub_dim; ++j) {
    Eigen::Index off = 0;
    for (int t = 0; t < s; ++t) {
      if ((j >> (s - 1 - t)) & 1) {
        off |= Eigen::Index(1) << (n - 1 - qubits[t]);
      }
    }
    ix.offsets[j] = off;
  }
  for (Eigen::Index f = 0; f < ix.d; ++f) {
    if ((f & mask) == 0) ix.bases.push_back(f);
  }
  return ix;
}

}  // namespace

void left_mul_subsystem(const Matrix& op, int n, const std::vector<int>& qubits,
                        Matrix& m) {
  const SubsystemIndexing ix = subsystem_indexing(n, qubits);
  const Eigen::Index sub = static_cast<Eigen::Index>(ix.offsets.size());
  if (op.rows() != sub || op.cols() != sub || m.rows() != ix.d) {
    throw std::invalid_argument("left_mul_subsystem: dimension mismatch");
  }
  Matrix block(sub, m.cols());
  for (Eigen::Index base : ix.bases) {
    for (Eigen::Index j = 0; j < sub; ++j) {
      block.row(j) = m.row(base + ix.offsets[j]);
    }
    block = op * block;
    for (Eigen::Index j = 0; j < sub; ++j) {
      m.row(base + ix.offsets[j]) = block.row(j);
    }
  }
}

void right_mul_subsystem(const Matrix& op, int n,
                         const std::vector<int>& qubits, Matrix& m) {
  const SubsystemIndexing ix = subsystem_indexing(n, qubits);
  const Eigen::Index sub = static_cast<Eigen::Index>(ix.offsets.size());
  if (op.rows() != sub || op.cols() != sub || m.cols() != ix.d) {
    throw std::invalid_argument("right_mul_subsystem: dimension mismatch");
  }
  Matrix block(m.rows(), sub);
  for (Eigen::Index base : ix.bases) {
    for (Eigen::Index j = 0; j < sub; ++j) {
      block.col(j) = m.col(base + ix.offsets[j]);
    }
    block = block * op;
    for (Eigen::Index j = 0; j < sub; ++j) {
      m.col(base + ix.offsets[j]) = block.col(j);
    }
  }
}

Matrix swap_copies(Eigen::Index d) {
  Matrix s = Matrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      s(j * d + i, i * d + j) = 1.0;
    }
  }
  return s;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double trace_norm(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("trace_norm: matrix must be square");
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

}  // namespace kvqa
