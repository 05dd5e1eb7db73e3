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

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace kvqa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-9;

// Qubit ordering convention, shared by every module: qubit 0 is the leftmost
// tensor factor, i.e. the most significant bit of the computational basis
// index.

const Matrix& pauli_i();
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
const Matrix& hadamard();
const Matrix& cnot();    // control = first factor
const Matrix& swap2();   // two-qubit SWAP

// |b><b| on one qubit, b in {0,1}.
Matrix qubit_proj(int b);

// Computational basis column vector |index> in dimension dim.
Vector basis_ket(Eigen::Index dim, Eigen::Index index);

// Kronecker product a (x) b.
Matrix tensor(const Matrix& a, const Matrix& b);

// Embeds a single-qubit operator at qubit q of an n-qubit register.
Matrix embed_one_qubit(const Matrix& op, int n, int q);

// Embeds a 4x4 two-qubit operator so that it acts on (q1, q2) of an n-qubit
// register, identity elsewhere. q1 and q2 may be non-adjacent or reversed.
Matrix embed_two_qubit(const Matrix& op, int n, int q1, int q2);

// In-place m <- op_emb * m, with op a 2^s x 2^s operator acting on the listed
// qubits (qubits[0] = most significant sub-bit). Equivalent to multiplying by
// the embedded operator but O(d^2) instead of O(d^3).
void left_mul_subsystem(const Matrix& op, int n, const std::vector<int>& qubits,
                        Matrix& m);

// In-place m <- m * op_emb.
void right_mul_subsystem(const Matrix& op, int n,
                         const std::vector<int>& qubits, Matrix& m);

// SWAP between two copies of a d-dimensional system: S|i,j> = |j,i>.
Matrix swap_copies(Eigen::Index d);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

// Sum of singular values.
double trace_norm(const Matrix& m);

double frobenius_norm(const Matrix& m);

}  // namespace kvqa
