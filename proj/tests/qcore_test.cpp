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

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "kvqa/channel.hpp"
#include "kvqa/haar.hpp"
#include "kvqa/state.hpp"

namespace kvqa {
namespace {

Matrix flipped_cnot() {
  return tensor(qubit_proj(0), pauli_x()) + tensor(qubit_proj(1), pauli_i());
}

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

DensityMatrix random_state(Eigen::Index d, Rng& rng) {
  const Matrix g = random_matrix(d, d, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(rho);
}

KrausChannel random_channel(Eigen::Index d, int num_ops, Rng& rng) {
  std::vector<Matrix> gs;
  Matrix s = Matrix::Zero(d, d);
  for (int k = 0; k < num_ops; ++k) {
    gs.push_back(random_matrix(d, d, rng));
    s += gs.back().adjoint() * gs.back();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  const Matrix s_inv_sqrt =
      es.eigenvectors() *
      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      es.eigenvectors().adjoint();
  for (Matrix& g : gs) g = g * s_inv_sqrt;
  return KrausChannel(std::move(gs));
}

TEST_CASE("tensor basics") {
  CHECK((tensor(pauli_i(), pauli_i()) - Matrix::Identity(4, 4)).norm() == 0.0);

  const Vector v00 = basis_ket(4, 0);
  const Vector flipped = tensor(pauli_x(), pauli_x()) * v00;
  CHECK((flipped - basis_ket(4, 3)).norm() == doctest::Approx(0.0));

  const Matrix u_flip = flipped_cnot();
  CHECK(u_flip(1, 0).real() == 1.0);
  CHECK(u_flip(0, 1).real() == 1.0);
  CHECK(u_flip(2, 2).real() == 1.0);
  CHECK(u_flip(3, 3).real() == 1.0);
  CHECK((u_flip * u_flip.adjoint() - Matrix::Identity(4, 4)).norm() < 1e-15);
}

TEST_CASE("embed_two_qubit basis actions") {
  CHECK((embed_two_qubit(cnot(), 2, 0, 1) - cnot()).norm() == 0.0);

  // |101>: control (qubit 0) set, so qubit 2 flips -> |100>.
  const Matrix c02 = embed_two_qubit(cnot(), 3, 0, 2);
  CHECK((c02 * basis_ket(8, 0b101) - basis_ket(8, 0b100)).norm() == 0.0);

  const Matrix s01 = embed_two_qubit(swap2(), 3, 0, 1);
  CHECK((s01 * basis_ket(8, 0b100) - basis_ket(8, 0b010)).norm() == 0.0);

  CHECK_THROWS_AS(embed_two_qubit(cnot(), 3, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(embed_two_qubit(cnot(), 3, 1, 1), std::invalid_argument);
}

TEST_CASE("embed on adjacent qubits equals explicit tensor construction") {
  Rng rng(11);
  const Matrix op = random_matrix(4, 4, rng);
  const Matrix lhs = embed_two_qubit(op, 4, 1, 2);
  const Matrix rhs =
      tensor(tensor(pauli_i(), op), pauli_i());
  CHECK((lhs - rhs).norm() == 0.0);

  const Matrix op1 = random_matrix(2, 2, rng);
  CHECK((embed_one_qubit(op1, 3, 1) -
         tensor(tensor(pauli_i(), op1), pauli_i()))
            .norm() == 0.0);
}

TEST_CASE("embed with reversed qubit order swaps the operator factors") {
  Rng rng(12);
  const Matrix op = random_matrix(4, 4, rng);
  const Matrix direct = embed_two_qubit(op, 2, 1, 0);
  const Matrix via_swap = swap2() * op * swap2();
  CHECK((direct - via_swap).norm() < 1e-14);
}

TEST_CASE("subsystem multiplication agrees with embedded matrix products") {
  Rng rng(13);
  const int n = 4;
  const Eigen::Index d = 16;
  const Matrix m = random_matrix(d, d, rng);

  const Matrix op2 = random_matrix(4, 4, rng);
  for (const auto& [q1, q2] : std::vector<std::pair<int, int>>{
           {0, 1}, {1, 3}, {3, 0}, {2, 1}}) {
    const Matrix emb = embed_two_qubit(op2, n, q1, q2);
    Matrix left = m;
    left_mul_subsystem(op2, n, {q1, q2}, left);
    CHECK((left - emb * m).norm() < 1e-12);
    Matrix right = m;
    right_mul_subsystem(op2, n, {q1, q2}, right);
    CHECK((right - m * emb).norm() < 1e-12);
  }

  const Matrix op1 = random_matrix(2, 2, rng);
  for (int q = 0; q < n; ++q) {
    const Matrix emb = embed_one_qubit(op1, n, q);
    Matrix left = m;
    left_mul_subsystem(op1, n, {q}, left);
    CHECK((left - emb * m).norm() < 1e-12);
  }
}

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix(Matrix::Identity(2, 2) * 0.5));
  CHECK_THROWS_AS(DensityMatrix(Matrix::Identity(2, 2)),
                  std::invalid_argument);  // trace 2
  Matrix nh(2, 2);
  nh << 0.5, 0.1, 0.3, 0.5;
  CHECK_THROWS_AS(DensityMatrix{nh}, std::invalid_argument);
  Matrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, std::invalid_argument);
}

TEST_CASE("apply_channel examples") {
  Rng rng(21);
  const DensityMatrix rho = random_state(4, rng);
  const KrausChannel id4 = KrausChannel::identity(4);
  CHECK((apply_channel(id4, rho).matrix() - rho.matrix()).norm() < 1e-14);

  const KrausChannel cx = KrausChannel::from_unitary(cnot());
  const DensityMatrix in10 = DensityMatrix::pure(basis_ket(4, 2));
  const DensityMatrix out = apply_channel(cx, in10);
  CHECK((out.matrix() - basis_ket(4, 3) * basis_ket(4, 3).adjoint()).norm() <
        1e-14);

  const KrausChannel dep = KrausChannel::depolarizing(1.0);
  const DensityMatrix zero = DensityMatrix::pure(basis_ket(2, 0));
  CHECK((apply_channel(dep, zero).matrix() - Matrix::Identity(2, 2) * 0.5)
            .norm() < 1e-14);
}

TEST_CASE("adjoint_apply examples and duality") {
  Rng rng(22);
  const Matrix hm = random_matrix(4, 4, rng);
  const Observable h(hm + hm.adjoint());

  CHECK((adjoint_apply(KrausChannel::identity(4), h).matrix() - h.matrix())
            .norm() < 1e-14);

  const Matrix u = haar_unitary(4, rng);
  const KrausChannel uch = KrausChannel::from_unitary(u);
  CHECK((adjoint_apply(uch, h).matrix() - u.adjoint() * h.matrix() * u)
            .norm() < 1e-12);

  for (int i = 0; i < 20; ++i) {
    const KrausChannel ch = random_channel(4, 3, rng);
    const DensityMatrix rho = random_state(4, rng);
    const Complex a = (h.matrix() * apply_channel_raw(ch, rho.matrix())).trace();
    const Complex b = (adjoint_apply_raw(ch, h.matrix()) * rho.matrix()).trace();
    CHECK(std::abs(a - b) < 1e-10);
  }

  const Observable traceless(pauli_z());
  CHECK(adjoint_apply(KrausChannel::depolarizing(1.0), traceless)
            .matrix()
            .norm() < 1e-14);
}

TEST_CASE("apply_channel preserves trace and Hermiticity") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const Eigen::Index d = Eigen::Index(1) << n;
    const KrausChannel ch = random_channel(d, 2 + static_cast<int>(rng() % 3),
                                           rng);
    const DensityMatrix rho = random_state(d, rng);
    const Matrix out = apply_channel_raw(ch, rho.matrix());
    CHECK(std::abs(out.trace().real() - 1.0) < 1e-10);
    CHECK(is_hermitian(out));
  }
}

TEST_CASE("purity examples") {
  Rng rng(24);
  const Matrix u = haar_unitary(4, rng);
  const DensityMatrix pure = DensityMatrix::pure(u.col(0));
  CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(DensityMatrix::maximally_mixed(8)) ==
        doctest::Approx(0.125).epsilon(1e-12));
  Matrix half = Matrix::Zero(2, 2);
  half(0, 0) = half(1, 1) = 0.5;
  CHECK(purity(DensityMatrix(half)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("partial trace over product states") {
  Rng rng(25);
  const DensityMatrix a = random_state(2, rng);
  const DensityMatrix b = random_state(4, rng);
  const Matrix joint = tensor(a.matrix(), b.matrix());
  CHECK((partial_trace(joint, 3, {1, 2}) - a.matrix()).norm() < 1e-12);
  CHECK((partial_trace(joint, 3, {0}) - b.matrix()).norm() < 1e-12);
}

TEST_CASE("haar_unitary is unitary and has the right first moment") {
  Rng rng(31);
  const Matrix u = haar_unitary(5, rng);
  CHECK((u.adjoint() * u - Matrix::Identity(5, 5)).norm() < 1e-10);

  double acc = 0.0;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    acc += std::norm(haar_unitary(2, rng)(0, 0));
  }
  CHECK(std::abs(acc / samples - 0.5) < 0.01);
}

TEST_CASE("haar_unitary left invariance (first and second moments)") {
  Rng rng(32);
  const Matrix w = haar_unitary(2, rng);
  const Matrix rho = [] {
    Matrix m(2, 2);
    m << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
    return m;
  }();
  Matrix first = Matrix::Zero(2, 2);
  Matrix first_w = Matrix::Zero(2, 2);
  Matrix second = Matrix::Zero(4, 4);
  Matrix second_w = Matrix::Zero(4, 4);
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    const Matrix u = haar_unitary(2, rng);
    const Matrix wu = w * u;
    first += u * rho * u.adjoint();
    first_w += wu * rho * wu.adjoint();
    const Matrix out = u * rho * u.adjoint();
    const Matrix out_w = wu * rho * wu.adjoint();
    second += tensor(out, out);
    second_w += tensor(out_w, out_w);
  }
  CHECK(((first - first_w) / samples).cwiseAbs().maxCoeff() < 0.01);
  CHECK(((second - second_w) / samples).cwiseAbs().maxCoeff() < 0.01);
  CHECK(((first / samples) - Matrix::Identity(2, 2) * 0.5)
            .cwiseAbs()
            .maxCoeff() < 0.01);
}

TEST_CASE("choi matrix examples") {
  const Eigen::Index d = 4;
  const Matrix choi_id = choi_matrix(KrausChannel::identity(d));
  Matrix max_ent = Matrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      max_ent(i * d + i, j * d + j) = 1.0;
    }
  }
  CHECK((choi_id - max_ent).norm() < 1e-14);
  CHECK(choi_id.trace().real() == doctest::Approx(4.0));

  Rng rng(33);
  const Matrix u = haar_unitary(d, rng);
  const Matrix choi_u = choi_matrix(KrausChannel::from_unitary(u));
  Eigen::SelfAdjointEigenSolver<Matrix> es(choi_u);
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(es.eigenvalues().head(d * d - 1).cwiseAbs().maxCoeff() < 1e-9);

  // Partial trace over the output factor returns the identity.
  const KrausChannel ch = random_channel(4, 3, rng);
  const Matrix choi = choi_matrix(ch);
  Matrix pt = Matrix::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        pt(i, j) += choi(r * d + i, r * d + j);
      }
    }
  }
  CHECK((pt - Matrix::Identity(d, d)).norm() < 1e-10);
}

TEST_CASE("trace norm examples and SVD oracle") {
  CHECK(trace_norm(Matrix::Identity(5, 5)) == doctest::Approx(5.0));
  Matrix pm(2, 2);
  pm << 1, 0, 0, -1;
  CHECK(trace_norm(pm) == doctest::Approx(2.0));

  Rng rng(34);
  const Matrix m = random_matrix(6, 6, rng);
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m);
  const double oracle = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  CHECK(std::abs(trace_norm(m) - oracle) < 1e-8);
}

}  // namespace
}  // namespace kvqa
