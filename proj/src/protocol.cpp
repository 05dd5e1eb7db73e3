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

#include "kvqa/protocol.hpp"

#include <stdexcept>

namespace kvqa {

namespace {

// Register layout: qubit 0 = control, 1 = shared half A, 2 = shared half B,
// 3 = target.
Matrix initial_register(const Matrix& rho_ct, const Vector& resource) {
  const Matrix rho_res = resource * resource.adjoint();
  Matrix full = Matrix::Zero(16, 16);
  for (Eigen::Index r = 0; r < 16; ++r) {
    const Eigen::Index rc = (r >> 3) & 1, ra = (r >> 2) & 1;
    const Eigen::Index rb = (r >> 1) & 1, rt = r & 1;
    for (Eigen::Index s = 0; s < 16; ++s) {
      const Eigen::Index sc = (s >> 3) & 1, sa = (s >> 2) & 1;
      const Eigen::Index sb = (s >> 1) & 1, st = s & 1;
      full(r, s) = rho_ct(rc * 2 + rt, sc * 2 + st) *
                   rho_res(ra * 2 + rb, sa * 2 + sb);
    }
  }
  return full;
}

}  // namespace

ProtocolTranscript run_cat_protocol(const DensityMatrix& control_target,
                                    const PerturbationParams& resource) {
  if (control_target.dim() != 4) {
    throw std::invalid_argument("run_cat_protocol: expected a 4x4 state");
  }
  if (!resource.is_normalized()) {
    throw std::invalid_argument(
        "run_cat_protocol: resource amplitudes must be normalized");
  }

  const Matrix entangle = embed_two_qubit(cnot(), 4, 0, 1);
  const Matrix use_half = embed_two_qubit(cnot(), 4, 2, 3);
  const Matrix h_b = embed_one_qubit(hadamard(), 4, 2);
  const Matrix x_b = embed_one_qubit(pauli_x(), 4, 2);
  const Matrix z_c = embed_one_qubit(pauli_z(), 4, 0);

  const Matrix rho0 =
      initial_register(control_target.matrix(), resource.ket());
  const Matrix after_entangle = entangle * rho0 * entangle.adjoint();

  ProtocolTranscript t;
  t.output = Matrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a) {
    const Matrix pa = embed_one_qubit(qubit_proj(a), 4, 1);
    Matrix rho_a = pa * after_entangle * pa.adjoint();
    if (a == 1) {
      rho_a = x_b * rho_a * x_b.adjoint();
    }
    rho_a = use_half * rho_a * use_half.adjoint();
    rho_a = h_b * rho_a * h_b.adjoint();
    for (int b = 0; b < 2; ++b) {
      const Matrix pb = embed_one_qubit(qubit_proj(b), 4, 2);
      Matrix rho_ab = pb * rho_a * pb.adjoint();
      if (b == 1) {
        rho_ab = z_c * rho_ab * z_c.adjoint();
      }
      ProtocolBranch branch;
      branch.outcome_a = a;
      branch.outcome_b = b;
      branch.probability = rho_ab.trace().real();
      const Matrix reduced = partial_trace(rho_ab, 4, {1, 2});
      t.output += reduced;
      branch.state = branch.probability > 0.0
                         ? Matrix(reduced / branch.probability)
                         : Matrix::Zero(4, 4);
      t.branches.push_back(std::move(branch));
    }
  }
  return t;
}

std::array<double, 4> branch_probabilities(const ProtocolTranscript& t) {
  std::array<double, 4> p{};
  for (const ProtocolBranch& b : t.branches) {
    p[b.outcome_a * 2 + b.outcome_b] = b.probability;
  }
  return p;
}

}  // namespace kvqa
