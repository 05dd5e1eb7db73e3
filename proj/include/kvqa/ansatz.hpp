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

#include <optional>

#include "kvqa/adversary.hpp"
#include "kvqa/rng.hpp"

namespace kvqa {

struct GateSpec {
  enum class Kind { rot_y, rot_z, noisy_cnot, weak_noisy_cnot };
  Kind kind;
  int q1 = 0;
  int q2 = -1;               // second qubit of entangling gates
  int param_index = -1;      // rotation gates only
  std::optional<PerturbationParams> noise;  // noisy_cnot
  std::optional<WeakNoiseSpec> weak;        // weak_noisy_cnot

  bool is_rotation() const {
    return kind == Kind::rot_y || kind == Kind::rot_z;
  }
};

/// Layered parameterized quantum channel: rotation layers interleaved with
/// noisy entangling gates. Rotation convention U(theta) = exp(-i theta V)
/// with V a bare Pauli, so V^2 = 1 and the pi/4 shift rule is exact.
class PQChAnsatz {
 public:
  PQChAnsatz(int n, std::vector<std::vector<GateSpec>> layers);

  int n() const { return n_; }
  Eigen::Index dim() const { return Eigen::Index(1) << n_; }
  int param_count() const { return param_count_; }
  const std::vector<std::vector<GateSpec>>& layers() const { return layers_; }
  const std::vector<GateSpec>& gates() const { return flat_; }
  // Position in gates() of the rotation carrying parameter k.
  int gate_of_param(int k) const;

  // 4x4 Kraus operators of the entangling gate at flat position g.
  const std::vector<Matrix>& entangler_ops(int g) const;

 private:
  int n_;
  std::vector<std::vector<GateSpec>> layers_;
  std::vector<GateSpec> flat_;
  std::vector<int> param_to_gate_;
  std::vector<std::vector<Matrix>> entangler_ops_;  // empty for rotations
  int param_count_ = 0;
};

// Open-chain hardware-efficient ansatz: per layer, R_y on every qubit, R_z on
// every qubit, then noisy CNOT(i -> i+1) for i = 0..n-2, each entangler built
// from the symmetric resource family at concurrence kappa.
enum class Topology { ladder };
PQChAnsatz build_hea(int n, int L, double kappa,
                     Topology topology = Topology::ladder);

struct ParamInit {
  enum class Mode { full, restricted };
  Mode mode = Mode::full;
  double r = 1.0;      // width fraction of the restricted interval [base, base + 2 pi r)
  uint64_t seed = 0;   // seeds the per-parameter base points in restricted mode
};

// full: theta ~ Unif[0, 2pi). restricted: base points are drawn once from
// init.seed (identical across calls), offsets Unif[0, 2 pi r) from rng.
std::vector<double> sample_params(const PQChAnsatz& ansatz,
                                  const ParamInit& init, Rng& rng);

DensityMatrix forward(const PQChAnsatz& ansatz,
                      const std::vector<double>& theta,
                      const DensityMatrix& rho0);
Matrix forward_raw(const PQChAnsatz& ansatz, const std::vector<double>& theta,
                   const Matrix& rho0);

/// One gate with its angle bound and operators materialized (2x2 unitary for
/// rotations, 4x4 Kraus list for entanglers).
struct BoundGate {
  GateSpec::Kind kind;
  std::vector<int> qubits;
  std::vector<Matrix> ops;
};

// State propagation rho <- gates(rho), in order.
Matrix apply_bound(const std::vector<BoundGate>& gates, int n, Matrix rho);
// Heisenberg propagation obs <- gates^dag(obs), in reverse order.
Matrix adjoint_bound(const std::vector<BoundGate>& gates, int n, Matrix obs);

struct AnsatzSplit {
  int n = 0;
  std::vector<BoundGate> right;  // gates strictly before gate k, angles bound
  std::vector<BoundGate> left;   // gates strictly after
  Matrix generator;              // 2x2 Pauli generator of gate k
  int generator_qubit = 0;
  double theta_k = 0.0;
};

AnsatzSplit split_at(const PQChAnsatz& ansatz, const std::vector<double>& theta,
                     int k);

struct LeftAdjointResult {
  Matrix h_left;  // E_L^dag(H)
  double norm;    // Frobenius norm of h_left
};

LeftAdjointResult adjoint_through_left(const AnsatzSplit& split,
                                       const Observable& obs);

}  // namespace kvqa
