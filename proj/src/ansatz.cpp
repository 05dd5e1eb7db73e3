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

#include "kvqa/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kvqa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const Matrix& generator_of(GateSpec::Kind kind) {
  switch (kind) {
    case GateSpec::Kind::rot_y:
      return pauli_y();
    case GateSpec::Kind::rot_z:
      return pauli_z();
    default:
      throw std::invalid_argument("generator_of: not a rotation gate");
  }
}

Matrix rotation_unitary(GateSpec::Kind kind, double theta) {
  return std::cos(theta) * pauli_i() -
         Complex(0.0, std::sin(theta)) * generator_of(kind);
}

BoundGate bind_gate(const PQChAnsatz& ansatz, int flat_index,
                    const std::vector<double>& theta) {
  const GateSpec& g = ansatz.gates()[flat_index];
  BoundGate b;
  b.kind = g.kind;
  if (g.is_rotation()) {
    b.qubits = {g.q1};
    b.ops = {rotation_unitary(g.kind, theta[g.param_index])};
  } else {
    b.qubits = {g.q1, g.q2};
    b.ops = ansatz.entangler_ops(flat_index);
  }
  return b;
}

Matrix apply_bound_gate(const BoundGate& g, int n, const Matrix& rho) {
  if (g.ops.size() == 1) {
    Matrix out = rho;
    left_mul_subsystem(g.ops[0], n, g.qubits, out);
    right_mul_subsystem(g.ops[0].adjoint(), n, g.qubits, out);
    return out;
  }
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& e : g.ops) {
    Matrix term = rho;
    left_mul_subsystem(e, n, g.qubits, term);
    right_mul_subsystem(e.adjoint(), n, g.qubits, term);
    out += term;
  }
  return out;
}

Matrix adjoint_bound_gate(const BoundGate& g, int n, const Matrix& obs) {
  if (g.ops.size() == 1) {
    Matrix out = obs;
    left_mul_subsystem(g.ops[0].adjoint(), n, g.qubits, out);
    right_mul_subsystem(g.ops[0], n, g.qubits, out);
    return out;
  }
  Matrix out = Matrix::Zero(obs.rows(), obs.cols());
  for (const Matrix& e : g.ops) {
    Matrix term = obs;
    left_mul_subsystem(e.adjoint(), n, g.qubits, term);
    right_mul_subsystem(e, n, g.qubits, term);
    out += term;
  }
  return out;
}

}  // namespace

PQChAnsatz::PQChAnsatz(int n, std::vector<std::vector<GateSpec>> layers)
    : n_(n), layers_(std::move(layers)) {
  if (n_ < 1) {
    throw std::invalid_argument("PQChAnsatz: n must be >= 1");
  }
  for (const auto& layer : layers_) {
    for (const GateSpec& g : layer) {
      flat_.push_back(g);
    }
  }
  int max_param = -1;
  for (const GateSpec& g : flat_) {
    if (g.q1 < 0 || g.q1 >= n_) {
      throw std::invalid_argument("PQChAnsatz: qubit index out of range");
    }
    if (g.is_rotation()) {
      if (g.param_index < 0) {
        throw std::invalid_argument(
            "PQChAnsatz: rotation gate without a parameter index");
      }
      max_param = std::max(max_param, g.param_index);
    } else {
      if (g.param_index >= 0) {
        throw std::invalid_argument(
            "PQChAnsatz: entangling gate must not carry a parameter");
      }
      if (g.q2 < 0 || g.q2 >= n_ || g.q2 == g.q1) {
        throw std::invalid_argument("PQChAnsatz: bad entangler qubit pair");
      }
    }
  }
  param_count_ = max_param + 1;
  param_to_gate_.assign(param_count_, -1);
  entangler_ops_.resize(flat_.size());
  for (size_t i = 0; i < flat_.size(); ++i) {
    const GateSpec& g = flat_[i];
    if (g.is_rotation()) {
      if (param_to_gate_[g.param_index] != -1) {
        throw std::invalid_argument("PQChAnsatz: duplicate parameter index");
      }
      param_to_gate_[g.param_index] = static_cast<int>(i);
    } else if (g.kind == GateSpec::Kind::noisy_cnot) {
      if (!g.noise) {
        throw std::invalid_argument("PQChAnsatz: noisy_cnot without params");
      }
      entangler_ops_[i] = noisy_cnot_channel(*g.noise).kraus_ops();
    } else {
      if (!g.weak) {
        throw std::invalid_argument(
            "PQChAnsatz: weak_noisy_cnot without a noise spec");
      }
      entangler_ops_[i] = weak_adversary_channel(*g.weak).kraus_ops();
    }
  }
  for (int k = 0; k < param_count_; ++k) {
    if (param_to_gate_[k] == -1) {
      throw std::invalid_argument("PQChAnsatz: parameter index gap");
    }
  }
}

int PQChAnsatz::gate_of_param(int k) const {
  if (k < 0 || k >= param_count_) {
    throw std::invalid_argument("PQChAnsatz: parameter index out of range");
  }
  return param_to_gate_[k];
}

const std::vector<Matrix>& PQChAnsatz::entangler_ops(int g) const {
  return entangler_ops_.at(g);
}

PQChAnsatz build_hea(int n, int L, double kappa, Topology topology) {
  if (n < 2 || L < 1) {
    throw std::invalid_argument("build_hea: need n >= 2 and L >= 1");
  }
  if (topology != Topology::ladder) {
    throw std::invalid_argument("build_hea: unsupported topology");
  }
  const PerturbationParams p = family_from_concurrence(kappa);
  std::vector<std::vector<GateSpec>> layers;
  for (int l = 0; l < L; ++l) {
    std::vector<GateSpec> layer;
    for (int q = 0; q < n; ++q) {
      layer.push_back({GateSpec::Kind::rot_y, q, -1, 2 * n * l + q, {}, {}});
    }
    for (int q = 0; q < n; ++q) {
      layer.push_back(
          {GateSpec::Kind::rot_z, q, -1, 2 * n * l + n + q, {}, {}});
    }
    for (int q = 0; q + 1 < n; ++q) {
      layer.push_back({GateSpec::Kind::noisy_cnot, q, q + 1, -1, p, {}});
    }
    layers.push_back(std::move(layer));
  }
  return PQChAnsatz(n, std::move(layers));
}

std::vector<double> sample_params(const PQChAnsatz& ansatz,
                                  const ParamInit& init, Rng& rng) {
  if (init.r <= 0.0 || init.r > 1.0) {
    throw std::invalid_argument("sample_params: r must lie in (0, 1]");
  }
  if (init.mode == ParamInit::Mode::full && init.r != 1.0) {
    throw std::invalid_argument("sample_params: full mode requires r = 1");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> theta(ansatz.param_count());
  if (init.mode == ParamInit::Mode::full) {
    for (double& t : theta) {
      t = kTwoPi * unit(rng);
    }
    return theta;
  }
  // Base points are a function of init.seed alone, so repeated calls with the
  // same init share the corners of the restricted intervals.
  Rng base_rng(mix_seed(init.seed, hash_tag("param-base")));
  for (double& t : theta) {
    const double base = kTwoPi * unit(base_rng);
    t = std::fmod(base + kTwoPi * init.r * unit(rng), kTwoPi);
  }
  return theta;
}

Matrix forward_raw(const PQChAnsatz& ansatz, const std::vector<double>& theta,
                   const Matrix& rho0) {
  if (static_cast<int>(theta.size()) != ansatz.param_count()) {
    throw std::invalid_argument("forward: parameter vector length mismatch");
  }
  if (rho0.rows() != ansatz.dim()) {
    throw std::invalid_argument("forward: state dimension mismatch");
  }
  Matrix rho = rho0;
  for (size_t i = 0; i < ansatz.gates().size(); ++i) {
    rho = apply_bound_gate(bind_gate(ansatz, static_cast<int>(i), theta),
                           ansatz.n(), rho);
  }
  return rho;
}

DensityMatrix forward(const PQChAnsatz& ansatz,
                      const std::vector<double>& theta,
                      const DensityMatrix& rho0) {
  return DensityMatrix(forward_raw(ansatz, theta, rho0.matrix()));
}

Matrix apply_bound(const std::vector<BoundGate>& gates, int n, Matrix rho) {
  for (const BoundGate& g : gates) {
    rho = apply_bound_gate(g, n, rho);
  }
  return rho;
}

Matrix adjoint_bound(const std::vector<BoundGate>& gates, int n, Matrix obs) {
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    obs = adjoint_bound_gate(*it, n, obs);
  }
  return obs;
}

AnsatzSplit split_at(const PQChAnsatz& ansatz, const std::vector<double>& theta,
                     int k) {
  if (static_cast<int>(theta.size()) != ansatz.param_count()) {
    throw std::invalid_argument("split_at: parameter vector length mismatch");
  }
  const int pos = ansatz.gate_of_param(k);
  const GateSpec& gk = ansatz.gates()[pos];
  AnsatzSplit s;
  s.n = ansatz.n();
  for (int i = 0; i < pos; ++i) {
    s.right.push_back(bind_gate(ansatz, i, theta));
  }
  for (int i = pos + 1; i < static_cast<int>(ansatz.gates().size()); ++i) {
    s.left.push_back(bind_gate(ansatz, i, theta));
  }
  s.generator = generator_of(gk.kind);
  s.generator_qubit = gk.q1;
  s.theta_k = theta[k];
  return s;
}

LeftAdjointResult adjoint_through_left(const AnsatzSplit& split,
                                       const Observable& obs) {
  if (obs.dim() != (Eigen::Index(1) << split.n)) {
    throw std::invalid_argument("adjoint_through_left: dimension mismatch");
  }
  LeftAdjointResult r;
  r.h_left = adjoint_bound(split.left, split.n, obs.matrix());
  r.norm = frobenius_norm(r.h_left);
  return r;
}

}  // namespace kvqa
