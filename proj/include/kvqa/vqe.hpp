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

#include <string>

#include "kvqa/trainability.hpp"

namespace kvqa {

/// Real-weighted Pauli-word sum, parsed from lines of
/// "coefficient pauli-word" with '#' comments.
class PauliTermHamiltonian {
 public:
  struct Term {
    double coefficient;
    std::string word;  // length n over {I, X, Y, Z}
  };

  PauliTermHamiltonian(int n, std::vector<Term> terms);

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  Matrix matrix() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

PauliTermHamiltonian load_hamiltonian(const std::string& text);
PauliTermHamiltonian load_hamiltonian_file(const std::string& path);

// Minimum eigenvalue via dense Hermitian diagonalization; n <= 10.
double exact_ground_energy(const PauliTermHamiltonian& h);

struct OptimizerConfig {
  double learning_rate = 0.05;
  int max_iters = 200;
  double grad_tolerance = 1e-6;
  uint64_t seed = 0;
};

struct TrajectoryRecord {
  struct Step {
    int iteration;
    double energy;
    double grad_norm;  // infinity norm
  };
  std::vector<Step> steps;
  double final_energy = 0.0;
  double ground_energy_exact = 0.0;
  double bias = 0.0;  // final - ground
};

// Plain gradient descent on Tr(H E_theta(rho0)) with the analytic gradient,
// starting from uniform random angles drawn from opt.seed.
TrajectoryRecord run_vqe(const PauliTermHamiltonian& h,
                         const PQChAnsatz& ansatz, const OptimizerConfig& opt,
                         const DensityMatrix& rho0);

}  // namespace kvqa
