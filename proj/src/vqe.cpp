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

#include "kvqa/vqe.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace kvqa {

PauliTermHamiltonian::PauliTermHamiltonian(int n, std::vector<Term> terms)
    : n_(n), terms_(std::move(terms)) {
  if (n_ < 1 || n_ > 10) {
    throw std::invalid_argument("PauliTermHamiltonian: n must be in [1, 10]");
  }
  for (const Term& t : terms_) {
    if (static_cast<int>(t.word.size()) != n_) {
      throw std::invalid_argument(
          "PauliTermHamiltonian: inconsistent Pauli word length");
    }
    for (char ch : t.word) {
      if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
        throw std::invalid_argument(
            "PauliTermHamiltonian: Pauli letters must be I, X, Y or Z");
      }
    }
  }
}

Matrix PauliTermHamiltonian::matrix() const {
  const Eigen::Index d = Eigen::Index(1) << n_;
  Matrix h = Matrix::Zero(d, d);
  for (const Term& t : terms_) {
    Matrix term = Matrix::Identity(1, 1);
    for (char ch : t.word) {
      const Matrix* p = &pauli_i();
      if (ch == 'X') p = &pauli_x();
      if (ch == 'Y') p = &pauli_y();
      if (ch == 'Z') p = &pauli_z();
      term = tensor(term, *p);
    }
    h += t.coefficient * term;
  }
  return h;
}

PauliTermHamiltonian load_hamiltonian(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<PauliTermHamiltonian::Term> terms;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double coeff;
    std::string word;
    if (!(ls >> coeff)) {
      std::string leftover;
      if (ls.clear(), ls >> leftover) {
        throw std::invalid_argument("load_hamiltonian: line " +
                                    std::to_string(line_no) +
                                    ": expected a decimal coefficient");
      }
      continue;  // blank or comment-only line
    }
    if (!(ls >> word)) {
      throw std::invalid_argument("load_hamiltonian: line " +
                                  std::to_string(line_no) +
                                  ": missing Pauli word");
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("load_hamiltonian: line " +
                                  std::to_string(line_no) +
                                  ": trailing tokens after Pauli word");
    }
    if (n == -1) {
      n = static_cast<int>(word.size());
    } else if (static_cast<int>(word.size()) != n) {
      throw std::invalid_argument("load_hamiltonian: line " +
                                  std::to_string(line_no) +
                                  ": Pauli word length differs from first term");
    }
    terms.push_back({coeff, word});
  }
  if (terms.empty()) {
    throw std::invalid_argument("load_hamiltonian: no terms found");
  }
  return PauliTermHamiltonian(n, std::move(terms));
}

PauliTermHamiltonian load_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("load_hamiltonian_file: cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_hamiltonian(buf.str());
}

double exact_ground_energy(const PauliTermHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix(),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

TrajectoryRecord run_vqe(const PauliTermHamiltonian& h,
                         const PQChAnsatz& ansatz, const OptimizerConfig& opt,
                         const DensityMatrix& rho0) {
  if (opt.learning_rate <= 0.0 || opt.max_iters < 1 ||
      opt.grad_tolerance <= 0.0) {
    throw std::invalid_argument("run_vqe: invalid optimizer config");
  }
  const Matrix hm = h.matrix();
  if (hm.rows() != ansatz.dim() || rho0.dim() != ansatz.dim()) {
    throw std::invalid_argument("run_vqe: dimension mismatch");
  }
  const Observable obs(hm);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hm, Eigen::EigenvaluesOnly);
  const double e_min = es.eigenvalues().minCoeff();
  const double e_max = es.eigenvalues().maxCoeff();

  Rng rng(mix_seed(opt.seed, hash_tag("vqe-init")));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> theta(ansatz.param_count());
  for (double& t : theta) {
    t = 2.0 * std::numbers::pi * unit(rng);
  }

  TrajectoryRecord rec;
  rec.ground_energy_exact = e_min;
  std::vector<double> grad(theta.size());
  double energy = 0.0;
  for (int iter = 0; iter < opt.max_iters; ++iter) {
    energy = cost(ansatz, theta, rho0, obs);
    if (energy < e_min - 1e-8 || energy > e_max + 1e-8) {
      throw std::runtime_error("run_vqe: energy left the spectrum range");
    }
    double gnorm = 0.0;
    for (int k = 0; k < ansatz.param_count(); ++k) {
      const AnsatzSplit split = split_at(ansatz, theta, k);
      grad[k] = grad_analytic(split, rho0, obs, theta[k]);
      gnorm = std::max(gnorm, std::abs(grad[k]));
    }
    rec.steps.push_back({iter, energy, gnorm});
    if (gnorm < opt.grad_tolerance) break;
    for (size_t k = 0; k < theta.size(); ++k) {
      theta[k] -= opt.learning_rate * grad[k];
    }
  }
  rec.final_energy = cost(ansatz, theta, rho0, obs);
  rec.bias = rec.final_energy - rec.ground_energy_exact;
  return rec;
}

}  // namespace kvqa
