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

#include "kvqa/ansatz.hpp"
#include "kvqa/expressibility.hpp"

namespace kvqa {

struct GradientStats {
  int param_index = 0;
  double mean = 0.0;
  double variance = 0.0;
  int trials = 0;
  double std_err_mean = 0.0;
  double std_err_variance = 0.0;  // jackknife
};

struct BoundReport {
  double lhs = 0.0;  // |E[var] - var_R|
  double rhs = 0.0;  // 4 ||A^2_R(rho (x) rho)||_2 * E_L ||E_L^dag(H)||_2^2
  double lhs_std_err = 0.0;
  double rhs_std_err = 0.0;
  bool satisfied = false;
};

// C = Tr(H E_theta(rho0)).
double cost(const PQChAnsatz& ansatz, const std::vector<double>& theta,
            const DensityMatrix& rho0, const Observable& obs);

// Closed-form partial derivative at the split's parameter:
//   dC = i cos(2 theta_k) Tr[rho_R [V, H_L]]
//        - sin(2 theta_k) Tr[rho_R (H_L - V H_L V)].
double grad_analytic(const AnsatzSplit& split, const DensityMatrix& rho0,
                     const Observable& obs, double theta_k);

// Parameter-shift derivative C(theta + pi/4) - C(theta - pi/4), exact under
// the V^2 = 1 rotation convention. Test oracle for grad_analytic.
double grad_shift(const PQChAnsatz& ansatz, std::vector<double> theta, int k,
                  const DensityMatrix& rho0, const Observable& obs);

// Monte Carlo gradient statistics at parameter k over full parameter draws.
GradientStats grad_variance(const PQChAnsatz& ansatz, const ParamInit& init,
                            const DensityMatrix& rho0, const Observable& obs,
                            int k, int trials, Rng& rng);

// Haar-reference variance: the right sub-circuit is replaced by a
// Haar-random unitary per trial, with a fixed (possibly empty) left
// composition and rotation generator.
GradientStats reference_variance(int n, const Observable& obs,
                                 const std::vector<BoundGate>& left,
                                 const Matrix& generator, int generator_qubit,
                                 const DensityMatrix& rho0, int trials,
                                 Rng& rng);

// Deviation bound between the ensemble-averaged gradient variance and the
// Haar reference, with the right-ensemble two-copy norm and the left
// attenuation factor estimated from the same ansatz.
BoundReport theorem2_bound(const PQChAnsatz& ansatz, const ParamInit& init,
                           const DensityMatrix& rho0, const Observable& obs,
                           int k, int trials, Rng& rng);

}  // namespace kvqa
