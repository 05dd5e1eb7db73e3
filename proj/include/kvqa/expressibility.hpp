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

#include <functional>

#include "kvqa/rng.hpp"
#include "kvqa/state.hpp"

namespace kvqa {

/// Coefficients of the Haar second-moment twirl of rho (x) rho:
/// G2 = alpha 1 + beta SWAP on the two-copy space.
struct HaarMomentCoeffs {
  double alpha = 0.0;
  double beta = 0.0;
  Eigen::Index d = 0;
};

struct ExpressibilityEstimate {
  double delta_sq = 0.0;  // squared two-norm deviation from the Haar moment
  double nu_bar = 0.0;    // ensemble-averaged output purity
  double n_noise = 0.0;   // cross-realization fluctuation term
  int trials = 0;
  double std_err = 0.0;   // standard error of delta_sq
};

// One realization of the channel ensemble applied to rho; the sampler owns
// whatever randomness defines the ensemble (typically uniform angles).
using ChannelSampler = std::function<Matrix(const Matrix& rho, Rng& rng)>;

// alpha = (d - Tr rho^2) / (d (d^2 - 1)), beta = (d Tr rho^2 - 1) / (d (d^2 - 1)).
HaarMomentCoeffs haar_moment_coeffs(const DensityMatrix& rho);

// Monte Carlo estimate of the closed-form squared deviation. Only output
// density matrices are needed: the ensemble purity gives the SWAP overlap and
// the cross term is estimated from disjoint trial pairs.
ExpressibilityEstimate kraus_norm_ensemble(const ChannelSampler& ensemble,
                                           const DensityMatrix& rho,
                                           int trials, Rng& rng);

// Fixed-channel closed form as a function of the output purity nu.
double kraus_norm_fixed(double nu, const DensityMatrix& rho);

// Direct oracle: builds the averaged two-copy operator explicitly and returns
// the Frobenius norm of its deviation from the Haar moment. Guarded to
// d <= 16 (the two-copy operator is d^2 x d^2).
double kraus_norm_direct(const ChannelSampler& ensemble,
                         const DensityMatrix& rho, int trials, Rng& rng);

}  // namespace kvqa
