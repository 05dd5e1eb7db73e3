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

#include "kvqa/expressibility.hpp"

#include <cmath>
#include <stdexcept>

#include "kvqa/linalg.hpp"

namespace kvqa {

namespace {

double closed_form(double alpha, double beta, double d, double purity_term,
                   double cross_term) {
  return (alpha * alpha + beta * beta) * d * d + 2.0 * alpha * beta * d -
         2.0 * (alpha + beta * purity_term) + cross_term;
}

double sample_std_err(const std::vector<double>& xs) {
  const int n = static_cast<int>(xs.size());
  if (n < 2) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= (n - 1);
  return std::sqrt(var / n);
}

}  // namespace

HaarMomentCoeffs haar_moment_coeffs(const DensityMatrix& rho) {
  const double d = static_cast<double>(rho.dim());
  if (rho.dim() < 2) {
    throw std::invalid_argument("haar_moment_coeffs: need dimension >= 2");
  }
  const double p = purity(rho);
  HaarMomentCoeffs c;
  c.d = rho.dim();
  c.alpha = (d - p) / (d * (d * d - 1.0));
  c.beta = (d * p - 1.0) / (d * (d * d - 1.0));
  return c;
}

ExpressibilityEstimate kraus_norm_ensemble(const ChannelSampler& ensemble,
                                           const DensityMatrix& rho,
                                           int trials, Rng& rng) {
  if (trials < 2) {
    throw std::invalid_argument("kraus_norm_ensemble: need trials >= 2");
  }
  const HaarMomentCoeffs c = haar_moment_coeffs(rho);
  const double d = static_cast<double>(c.d);

  std::vector<double> purities;
  std::vector<double> cross;
  purities.reserve(trials);
  cross.reserve(trials / 2);
  Matrix prev;
  for (int t = 0; t < trials; ++t) {
    const Matrix out = ensemble(rho.matrix(), rng);
    purities.push_back((out * out).trace().real());
    if (t % 2 == 1) {
      const double overlap = (prev * out).trace().real();
      cross.push_back(overlap * overlap);
    } else {
      prev = out;
    }
  }
  double nu_bar = 0.0;
  for (double p : purities) nu_bar += p;
  nu_bar /= purities.size();
  double n_noise = 0.0;
  for (double x : cross) n_noise += x;
  n_noise /= cross.size();

  ExpressibilityEstimate e;
  e.trials = trials;
  e.nu_bar = nu_bar;
  e.n_noise = n_noise;
  e.delta_sq = closed_form(c.alpha, c.beta, d, nu_bar, n_noise);
  const double se_nu = sample_std_err(purities);
  const double se_cross = sample_std_err(cross);
  e.std_err = std::sqrt(4.0 * c.beta * c.beta * se_nu * se_nu +
                        se_cross * se_cross);
  return e;
}

double kraus_norm_fixed(double nu, const DensityMatrix& rho) {
  if (nu <= 0.0 || nu > 1.0) {
    throw std::invalid_argument("kraus_norm_fixed: nu must lie in (0, 1]");
  }
  const HaarMomentCoeffs c = haar_moment_coeffs(rho);
  return closed_form(c.alpha, c.beta, static_cast<double>(c.d), nu, nu * nu);
}

double kraus_norm_direct(const ChannelSampler& ensemble,
                         const DensityMatrix& rho, int trials, Rng& rng) {
  if (trials < 1) {
    throw std::invalid_argument("kraus_norm_direct: need trials >= 1");
  }
  const Eigen::Index d = rho.dim();
  if (d > 16) {
    throw std::invalid_argument(
        "kraus_norm_direct: capped at dimension 16 (two-copy memory guard)");
  }
  const HaarMomentCoeffs c = haar_moment_coeffs(rho);
  Matrix m = Matrix::Zero(d * d, d * d);
  for (int t = 0; t < trials; ++t) {
    const Matrix out = ensemble(rho.matrix(), rng);
    m.noalias() += tensor(out, out);
  }
  m /= static_cast<double>(trials);
  m -= c.alpha * Matrix::Identity(d * d, d * d) + c.beta * swap_copies(d);
  return frobenius_norm(m);
}

}  // namespace kvqa
