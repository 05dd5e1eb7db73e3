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

#include "kvqa/trainability.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kvqa/haar.hpp"

namespace kvqa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex trace_product(const Matrix& a, const Matrix& b) {
  return a.transpose().cwiseProduct(b).sum();
}

double real_checked(Complex z, const char* what) {
  if (std::abs(z.imag()) > 1e-8) {
    throw std::runtime_error(std::string(what) +
                             ": imaginary residue exceeds tolerance");
  }
  return z.real();
}

double gradient_form(const Matrix& rho_r, const Matrix& h_left,
                     const Matrix& generator, int qubit, int n,
                     double theta_k) {
  const std::vector<int> q{qubit};
  Matrix vh = h_left;
  left_mul_subsystem(generator, n, q, vh);
  Matrix vhv = vh;
  right_mul_subsystem(generator, n, q, vhv);
  Matrix hv = h_left;
  right_mul_subsystem(generator, n, q, hv);

  const Complex comm = trace_product(rho_r, vh) - trace_product(rho_r, hv);
  const Complex atten =
      trace_product(rho_r, h_left) - trace_product(rho_r, vhv);
  const Complex g = Complex(0.0, 1.0) * std::cos(2.0 * theta_k) * comm -
                    std::sin(2.0 * theta_k) * atten;
  return real_checked(g, "grad_analytic");
}

GradientStats stats_from_samples(const std::vector<double>& gs, int k) {
  const int t = static_cast<int>(gs.size());
  GradientStats s;
  s.param_index = k;
  s.trials = t;
  double s1 = 0.0, s2 = 0.0;
  for (double g : gs) {
    s1 += g;
    s2 += g * g;
  }
  s.mean = s1 / t;
  s.variance = (s2 - t * s.mean * s.mean) / (t - 1);
  s.std_err_mean = std::sqrt(std::max(0.0, s.variance) / t);
  // Jackknife over trials for the variance's standard error.
  std::vector<double> loo(t);
  double loo_mean = 0.0;
  for (int i = 0; i < t; ++i) {
    const double np = t - 1;
    const double m = (s1 - gs[i]) / np;
    loo[i] = (s2 - gs[i] * gs[i] - np * m * m) / (np - 1);
    loo_mean += loo[i];
  }
  loo_mean /= t;
  double acc = 0.0;
  for (double v : loo) acc += (v - loo_mean) * (v - loo_mean);
  s.std_err_variance = std::sqrt((t - 1.0) / t * acc);
  return s;
}

}  // namespace

double cost(const PQChAnsatz& ansatz, const std::vector<double>& theta,
            const DensityMatrix& rho0, const Observable& obs) {
  if (obs.dim() != ansatz.dim()) {
    throw std::invalid_argument("cost: observable dimension mismatch");
  }
  const Matrix out = forward_raw(ansatz, theta, rho0.matrix());
  return real_checked(trace_product(obs.matrix(), out), "cost");
}

double grad_analytic(const AnsatzSplit& split, const DensityMatrix& rho0,
                     const Observable& obs, double theta_k) {
  const Matrix rho_r = apply_bound(split.right, split.n, rho0.matrix());
  const LeftAdjointResult la = adjoint_through_left(split, obs);
  return gradient_form(rho_r, la.h_left, split.generator, split.generator_qubit,
                       split.n, theta_k);
}

double grad_shift(const PQChAnsatz& ansatz, std::vector<double> theta, int k,
                  const DensityMatrix& rho0, const Observable& obs) {
  const double base = theta.at(k);
  theta[k] = base + std::numbers::pi / 4.0;
  const double plus = cost(ansatz, theta, rho0, obs);
  theta[k] = base - std::numbers::pi / 4.0;
  const double minus = cost(ansatz, theta, rho0, obs);
  return plus - minus;
}

GradientStats grad_variance(const PQChAnsatz& ansatz, const ParamInit& init,
                            const DensityMatrix& rho0, const Observable& obs,
                            int k, int trials, Rng& rng) {
  if (trials < 2) {
    throw std::invalid_argument("grad_variance: need trials >= 2");
  }
  std::vector<double> gs;
  gs.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> theta = sample_params(ansatz, init, rng);
    const AnsatzSplit split = split_at(ansatz, theta, k);
    gs.push_back(grad_analytic(split, rho0, obs, theta[k]));
  }
  return stats_from_samples(gs, k);
}

GradientStats reference_variance(int n, const Observable& obs,
                                 const std::vector<BoundGate>& left,
                                 const Matrix& generator, int generator_qubit,
                                 const DensityMatrix& rho0, int trials,
                                 Rng& rng) {
  if (n > 6) {
    throw std::invalid_argument(
        "reference_variance: capped at n = 6 (Haar sampling guard)");
  }
  if (trials < 2) {
    throw std::invalid_argument("reference_variance: need trials >= 2");
  }
  const Eigen::Index d = Eigen::Index(1) << n;
  if (obs.dim() != d || rho0.dim() != d) {
    throw std::invalid_argument("reference_variance: dimension mismatch");
  }
  const Matrix h_left = adjoint_bound(left, n, obs.matrix());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> gs;
  gs.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const double theta_k = kTwoPi * unit(rng);
    const Matrix u = haar_unitary(d, rng);
    const Matrix rho_r = u * rho0.matrix() * u.adjoint();
    gs.push_back(
        gradient_form(rho_r, h_left, generator, generator_qubit, n, theta_k));
  }
  return stats_from_samples(gs, 0);
}

BoundReport theorem2_bound(const PQChAnsatz& ansatz, const ParamInit& init,
                           const DensityMatrix& rho0, const Observable& obs,
                           int k, int trials, Rng& rng) {
  if (ansatz.dim() > 16) {
    throw std::invalid_argument(
        "theorem2_bound: capped at dimension 16 (direct two-copy norm)");
  }
  const int n = ansatz.n();
  const Eigen::Index d = ansatz.dim();

  const GradientStats ens = grad_variance(ansatz, init, rho0, obs, k, trials,
                                          rng);

  // Haar reference with the left composition drawn from the same ensemble.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> g2s;
  std::vector<double> atts;
  g2s.reserve(trials);
  atts.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> theta = sample_params(ansatz, init, rng);
    const AnsatzSplit split = split_at(ansatz, theta, k);
    const LeftAdjointResult la = adjoint_through_left(split, obs);
    atts.push_back(la.norm * la.norm);
    const double theta_k = kTwoPi * unit(rng);
    const Matrix u = haar_unitary(d, rng);
    const Matrix rho_r = u * rho0.matrix() * u.adjoint();
    const double g = gradient_form(rho_r, la.h_left, split.generator,
                                   split.generator_qubit, n, theta_k);
    g2s.push_back(g * g);
  }
  double var_r = 0.0, att = 0.0;
  for (double x : g2s) var_r += x;
  var_r /= g2s.size();
  for (double x : atts) att += x;
  att /= atts.size();
  auto se_of = [](const std::vector<double>& xs, double mean) {
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / (xs.size() - 1.0) / xs.size());
  };
  const double se_var_r = se_of(g2s, var_r);
  const double se_att = se_of(atts, att);

  // Two-copy norm of the right sub-ensemble.
  const ChannelSampler right_sampler = [&ansatz, &init, k](const Matrix& rho,
                                                           Rng& r) {
    const std::vector<double> theta = sample_params(ansatz, init, r);
    const AnsatzSplit split = split_at(ansatz, theta, k);
    return apply_bound(split.right, split.n, rho);
  };
  const double norm_r = kraus_norm_direct(right_sampler, rho0, trials, rng);

  BoundReport b;
  b.lhs = std::abs(ens.variance - var_r);
  b.rhs = 4.0 * norm_r * att;
  b.lhs_std_err = std::sqrt(ens.std_err_variance * ens.std_err_variance +
                            se_var_r * se_var_r);
  b.rhs_std_err = 4.0 * norm_r * se_att;
  b.satisfied =
      b.lhs <= b.rhs + 3.0 * std::sqrt(b.lhs_std_err * b.lhs_std_err +
                                       b.rhs_std_err * b.rhs_std_err);
  return b;
}

}  // namespace kvqa
