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

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "kvqa/ansatz.hpp"
#include "kvqa/experiments.hpp"
#include "kvqa/haar.hpp"
#include "kvqa/trainability.hpp"

namespace kvqa {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> random_theta(const PQChAnsatz& a, Rng& rng) {
  return sample_params(a, ParamInit{}, rng);
}

TEST_CASE("hardware-efficient ansatz structure") {
  const PQChAnsatz small = build_hea(2, 1, 1.0);
  CHECK(small.param_count() == 4);
  int entanglers = 0;
  for (const GateSpec& g : small.gates()) {
    if (!g.is_rotation()) ++entanglers;
  }
  CHECK(entanglers == 1);

  const PQChAnsatz big = build_hea(6, 10, 0.9);
  CHECK(big.param_count() == 120);
  entanglers = 0;
  for (const GateSpec& g : big.gates()) {
    if (!g.is_rotation()) ++entanglers;
  }
  CHECK(entanglers == 50);
}

TEST_CASE("noiseless build keeps pure states pure") {
  Rng rng(61);
  const PQChAnsatz a = build_hea(3, 4, 1.0);
  const DensityMatrix rho0 = default_input_state(3);
  const DensityMatrix out = forward(a, random_theta(a, rng), rho0);
  CHECK(purity(out) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("uniform sampling marginals pass a KS test") {
  Rng rng(62);
  const PQChAnsatz a = build_hea(2, 1, 1.0);
  const int draws = 100000;
  std::vector<std::vector<double>> per_param(a.param_count());
  for (int i = 0; i < draws; ++i) {
    const std::vector<double> t = random_theta(a, rng);
    for (int k = 0; k < a.param_count(); ++k) per_param[k].push_back(t[k]);
  }
  // 1% critical value of the one-sample KS statistic.
  const double crit = 1.63 / std::sqrt(static_cast<double>(draws));
  for (auto& xs : per_param) {
    std::sort(xs.begin(), xs.end());
    double d = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      const double cdf = xs[i] / kTwoPi;
      d = std::max(d, std::abs(cdf - static_cast<double>(i) / xs.size()));
      d = std::max(d, std::abs(cdf - static_cast<double>(i + 1) / xs.size()));
    }
    CHECK(d < crit);
  }
}

TEST_CASE("restricted sampling stays near its base points") {
  const PQChAnsatz a = build_hea(2, 2, 1.0);
  ParamInit init;
  init.mode = ParamInit::Mode::restricted;
  init.r = 0.001;
  init.seed = 7;
  Rng rng1(100), rng2(100);
  const std::vector<double> t1 = sample_params(a, init, rng1);
  const std::vector<double> t2 = sample_params(a, init, rng2);
  CHECK(t1 == t2);  // same offsets stream, same bases

  Rng rng3(101);
  const std::vector<double> t3 = sample_params(a, init, rng3);
  for (size_t k = 0; k < t1.size(); ++k) {
    // Different offsets share the base point, so draws for one parameter
    // differ by at most the window width (mod 2 pi).
    double diff = std::abs(t1[k] - t3[k]);
    diff = std::min(diff, kTwoPi - diff);
    CHECK(diff <= kTwoPi * init.r + 1e-12);
  }
}

TEST_CASE("full mode requires r = 1") {
  const PQChAnsatz a = build_hea(2, 1, 1.0);
  ParamInit bad;
  bad.mode = ParamInit::Mode::full;
  bad.r = 0.5;
  Rng rng(1);
  CHECK_THROWS_AS(sample_params(a, bad, rng), std::invalid_argument);
}

TEST_CASE("empty ansatz leaves the state unchanged") {
  const PQChAnsatz empty(2, {});
  const DensityMatrix rho0 = default_input_state(2);
  CHECK((forward(empty, {}, rho0).matrix() - rho0.matrix()).norm() < 1e-14);
}

TEST_CASE("zero angles reduce one noiseless layer to the entangler") {
  const PQChAnsatz a = build_hea(2, 1, 1.0);
  Rng rng(63);
  const Matrix u = haar_unitary(4, rng);
  const DensityMatrix rho0 = DensityMatrix::pure(u.col(0));
  const std::vector<double> zeros(a.param_count(), 0.0);
  const Matrix expected = cnot() * rho0.matrix() * cnot().adjoint();
  CHECK((forward(a, zeros, rho0).matrix() - expected).norm() < 1e-12);
}

TEST_CASE("perturbed entanglers strictly reduce purity") {
  Rng rng(64);
  const PQChAnsatz clean = build_hea(2, 1, 1.0);
  const PQChAnsatz noisy = build_hea(2, 1, 0.8);
  const DensityMatrix rho0 = default_input_state(2);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> theta = random_theta(clean, rng);
    const double p_clean = purity(forward(clean, theta, rho0));
    const double p_noisy = purity(forward(noisy, theta, rho0));
    CHECK(p_noisy < p_clean - 1e-6);
  }
}

TEST_CASE("noiseless forward matches statevector evolution") {
  Rng rng(65);
  for (int n = 2; n <= 4; ++n) {
    const PQChAnsatz a = build_hea(n, 2, 1.0);
    const std::vector<double> theta = random_theta(a, rng);
    const DensityMatrix rho0 = default_input_state(n);

    // Independent statevector pass with explicitly embedded unitaries.
    Vector psi = Vector::Zero(a.dim());
    {
      Eigen::SelfAdjointEigenSolver<Matrix> es(rho0.matrix());
      psi = es.eigenvectors().col(a.dim() - 1);  // the unit eigenvector
    }
    for (const GateSpec& g : a.gates()) {
      if (g.is_rotation()) {
        const Matrix v =
            g.kind == GateSpec::Kind::rot_y ? pauli_y() : pauli_z();
        const double t = theta[g.param_index];
        const Matrix u =
            std::cos(t) * pauli_i() - Complex(0, std::sin(t)) * v;
        psi = embed_one_qubit(u, n, g.q1) * psi;
      } else {
        psi = embed_two_qubit(cnot(), n, g.q1, g.q2) * psi;
      }
    }
    const Matrix expected = psi * psi.adjoint();
    CHECK((forward(a, theta, rho0).matrix() - expected).norm() < 1e-10);
  }
}

TEST_CASE("split and recompose reproduces the forward map") {
  Rng rng(66);
  const PQChAnsatz a = build_hea(3, 2, 0.8);
  const DensityMatrix rho0 = default_input_state(3);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> theta = random_theta(a, rng);
    const int k = static_cast<int>(rng() % a.param_count());
    const AnsatzSplit s = split_at(a, theta, k);

    Matrix rho = apply_bound(s.right, s.n, rho0.matrix());
    const Matrix u = std::cos(s.theta_k) * pauli_i() -
                     Complex(0, std::sin(s.theta_k)) * s.generator;
    left_mul_subsystem(u, s.n, {s.generator_qubit}, rho);
    right_mul_subsystem(u.adjoint(), s.n, {s.generator_qubit}, rho);
    rho = apply_bound(s.left, s.n, rho);
    CHECK((rho - forward(a, theta, rho0).matrix()).norm() < 1e-12);
  }

  const std::vector<double> theta = random_theta(a, rng);
  CHECK(split_at(a, theta, 0).right.empty());
  CHECK_THROWS_AS(split_at(a, theta, a.param_count()), std::invalid_argument);
}

TEST_CASE("splitting a rotation-only circuit at the last gate") {
  std::vector<std::vector<GateSpec>> layers{{
      {GateSpec::Kind::rot_y, 0, -1, 0, {}, {}},
      {GateSpec::Kind::rot_z, 1, -1, 1, {}, {}},
  }};
  const PQChAnsatz a(2, layers);
  const std::vector<double> theta{0.3, 1.2};
  CHECK(split_at(a, theta, 1).left.empty());
  CHECK(split_at(a, theta, 0).right.empty());
}

TEST_CASE("rotation generators square to the identity") {
  const PQChAnsatz a = build_hea(2, 1, 1.0);
  const std::vector<double> theta(a.param_count(), 0.1);
  for (int k = 0; k < a.param_count(); ++k) {
    const AnsatzSplit s = split_at(a, theta, k);
    CHECK((s.generator * s.generator - Matrix::Identity(2, 2)).norm() <
          1e-14);
  }
}

TEST_CASE("observable pullback through the left composition") {
  const Observable h = default_observable(2);
  const PQChAnsatz a = build_hea(2, 1, 1.0);
  const std::vector<double> theta{0.4, 1.1, 2.2, 0.9};

  AnsatzSplit last = split_at(a, theta, 0);
  last.left.clear();
  const LeftAdjointResult empty = adjoint_through_left(last, h);
  CHECK((empty.h_left - h.matrix()).norm() < 1e-14);
  CHECK(empty.norm == doctest::Approx(frobenius_norm(h.matrix())));

  // Unitary left composition preserves the norm.
  const AnsatzSplit s = split_at(a, theta, 0);
  CHECK(adjoint_through_left(s, h).norm ==
        doctest::Approx(frobenius_norm(h.matrix())).epsilon(1e-10));
}

TEST_CASE("noisy pullback attenuates the observable monotonically") {
  // Within one fixed circuit, splitting earlier pulls the observable back
  // through a superset of gates; each extra gate's adjoint is either
  // norm-preserving (unitary) or contractive (unital noise), so the pulled
  // back norm is non-decreasing in the split index.
  const Observable h = default_observable(2);
  const PQChAnsatz a = build_hea(2, 10, 0.8);
  Rng rng(67);
  const std::vector<double> theta = random_theta(a, rng);
  double prev = 0.0;
  for (int k = 0; k < a.param_count(); ++k) {
    const double norm = adjoint_through_left(split_at(a, theta, k), h).norm;
    if (k > 0) CHECK(norm >= prev - 1e-10);
    prev = norm;
  }
  // Deep perturbed circuits attenuate the observable overall.
  CHECK(adjoint_through_left(split_at(a, theta, 0), h).norm <
        frobenius_norm(h.matrix()));
}

TEST_CASE("single-parameter cost has the sin/cos form") {
  Rng rng(68);
  const PQChAnsatz a = build_hea(2, 2, 0.8);
  const DensityMatrix rho0 = default_input_state(2);
  const Observable h = default_observable(2);
  std::vector<double> theta = random_theta(a, rng);
  const int k = 5;
  // Fit C(t) = A sin 2t + B cos 2t + c from three evaluations, then check
  // the fit at fresh angles.
  auto eval = [&](double t) {
    theta[k] = t;
    return cost(a, theta, rho0, h);
  };
  const double c0 = eval(0.0);
  const double cq = eval(std::numbers::pi / 4.0);
  const double ch = eval(std::numbers::pi / 2.0);
  const double c = (c0 + ch) / 2.0;
  const double b = c0 - c;
  const double aa = cq - c;
  for (double t : {0.3, 1.0, 2.4, 4.0, 5.5}) {
    const double fit = aa * std::sin(2 * t) + b * std::cos(2 * t) + c;
    CHECK(std::abs(eval(t) - fit) < 1e-8);
  }
}

}  // namespace
}  // namespace kvqa
