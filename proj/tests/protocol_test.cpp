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

#include <cmath>
#include <random>

#include "kvqa/protocol.hpp"
#include "kvqa/rng.hpp"

namespace kvqa {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const PerturbationParams kBell{kInvSqrt2, 0, 0, kInvSqrt2};

PerturbationParams random_params(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(4);
  for (int i = 0; i < 4; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return {v(0), v(1), v(2), v(3)};
}

DensityMatrix random_state(Eigen::Index d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(rho);
}

TEST_CASE("ideal resource reproduces the CNOT truth table") {
  const DensityMatrix in10 = DensityMatrix::pure(basis_ket(4, 2));
  const ProtocolTranscript t = run_cat_protocol(in10, kBell);
  CHECK((t.output - basis_ket(4, 3) * basis_ket(4, 3).adjoint()).norm() <
        1e-12);
}

TEST_CASE("ideal resource entangles a superposed control") {
  Vector plus0(4);
  plus0 << kInvSqrt2, 0, kInvSqrt2, 0;  // |+0>
  const ProtocolTranscript t =
      run_cat_protocol(DensityMatrix::pure(plus0), kBell);
  const Vector phi_plus = kBell.ket();
  CHECK((t.output - phi_plus * phi_plus.adjoint()).norm() < 1e-12);
}

TEST_CASE("ideal resource repairs every individual branch") {
  Rng rng(51);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = random_state(4, rng);
    const Matrix expected = cnot() * rho.matrix() * cnot().adjoint();
    const ProtocolTranscript t = run_cat_protocol(rho, kBell);
    for (const ProtocolBranch& b : t.branches) {
      CHECK(b.probability == doctest::Approx(0.25).epsilon(1e-10));
      CHECK((b.state - expected).norm() < 1e-10);
    }
  }
}

TEST_CASE("branch probabilities") {
  Rng rng(52);
  const std::array<double, 4> ps =
      branch_probabilities(run_cat_protocol(random_state(4, rng), kBell));
  for (double p : ps) CHECK(p == doctest::Approx(0.25).epsilon(1e-10));

  // Resource |00>: the shared qubit next to the control can only measure 0.
  const PerturbationParams degenerate{1, 0, 0, 0};
  const DensityMatrix in = DensityMatrix(
      tensor(qubit_proj(0), random_state(2, rng).matrix()));
  const ProtocolTranscript t = run_cat_protocol(in, degenerate);
  double p_a1 = 0.0;
  for (const ProtocolBranch& b : t.branches) {
    if (b.outcome_a == 1) p_a1 += b.probability;
  }
  CHECK(p_a1 < 1e-12);

  for (int i = 0; i < 100; ++i) {
    const ProtocolTranscript tr =
        run_cat_protocol(random_state(4, rng), random_params(rng));
    double sum = 0.0;
    for (const ProtocolBranch& b : tr.branches) {
      CHECK(b.probability >= -1e-12);
      sum += b.probability;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("branch states are valid density matrices") {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const ProtocolTranscript t =
        run_cat_protocol(random_state(4, rng), random_params(rng));
    for (const ProtocolBranch& b : t.branches) {
      if (b.probability > 1e-12) {
        CHECK_NOTHROW(DensityMatrix{b.state});
      }
    }
  }
}

TEST_CASE("protocol output equals the four-operator channel") {
  Rng rng(54);
  double max_dev = 0.0;
  auto check_params = [&](const PerturbationParams& p) {
    const KrausChannel ch = noisy_cnot_channel(p);
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho = random_state(4, rng);
      const ProtocolTranscript t = run_cat_protocol(rho, p);
      const double dev =
          (t.output - apply_channel_raw(ch, rho.matrix())).norm();
      max_dev = std::max(max_dev, dev);
    }
  };
  for (int i = 0; i < 20; ++i) {
    check_params(family_from_concurrence(i / 19.0));
  }
  for (int i = 0; i < 50; ++i) {
    check_params(random_params(rng));
  }
  CHECK(max_dev < 1e-10);
}

}  // namespace
}  // namespace kvqa
