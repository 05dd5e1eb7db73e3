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

#include "kvqa/adversary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace kvqa {

double PerturbationParams::norm_sq() const {
  return std::norm(c00) + std::norm(c01) + std::norm(c10) + std::norm(c11);
}

bool PerturbationParams::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

Vector PerturbationParams::ket() const {
  Vector v(4);
  v << c00, c01, c10, c11;
  return v;
}

namespace {

void check_normalized(const PerturbationParams& p) {
  if (!p.is_normalized()) {
    throw std::invalid_argument(
        "PerturbationParams: amplitudes must satisfy sum |c_ij|^2 = 1");
  }
}

}  // namespace

KrausChannel noisy_cnot_channel(const PerturbationParams& p) {
  check_normalized(p);
  const Matrix id = pauli_i();
  const Matrix x = pauli_x();
  const Matrix p0 = qubit_proj(0);
  const Matrix p1 = qubit_proj(1);
  const double s = 1.0 / std::sqrt(2.0);

  const Matrix e00 = s * (tensor(p0, p.c00 * id + p.c01 * x) +
                          tensor(p1, p.c10 * id + p.c11 * x));
  const Matrix e01 = s * (tensor(p0, p.c00 * id - p.c01 * x) -
                          tensor(p1, p.c10 * id - p.c11 * x));
  const Matrix e10 = s * (tensor(p0, p.c11 * id + p.c10 * x) +
                          tensor(p1, p.c01 * id + p.c00 * x));
  const Matrix e11 = s * (tensor(p0, p.c11 * id - p.c10 * x) -
                          tensor(p1, p.c01 * id - p.c00 * x));
  return KrausChannel({e00, e01, e10, e11});
}

double concurrence_pure(const PerturbationParams& c) {
  check_normalized(c);
  return 2.0 * std::abs(c.c00 * c.c11 - c.c01 * c.c10);
}

double concurrence_mixed(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("concurrence_mixed: expected a 4x4 state");
  }
  const Matrix yy = tensor(pauli_y(), pauli_y());
  const Matrix& m = rho.matrix();
  const Matrix r = m * yy * m.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix> es(r, /*computeEigenvectors=*/false);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) {
    lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  }
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

PerturbationParams family_from_concurrence(double kappa) {
  if (kappa < 0.0 || kappa > 1.0) {
    throw std::invalid_argument(
        "family_from_concurrence: kappa must lie in [0, 1]");
  }
  const double a = std::sqrt((1.0 + kappa) / 4.0);
  const double b = std::sqrt((1.0 - kappa) / 4.0);
  return PerturbationParams{a, b, b, a};
}

KrausChannel weak_adversary_channel(const WeakNoiseSpec& spec) {
  if (spec.strength < 0.0 || spec.strength > 1.0) {
    throw std::invalid_argument(
        "weak_adversary_channel: strength must lie in [0, 1]");
  }
  auto single = [&spec]() {
    switch (spec.model) {
      case WeakNoiseSpec::Model::depolarizing:
        return KrausChannel::depolarizing(spec.strength);
      case WeakNoiseSpec::Model::bit_flip:
        return KrausChannel::bit_flip(spec.strength);
      case WeakNoiseSpec::Model::phase_flip:
        return KrausChannel::phase_flip(spec.strength);
    }
    throw std::invalid_argument("weak_adversary_channel: unknown noise model");
  };
  const KrausChannel local = single().tensor_with(single());
  const KrausChannel ideal = KrausChannel::from_unitary(cnot());
  switch (spec.placement) {
    case WeakNoiseSpec::Placement::before:
      return ideal.compose(local);
    case WeakNoiseSpec::Placement::after:
      return local.compose(ideal);
    case WeakNoiseSpec::Placement::both:
      return local.compose(ideal).compose(local);
  }
  throw std::invalid_argument("weak_adversary_channel: unknown placement");
}

DetectabilityBounds detectability_bounds(const KrausChannel& noisy,
                                         const KrausChannel& ideal) {
  if (noisy.dim_in() != ideal.dim_in() || noisy.dim_out() != ideal.dim_out()) {
    throw std::invalid_argument("detectability_bounds: dimension mismatch");
  }
  const double d = static_cast<double>(noisy.dim_in());
  const double delta = trace_norm(choi_matrix(noisy) - choi_matrix(ideal));
  DetectabilityBounds b;
  // Choi trace distance sandwiches the diamond norm: Delta/d <= ||.||_d <=
  // Delta, and p_guess = 1/2 (1 + ||.||_d / 2).
  b.p_guess_lower = 0.5 * (1.0 + delta / (2.0 * d));
  b.p_guess_upper = std::min(1.0, 0.5 * (1.0 + delta / 2.0));
  return b;
}

}  // namespace kvqa
