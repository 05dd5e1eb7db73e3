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

#include "kvqa/channel.hpp"

namespace kvqa {

/// Amplitudes of the tampered two-qubit resource state, c = (c00,c01,c10,c11).
/// Must be normalized; non-normalized input is rejected, never renormalized.
struct PerturbationParams {
  Complex c00, c01, c10, c11;

  double norm_sq() const;
  bool is_normalized(double tol = 1e-12) const;
  Vector ket() const;  // |psi> = sum c_ij |ij>
};

struct DetectabilityBounds {
  double p_guess_lower = 0.5;
  double p_guess_upper = 0.5;
};

struct WeakNoiseSpec {
  enum class Model { depolarizing, bit_flip, phase_flip };
  enum class Placement { before, after, both };
  Model model = Model::depolarizing;
  double strength = 0.0;  // in [0, 1]
  Placement placement = Placement::both;
};

// Effective two-qubit channel of the entanglement-assisted CNOT executed with
// the tampered resource state. Four Kraus operators, one per classical
// correction branch.
KrausChannel noisy_cnot_channel(const PerturbationParams& p);

// Concurrence of the pure state with amplitudes c: 2|c00*c11 - c01*c10|.
double concurrence_pure(const PerturbationParams& c);

// Concurrence of an arbitrary two-qubit state via the spin-flip construction.
double concurrence_mixed(const DensityMatrix& rho);

// Symmetric real family (a, b, b, a) with concurrence exactly kappa.
PerturbationParams family_from_concurrence(double kappa);

// Local Pauli noise on control and target around an ideal CNOT.
KrausChannel weak_adversary_channel(const WeakNoiseSpec& spec);

// Single-shot discrimination probability interval from the trace norm of the
// Choi difference, via the standard diamond-norm sandwich.
DetectabilityBounds detectability_bounds(const KrausChannel& noisy,
                                         const KrausChannel& ideal);

}  // namespace kvqa
