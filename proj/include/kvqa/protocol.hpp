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

#include <array>

#include "kvqa/adversary.hpp"

namespace kvqa {

/// One measurement branch of the entanglement-assisted CNOT protocol.
struct ProtocolBranch {
  int outcome_a = 0;  // measurement on the shared qubit held next to control
  int outcome_b = 0;  // measurement on the shared qubit held next to target
  double probability = 0.0;
  // Post-selected control/target state, normalized; undefined when the
  // branch probability is zero.
  Matrix state;
};

struct ProtocolTranscript {
  std::vector<ProtocolBranch> branches;
  // Probability-weighted average of branch states, equal to the channel
  // output on the control/target pair.
  Matrix output;
};

// Runs the cat-entangler / cat-disentangler construction with the shared
// resource state |psi(c)> instead of a Bell pair, enumerating all four
// measurement branches exactly on the 4-qubit register
// (control, shared A, shared B, target).
ProtocolTranscript run_cat_protocol(const DensityMatrix& control_target,
                                    const PerturbationParams& resource);

// Branch probabilities in outcome order (a, b) = 00, 01, 10, 11.
std::array<double, 4> branch_probabilities(const ProtocolTranscript& t);

}  // namespace kvqa
