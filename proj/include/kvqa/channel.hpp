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

#include <vector>

#include "kvqa/state.hpp"

namespace kvqa {

/// CPTP map given by a finite Kraus decomposition. Completeness
/// sum_k E_k^dag E_k = 1 is checked at construction.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> kraus_ops);

  static KrausChannel identity(Eigen::Index dim);
  static KrausChannel from_unitary(const Matrix& u);
  // Single-qubit Pauli channels with error probability `strength`.
  static KrausChannel depolarizing(double strength);
  static KrausChannel bit_flip(double strength);
  static KrausChannel phase_flip(double strength);

  const std::vector<Matrix>& kraus_ops() const { return ops_; }
  Eigen::Index dim_in() const { return ops_.front().cols(); }
  Eigen::Index dim_out() const { return ops_.front().rows(); }

  // Composition: (*this after other).
  KrausChannel compose(const KrausChannel& other) const;
  // This channel on the first factor, `other` on the second.
  KrausChannel tensor_with(const KrausChannel& other) const;

 private:
  std::vector<Matrix> ops_;
};

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);
Observable adjoint_apply(const KrausChannel& ch, const Observable& obs);

// Raw-matrix variants used in inner loops where re-validation is wasteful.
Matrix apply_channel_raw(const KrausChannel& ch, const Matrix& rho);
Matrix adjoint_apply_raw(const KrausChannel& ch, const Matrix& obs);

// Channel acting on the first half of the unnormalized maximally entangled
// operator sum_{ij} |ii><jj|. Trace = dim for a trace-preserving channel.
Matrix choi_matrix(const KrausChannel& ch);

}  // namespace kvqa
