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

#include "kvqa/linalg.hpp"

namespace kvqa {

/// Trace-one positive Hermitian operator. Validation surfaces numerical
/// drift instead of renormalizing silently.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  Matrix mat_;
};

/// Hermitian observable.
class Observable {
 public:
  explicit Observable(Matrix m);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  Matrix mat_;
};

// Tr(rho^2), in (0, 1].
double purity(const DensityMatrix& rho);

// Traces out the qubits listed in `discard` from an n-qubit operator.
Matrix partial_trace(const Matrix& m, int n, const std::vector<int>& discard);

}  // namespace kvqa
