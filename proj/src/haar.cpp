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

#include "kvqa/haar.hpp"

#include <stdexcept>

#include <Eigen/QR>

namespace kvqa {

Matrix haar_unitary(Eigen::Index dim, Rng& rng) {
  if (dim < 1) {
    throw std::invalid_argument("haar_unitary: dim must be >= 1");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is exactly Haar.
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0.0 ? rjj / a : Complex(1.0, 0.0));
  }
  return q;
}

}  // namespace kvqa
