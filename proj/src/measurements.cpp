// Copyright 2026 The qi authors
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

#include "qi/measurements.hpp"

#include <algorithm>

namespace qi {

bool ispovm(const std::vector<Matrix>& effects) {
  if (effects.empty()) return false;
  const Eigen::Index d = effects[0].rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : effects) {
    if (e.rows() != d || e.cols() != d) return false;
    if ((e - e.adjoint()).norm() > tol::herm * std::max(e.norm(), 1e-300)) {
      return false;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (e + e.adjoint()));
    if (es.eigenvalues().minCoeff() < -tol::eig) return false;
    sum += e;
  }
  return (sum - Matrix::Identity(d, d)).norm() <= tol::tp;
}

bool ispovm(const POVMMeasurement& p) { return ispovm(p.effects); }

bool iseffect(const Matrix& e) {
  const Matrix m = e.adjoint() * e - Matrix::Identity(e.cols(), e.cols());
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  return es.eigenvalues().maxCoeff() <= tol::tp;
}

bool iseffect(const PostSelectionMeasurement& m) { return iseffect(m.effect); }

Matrix povm_apply(const POVMMeasurement& p, const Matrix& rho) {
  return qi::apply(Channel(p), rho);
}

Matrix postselect_apply(const PostSelectionMeasurement& m, const Matrix& rho) {
  return qi::apply(Channel(m), rho);
}

}  // namespace qi
