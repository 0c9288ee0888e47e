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

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qi {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

// Shared numerical tolerances. These are part of the library contract and
// must not be loosened ad hoc in callers.
namespace tol {
// relative Frobenius asymmetry accepted before a matrix is rejected as
// non-Hermitian
inline constexpr double herm = 1e-8;
// eigenvalues in [-eig, 0) are clipped to 0 by PSD-requiring functions,
// anything below -eig is an error
inline constexpr double eig = 1e-10;
// trace-preservation / completeness residual
inline constexpr double tp = 1e-8;
// spectral cutoff when extracting Kraus operators from a Choi matrix
inline constexpr double rank = 1e-10;
}  // namespace tol

}  // namespace qi
