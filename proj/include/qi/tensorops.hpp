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

#include <functional>
#include <vector>

#include "qi/types.hpp"

namespace qi {

// Row-major flattening: row 0 first, so res(|a><b|) = |a> tensor conj(|b>).
Vector res(const Matrix& m);

// Inverse of res. Length of v must equal rows*cols.
Matrix unres(const Vector& v, int rows, int cols);
// Square variant, length must be a perfect square.
Matrix unres(const Vector& v);

// Subsystem conventions used throughout: dims lists tensor factor sizes,
// leftmost factor first, and subsystem positions are 1-based. Basis state
// indices everywhere else are 0-based.
Matrix ptrace(const Matrix& m, const std::vector<int>& dims,
              const std::vector<int>& sys);
Matrix ptranspose(const Matrix& m, const std::vector<int>& dims,
                  const std::vector<int>& sys);

// Rows factor as r1*r2 and columns as c1*c2. The output has the row index
// pair (a, c) and column index pair (b, d) where the input was indexed by
// rows (a, b) and columns (c, d). Output shape is (r1*c1) x (r2*c2).
Matrix reshuffle(const Matrix& m, int r1, int r2, int c1, int c2);
// Equal square factors on both axes.
Matrix reshuffle(const Matrix& m);

// Kronecker products, leftmost factor major.
Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& a, const Vector& b);

// Applies f to the spectrum of the Hermitian part of m. The input must be
// Hermitian within tol::herm. With require_psd set, eigenvalues in
// [-tol::eig, 0) are clipped to 0 and anything lower throws.
Matrix herm_func(const Matrix& m, const std::function<double(double)>& f,
                 bool require_psd = false);

// herm_func with sqrt; PSD required.
Matrix mat_sqrt(const Matrix& m);

}  // namespace qi
