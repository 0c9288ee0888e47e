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

#include "qi/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qi {

Vector ket(int i, int d) {
  if (d < 1 || i < 0 || i >= d) {
    throw std::invalid_argument("ket: basis index out of range");
  }
  Vector v = Vector::Zero(d);
  v(i) = 1.0;
  return v;
}

RowVector bra(int i, int d) { return ket(i, d).adjoint(); }

Matrix ketbra(int i, int j, int d) {
  if (d < 1 || i < 0 || i >= d || j < 0 || j >= d) {
    throw std::invalid_argument("ketbra: basis index out of range");
  }
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

Matrix proj(const Vector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-6) {
    throw std::invalid_argument("proj: state vector is not normalized");
  }
  return psi * psi.adjoint();
}

Vector max_entangled(int d) {
  const int s = static_cast<int>(std::llround(std::sqrt(double(d))));
  if (d < 1 || s * s != d) {
    throw std::invalid_argument("max_entangled: dimension is not a perfect square");
  }
  Vector v = Vector::Zero(d);
  const double a = 1.0 / std::sqrt(double(s));
  for (int i = 0; i < s; ++i) {
    v(i * s + i) = a;
  }
  return v;
}

Matrix max_mixed(int d) {
  if (d < 1) throw std::invalid_argument("max_mixed: dimension must be >= 1");
  return Matrix::Identity(d, d) / double(d);
}

Matrix werner_state(int d, double a) {
  if (a < 0.0 || a > 1.0) {
    throw std::invalid_argument("werner_state: weight must be in [0, 1]");
  }
  return a * proj(max_entangled(d)) + (1.0 - a) * max_mixed(d);
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard(int d) {
  if (d != 2) throw std::invalid_argument("hadamard: only dimension 2 is supported");
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

}  // namespace qi
