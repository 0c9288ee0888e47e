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

#include "qi/types.hpp"

namespace qi {

// Basis indices are 0-based: ket(0, d) is the first computational basis
// vector.
Vector ket(int i, int d);
RowVector bra(int i, int d);
Matrix ketbra(int i, int j, int d);

// |psi><psi|. psi must be normalized within 1e-6.
Matrix proj(const Vector& psi);

// (1/sqrt(s)) sum_i |i>|i> with s = sqrt(d); d must be a perfect square.
Vector max_entangled(int d);

Matrix max_mixed(int d);

// a * proj(max_entangled(d)) + (1 - a) * max_mixed(d), 0 <= a <= 1.
Matrix werner_state(int d, double a);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard(int d = 2);

}  // namespace qi
