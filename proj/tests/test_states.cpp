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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qi/states.hpp"
#include "qi/tensorops.hpp"

using namespace qi;

TEST_CASE("ket bra and ketbra index from zero") {
  const Vector k = ket(1, 3);
  REQUIRE(k.size() == 3);
  REQUIRE(k(0) == cplx(0.0, 0.0));
  REQUIRE(k(1) == cplx(1.0, 0.0));
  REQUIRE(k(2) == cplx(0.0, 0.0));

  const RowVector b = bra(2, 3);
  REQUIRE(b(2) == cplx(1.0, 0.0));

  const Matrix kb = ketbra(0, 2, 3);
  REQUIRE(kb(0, 2) == cplx(1.0, 0.0));
  REQUIRE(kb.cwiseAbs().sum() == 1.0);

  REQUIRE_THROWS_AS(ket(3, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(ket(-1, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(ket(0, 0), std::invalid_argument);
}

TEST_CASE("proj builds rank one projectors from unit kets") {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Matrix p = proj(v);
  REQUIRE(std::abs(p(0, 0).real() - 0.5) < 1e-14);
  REQUIRE(std::abs(p(0, 1).real() - 0.5) < 1e-14);
  REQUIRE((p * p - p).norm() < 1e-14);

  Vector bad(2);
  bad << 1.0, 1.0;
  REQUIRE_THROWS_AS(proj(bad), std::invalid_argument);
}

TEST_CASE("max_entangled lays out equal amplitudes on the diagonal pairs") {
  const Vector v = max_entangled(4);
  const double amp = 1.0 / std::sqrt(2.0);
  REQUIRE(std::abs(v(0) - cplx(amp, 0.0)) < 1e-15);
  REQUIRE(std::abs(v(3) - cplx(amp, 0.0)) < 1e-15);
  REQUIRE(v(1) == cplx(0.0, 0.0));
  REQUIRE(v(2) == cplx(0.0, 0.0));

  const Vector w = max_entangled(9);
  REQUIRE(std::abs(w.norm() - 1.0) < 1e-14);
  REQUIRE(std::abs(w(0) - cplx(1.0 / std::sqrt(3.0), 0.0)) < 1e-15);
  REQUIRE(std::abs(w(4) - w(0)) < 1e-15);
  REQUIRE(std::abs(w(8) - w(0)) < 1e-15);

  REQUIRE_THROWS_AS(max_entangled(6), std::invalid_argument);
}

TEST_CASE("max_mixed is identity over dimension") {
  const Matrix m = max_mixed(5);
  REQUIRE(std::abs(m.trace() - cplx(1.0, 0.0)) < 1e-15);
  REQUIRE((m - Matrix::Identity(5, 5) / 5.0).norm() == 0.0);
}

TEST_CASE("werner_state interpolates between entangled and mixed") {
  // a=0.4 on two qubits: printed reference entries
  const Matrix w = werner_state(4, 0.4);
  REQUIRE(std::abs(w(0, 0) - cplx(0.35, 0.0)) < 1e-12);
  REQUIRE(std::abs(w(1, 1) - cplx(0.15, 0.0)) < 1e-12);
  REQUIRE(std::abs(w(2, 2) - cplx(0.15, 0.0)) < 1e-12);
  REQUIRE(std::abs(w(3, 3) - cplx(0.35, 0.0)) < 1e-12);
  REQUIRE(std::abs(w(0, 3) - cplx(0.2, 0.0)) < 1e-12);
  REQUIRE(std::abs(w(3, 0) - cplx(0.2, 0.0)) < 1e-12);
  REQUIRE(std::abs(w(0, 1)) == 0.0);

  REQUIRE((werner_state(4, 1.0) - proj(max_entangled(4))).norm() < 1e-14);
  REQUIRE((werner_state(4, 0.0) - max_mixed(4)).norm() < 1e-14);
  REQUIRE(std::abs(werner_state(9, 0.7).trace() - cplx(1.0, 0.0)) < 1e-14);

  REQUIRE_THROWS_AS(werner_state(4, -0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(werner_state(4, 1.1), std::invalid_argument);
}

TEST_CASE("pauli algebra holds") {
  const Matrix x = pauli_x();
  const Matrix y = pauli_y();
  const Matrix z = pauli_z();
  const Matrix i2 = Matrix::Identity(2, 2);

  REQUIRE((x * x - i2).norm() == 0.0);
  REQUIRE((y * y - i2).norm() == 0.0);
  REQUIRE((z * z - i2).norm() == 0.0);
  REQUIRE((x * y - cplx(0.0, 1.0) * z).norm() == 0.0);
  REQUIRE((x * y + y * x).norm() == 0.0);
}

TEST_CASE("hadamard is the balanced qubit rotation") {
  const Matrix h = hadamard();
  REQUIRE((h * h - Matrix::Identity(2, 2)).norm() < 1e-15);
  REQUIRE(std::abs(h(0, 0) - cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  REQUIRE(std::abs(h(1, 1) + cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  REQUIRE_THROWS_AS(hadamard(3), std::invalid_argument);
}
