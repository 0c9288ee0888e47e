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

#include <variant>
#include <vector>

#include "qi/types.hpp"

namespace qi {

// Channel representations. Construction checks shapes only; the costly
// CP/TP classification is explicit via validate().

struct KrausSet {
  int idim = 0;
  int odim = 0;
  std::vector<Matrix> ops;  // each odim x idim

  KrausSet() = default;
  explicit KrausSet(std::vector<Matrix> k);
};

// matrix is (odim^2) x (idim^2) and acts on row-major vectorized states:
// matrix * res(rho) = res(channel(rho)).
struct SuperOperatorMatrix {
  int idim = 0;
  int odim = 0;
  Matrix matrix;

  SuperOperatorMatrix() = default;
  SuperOperatorMatrix(Matrix m, int idim, int odim);
  explicit SuperOperatorMatrix(Matrix m);  // square case, dims inferred
};

// Choi matrix, factor order [output, input]: (odim*idim) square. CP iff
// PSD; trace preserving iff the partial trace over the output factor is
// the identity.
struct DynamicalMatrix {
  int idim = 0;
  int odim = 0;
  Matrix matrix;

  DynamicalMatrix() = default;
  DynamicalMatrix(Matrix m, int idim, int odim);
};

// A is (envdim*odim) x idim with the environment as the first factor:
// rows are blocks of size odim, block i holding Kraus operator i. Action
// is the partial trace of A rho A^dagger over the environment.
struct StinespringOperator {
  int idim = 0;
  int odim = 0;
  int envdim = 0;
  Matrix a;

  StinespringOperator() = default;
  StinespringOperator(Matrix a, int odim);
};

struct UnitaryChannel {
  Matrix u;

  UnitaryChannel() = default;
  explicit UnitaryChannel(Matrix u_);
};

struct IdentityChannel {
  int d = 0;

  IdentityChannel() = default;
  explicit IdentityChannel(int d_);
};

// Measurement with classical output: effects are idim x idim PSD matrices
// summing to the identity; the channel maps rho to the diagonal matrix of
// outcome probabilities, so odim equals the number of effects.
struct POVMMeasurement {
  int idim = 0;
  std::vector<Matrix> effects;

  POVMMeasurement() = default;
  explicit POVMMeasurement(std::vector<Matrix> effects_);
};

// Single-effect trace-non-increasing map rho -> E rho E^dagger. The effect
// may be rectangular (odim x idim).
struct PostSelectionMeasurement {
  Matrix effect;

  PostSelectionMeasurement() = default;
  explicit PostSelectionMeasurement(Matrix e);
};

using Channel =
    std::variant<KrausSet, SuperOperatorMatrix, DynamicalMatrix,
                 StinespringOperator, UnitaryChannel, IdentityChannel,
                 POVMMeasurement, PostSelectionMeasurement>;

enum class Rep { kraus, superop, dynamical, stinespring };

enum class Validity { cptp, cptni, neither };

int idim(const Channel& c);
int odim(const Channel& c);

// Classification by the Choi/Kraus invariants; never throws.
Validity validate(const Channel& c);

Matrix apply(const Channel& c, const Matrix& rho);
// Kets are projected first.
Matrix apply(const Channel& c, const Vector& psi);
// Ket in, ket out; only unitary and identity channels support this.
Vector apply_ket(const Channel& c, const Vector& psi);

// Conversion to any of the four representations. Routes through the Kraus
// form except superop <-> dynamical which is a pure reshuffle.
Channel convert(const Channel& c, Rep target);

// Convenience accessors for converted forms.
KrausSet to_kraus(const Channel& c);
SuperOperatorMatrix to_superop(const Channel& c);
DynamicalMatrix to_dynamical(const Channel& c);
StinespringOperator to_stinespring(const Channel& c);

// f applied after g; realized as the superoperator product.
Channel compose_sequential(const Channel& f, const Channel& g);

// Tensor product channel with Kraus set {K_i (x) L_j}.
Channel compose_parallel(const Channel& f, const Channel& g);

}  // namespace qi
