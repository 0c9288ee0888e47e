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

#include <cstdint>
#include <random>

#include "qi/types.hpp"

namespace qi {

// Deterministic random stream. The algorithm below is the reproducibility
// contract: identical seeds give bitwise-identical sequences on every
// platform.
//
//   raw      mt19937_64 output
//   uniform  (raw() >> 11) * 2^-53, in [0, 1)
//   normal   Box-Muller on (u1, u2) = (1 - uniform(), uniform());
//            returns sqrt(-2 ln u1) cos(2 pi u2) first and the matching
//            sin value on the next call
//
// Standard library distributions are avoided on purpose; their output is
// implementation defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  // Derived stream for parallel work: seed XOR index.
  RngStream derive(std::uint64_t index) const { return RngStream(seed_ ^ index); }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t raw() { return gen_(); }

  double uniform() {
    return double(gen_() >> 11) * 0x1.0p-53;
  }

  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

enum class EnsembleKind {
  ginibre,
  wishart,
  circular,
  circular_real,
  circular_quaternion,
  haar_ket,
  hs_state,
  choi_channel,
};

// Sampler parameters. Which fields matter depends on kind: ginibre uses
// (beta, m, n), wishart and hs_state use (beta, kfac, d), circular kinds use
// (beta, d), haar_ket uses (beta, d), choi_channel uses (beta, kfac, idim,
// odim). kfac is the rank factor; column counts round up as ceil(kfac * d).
struct EnsembleDescriptor {
  EnsembleKind kind = EnsembleKind::ginibre;
  int beta = 2;
  double kfac = 1.0;
  int m = 0;
  int n = 0;
  int d = 0;
  int idim = 0;
  int odim = 0;
};

// Entry law: each real component is N(0, 1/beta). beta=1 real, beta=2
// complex, beta=4 quaternion embedded as 2x2 complex blocks
// [[a, b], [-conj(b), conj(a)]], doubling both dimensions. Entries are
// drawn row by row, real part before imaginary part, a before b.
Matrix sample_ginibre(int beta, int m, int n, RngStream& rng);

// G G^dagger with G ginibre of shape d x ceil(kfac * d).
Matrix sample_wishart(int beta, double kfac, int d, RngStream& rng);

// circular: beta=2 Haar unitary (QR of a ginibre with columns rephased by
// r_ii/|r_ii|), beta=1 U^T U (symmetric), beta=4 the self-dual U_R U built
// from a Haar unitary of doubled size, so it comes back 2d x 2d.
// circular_real / circular_quaternion are the QR construction seeded with
// beta=1 / beta=4 ginibre matrices; the quaternion one is 2d x 2d as well.
Matrix sample_circular(EnsembleKind kind, int beta, int d, RngStream& rng);

// The dual involution used by the symplectic ensemble: J M^T J^{-1} with J
// block diagonal in [[0, -1], [1, 0]] blocks. Exposed for tests.
Matrix symplectic_dual(const Matrix& m);

// Thin Haar isometry, m >= n, V^dagger V = I_n.
Matrix sample_haar_isometry(int m, int n, RngStream& rng);

// Unit vector uniform on the sphere; beta=1 real, beta=2 complex.
Vector sample_haar_ket(int beta, int d, RngStream& rng);

// G G^dagger / tr(G G^dagger) with G ginibre of shape d x ceil(kfac * d).
Matrix sample_hs_state(int beta, double kfac, int d, RngStream& rng);

// Random channel as a Choi matrix with factor order [output, input]:
// J = (I_odim (x) S^{-1/2}) G G^dagger (I_odim (x) S^{-1/2}) with
// S = Tr_out(G G^dagger). The result satisfies Tr_out(J) = I_idim. If S is
// numerically singular G is resampled, up to 5 times.
Matrix sample_choi(int beta, double kfac, int idim, int odim, RngStream& rng);

// Dispatch on descriptor; returns the sample as a matrix (kets come back as
// d x 1).
Matrix sample(const EnsembleDescriptor& desc, RngStream& rng);

}  // namespace qi
