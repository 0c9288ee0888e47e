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

#ifndef QI_TELEPORT_HPP_
#define QI_TELEPORT_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qi/types.hpp"

namespace qi {

// Qubit teleportation with amplitude damping of strength gamma on the
// shared-pair half held by the receiver. Each grid point averages the
// corrected output fidelity over Haar-random input states.
struct TeleportSpec {
  double gamma_start = 0.0;
  double gamma_stop = 1.0;
  double gamma_step = 0.01;
  int trials = 100;
  std::uint64_t seed = 42;
};

struct TeleportRow {
  double gamma = 0.0;
  double mean_fidelity = 0.0;          // mean of the four branch means
  std::array<double, 4> branch{};      // per measurement outcome
  double max_prob_residual = 0.0;      // worst |sum of branch probs - 1|
};

// Amplitude damping Kraus pair for strength gamma in [0, 1].
std::vector<Matrix> damping_kraus(double gamma);

// One derived random stream per grid point, so rows are independent of the
// grid layout used to reach them.
std::vector<TeleportRow> run_teleportation(const TeleportSpec& spec);

// Columns: gamma,mean_fidelity,branch0,branch1,branch2,branch3
void write_teleport_csv(const std::vector<TeleportRow>& rows, std::ostream& os);

}  // namespace qi

#endif  // QI_TELEPORT_HPP_
