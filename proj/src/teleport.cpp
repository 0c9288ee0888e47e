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

#include "qi/teleport.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qi/channels.hpp"
#include "qi/functionals.hpp"
#include "qi/measurements.hpp"
#include "qi/random.hpp"
#include "qi/states.hpp"
#include "qi/tensorops.hpp"

namespace qi {

namespace {

Matrix cnot_gate() {
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = 1.0;
  c(1, 1) = 1.0;
  c(2, 3) = 1.0;
  c(3, 2) = 1.0;
  return c;
}

// Sender-side circuit plus receiver-side noise as one transfer matrix on the
// three-qubit register: damping on the last qubit, then CNOT on the first
// two, then Hadamard on the first.
Channel build_pipeline(double gamma) {
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix i4 = Matrix::Identity(4, 4);
  std::vector<Matrix> noise_ops;
  for (const Matrix& k : damping_kraus(gamma)) noise_ops.push_back(tensor(i4, k));
  const Channel noise = KrausSet(noise_ops);
  const Channel ucnot = UnitaryChannel(tensor(cnot_gate(), i2));
  const Channel uhad = UnitaryChannel(tensor(hadamard(), i4));
  return compose_sequential(uhad, compose_sequential(ucnot, noise));
}

}  // namespace

std::vector<Matrix> damping_kraus(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("damping_kraus: gamma must be in [0, 1]");
  }
  Matrix k0 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  return {k0, k1};
}

std::vector<TeleportRow> run_teleportation(const TeleportSpec& spec) {
  if (spec.gamma_start < 0.0 || spec.gamma_stop > 1.0 ||
      spec.gamma_start > spec.gamma_stop || spec.gamma_step <= 0.0) {
    throw std::invalid_argument("run_teleportation: bad gamma grid");
  }
  if (spec.trials < 1) {
    throw std::invalid_argument("run_teleportation: trials must be >= 1");
  }

  const Vector pair_ket = max_entangled(4);
  const Matrix i2 = Matrix::Identity(2, 2);
  std::vector<PostSelectionMeasurement> select;
  for (int j = 0; j < 4; ++j) {
    select.emplace_back(tensor(proj(ket(j, 4)), i2));
  }
  const std::array<Matrix, 4> corrections = {
      i2, pauli_x(), pauli_z(), Matrix(pauli_x() * pauli_z())};

  const RngStream root(spec.seed);
  std::vector<TeleportRow> rows;
  for (std::uint64_t k = 0;; ++k) {
    double gamma = spec.gamma_start + static_cast<double>(k) * spec.gamma_step;
    if (gamma > spec.gamma_stop + 0.5 * spec.gamma_step) break;
    if (gamma > spec.gamma_stop) gamma = spec.gamma_stop;

    const Channel pipeline = build_pipeline(gamma);
    RngStream rng = root.derive(k);

    std::array<double, 4> branch_sum{};
    double max_residual = 0.0;
    for (int t = 0; t < spec.trials; ++t) {
      const Vector phi = sample_haar_ket(2, 2, rng);
      const Vector input = tensor(phi, pair_ket);
      const Matrix sigma = apply(pipeline, input);

      double prob_sum = 0.0;
      for (int j = 0; j < 4; ++j) {
        const Matrix selected = postselect_apply(select[j], sigma);
        const Matrix reduced = ptrace(selected, {2, 2, 2}, {1, 2});
        const double p = reduced.trace().real();
        if (p < 1e-12) {
          throw std::runtime_error("run_teleportation: branch probability vanished");
        }
        prob_sum += p;
        const Matrix corrected =
            corrections[j] * reduced * corrections[j].adjoint() / p;
        branch_sum[j] += fidelity(phi, corrected);
      }
      max_residual = std::max(max_residual, std::abs(prob_sum - 1.0));
    }

    TeleportRow row;
    row.gamma = gamma;
    row.max_prob_residual = max_residual;
    double overall = 0.0;
    for (int j = 0; j < 4; ++j) {
      row.branch[j] = branch_sum[j] / spec.trials;
      overall += row.branch[j];
    }
    row.mean_fidelity = overall / 4.0;
    rows.push_back(row);
  }
  return rows;
}

void write_teleport_csv(const std::vector<TeleportRow>& rows, std::ostream& os) {
  os << "gamma,mean_fidelity,branch0,branch1,branch2,branch3\n";
  char buf[64];
  for (const TeleportRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.10g", r.gamma);
    os << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.12g", r.mean_fidelity);
    os << buf;
    for (int j = 0; j < 4; ++j) {
      std::snprintf(buf, sizeof(buf), "%.12g", r.branch[j]);
      os << ',' << buf;
    }
    os << '\n';
  }
}

}  // namespace qi
