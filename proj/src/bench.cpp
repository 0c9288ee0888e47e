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

#include "qi/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <new>
#include <ostream>
#include <stdexcept>

#include "qi/functionals.hpp"
#include "qi/random.hpp"
#include "qi/states.hpp"
#include "qi/tensorops.hpp"

namespace qi {

namespace {

// Keeps the optimizer from discarding loop bodies whose results are unused.
volatile double g_bench_sink = 0.0;

int channel_subdim(int d) {
  const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d))));
  return s < 1 ? 1 : s;
}

SuperOperatorMatrix sample_superop(int dsub, RngStream& rng) {
  const Matrix j = sample_choi(2, 1.0, dsub, dsub, rng);
  return SuperOperatorMatrix(reshuffle(j, dsub, dsub, dsub, dsub), dsub, dsub);
}

double run_once(BenchTask task, int d, const Matrix& maxmixed, RngStream& rng) {
  switch (task) {
    case BenchTask::rand_unitary:
      return sample_circular(EnsembleKind::circular, 2, d, rng)(0, 0).real();
    case BenchTask::rand_pure:
      return sample_haar_ket(2, d, rng)(0).real();
    case BenchTask::rand_mixed:
      return sample_hs_state(2, 1.0, d, rng)(0, 0).real();
    case BenchTask::rand_channel: {
      const int dsub = channel_subdim(d);
      return sample_superop(dsub, rng).matrix(0, 0).real();
    }
    case BenchTask::tracedist_maxmixed:
      return trace_distance(sample_hs_state(2, 1.0, d, rng), maxmixed);
    case BenchTask::tracedist_pair: {
      const Matrix a = sample_hs_state(2, 1.0, d, rng);
      const Matrix b = sample_hs_state(2, 1.0, d, rng);
      return trace_distance(a, b);
    }
    case BenchTask::stationary_entropy: {
      const int dsub = channel_subdim(d);
      return vonneumann_entropy(stationary_state(sample_superop(dsub, rng)));
    }
  }
  throw std::invalid_argument("run_benchmark: unknown task");
}

}  // namespace

const char* bench_task_name(BenchTask task) {
  switch (task) {
    case BenchTask::rand_unitary: return "rand_unitary";
    case BenchTask::rand_pure: return "rand_pure";
    case BenchTask::rand_mixed: return "rand_mixed";
    case BenchTask::rand_channel: return "rand_channel";
    case BenchTask::tracedist_maxmixed: return "tracedist_maxmixed";
    case BenchTask::tracedist_pair: return "tracedist_pair";
    case BenchTask::stationary_entropy: return "stationary_entropy";
  }
  throw std::invalid_argument("bench_task_name: unknown task");
}

BenchTask parse_bench_task(const std::string& name) {
  for (BenchTask t : all_bench_tasks()) {
    if (name == bench_task_name(t)) return t;
  }
  throw std::invalid_argument("unknown benchmark task '" + name + "'");
}

std::vector<BenchTask> all_bench_tasks() {
  return {BenchTask::rand_unitary,       BenchTask::rand_pure,
          BenchTask::rand_mixed,         BenchTask::rand_channel,
          BenchTask::tracedist_maxmixed, BenchTask::tracedist_pair,
          BenchTask::stationary_entropy};
}

Matrix stationary_state(const SuperOperatorMatrix& s) {
  if (s.idim != s.odim) {
    throw std::invalid_argument("stationary_state: input and output dimensions differ");
  }
  Eigen::ComplexEigenSolver<Matrix> es(s.matrix);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("stationary_state: eigendecomposition failed");
  }
  Eigen::Index best = 0;
  double best_dist = std::abs(es.eigenvalues()(0) - cplx(1.0, 0.0));
  for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i) {
    const double dist = std::abs(es.eigenvalues()(i) - cplx(1.0, 0.0));
    if (dist < best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  if (best_dist > 1e-6) {
    throw std::runtime_error("stationary_state: no eigenvalue within 1e-6 of 1");
  }
  Matrix x = unres(es.eigenvectors().col(best), s.idim, s.idim);
  // Eigenvectors carry an arbitrary global phase; rotate it away so the
  // Hermitian part below keeps the full weight of the fixed point.
  const cplx tr = x.trace();
  if (std::abs(tr) > 1e-12 * std::max(x.norm(), 1e-300)) {
    x *= std::conj(tr) / std::abs(tr);
  }
  Matrix h = 0.5 * (x + x.adjoint());
  const double htr = h.trace().real();
  if (std::abs(htr) < 1e-12 * std::max(h.norm(), 1e-300)) {
    throw std::runtime_error("stationary_state: fixed point has vanishing trace");
  }
  return h / htr;
}

std::vector<BenchRow> run_benchmark(const BenchmarkSpec& spec) {
  if (spec.steps < 1) throw std::invalid_argument("run_benchmark: steps must be >= 1");
  if (spec.dims.empty()) throw std::invalid_argument("run_benchmark: dims must be nonempty");
  for (int d : spec.dims) {
    if (d < 1) throw std::invalid_argument("run_benchmark: dims must be positive");
  }

  const RngStream root(spec.seed);
  std::vector<BenchRow> rows;
  std::uint64_t cell = 0;
  for (BenchTask task : spec.tasks) {
    for (int d : spec.dims) {
      RngStream rng = root.derive(cell++);
      try {
        const Matrix maxmixed = max_mixed(d);
        double sink = run_once(task, d, maxmixed, rng);  // warm-up, untimed

        const auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < spec.steps; ++i) {
          sink += run_once(task, d, maxmixed, rng);
        }
        const auto t1 = std::chrono::steady_clock::now();
        g_bench_sink = sink;

        BenchRow row;
        row.task = bench_task_name(task);
        row.dim = d;
        row.steps = spec.steps;
        row.total_seconds = std::chrono::duration<double>(t1 - t0).count();
        row.mean_seconds = row.total_seconds / spec.steps;
        rows.push_back(row);
      } catch (const std::bad_alloc&) {
        std::fprintf(stderr, "bench: task %s dim %d skipped (out of memory)\n",
                     bench_task_name(task), d);
      }
    }
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& os) {
  os << "task,dim,steps,total_seconds,mean_seconds\n";
  char buf[64];
  for (const BenchRow& r : rows) {
    os << r.task << ',' << r.dim << ',' << r.steps << ',';
    std::snprintf(buf, sizeof(buf), "%.9e", r.total_seconds);
    os << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.9e", r.mean_seconds);
    os << buf << '\n';
  }
}

}  // namespace qi
