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

#ifndef QI_BENCH_HPP_
#define QI_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qi/channels.hpp"
#include "qi/types.hpp"

namespace qi {

enum class BenchTask {
  rand_unitary,
  rand_pure,
  rand_mixed,
  rand_channel,
  tracedist_maxmixed,
  tracedist_pair,
  stationary_entropy,
};

const char* bench_task_name(BenchTask task);
BenchTask parse_bench_task(const std::string& name);
std::vector<BenchTask> all_bench_tasks();

struct BenchmarkSpec {
  std::vector<BenchTask> tasks;
  std::vector<int> dims;
  int steps = 1000;
  std::uint64_t seed = 42;
};

struct BenchRow {
  std::string task;
  int dim = 0;
  int steps = 0;
  double total_seconds = 0.0;
  double mean_seconds = 0.0;
};

// Fixed point of a trace-preserving map: the eigenvector of the transfer
// matrix with eigenvalue closest to 1 (must be within 1e-6), reshaped,
// Hermitized and trace normalized.
Matrix stationary_state(const SuperOperatorMatrix& s);

// Runs each (task, dim) cell on its own derived random stream, with one
// untimed warm-up iteration per cell. Sampled objects are deterministic for
// a fixed seed; only the timing columns vary between runs.
std::vector<BenchRow> run_benchmark(const BenchmarkSpec& spec);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& os);

}  // namespace qi

#endif  // QI_BENCH_HPP_
