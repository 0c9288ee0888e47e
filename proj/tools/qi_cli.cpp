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

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qi/bench.hpp"
#include "qi/matrix_io.hpp"
#include "qi/random.hpp"
#include "qi/teleport.hpp"

namespace {

std::vector<int> parse_dims(const std::string& csv) {
  std::vector<int> dims;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    const int d = std::stoi(item, &used);
    if (used != item.size() || d < 1) {
      throw std::invalid_argument("bad dimension '" + item + "'");
    }
    dims.push_back(d);
  }
  if (dims.empty()) throw std::invalid_argument("empty dimension list");
  return dims;
}

// Writes to the path when given, stdout otherwise.
void emit(const std::string& out, const std::function<void(std::ostream&)>& writer) {
  if (out.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open '" + out + "'");
  writer(f);
  if (!f) throw std::runtime_error("write failed for '" + out + "'");
}

qi::EnsembleKind parse_ensemble(const std::string& name) {
  if (name == "ginibre") return qi::EnsembleKind::ginibre;
  if (name == "wishart") return qi::EnsembleKind::wishart;
  if (name == "circular") return qi::EnsembleKind::circular;
  if (name == "circular_real") return qi::EnsembleKind::circular_real;
  if (name == "circular_quaternion") return qi::EnsembleKind::circular_quaternion;
  if (name == "haar_ket") return qi::EnsembleKind::haar_ket;
  if (name == "hs_state") return qi::EnsembleKind::hs_state;
  if (name == "choi_channel") return qi::EnsembleKind::choi_channel;
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum information toolkit command line"};
  app.require_subcommand(1);

  auto* bench = app.add_subcommand("bench", "run timing benchmarks, CSV output");
  std::string bench_task = "all";
  std::string bench_dims = "4,16,64,256,1024";
  int bench_steps = 1000;
  std::uint64_t bench_seed = 42;
  std::string bench_out;
  bench->add_option("--task", bench_task, "task name or 'all'");
  bench->add_option("--dims", bench_dims, "comma-separated dimensions");
  bench->add_option("--steps", bench_steps, "iterations per cell");
  bench->add_option("--seed", bench_seed, "random seed");
  bench->add_option("--out", bench_out, "output CSV path (default stdout)");

  auto* teleport = app.add_subcommand("teleport", "noisy teleportation sweep, CSV output");
  qi::TeleportSpec tspec;
  std::string teleport_out;
  teleport->add_option("--gamma-start", tspec.gamma_start, "grid start");
  teleport->add_option("--gamma-stop", tspec.gamma_stop, "grid stop");
  teleport->add_option("--gamma-step", tspec.gamma_step, "grid step");
  teleport->add_option("--trials", tspec.trials, "random input states per grid point");
  teleport->add_option("--seed", tspec.seed, "random seed");
  teleport->add_option("--out", teleport_out, "output CSV path (default stdout)");

  auto* dump = app.add_subcommand("dump", "sample one random object, matrix text output");
  std::string dump_ensemble;
  qi::EnsembleDescriptor desc;
  std::uint64_t dump_seed = 42;
  std::string dump_out;
  dump->add_option("--ensemble", dump_ensemble, "ensemble kind")->required();
  dump->add_option("--beta", desc.beta, "Dyson index");
  dump->add_option("--K", desc.kfac, "rank factor");
  dump->add_option("--m", desc.m, "row dimension");
  dump->add_option("--n", desc.n, "column dimension");
  dump->add_option("--d", desc.d, "square dimension");
  dump->add_option("--idim", desc.idim, "channel input dimension");
  dump->add_option("--odim", desc.odim, "channel output dimension");
  dump->add_option("--seed", dump_seed, "random seed");
  dump->add_option("--out", dump_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);

    if (bench->parsed()) {
      qi::BenchmarkSpec spec;
      spec.tasks = bench_task == "all"
                       ? qi::all_bench_tasks()
                       : std::vector<qi::BenchTask>{qi::parse_bench_task(bench_task)};
      spec.dims = parse_dims(bench_dims);
      spec.steps = bench_steps;
      spec.seed = bench_seed;
      const auto rows = qi::run_benchmark(spec);
      emit(bench_out, [&rows](std::ostream& os) { qi::write_bench_csv(rows, os); });
    } else if (teleport->parsed()) {
      const auto rows = qi::run_teleportation(tspec);
      emit(teleport_out, [&rows](std::ostream& os) { qi::write_teleport_csv(rows, os); });
    } else if (dump->parsed()) {
      desc.kind = parse_ensemble(dump_ensemble);
      qi::RngStream rng(dump_seed);
      const qi::Matrix m = qi::sample(desc, rng);
      emit(dump_out, [&m](std::ostream& os) { qi::dump_matrix(m, os); });
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
