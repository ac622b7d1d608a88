// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pauliprop/runner.hpp"

using namespace pauliprop;

int main(int argc, char** argv) {
  CLI::App app{
      "pauliprop: partitioned Heisenberg-picture propagation of sparse "
      "Pauli-string operators"};

  std::string config_path, preset, circuit_path, geometry_path;
  std::string theta_x, theta_zz, epsilon0, observable, report, out_dir;
  std::string bench_list;
  int layers = -1, qubits = -1, histogram_bins = -1, checkpoint_every = -1;
  int workers = -1, block_size = -1, perturbation_s = -1, threads = -1;
  long long max_terms = -1;
  std::string cadence;
  bool oracle_check = false;

  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--preset", preset, "model preset (kicked-ising-eagle127)");
  app.add_option("--circuit", circuit_path, "circuit file");
  app.add_option("--geometry", geometry_path, "geometry edge-list file");
  app.add_option("--qubits", qubits, "qubit count for circuit files");
  app.add_option("--theta-x", theta_x,
                 "X rotation angle (radians, or e.g. 0.25pi)");
  app.add_option("--theta-zz", theta_zz, "ZZ rotation angle");
  app.add_option("--layers", layers, "number of circuit layers");
  app.add_option("--epsilon0", epsilon0, "relative truncation threshold");
  app.add_option("--cadence", cadence, "truncation cadence: gate|layer");
  app.add_option("--workers", workers, "logical worker count");
  app.add_option("--block-size", block_size,
                 "distribution-map block size in bits");
  app.add_option("--perturbation-s", perturbation_s,
                 "distribution-map perturbation strength");
  app.add_option("--observable", observable,
                 "initial operator Pauli label (e.g. Z62)");
  app.add_option("--report", report, "zero-state or coeff:<label>");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--histogram-bins", histogram_bins,
                 "per-layer coefficient histograms (0 = off)");
  app.add_option("--checkpoint-every", checkpoint_every,
                 "checkpoint interval in layers (0 = off)");
  app.add_option("--threads", threads, "thread count (0 = hardware)");
  app.add_option("--max-terms", max_terms,
                 "abort once |O| exceeds this budget (0 = off)");
  app.add_flag("--oracle-check", oracle_check,
               "validate the run against the dense references (small n)");
  app.add_option("--bench", bench_list,
                 "comma-separated worker counts to sweep; writes bench.csv");

  CLI11_PARSE(app, argc, argv);

  RunConfig config;
  try {
    if (!config_path.empty()) config = parse_config_file(config_path);
    auto set = [&](const char* key, const std::string& value) {
      if (!value.empty()) config.assign(key, value);
    };
    set("preset", preset);
    set("circuit", circuit_path);
    set("geometry", geometry_path);
    set("theta_x", theta_x);
    set("theta_zz", theta_zz);
    set("epsilon0", epsilon0);
    set("observable", observable);
    set("report", report);
    set("out", out_dir);
    set("cadence", cadence);
    set("bench_workers", bench_list);
    if (qubits >= 0) config.qubits = qubits;
    if (layers >= 0) config.layers = layers;
    if (workers >= 0) config.assign("workers", std::to_string(workers));
    if (block_size >= 0) {
      config.assign("block_size_bits", std::to_string(block_size));
    }
    if (perturbation_s >= 0) {
      config.assign("perturbation_s", std::to_string(perturbation_s));
    }
    if (histogram_bins >= 0) config.histogram_bins = histogram_bins;
    if (checkpoint_every >= 0) config.checkpoint_every = checkpoint_every;
    if (threads >= 0) config.threads = threads;
    if (max_terms >= 0) {
      config.assign("max_terms", std::to_string(max_terms));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (oracle_check) {
    return run_oracle_check(config, std::cout, std::cerr);
  }
  if (!bench_list.empty() || !config.bench_workers.empty()) {
    return run_bench(config, std::cout, std::cerr);
  }
  return run_simulation(config, std::cout, std::cerr).exit_code;
}
