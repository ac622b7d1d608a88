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

#include "pauliprop/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <new>
#include <ostream>

#include <json.hpp>

#include "pauliprop/oracle.hpp"

namespace pauliprop {

namespace fs = std::filesystem;

namespace {

Geometry load_run_geometry(const RunConfig& config) {
  if (!config.geometry_path.empty()) {
    try {
      return load_geometry_file(config.geometry_path);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return heavy_hex_127();
}

PauliString parse_observable(const std::string& label, int n) {
  try {
    return parse_pauli_label(label, n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("observable \"" + label + "\": " + e.what());
  }
}

void write_checkpoint(const fs::path& dir, const Engine& engine,
                      const RunConfig& config, int t) {
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["schema"] = 1;
  manifest["layer"] = t;
  manifest["qubits"] = engine.num_qubits();
  manifest["workers"] = config.workers;
  manifest["block_size_bits"] = config.block_size_bits;
  manifest["perturbation_s"] = config.perturbation_s;
  manifest["perturbation_hash"] = "splitmix64-finalizer-word-fold";
  manifest["epsilon0"] = config.epsilon0;
  auto files = nlohmann::json::array();
  auto shards = engine.shards();
  for (size_t m = 0; m < shards.size(); ++m) {
    std::string name = "shard_" + std::to_string(m) + ".txt";
    std::ofstream out(dir / name);
    shards[m].dump(out);
    files.push_back({{"worker", m},
                     {"path", name},
                     {"terms", shards[m].term_count()}});
  }
  manifest["files"] = files;
  std::ofstream mf(dir / "manifest.json");
  mf << manifest.dump(2) << '\n';
}

struct ObservableSpec {
  ReadoutMode mode = ReadoutMode::ZeroState;
  PauliString tracked;
};

ObservableSpec readout_of(const RunConfig& config, int n) {
  ObservableSpec spec;
  if (config.report.starts_with("coeff:")) {
    spec.mode = ReadoutMode::TrackedCoefficient;
    spec.tracked = parse_observable(config.report.substr(6), n);
  }
  return spec;
}

}  // namespace

Circuit build_circuit(const RunConfig& config) {
  if (!config.circuit_path.empty()) {
    std::ifstream in(config.circuit_path);
    if (!in) {
      throw ConfigError("cannot open circuit file: " + config.circuit_path);
    }
    try {
      Circuit circuit = parse_circuit(in, config.qubits);
      if (circuit.layers.empty()) {
        throw ConfigError("circuit file has no gates: " + config.circuit_path);
      }
      return circuit;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  Geometry geom = load_run_geometry(config);
  try {
    return build_kicked_ising(geom, config.theta_x, config.theta_zz,
                              config.layers);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Engine make_engine(const RunConfig& config) {
  int n = config.circuit_path.empty() ? load_run_geometry(config).n
                                      : config.qubits;
  EngineConfig ec;
  ec.n = n;
  ec.partition = PartitionSpec::make(config.workers, config.block_size_bits,
                                     config.perturbation_s);
  ec.policy = TruncationPolicy{config.epsilon0, config.cadence};
  ec.threads = config.threads;
  ec.max_terms = config.max_terms;
  Engine engine(ec);
  engine.set_initial({{parse_observable(config.observable, n), 1.0}});
  return engine;
}

RunResult run_simulation(const RunConfig& config, std::ostream& log,
                         std::ostream& err) {
  RunResult result;
  try {
    RunConfig cfg = validate_config(config);
    Circuit circuit = build_circuit(cfg);
    Engine engine = make_engine(cfg);

    fs::create_directories(cfg.out_dir);
    fs::path out_dir(cfg.out_dir);
    {
      std::ofstream meta(out_dir / "run_meta.json");
      meta << config_to_json(cfg);
    }
    std::ofstream ledger_file(out_dir / "ledger.csv");
    ledger_file << RunLedger::csv_header() << '\n' << std::flush;
    std::ofstream gate_trace;
    if (cfg.per_gate_readout) {
      gate_trace.open(out_dir / "observable_per_gate.csv");
      gate_trace << "t,gate,observable\n";
    }

    ObservableSpec readout = readout_of(cfg, engine.num_qubits());
    RunOptions options;
    options.readout = readout.mode;
    options.tracked_index = readout.tracked;
    options.on_layer = [&](const LayerRecord& row, const Engine& eng) {
      ledger_file << RunLedger::csv_row(row) << '\n' << std::flush;
      bool undefined = false;
      double balance = uniformity_ratio(eng.shard_sizes(), &undefined);
      log << "t=" << row.t << " observable=" << row.observable
          << " |O|=" << row.term_count << " removed=" << row.removed
          << " uniformity_ratio=";
      if (undefined) {
        log << "inf\n";
      } else {
        log << balance << '\n';
      }
      if (cfg.histogram_bins > 0 && eng.global_max() > 0) {
        auto hist = density_histogram(eng.shards(), eng.global_max(),
                                      cfg.histogram_bins, cfg.epsilon0);
        std::ofstream hf(out_dir /
                         ("histogram_t" + std::to_string(row.t) + ".tsv"));
        hf << hist.to_tsv();
      }
      if (cfg.checkpoint_every > 0 && row.t % cfg.checkpoint_every == 0) {
        write_checkpoint(out_dir / ("checkpoint_t" + std::to_string(row.t)),
                         eng, cfg, row.t);
      }
    };
    if (cfg.per_gate_readout) {
      options.on_gate_readout = [&](int t, size_t gate, double value) {
        gate_trace << t << ',' << gate << ',' << value << '\n';
      };
    }

    result.ledger = run_circuit(engine, circuit, options);
    return result;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    result.exit_code = kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical abort: " << e.what() << '\n';
    result.exit_code = kExitNumerical;
  } catch (const ResourceLimitError& e) {
    err << "resource exhausted: " << e.what() << '\n';
    result.exit_code = kExitResource;
  } catch (const std::bad_alloc&) {
    err << "resource exhausted: out of memory\n";
    result.exit_code = kExitResource;
  }
  return result;
}

int run_bench(const RunConfig& config, std::ostream& log, std::ostream& err) {
  try {
    RunConfig cfg = validate_config(config);
    if (cfg.bench_workers.empty()) {
      throw ConfigError("bench mode needs a worker sweep (bench_workers)");
    }
    Circuit circuit = build_circuit(cfg);
    fs::create_directories(cfg.out_dir);
    std::ofstream bench_file(fs::path(cfg.out_dir) / "bench.csv");
    bench_file << "workers,term_count,ms_per_gate_total,ms_per_gate_exchange,"
                  "ms_per_gate_compute\n"
               << std::flush;

    for (uint32_t workers : cfg.bench_workers) {
      RunConfig sweep = cfg;
      sweep.workers = workers;
      sweep.block_size_bits = 0;
      sweep = validate_config(sweep);
      Engine engine = make_engine(sweep);
      log << "bench: workers=" << workers << '\n';
      bool stop = false;
      // Drive the layers directly so the per-layer counters can be split
      // into exchange and compute components.
      engine.take_counters();
      int total_layers = static_cast<int>(circuit.layers.size());
      for (int t = 1; t <= total_layers && !stop; ++t) {
        engine.set_layer_context(t);
        const auto& layer = circuit.layers[total_layers - t];
        for (auto gate = layer.rbegin(); gate != layer.rend(); ++gate) {
          engine.apply_gate(*gate);
        }
        if (cfg.cadence == TruncationCadence::PerLayer) engine.truncate_now();
        Engine::Counters counters = engine.take_counters();
        double per_gate = counters.gates ? 1.0 / double(counters.gates) : 0.0;
        double total_ms = 1e-6 * double(counters.timers.total_ns()) * per_gate;
        double exchange_ms =
            1e-6 * double(counters.timers.exchange_ns) * per_gate;
        bench_file << workers << ',' << engine.term_count() << ','
                   << total_ms << ',' << exchange_ms << ','
                   << (total_ms - exchange_ms) << '\n'
                   << std::flush;
        log << "bench: workers=" << workers << " t=" << t
            << " |O|=" << engine.term_count() << " ms/gate=" << total_ms
            << '\n';
        if (cfg.bench_stop_terms > 0 &&
            engine.term_count() >= cfg.bench_stop_terms) {
          stop = true;
        }
      }
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical abort: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ResourceLimitError& e) {
    err << "resource exhausted: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "resource exhausted: out of memory\n";
    return kExitResource;
  }
}

int run_oracle_check(const RunConfig& config, std::ostream& log,
                     std::ostream& err) {
  try {
    RunConfig cfg = validate_config(config);
    Circuit circuit = build_circuit(cfg);
    if (circuit.n > 12) {
      throw ConfigError(
          "oracle check needs a small circuit (n <= 12); the preset has n=" +
          std::to_string(circuit.n));
    }
    cfg.epsilon0 = 0.0;
    Engine engine = make_engine(cfg);
    PauliString initial = parse_pauli_label(cfg.observable, circuit.n);
    RunLedger ledger = run_circuit(engine, circuit);

    // State-vector path: forward evolution, observable measured at the end.
    oracle::DenseState state = oracle::zero_state(circuit.n);
    oracle::evolve_state(state, circuit);
    double sv = oracle::expectation(state, initial);
    double engine_value = engine.expectation_zero_state();
    double sv_dev = std::fabs(sv - engine_value);
    log << "state-vector expectation: " << sv << '\n';
    log << "engine expectation:       " << engine_value << '\n';
    log << "deviation:                " << sv_dev << '\n';

    double coeff_dev = 0.0;
    if (circuit.n <= 8) {
      oracle::Matrix dense =
          oracle::dense_operator({{initial, 1.0}}, circuit.n);
      dense = oracle::brute_conjugate_circuit(dense, circuit);
      SparseOperator merged = engine.merged();
      auto keys = merged.store().keys();
      auto values = merged.store().values();
      double engine_norm2 = 0.0;
      for (size_t i = 0; i < keys.size(); ++i) {
        auto c = oracle::pauli_coefficient(dense, keys[i], circuit.n);
        coeff_dev = std::max(coeff_dev, std::abs(c - values[i]));
        engine_norm2 += values[i] * values[i];
      }
      // Any coefficient the engine lost entirely shows up as a norm gap.
      double dense_norm2 =
          (dense.adjoint() * dense).trace().real() / double(1 << circuit.n);
      coeff_dev = std::max(coeff_dev, std::fabs(dense_norm2 - engine_norm2));
      log << "dense-conjugation max coefficient deviation: " << coeff_dev
          << '\n';
    } else {
      log << "dense-conjugation check skipped (n > 8)\n";
    }

    bool ok = sv_dev <= 1e-12 && coeff_dev <= 1e-12;
    log << (ok ? "oracle check PASSED\n" : "oracle check FAILED\n");
    return ok ? kExitOk : kExitNumerical;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace pauliprop
