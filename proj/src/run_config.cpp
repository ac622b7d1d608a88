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

#include "pauliprop/run_config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pauliprop/partition.hpp"

namespace pauliprop {

namespace {

std::string trim(const std::string& s) {
  size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out;
  if (!(in >> out) || !(in >> std::ws).eof()) {
    throw ConfigError("invalid value for " + key + ": \"" + value + "\"");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("invalid boolean for " + key + ": \"" + value + "\"");
}

std::vector<uint32_t> parse_worker_list(const std::string& value) {
  std::vector<uint32_t> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_number<uint32_t>("bench_workers", item));
  }
  if (out.empty()) throw ConfigError("empty worker list");
  return out;
}

Angle parse_config_angle(const std::string& key, const std::string& value) {
  try {
    return parse_angle(value);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid ") + key + ": " + e.what());
  }
}

}  // namespace

void RunConfig::assign(const std::string& key, const std::string& value) {
  if (key == "preset") {
    preset = value;
  } else if (key == "circuit") {
    circuit_path = value;
  } else if (key == "geometry") {
    geometry_path = value;
  } else if (key == "qubits") {
    qubits = parse_number<int>(key, value);
  } else if (key == "theta_x") {
    theta_x = parse_config_angle(key, value);
  } else if (key == "theta_zz") {
    theta_zz = parse_config_angle(key, value);
  } else if (key == "layers") {
    layers = parse_number<int>(key, value);
  } else if (key == "epsilon0") {
    epsilon0 = parse_number<double>(key, value);
  } else if (key == "cadence") {
    if (value == "gate") {
      cadence = TruncationCadence::PerGate;
    } else if (value == "layer") {
      cadence = TruncationCadence::PerLayer;
    } else {
      throw ConfigError("cadence must be \"gate\" or \"layer\"");
    }
  } else if (key == "workers") {
    workers = parse_number<uint32_t>(key, value);
  } else if (key == "block_size_bits") {
    block_size_bits = parse_number<uint32_t>(key, value);
  } else if (key == "perturbation_s") {
    perturbation_s = parse_number<uint32_t>(key, value);
  } else if (key == "observable") {
    observable = value;
  } else if (key == "report") {
    report = value;
  } else if (key == "out") {
    out_dir = value;
  } else if (key == "histogram_bins") {
    histogram_bins = parse_number<int>(key, value);
  } else if (key == "checkpoint_every") {
    checkpoint_every = parse_number<int>(key, value);
  } else if (key == "threads") {
    threads = parse_number<int>(key, value);
  } else if (key == "max_terms") {
    max_terms = parse_number<uint64_t>(key, value);
  } else if (key == "per_gate_readout") {
    per_gate_readout = parse_bool(key, value);
  } else if (key == "bench_workers") {
    bench_workers = parse_worker_list(value);
  } else if (key == "bench_stop_terms") {
    bench_stop_terms = parse_number<uint64_t>(key, value);
  } else {
    throw ConfigError("unknown config key \"" + key + "\"");
  }
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key or value");
    }
    config.assign(key, value);
  }
  return config;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

RunConfig validate_config(RunConfig config) {
  bool has_preset = !config.preset.empty();
  bool has_circuit = !config.circuit_path.empty();
  if (has_preset == has_circuit) {
    throw ConfigError(
        "exactly one of `preset` and `circuit` must be selected");
  }
  if (has_preset && config.preset != "kicked-ising-eagle127") {
    throw ConfigError("unknown preset \"" + config.preset + "\"");
  }
  if (has_circuit) {
    if (config.qubits < 1) {
      throw ConfigError("circuit files need `qubits`");
    }
    if (!std::filesystem::exists(config.circuit_path)) {
      throw ConfigError("circuit file not found: " + config.circuit_path);
    }
  }
  if (!config.geometry_path.empty() &&
      !std::filesystem::exists(config.geometry_path)) {
    throw ConfigError("geometry file not found: " + config.geometry_path);
  }
  if (config.layers < 1) throw ConfigError("layers must be >= 1");
  if (config.epsilon0 < 0) throw ConfigError("epsilon0 must be >= 0");
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  if (config.perturbation_s < 1) {
    throw ConfigError("perturbation_s must be >= 1");
  }
  if (config.block_size_bits == 0) {
    config.block_size_bits = PartitionSpec::default_block_size(config.workers);
  }
  if (config.block_size_bits > 32) {
    throw ConfigError("block_size_bits must be in [1, 32]");
  }
  if (config.histogram_bins < 0 || config.checkpoint_every < 0 ||
      config.threads < 0) {
    throw ConfigError("counts must be >= 0");
  }
  if (config.observable.empty()) {
    if (has_preset) {
      config.observable = "Z62";
    } else {
      throw ConfigError("`observable` is required with circuit files");
    }
  }
  if (config.report != "zero-state" && !config.report.starts_with("coeff:")) {
    throw ConfigError(
        "report must be \"zero-state\" or \"coeff:<pauli-label>\"");
  }
  return config;
}

std::string config_to_json(const RunConfig& config) {
  nlohmann::json j;
  j["preset"] = config.preset;
  j["circuit"] = config.circuit_path;
  j["geometry"] = config.geometry_path;
  j["theta_x_radians"] = config.theta_x.radians;
  j["theta_zz_radians"] = config.theta_zz.radians;
  j["layers"] = config.layers;
  j["epsilon0"] = config.epsilon0;
  j["cadence"] =
      config.cadence == TruncationCadence::PerGate ? "gate" : "layer";
  j["workers"] = config.workers;
  j["block_size_bits"] = config.block_size_bits;
  j["perturbation_s"] = config.perturbation_s;
  j["perturbation_hash"] = "splitmix64-finalizer-word-fold";
  j["observable"] = config.observable;
  j["report"] = config.report;
  j["histogram_bins"] = config.histogram_bins;
  j["checkpoint_every"] = config.checkpoint_every;
  j["threads"] = config.threads;
  j["max_terms"] = config.max_terms;
  j["ledger_schema"] = 1;  // truncate before the per-layer readout
  return j.dump(2) + "\n";
}

}  // namespace pauliprop
