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

#ifndef PAULIPROP_RUN_CONFIG_HPP
#define PAULIPROP_RUN_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauliprop/circuit.hpp"
#include "pauliprop/sparse_operator.hpp"

namespace pauliprop {

/// Invalid or inconsistent run configuration (maps to exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Free parameters of a batch run. Populated from a flat "key = value"
/// config file and/or command-line overrides; angle values accept the "pi"
/// suffix ("0.25pi") as multiples of pi.
struct RunConfig {
  std::string preset;          // "kicked-ising-eagle127" or empty
  std::string circuit_path;    // circuit file (needs `qubits`)
  std::string geometry_path;   // overrides the preset geometry
  int qubits = 0;              // required with circuit_path
  Angle theta_x = Angle::from_pi_units(0.25);
  Angle theta_zz = Angle::from_pi_units(-0.5);
  int layers = 20;
  double epsilon0 = 0.0;
  TruncationCadence cadence = TruncationCadence::PerGate;
  uint32_t workers = 1;
  uint32_t block_size_bits = 0;  // 0 = ceil(log2(workers))
  uint32_t perturbation_s = 1;
  std::string observable;        // initial operator label; preset: "Z62"
  std::string report = "zero-state";  // or "coeff:<label>"
  std::string out_dir = "out";
  int histogram_bins = 0;        // 0 = no histograms
  int checkpoint_every = 0;      // layers; 0 = no checkpoints
  int threads = 0;               // 0 = hardware concurrency
  uint64_t max_terms = 0;        // 0 = unlimited
  bool per_gate_readout = false;
  std::vector<uint32_t> bench_workers;  // worker sweep for bench mode
  uint64_t bench_stop_terms = 0;        // bench stops once |O| passes this

  /// Applies one "key = value" assignment. Unknown keys throw ConfigError.
  void assign(const std::string& key, const std::string& value);
};

/// Parses a flat key = value file ('#' comments, blank lines ignored).
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Fails fast on contradictions (no model selected, bad ranges, missing
/// files); returns the config with defaults resolved (block size, preset
/// observable).
RunConfig validate_config(RunConfig config);

/// Resolved settings as a JSON document (written next to the ledger so a
/// run records the map parameters, hash function and schema that produced
/// it).
std::string config_to_json(const RunConfig& config);

}  // namespace pauliprop

#endif  // PAULIPROP_RUN_CONFIG_HPP
