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

#ifndef PAULIPROP_RUNNER_HPP
#define PAULIPROP_RUNNER_HPP

#include <iosfwd>
#include <optional>

#include "pauliprop/engine.hpp"
#include "pauliprop/models.hpp"
#include "pauliprop/run_config.hpp"

namespace pauliprop {

// Process exit codes of the batch front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;     // bad or inconsistent configuration
inline constexpr int kExitNumerical = 3;  // NaN/Inf or failed oracle check
inline constexpr int kExitResource = 4;   // memory / term budget exhausted

/// Circuit described by the config (preset or file).
Circuit build_circuit(const RunConfig& config);

/// Engine configured per the config, loaded with the initial observable.
Engine make_engine(const RunConfig& config);

struct RunResult {
  int exit_code = kExitOk;
  RunLedger ledger;
};

/// Full batch run: writes <out>/ledger.csv (flushed per layer),
/// <out>/run_meta.json, optional per-layer histogram TSVs and checkpoints.
/// Errors are reported on `err` and encoded in the exit code.
RunResult run_simulation(const RunConfig& config, std::ostream& log,
                         std::ostream& err);

/// Worker-count sweep writing <out>/bench.csv with one row per layer and
/// worker count: workers, term_count, ms_per_gate_total,
/// ms_per_gate_exchange, ms_per_gate_compute.
int run_bench(const RunConfig& config, std::ostream& log, std::ostream& err);

/// Runs the engine at epsilon0 = 0 against the dense references on a small
/// circuit and prints a max-deviation report. Exit code 3 when any
/// deviation exceeds 1e-12.
int run_oracle_check(const RunConfig& config, std::ostream& log,
                     std::ostream& err);

}  // namespace pauliprop

#endif  // PAULIPROP_RUNNER_HPP
