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

#ifndef PAULIPROP_ENGINE_HPP
#define PAULIPROP_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauliprop/circuit.hpp"
#include "pauliprop/partition.hpp"
#include "pauliprop/sparse_operator.hpp"

namespace pauliprop {

/// One (index, signed increment) update produced while applying a gate.
struct UpdateRecord {
  PauliString index;
  double delta;
};

/// Updates addressed from one worker to one destination worker; every
/// record's index is owned by the destination under the active partition.
struct UpdateBatch {
  uint32_t destination = 0;
  std::vector<UpdateRecord> records;
};

/// Rotates one shard through a gate: terms that anticommute with the
/// generator are scaled by cos(theta) in place, and for each of them a
/// record (I xor J, +-sin(theta) * previous coefficient) is routed to the
/// owner of I xor J (including the owning worker itself). The record sign
/// is +sin(theta) when the source phase exponent B(I, J) is 1 mod 4 and
/// -sin(theta) when it is 3 mod 4, which makes the update at the receiving
/// index match dense conjugation; records with an exactly zero increment
/// are not emitted. Returns the nonempty batches sorted by destination.
std::vector<UpdateBatch> apply_gate_local(SparseOperator& shard,
                                          const Gate& gate,
                                          const PartitionSpec& spec);

/// All-to-all delivery for the in-process runtime: routes every batch to
/// its destination's inbox, sender order preserved (ascending sender is the
/// canonical apply order). Empty batches are dropped.
std::vector<std::vector<UpdateBatch>> exchange(
    std::vector<std::vector<UpdateBatch>> outboxes, uint32_t worker_count);

/// Merges an inbox into the shard via upsert, in inbox order. Every record
/// must be owned by `worker`; a violation throws std::logic_error.
void apply_updates(SparseOperator& shard,
                   std::span<const UpdateBatch> inbox,
                   const PartitionSpec& spec, uint32_t worker);

/// Per-layer record of the run ledger.
struct LayerRecord {
  int t = 0;
  double observable = 0.0;
  uint64_t term_count = 0;
  double global_max = 0.0;
  uint64_t removed = 0;
  double wall_ms_per_gate = 0.0;
  uint64_t batches_sent = 0;
  uint64_t records_sent = 0;
};

struct RunLedger {
  std::vector<LayerRecord> rows;

  static const char* csv_header();  // t,observable,term_count,...
  static std::string csv_row(const LayerRecord& row);
  std::string to_csv() const;
};

/// Raised when a non-finite coefficient is detected.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the term budget or memory is exhausted.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineConfig {
  int n = 1;
  PartitionSpec partition;
  TruncationPolicy policy;
  int threads = 0;          // 0 = hardware concurrency, capped at workers
  uint64_t max_terms = 0;   // 0 = unlimited
  bool collect_gate_stats = false;
};

/// Wall time spent per pipeline phase, nanoseconds.
struct PhaseTimers {
  uint64_t generate_ns = 0;
  uint64_t exchange_ns = 0;
  uint64_t apply_ns = 0;
  uint64_t truncate_ns = 0;

  uint64_t total_ns() const {
    return generate_ns + exchange_ns + apply_ns + truncate_ns;
  }
};

/// Destinations that actually received records, per worker, for the most
/// recent gate. Only filled when EngineConfig::collect_gate_stats is set.
struct GateStats {
  std::vector<std::vector<uint32_t>> nonempty_destinations;
};

/// The partitioned Heisenberg propagation loop. Shards of the evolving
/// operator are owned by logical workers; each gate runs
/// generate -> exchange -> apply (-> truncate) with barriers between the
/// phases, executed across a thread pool. Results are deterministic for a
/// fixed configuration regardless of thread count.
class Engine {
 public:
  explicit Engine(const EngineConfig& config);
  ~Engine();

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  int num_qubits() const { return config_.n; }
  const EngineConfig& config() const { return config_; }

  /// Resets the operator to the given terms, each routed to its owner.
  void set_initial(
      const std::vector<std::pair<PauliString, double>>& terms);

  /// Conjugates the operator by exp(-i theta/2 sigma_J): generation,
  /// exchange, apply, and (at per-gate cadence) truncation.
  void apply_gate(const Gate& gate);

  /// Reduction over local maxima followed by a truncation pass on every
  /// shard. Runs automatically per gate at per-gate cadence; call it at
  /// layer boundaries for per-layer cadence.
  void truncate_now();

  uint64_t term_count() const;
  double global_max() const { return last_global_max_; }
  double expectation_zero_state() const;
  double coefficient(const PauliString& index) const;
  std::span<const SparseOperator> shards() const { return shards_; }
  std::vector<size_t> shard_sizes() const;

  /// All shards merged into one operator (test and checkpoint helper).
  SparseOperator merged() const;

  const GateStats& last_gate_stats() const { return gate_stats_; }

  /// Counters accumulated since the last call; run_circuit drains them once
  /// per layer.
  struct Counters {
    uint64_t removed = 0;
    uint64_t batches_sent = 0;
    uint64_t records_sent = 0;
    uint64_t gates = 0;
    PhaseTimers timers;
  };
  Counters take_counters();

  /// Context used in error messages.
  void set_layer_context(int t) { layer_context_ = t; }

 private:
  void generate_phase(const Gate& gate);
  void apply_phase();
  void check_budget();

  EngineConfig config_;
  std::vector<SparseOperator> shards_;
  std::vector<std::vector<UpdateRecord>> outbox_;  // [sender * N + dest]
  std::vector<double> local_max_;
  std::vector<uint64_t> removed_counts_;
  std::vector<uint8_t> nonfinite_flags_;
  std::unique_ptr<class WorkerPool> pool_;
  double last_global_max_ = 0.0;
  Counters counters_;
  GateStats gate_stats_;
  int layer_context_ = 0;
  uint64_t gates_applied_ = 0;
};

/// How run_circuit reads the observable out of the evolving operator.
enum class ReadoutMode { ZeroState, TrackedCoefficient };

struct RunOptions {
  ReadoutMode readout = ReadoutMode::ZeroState;
  PauliString tracked_index;  // for TrackedCoefficient
  /// Called after each completed layer (ledger streaming, histograms,
  /// checkpoints). The engine reference stays valid during the call.
  std::function<void(const LayerRecord&, const Engine&)> on_layer;
  /// Per-gate observable trace, off by default.
  std::function<void(int t, size_t gate_index, double value)> on_gate_readout;
};

/// Pulls the operator backward through the circuit: layers are processed
/// last to first and gates within a layer in reverse listed order, so after
/// t processed layers the operator equals the end-of-circuit observable
/// conjugated through the trailing t layers. The ledger gets one row per
/// processed layer; for a circuit of identical layers row t is the
/// observable after t time steps.
RunLedger run_circuit(Engine& engine, const Circuit& circuit,
                      const RunOptions& options = {});

}  // namespace pauliprop

#endif  // PAULIPROP_ENGINE_HPP
