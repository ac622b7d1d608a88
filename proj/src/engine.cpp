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

#include "pauliprop/engine.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "pauliprop/worker_pool.hpp"

namespace pauliprop {

namespace {

using Clock = std::chrono::steady_clock;

uint64_t elapsed_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start)
      .count();
}

/// Everything about a gate the per-term loop needs, computed once.
struct GatePrep {
  double cos_theta;
  double sin_theta;
  PauliString generator;
  // Non-identity sites with their codes; B(I,J) only draws contributions
  // from these.
  std::vector<std::pair<int, uint8_t>> support;
  // Partition blocks overlapped by the generator, for the owner delta.
  std::vector<std::pair<uint32_t, uint64_t>> blocks;

  GatePrep(const Gate& gate, const PartitionSpec& spec, int n)
      : cos_theta(gate.cos_theta),
        sin_theta(gate.sin_theta),
        generator(gate.generator) {
    for (int site = 0; site < n; ++site) {
      uint8_t code = gate.generator.code_at(site);
      if (code != 0) support.emplace_back(site, code);
    }
    uint32_t k = spec.block_size_bits;
    uint32_t nblocks = (2 * static_cast<uint32_t>(n) + k - 1) / k;
    for (uint32_t j = 0; j < nblocks; ++j) {
      uint64_t jblk = index_block(gate.generator, j, k);
      if (jblk != 0) blocks.emplace_back(j, jblk);
    }
  }
};

// Sign of the sin-term record emitted for a source term with phase
// exponent B(I,J): the receiving index I^J picks up
// (-1)^((B(I^J,J)+1)/2) sin(theta) O_I, and B(I^J,J) = -B(I,J) mod 4, so
// the sign is + for B(I,J) = 1 mod 4 and - for 3 mod 4.
inline double record_sign(int phase_mod4) {
  return phase_mod4 == 1 ? 1.0 : -1.0;
}

inline int phase_on_support(const PauliString& key, const GatePrep& prep) {
  int phase = 0;
  for (auto [site, code] : prep.support) {
    phase += local_phase(key.code_at(site), code);
  }
  return phase;
}

}  // namespace

std::vector<UpdateBatch> apply_gate_local(SparseOperator& shard,
                                          const Gate& gate,
                                          const PartitionSpec& spec) {
  int n = shard.num_qubits();
  GatePrep prep(gate, spec, n);
  std::vector<std::vector<UpdateRecord>> by_dest(spec.worker_count);
  auto keys = shard.store().keys();
  auto values = shard.store().values();
  for (size_t i = 0; i < keys.size(); ++i) {
    int phase = phase_on_support(keys[i], prep);
    if ((phase & 1) == 0) continue;
    double pre = values[i];
    values[i] = pre * prep.cos_theta;
    double delta = record_sign(((phase % 4) + 4) % 4) * prep.sin_theta * pre;
    if (delta == 0.0) continue;
    PauliString flipped = keys[i] ^ prep.generator;
    by_dest[owner(spec, flipped, n)].push_back({flipped, delta});
  }
  std::vector<UpdateBatch> batches;
  for (uint32_t dest = 0; dest < spec.worker_count; ++dest) {
    if (!by_dest[dest].empty()) {
      batches.push_back({dest, std::move(by_dest[dest])});
    }
  }
  return batches;
}

std::vector<std::vector<UpdateBatch>> exchange(
    std::vector<std::vector<UpdateBatch>> outboxes, uint32_t worker_count) {
  std::vector<std::vector<UpdateBatch>> inboxes(worker_count);
  for (auto& sender_batches : outboxes) {
    for (auto& batch : sender_batches) {
      if (batch.records.empty()) continue;
      uint32_t dest = batch.destination;
      inboxes.at(dest).push_back(std::move(batch));
    }
  }
  return inboxes;
}

void apply_updates(SparseOperator& shard, std::span<const UpdateBatch> inbox,
                   const PartitionSpec& spec, uint32_t worker) {
  int n = shard.num_qubits();
  for (const UpdateBatch& batch : inbox) {
    for (const UpdateRecord& record : batch.records) {
      if (owner(spec, record.index, n) != worker) {
        throw std::logic_error("update record for index " +
                               to_hex(record.index, n) +
                               " delivered to worker " +
                               std::to_string(worker) +
                               ", owned by worker " +
                               std::to_string(owner(spec, record.index, n)));
      }
      shard.upsert(record.index, record.delta);
    }
  }
}

const char* RunLedger::csv_header() {
  return "t,observable,term_count,global_max,removed,wall_ms_per_gate,"
         "batches_sent,records_sent";
}

std::string RunLedger::csv_row(const LayerRecord& row) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%.17g,%llu,%.17g,%llu,%.6g,%llu,%llu",
                row.t, row.observable,
                static_cast<unsigned long long>(row.term_count),
                row.global_max, static_cast<unsigned long long>(row.removed),
                row.wall_ms_per_gate,
                static_cast<unsigned long long>(row.batches_sent),
                static_cast<unsigned long long>(row.records_sent));
  return buf;
}

std::string RunLedger::to_csv() const {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const LayerRecord& row : rows) out << csv_row(row) << '\n';
  return out.str();
}

Engine::Engine(const EngineConfig& config) : config_(config) {
  if (config_.n < 1 || config_.n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  PartitionSpec::make(config_.partition.worker_count,
                      config_.partition.block_size_bits,
                      config_.partition.perturbation_s);  // validates
  if (config_.policy.epsilon0 < 0) {
    throw std::invalid_argument("epsilon0 must be >= 0");
  }
  uint32_t workers = config_.partition.worker_count;
  shards_.assign(workers, SparseOperator(config_.n));
  outbox_.resize(static_cast<size_t>(workers) * workers);
  local_max_.assign(workers, 0.0);
  removed_counts_.assign(workers, 0);
  nonfinite_flags_.assign(workers, 0);
  int threads = config_.threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  threads = std::min<int>(threads, workers);
  pool_ = std::make_unique<WorkerPool>(threads);
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

void Engine::set_initial(
    const std::vector<std::pair<PauliString, double>>& terms) {
  for (auto& shard : shards_) shard.store().clear();
  for (const auto& [index, coeff] : terms) {
    shards_[owner(config_.partition, index, config_.n)].upsert(index, coeff);
  }
  last_global_max_ = global_max_abs(shards_);
  counters_ = Counters{};
  gates_applied_ = 0;
}

void Engine::generate_phase(const Gate& gate) {
  uint32_t workers = config_.partition.worker_count;
  GatePrep prep(gate, config_.partition, config_.n);
  bool perturbed = config_.partition.perturbation_s > 1;
  uint32_t k = config_.partition.block_size_bits;
  int64_t nworkers = static_cast<int64_t>(workers);

  pool_->parallel_for(workers, [&](size_t m) {
    auto* out = &outbox_[m * workers];
    auto keys = shards_[m].store().keys();
    auto values = shards_[m].store().values();
    for (size_t i = 0; i < keys.size(); ++i) {
      const PauliString& key = keys[i];
      int phase = phase_on_support(key, prep);
      if ((phase & 1) == 0) continue;
      double pre = values[i];
      values[i] = pre * prep.cos_theta;
      double delta =
          record_sign(((phase % 4) + 4) % 4) * prep.sin_theta * pre;
      if (delta == 0.0) continue;
      PauliString flipped = key ^ prep.generator;
      uint32_t dest;
      if (!perturbed) {
        // All of this worker's indices share the same block-sum residue, so
        // the flipped owner is the worker id plus the block delta of J.
        int64_t shift = 0;
        for (auto [block, jblk] : prep.blocks) {
          uint64_t src = index_block(key, block, k);
          shift += static_cast<int64_t>(jblk) -
                   2 * static_cast<int64_t>(src & jblk);
        }
        int64_t o = (static_cast<int64_t>(m) + shift) % nworkers;
        if (o < 0) o += nworkers;
        dest = static_cast<uint32_t>(o);
      } else {
        dest = owner(config_.partition, flipped, config_.n);
      }
      out[dest].push_back({flipped, delta});
    }
  });
}

void Engine::apply_phase() {
  uint32_t workers = config_.partition.worker_count;
  pool_->parallel_for(workers, [&](size_t r) {
    auto& shard = shards_[r];
    // Ascending sender order is the canonical merge order; record order
    // within a batch is generation order.
    for (uint32_t m = 0; m < workers; ++m) {
      auto& batch = outbox_[static_cast<size_t>(m) * workers + r];
      for (const UpdateRecord& record : batch) {
        assert(owner(config_.partition, record.index, config_.n) == r);
        shard.store().add(record.index, record.delta);
      }
      batch.clear();
    }
  });
}

void Engine::check_budget() {
  if (config_.max_terms == 0) return;
  if (term_count() > config_.max_terms) {
    throw ResourceLimitError(
        "term budget exhausted: |O|=" + std::to_string(term_count()) +
        " exceeds max_terms=" + std::to_string(config_.max_terms) +
        " at layer " + std::to_string(layer_context_) + ", gate " +
        std::to_string(gates_applied_));
  }
}

void Engine::apply_gate(const Gate& gate) {
  uint32_t workers = config_.partition.worker_count;
  auto start = Clock::now();
  generate_phase(gate);
  counters_.timers.generate_ns += elapsed_ns(start);

  // Exchange barrier: in-process delivery is bookkeeping over the shared
  // outbox matrix; the per-destination traffic is counted here.
  start = Clock::now();
  uint64_t batches = 0, records = 0;
  if (config_.collect_gate_stats) {
    gate_stats_.nonempty_destinations.assign(workers, {});
  }
  for (uint32_t m = 0; m < workers; ++m) {
    for (uint32_t r = 0; r < workers; ++r) {
      size_t count = outbox_[static_cast<size_t>(m) * workers + r].size();
      if (count == 0) continue;
      ++batches;
      records += count;
      if (config_.collect_gate_stats) {
        gate_stats_.nonempty_destinations[m].push_back(r);
      }
    }
  }
  counters_.batches_sent += batches;
  counters_.records_sent += records;
  counters_.timers.exchange_ns += elapsed_ns(start);

  start = Clock::now();
  apply_phase();
  counters_.timers.apply_ns += elapsed_ns(start);

  ++gates_applied_;
  ++counters_.gates;
  check_budget();

  if (config_.policy.cadence == TruncationCadence::PerGate) {
    truncate_now();
  }
}

void Engine::truncate_now() {
  uint32_t workers = config_.partition.worker_count;
  auto start = Clock::now();
  pool_->parallel_for(workers, [&](size_t m) {
    double mx = 0.0;
    bool any_nan = false;
    for (double v : shards_[m].store().values()) {
      any_nan |= (v != v);
      double av = std::fabs(v);
      if (av > mx) mx = av;  // NaN falls through; caught by any_nan
    }
    local_max_[m] = mx;
    nonfinite_flags_[m] = any_nan || std::isinf(mx);
  });
  for (uint32_t m = 0; m < workers; ++m) {
    if (nonfinite_flags_[m]) {
      throw NumericalError(
          "non-finite coefficient on worker " + std::to_string(m) +
          " at layer " + std::to_string(layer_context_) + ", gate " +
          std::to_string(gates_applied_) +
          ", |O|=" + std::to_string(term_count()));
    }
  }
  double global = 0.0;
  for (double v : local_max_) global = std::max(global, v);
  last_global_max_ = global;

  double threshold = config_.policy.epsilon0 * global;
  pool_->parallel_for(workers, [&](size_t m) {
    removed_counts_[m] = shards_[m].store().remove_below(threshold);
  });
  for (uint64_t r : removed_counts_) counters_.removed += r;
  counters_.timers.truncate_ns += elapsed_ns(start);
}

uint64_t Engine::term_count() const {
  uint64_t total = 0;
  for (const auto& shard : shards_) total += shard.term_count();
  return total;
}

double Engine::expectation_zero_state() const {
  return pauliprop::expectation_zero_state(shards_);
}

double Engine::coefficient(const PauliString& index) const {
  return shards_[owner(config_.partition, index, config_.n)].coefficient(
      index);
}

std::vector<size_t> Engine::shard_sizes() const {
  std::vector<size_t> sizes;
  sizes.reserve(shards_.size());
  for (const auto& shard : shards_) sizes.push_back(shard.term_count());
  return sizes;
}

SparseOperator Engine::merged() const {
  SparseOperator merged(config_.n);
  merged.store().reserve(term_count());
  for (const auto& shard : shards_) {
    auto keys = shard.store().keys();
    auto values = shard.store().values();
    for (size_t i = 0; i < keys.size(); ++i) {
      merged.upsert(keys[i], values[i]);
    }
  }
  return merged;
}

Engine::Counters Engine::take_counters() {
  Counters out = counters_;
  counters_ = Counters{};
  return out;
}

RunLedger run_circuit(Engine& engine, const Circuit& circuit,
                      const RunOptions& options) {
  if (circuit.n != engine.num_qubits()) {
    throw std::invalid_argument("circuit width " + std::to_string(circuit.n) +
                                " does not match engine width " +
                                std::to_string(engine.num_qubits()));
  }
  if (circuit.layers.empty()) {
    throw std::invalid_argument("circuit has no layers");
  }

  auto read_observable = [&]() {
    return options.readout == ReadoutMode::ZeroState
               ? engine.expectation_zero_state()
               : engine.coefficient(options.tracked_index);
  };

  RunLedger ledger;
  int total_layers = static_cast<int>(circuit.layers.size());
  engine.take_counters();
  for (int t = 1; t <= total_layers; ++t) {
    engine.set_layer_context(t);
    const auto& layer = circuit.layers[total_layers - t];
    size_t gate_index = 0;
    for (auto gate = layer.rbegin(); gate != layer.rend(); ++gate) {
      engine.apply_gate(*gate);
      if (options.on_gate_readout) {
        options.on_gate_readout(t, gate_index, read_observable());
      }
      ++gate_index;
    }
    if (engine.config().policy.cadence == TruncationCadence::PerLayer) {
      engine.truncate_now();
    }

    Engine::Counters counters = engine.take_counters();
    LayerRecord row;
    row.t = t;
    row.observable = read_observable();
    row.term_count = engine.term_count();
    row.global_max = engine.global_max();
    row.removed = counters.removed;
    row.wall_ms_per_gate =
        counters.gates == 0
            ? 0.0
            : 1e-6 * double(counters.timers.total_ns()) / counters.gates;
    row.batches_sent = counters.batches_sent;
    row.records_sent = counters.records_sent;
    ledger.rows.push_back(row);
    if (options.on_layer) options.on_layer(row, engine);
  }
  return ledger;
}

}  // namespace pauliprop
