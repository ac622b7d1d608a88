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

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "pauliprop/models.hpp"
#include "pauliprop/oracle.hpp"

using namespace pauliprop;

namespace {

PauliString random_string(std::mt19937_64& rng, int n) {
  PauliString s;
  for (int site = 0; site < n; ++site) {
    s.set_code(site, static_cast<uint8_t>(rng() & 3));
  }
  return s;
}

Circuit random_circuit(std::mt19937_64& rng, int n, int layers,
                       int gates_per_layer) {
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  Circuit circuit;
  circuit.n = n;
  circuit.layers.resize(layers);
  for (auto& layer : circuit.layers) {
    for (int g = 0; g < gates_per_layer; ++g) {
      PauliString generator = random_string(rng, n);
      layer.emplace_back(generator, Angle::from_radians(angle(rng)));
    }
  }
  return circuit;
}

EngineConfig config_for(int n, uint32_t workers, double epsilon0 = 0.0,
                        int threads = 0) {
  EngineConfig config;
  config.n = n;
  config.partition = PartitionSpec::make(
      workers, PartitionSpec::default_block_size(workers));
  config.policy = TruncationPolicy{epsilon0, TruncationCadence::PerGate};
  config.threads = threads;
  return config;
}

std::map<std::string, double> merged_terms(const Engine& engine) {
  SparseOperator merged = engine.merged();
  std::map<std::string, double> out;
  auto keys = merged.store().keys();
  auto values = merged.store().values();
  for (size_t i = 0; i < keys.size(); ++i) {
    out[to_hex(keys[i], engine.num_qubits())] = values[i];
  }
  return out;
}

}  // namespace

TEST_CASE("single-qubit rotation branches with the oracle signs") {
  SparseOperator shard(1);
  shard.upsert(single_site(0, Pauli::X), 1.0);
  double theta = 0.81;
  Gate gate(single_site(0, Pauli::Z), Angle::from_radians(theta));
  auto spec = PartitionSpec::make(1, 1);
  auto batches = apply_gate_local(shard, gate, spec);

  CHECK(shard.coefficient(single_site(0, Pauli::X)) ==
        doctest::Approx(std::cos(theta)));
  REQUIRE(batches.size() == 1);
  REQUIRE(batches[0].records.size() == 1);
  CHECK(batches[0].records[0].index == single_site(0, Pauli::Y));
  CHECK(batches[0].records[0].delta == doctest::Approx(-std::sin(theta)));
}

TEST_CASE("commuting generator leaves the shard untouched") {
  SparseOperator shard(3);
  shard.upsert(parse_pauli_label("Z2 Z0", 3), 0.5);
  shard.upsert(parse_pauli_label("Z1", 3), -0.25);
  Gate gate(parse_pauli_label("Z2", 3), Angle::from_radians(1.1));
  auto batches = apply_gate_local(shard, gate, PartitionSpec::make(4, 2));
  CHECK(batches.empty());
  CHECK(shard.coefficient(parse_pauli_label("Z2 Z0", 3)) == 0.5);
}

TEST_CASE("clifford rotation maps one string to one string") {
  SparseOperator shard(1);
  shard.upsert(single_site(0, Pauli::X), 1.0);
  Gate gate(single_site(0, Pauli::Z), Angle::from_pi_units(0.5));
  auto batches = apply_gate_local(shard, gate, PartitionSpec::make(1, 1));
  CHECK(shard.coefficient(single_site(0, Pauli::X)) == 0.0);
  REQUIRE(batches.size() == 1);
  CHECK(batches[0].records[0].delta == -1.0);
}

TEST_CASE("theta=0 emits no records") {
  SparseOperator shard(1);
  shard.upsert(single_site(0, Pauli::Z), 1.0);
  Gate gate(single_site(0, Pauli::X), Angle::from_radians(0.0));
  auto batches = apply_gate_local(shard, gate, PartitionSpec::make(1, 1));
  CHECK(batches.empty());
  CHECK(shard.coefficient(single_site(0, Pauli::Z)) == 1.0);
}

TEST_CASE("exchange routes batches and drops empties") {
  std::vector<std::vector<UpdateBatch>> outboxes(2);
  outboxes[0].push_back({1, {{single_site(0, Pauli::X), 0.5}}});
  outboxes[1].push_back({0, {{single_site(0, Pauli::Y), -0.5}}});
  outboxes[1].push_back({1, {}});
  auto inboxes = exchange(std::move(outboxes), 2);
  REQUIRE(inboxes.size() == 2);
  CHECK(inboxes[0].size() == 1);
  CHECK(inboxes[1].size() == 1);
  CHECK(inboxes[0][0].records[0].delta == -0.5);
}

TEST_CASE("apply_updates merges and validates ownership") {
  auto spec = PartitionSpec::make(2, 1);
  // Z0 on one qubit has index bits 11 -> block sum 2 -> worker 0.
  PauliString z = single_site(0, Pauli::Z);
  REQUIRE(owner(spec, z, 1) == 0);
  SparseOperator shard(1);
  std::vector<UpdateBatch> inbox;
  inbox.push_back({0, {{z, 0.25}, {z, 0.25}}});
  apply_updates(shard, inbox, spec, 0);
  CHECK(shard.coefficient(z) == 0.5);

  CHECK_THROWS_AS(apply_updates(shard, inbox, spec, 1), std::logic_error);
}

TEST_CASE("engine matches dense conjugation on random circuits") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 1 + int(rng() % 5);
    Circuit circuit = random_circuit(rng, n, 2, 5);
    PauliString initial = single_site(int(rng() % n), Pauli::Z);

    Engine engine(config_for(n, 1 + int(rng() % 4)));
    engine.set_initial({{initial, 1.0}});
    run_circuit(engine, circuit);

    oracle::Matrix dense = oracle::dense_operator({{initial, 1.0}}, n);
    dense = oracle::brute_conjugate_circuit(dense, circuit);

    SparseOperator merged = engine.merged();
    auto keys = merged.store().keys();
    auto values = merged.store().values();
    double norm2 = 0.0;
    for (size_t i = 0; i < keys.size(); ++i) {
      auto expected = oracle::pauli_coefficient(dense, keys[i], n);
      REQUIRE(std::abs(expected - values[i]) < 1e-12);
      norm2 += values[i] * values[i];
    }
    double dense_norm2 =
        (dense.adjoint() * dense).trace().real() / double(1 << n);
    REQUIRE(std::fabs(dense_norm2 - norm2) < 1e-12);
  }
}

TEST_CASE("engine matches the state vector through full circuits") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + int(rng() % 7);
    Circuit circuit = random_circuit(rng, n, 3, 6);
    PauliString initial = single_site(int(rng() % n), Pauli::Z);

    Engine engine(config_for(n, 2));
    engine.set_initial({{initial, 1.0}});
    RunLedger ledger = run_circuit(engine, circuit);

    auto state = oracle::zero_state(n);
    oracle::evolve_state(state, circuit);
    double expected = oracle::expectation(state, initial);
    CHECK(ledger.rows.back().observable ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("kicked ising chain matches the state vector") {
  Geometry chain = load_geometry_text("0 1\n1 2\n2 3\n3 4\n");
  Circuit circuit = build_kicked_ising(chain, Angle::from_radians(0.3),
                                       Angle::from_pi_units(-0.5), 2);
  Engine engine(config_for(5, 2));
  engine.set_initial({{parse_pauli_label("Z2", 5), 1.0}});
  RunLedger ledger = run_circuit(engine, circuit);

  auto state = oracle::zero_state(5);
  oracle::evolve_state(state, circuit);
  double expected = oracle::expectation(state, parse_pauli_label("Z2", 5));
  CHECK(ledger.rows.back().observable ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("worker-count independence") {
  std::mt19937_64 rng(29);
  Circuit circuit = random_circuit(rng, 6, 3, 8);
  PauliString initial = single_site(3, Pauli::Z);

  std::map<std::string, double> reference;
  for (uint32_t workers : {1u, 2u, 8u}) {
    Engine engine(config_for(6, workers));
    engine.set_initial({{initial, 1.0}});
    run_circuit(engine, circuit);
    auto terms = merged_terms(engine);
    if (reference.empty()) {
      reference = terms;
      continue;
    }
    REQUIRE(terms.size() == reference.size());
    for (const auto& [key, value] : reference) {
      REQUIRE(terms.count(key) == 1);
      REQUIRE(std::fabs(terms[key] - value) < 1e-12);
    }
  }
}

TEST_CASE("thread count does not change results") {
  std::mt19937_64 rng(41);
  Circuit circuit = random_circuit(rng, 5, 2, 6);
  PauliString initial = single_site(2, Pauli::Z);

  Engine single(config_for(5, 4, 1e-6, /*threads=*/1));
  single.set_initial({{initial, 1.0}});
  RunLedger ledger_single = run_circuit(single, circuit);

  Engine pooled(config_for(5, 4, 1e-6, /*threads=*/4));
  pooled.set_initial({{initial, 1.0}});
  RunLedger ledger_pooled = run_circuit(pooled, circuit);

  REQUIRE(ledger_single.rows.size() == ledger_pooled.rows.size());
  for (size_t i = 0; i < ledger_single.rows.size(); ++i) {
    // Bitwise equality: the merge order is canonical, not timing-dependent.
    CHECK(ledger_single.rows[i].observable ==
          ledger_pooled.rows[i].observable);
    CHECK(ledger_single.rows[i].term_count ==
          ledger_pooled.rows[i].term_count);
    CHECK(ledger_single.rows[i].records_sent ==
          ledger_pooled.rows[i].records_sent);
  }
  CHECK(merged_terms(single) == merged_terms(pooled));
}

TEST_CASE("norm conservation and inverse circuit at epsilon0=0") {
  std::mt19937_64 rng(53);
  Circuit circuit = random_circuit(rng, 6, 4, 5);
  PauliString initial = single_site(1, Pauli::Z);

  Engine engine(config_for(6, 2));
  engine.set_initial({{initial, 1.0}});

  RunOptions options;
  options.on_layer = [](const LayerRecord& row, const Engine& eng) {
    SparseOperator merged = eng.merged();
    double norm2 = 0.0;
    for (double v : merged.store().values()) norm2 += v * v;
    REQUIRE(norm2 == doctest::Approx(1.0).epsilon(1e-10));
    (void)row;
  };
  run_circuit(engine, circuit, options);

  // Undo with the inverse circuit: same gates, reversed order, negated
  // angles. Processing order inside the engine is already reversed, so the
  // inverse circuit is the original with angles negated and layers/gates
  // reversed.
  Circuit inverse;
  inverse.n = circuit.n;
  for (auto layer = circuit.layers.rbegin(); layer != circuit.layers.rend();
       ++layer) {
    std::vector<Gate> inverted;
    for (auto gate = layer->rbegin(); gate != layer->rend(); ++gate) {
      inverted.emplace_back(gate->generator,
                            Angle::from_radians(-gate->theta));
    }
    inverse.layers.push_back(std::move(inverted));
  }
  run_circuit(engine, inverse);

  SparseOperator merged = engine.merged();
  CHECK(merged.coefficient(initial) == doctest::Approx(1.0).epsilon(1e-12));
  double off = 0.0;
  auto keys = merged.store().keys();
  auto values = merged.store().values();
  for (size_t i = 0; i < keys.size(); ++i) {
    if (!(keys[i] == initial)) off = std::max(off, std::fabs(values[i]));
  }
  CHECK(off < 1e-12);
}

TEST_CASE("record conservation and destination sparsity per gate") {
  std::mt19937_64 rng(61);
  const int n = 6;
  Circuit circuit = random_circuit(rng, n, 2, 10);
  EngineConfig config = config_for(n, 8);
  config.collect_gate_stats = true;
  Engine engine(config);
  engine.set_initial({{single_site(0, Pauli::Z), 1.0}});

  int total_layers = int(circuit.layers.size());
  for (int t = 1; t <= total_layers; ++t) {
    const auto& layer = circuit.layers[total_layers - t];
    for (auto gate = layer.rbegin(); gate != layer.rend(); ++gate) {
      engine.apply_gate(*gate);
      const GateStats& stats = engine.last_gate_stats();
      for (uint32_t m = 0; m < 8; ++m) {
        auto allowed = destination_set(config.partition, m, gate->generator, n);
        for (uint32_t dest : stats.nonempty_destinations[m]) {
          REQUIRE(std::binary_search(allowed.begin(), allowed.end(), dest));
        }
      }
    }
  }
}

TEST_CASE("nan detection aborts with diagnostics") {
  Engine engine(config_for(2, 1));
  engine.set_initial({{single_site(0, Pauli::Z),
                       std::numeric_limits<double>::infinity()}});
  Gate gate(single_site(0, Pauli::X), Angle::from_radians(0.3));
  CHECK_THROWS_AS(engine.apply_gate(gate), NumericalError);
}

TEST_CASE("term budget aborts with a resource error") {
  EngineConfig config = config_for(6, 1);
  config.max_terms = 3;
  Engine engine(config);
  engine.set_initial({{parse_pauli_label("Z0", 6), 1.0}});
  Circuit circuit;
  circuit.n = 6;
  std::vector<Gate> layer;
  for (int q = 0; q < 6; ++q) {
    layer.emplace_back(single_site(q, Pauli::X), Angle::from_radians(0.4));
    layer.emplace_back(
        single_site(q, Pauli::Z) ^ single_site((q + 1) % 6, Pauli::Z),
        Angle::from_radians(0.7));
  }
  circuit.layers.assign(3, layer);
  CHECK_THROWS_AS(run_circuit(engine, circuit), ResourceLimitError);
}

TEST_CASE("early kicked-ising layers stay peaked") {
  // One layer at theta_x = 0.1 pi: the exact operator is still a handful of
  // discrete coefficient peaks.
  Geometry geom = heavy_hex_127();
  Circuit circuit = build_kicked_ising(geom, Angle::from_pi_units(0.1),
                                       Angle::from_pi_units(-0.5), 1);
  Engine engine(config_for(127, 2));
  engine.set_initial({{parse_pauli_label("Z62", 127), 1.0}});
  run_circuit(engine, circuit);
  CHECK(engine.term_count() <= 16);

  auto hist = density_histogram(engine.shards(), engine.global_max(), 32,
                                0.0);
  int occupied = 0;
  for (size_t b = 0; b < hist.positive.size(); ++b) {
    occupied += (hist.positive[b] > 0) + (hist.negative[b] > 0);
  }
  CHECK(occupied <= 4);
  // The exact one-layer operator: cos(0.1pi) Z62 + sin(0.1pi) Y62.
  CHECK(engine.coefficient(parse_pauli_label("Z62", 127)) ==
        doctest::Approx(std::cos(0.1 * 3.14159265358979323846)));
}

TEST_CASE("ledger csv shape") {
  RunLedger ledger;
  ledger.rows.push_back({1, -0.5, 10, 1.0, 2, 0.25, 3, 40});
  std::string csv = ledger.to_csv();
  CHECK(csv.find("t,observable,term_count,global_max,removed,"
                 "wall_ms_per_gate,batches_sent,records_sent") == 0);
  CHECK(csv.find("1,-0.5,10,1,2,0.25,3,40") != std::string::npos);
}

TEST_CASE("engine free functions and engine pipeline agree") {
  // The engine's fused owner computation must match the plain
  // apply_gate_local path term for term.
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + int(rng() % 6);
    uint32_t workers = 1 + uint32_t(rng() % 9);
    auto spec =
        PartitionSpec::make(workers, PartitionSpec::default_block_size(workers));
    PauliString generator = random_string(rng, n);
    Gate gate(generator, Angle::from_radians(
                             std::uniform_real_distribution<double>(-3, 3)(rng)));

    std::vector<std::pair<PauliString, double>> terms;
    for (int t = 0; t < 12; ++t) {
      terms.emplace_back(random_string(rng, n),
                         std::uniform_real_distribution<double>(-1, 1)(rng));
    }

    EngineConfig config;
    config.n = n;
    config.partition = spec;
    config.policy = TruncationPolicy{0.0, TruncationCadence::PerLayer};
    Engine engine(config);
    engine.set_initial(terms);
    engine.apply_gate(gate);

    // Reference: per-worker shards built by hand through the free functions.
    std::vector<SparseOperator> shards(workers, SparseOperator(n));
    for (const auto& [index, coeff] : terms) {
      shards[owner(spec, index, n)].upsert(index, coeff);
    }
    std::vector<std::vector<UpdateBatch>> outboxes;
    for (auto& shard : shards) {
      outboxes.push_back(apply_gate_local(shard, gate, spec));
    }
    auto inboxes = exchange(std::move(outboxes), workers);
    for (uint32_t r = 0; r < workers; ++r) {
      apply_updates(shards[r], inboxes[r], spec, r);
    }

    SparseOperator reference(n);
    for (auto& shard : shards) {
      auto keys = shard.store().keys();
      auto values = shard.store().values();
      for (size_t i = 0; i < keys.size(); ++i) {
        reference.upsert(keys[i], values[i]);
      }
    }
    SparseOperator merged = engine.merged();
    REQUIRE(merged.term_count() == reference.term_count());
    auto keys = reference.store().keys();
    auto values = reference.store().values();
    for (size_t i = 0; i < keys.size(); ++i) {
      REQUIRE(merged.coefficient(keys[i]) ==
              doctest::Approx(values[i]).epsilon(1e-14));
    }
  }
}
