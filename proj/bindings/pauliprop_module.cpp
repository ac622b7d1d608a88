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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pauliprop/engine.hpp"
#include "pauliprop/models.hpp"
#include "pauliprop/oracle.hpp"
#include "pauliprop/partition.hpp"

namespace py = pybind11;
using namespace pauliprop;

namespace {

Angle angle_from_object(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_angle(obj.cast<std::string>());
  return Angle::from_radians(obj.cast<double>());
}

Circuit circuit_from_object(const py::object& obj, int n) {
  if (py::isinstance<Circuit>(obj)) return obj.cast<Circuit>();
  return parse_circuit_text(obj.cast<std::string>(), n);
}

py::dict row_to_dict(const LayerRecord& row) {
  py::dict d;
  d["t"] = row.t;
  d["observable"] = row.observable;
  d["term_count"] = row.term_count;
  d["global_max"] = row.global_max;
  d["removed"] = row.removed;
  d["wall_ms_per_gate"] = row.wall_ms_per_gate;
  d["batches_sent"] = row.batches_sent;
  d["records_sent"] = row.records_sent;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pauliprop, m) {
  m.doc() =
      "Heisenberg-picture propagation of operators as sparse sums of "
      "bit-encoded Pauli strings, partitioned across logical workers.";

  py::class_<PauliString>(m, "PauliString")
      .def(py::init([](const std::string& label, int n) {
             return parse_pauli_label(label, n);
           }),
           py::arg("label"), py::arg("n"))
      .def("__eq__", [](const PauliString& a,
                        const PauliString& b) { return a == b; })
      .def("__hash__", [](const PauliString& s) { return hash_string(s); })
      .def("dense_label", &to_dense_label, py::arg("n"))
      .def("sparse_label", &to_sparse_label, py::arg("n"))
      .def("hex", &to_hex, py::arg("n"))
      .def("weight", [](const PauliString& s) { return pauli_weight(s); })
      .def("code_at", &PauliString::code_at, py::arg("site"))
      .def("__xor__", [](const PauliString& a,
                         const PauliString& b) { return a ^ b; })
      .def("__repr__", [](const PauliString& s) {
        return "PauliString(" + to_sparse_label(s, kMaxQubits) + ")";
      });

  m.def("parse_pauli_label", &parse_pauli_label, py::arg("text"),
        py::arg("n"));
  m.def(
      "phase_exponent",
      [](const PauliString& a, const PauliString& b, int n) {
        return phase_exponent(a, b, n);
      },
      "Exponent of i in the product of two Pauli strings, mod 4.");
  m.def("commutes", [](const PauliString& a, const PauliString& b, int n) {
    return commutes(a, b, n);
  });
  m.def("string_product",
        [](const PauliString& a, const PauliString& b, int n) {
          auto [index, phase] = string_product(a, b, n);
          return py::make_tuple(index, phase);
        });
  m.def("pauli_weight",
        [](const PauliString& s) { return pauli_weight(s); });

  py::class_<PartitionSpec>(m, "PartitionSpec")
      .def(py::init([](uint32_t workers, uint32_t block_size_bits,
                       uint32_t perturbation_s) {
             return PartitionSpec::make(
                 workers,
                 block_size_bits == 0
                     ? PartitionSpec::default_block_size(workers)
                     : block_size_bits,
                 perturbation_s);
           }),
           py::arg("workers"), py::arg("block_size_bits") = 0,
           py::arg("perturbation_s") = 1)
      .def_readonly("workers", &PartitionSpec::worker_count)
      .def_readonly("block_size_bits", &PartitionSpec::block_size_bits)
      .def_readonly("perturbation_s", &PartitionSpec::perturbation_s);

  m.def("owner", &owner, py::arg("spec"), py::arg("index"), py::arg("n"));
  m.def("destination_set", &destination_set, py::arg("spec"), py::arg("m"),
        py::arg("generator"), py::arg("n"));
  m.def("uniformity_ratio",
        [](const std::vector<size_t>& sizes) {
          return uniformity_ratio(sizes);
        });

  py::class_<Geometry>(m, "Geometry")
      .def_readonly("n", &Geometry::n)
      .def_readonly("edges", &Geometry::edges)
      .def_readonly("edge_colors", &Geometry::edge_colors)
      .def_readonly("color_count", &Geometry::color_count);
  m.def("load_geometry", &load_geometry_text, py::arg("text"));
  m.def("load_geometry_file", &load_geometry_file, py::arg("path"));
  m.def("heavy_hex_127", &heavy_hex_127,
        "Bundled 127-qubit heavy-hexagon coupling map, 3-colored.");
  m.def("bfs_ball", &bfs_ball, py::arg("geometry"), py::arg("start"),
        py::arg("radius"));

  py::class_<Gate>(m, "Gate")
      .def(py::init([](const PauliString& generator, const py::object& angle) {
             return Gate(generator, angle_from_object(angle));
           }),
           py::arg("generator"), py::arg("angle"))
      .def_readonly("generator", &Gate::generator)
      .def_readonly("theta", &Gate::theta);

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("n", &Circuit::n)
      .def("total_gates", &Circuit::total_gates)
      .def("num_layers",
           [](const Circuit& c) { return c.layers.size(); })
      .def("__str__", &format_circuit);
  m.def("parse_circuit", &parse_circuit_text, py::arg("text"), py::arg("n"));
  m.def(
      "build_kicked_ising",
      [](const Geometry& geom, const py::object& theta_x,
         const py::object& theta_zz, int layers) {
        return build_kicked_ising(geom, angle_from_object(theta_x),
                                  angle_from_object(theta_zz), layers);
      },
      py::arg("geometry"), py::arg("theta_x"), py::arg("theta_zz") = "-0.5pi",
      py::arg("layers") = 1);

  m.def(
      "simulate",
      [](const py::object& circuit_obj, int n, const std::string& observable,
         double epsilon0, uint32_t workers, uint32_t block_size_bits,
         uint32_t perturbation_s, const std::string& cadence, int threads,
         uint64_t max_terms) {
        Circuit circuit = circuit_from_object(circuit_obj, n);
        EngineConfig config;
        config.n = circuit.n;
        config.partition = PartitionSpec::make(
            workers,
            block_size_bits == 0 ? PartitionSpec::default_block_size(workers)
                                 : block_size_bits,
            perturbation_s);
        config.policy.epsilon0 = epsilon0;
        config.policy.cadence = cadence == "layer"
                                    ? TruncationCadence::PerLayer
                                    : TruncationCadence::PerGate;
        config.threads = threads;
        config.max_terms = max_terms;
        Engine engine(config);
        engine.set_initial(
            {{parse_pauli_label(observable, circuit.n), 1.0}});
        RunLedger ledger;
        {
          py::gil_scoped_release release;
          ledger = run_circuit(engine, circuit);
        }
        py::list rows;
        for (const auto& row : ledger.rows) rows.append(row_to_dict(row));
        return rows;
      },
      py::arg("circuit"), py::arg("n") = 0, py::arg("observable") = "Z0",
      py::arg("epsilon0") = 0.0, py::arg("workers") = 1,
      py::arg("block_size_bits") = 0, py::arg("perturbation_s") = 1,
      py::arg("cadence") = "gate", py::arg("threads") = 0,
      py::arg("max_terms") = 0,
      "Evolve the observable backward through the circuit; returns one "
      "ledger row per layer.");

  m.def(
      "state_vector_expectation",
      [](const py::object& circuit_obj, int n,
         const std::string& observable) {
        Circuit circuit = circuit_from_object(circuit_obj, n);
        auto state = oracle::zero_state(circuit.n);
        oracle::evolve_state(state, circuit);
        return oracle::expectation(
            state, parse_pauli_label(observable, circuit.n));
      },
      py::arg("circuit"), py::arg("n") = 0, py::arg("observable") = "Z0",
      "Dense reference: forward state-vector evolution from |0...0>.");

  py::register_exception<NumericalError>(m, "NumericalError");
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");
}
