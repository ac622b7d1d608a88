# Copyright 2026 The pauliprop Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Heisenberg-picture propagation of sparse Pauli-string operators."""

try:
    # Wheel layout: the extension lives inside the package.
    from . import _pauliprop as _impl
except ImportError:
    # Development layout: the extension sits on PYTHONPATH (CMake build dir).
    import _pauliprop as _impl

Circuit = _impl.Circuit
Gate = _impl.Gate
Geometry = _impl.Geometry
NumericalError = _impl.NumericalError
PartitionSpec = _impl.PartitionSpec
PauliString = _impl.PauliString
ResourceLimitError = _impl.ResourceLimitError
bfs_ball = _impl.bfs_ball
build_kicked_ising = _impl.build_kicked_ising
commutes = _impl.commutes
destination_set = _impl.destination_set
heavy_hex_127 = _impl.heavy_hex_127
load_geometry = _impl.load_geometry
load_geometry_file = _impl.load_geometry_file
owner = _impl.owner
parse_circuit = _impl.parse_circuit
parse_pauli_label = _impl.parse_pauli_label
pauli_weight = _impl.pauli_weight
phase_exponent = _impl.phase_exponent
simulate = _impl.simulate
state_vector_expectation = _impl.state_vector_expectation
string_product = _impl.string_product
uniformity_ratio = _impl.uniformity_ratio

__all__ = [
    "Circuit",
    "Gate",
    "Geometry",
    "NumericalError",
    "PartitionSpec",
    "PauliString",
    "ResourceLimitError",
    "bfs_ball",
    "build_kicked_ising",
    "commutes",
    "destination_set",
    "heavy_hex_127",
    "load_geometry",
    "load_geometry_file",
    "owner",
    "parse_circuit",
    "parse_pauli_label",
    "pauli_weight",
    "phase_exponent",
    "simulate",
    "state_vector_expectation",
    "string_product",
    "uniformity_ratio",
]
