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

#ifndef PAULIPROP_ORACLE_HPP
#define PAULIPROP_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "pauliprop/circuit.hpp"
#include "pauliprop/pauli_string.hpp"

// Dense cross-checks for small systems. Everything here is derived from the
// literal 2x2 Pauli matrices and shares no phase or update logic with the
// propagation engine, so agreement between the two is a genuine check of
// the bit-algebra sign conventions.

namespace pauliprop::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Full 2^n state vector. Basis index bit i is the state of qubit i.
struct DenseState {
  int n = 0;
  std::vector<Complex> amplitudes;
};

/// |0...0> on n qubits. n <= 26 (memory guard).
DenseState zero_state(int n);

/// Applies exp(-i theta/2 sigma_J) by mixing amplitude pairs; never builds
/// the 2^n x 2^n matrix.
void apply_rotation(DenseState& state, const Gate& gate);

/// Applies the circuit gates in forward circuit order.
void evolve_state(DenseState& state, const Circuit& circuit);

/// <psi| sigma_I |psi>, real for a normalized state (Hermitian observable).
double expectation(const DenseState& state, const PauliString& I);

double norm(const DenseState& state);

/// Dense matrix of sigma_I. n <= 12 (resource guard).
Matrix dense_pauli(const PauliString& I, int n);

/// Dense matrix of exp(-i theta/2 sigma_J). n <= 8.
Matrix gate_matrix(const Gate& gate, int n);

/// U^dagger O U with U = exp(-i theta/2 sigma_J) formed densely. n <= 8.
Matrix brute_conjugate(const Matrix& O, const Gate& gate, int n);

/// Conjugates O through the whole circuit in reverse circuit order, i.e.
/// the evolution an end-of-circuit observable undergoes.
Matrix brute_conjugate_circuit(const Matrix& O, const Circuit& circuit);

/// Coefficient of sigma_I in O: Tr(sigma_I O) / 2^n, without materializing
/// the product.
Complex pauli_coefficient(const Matrix& O, const PauliString& I, int n);

/// Dense operator for a list of (string, coefficient) terms.
Matrix dense_operator(
    const std::vector<std::pair<PauliString, double>>& terms, int n);

}  // namespace pauliprop::oracle

#endif  // PAULIPROP_ORACLE_HPP
