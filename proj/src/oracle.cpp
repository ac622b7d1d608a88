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

#include "pauliprop/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace pauliprop::oracle {

namespace {

constexpr Complex kI{0.0, 1.0};

struct StringAction {
  uint64_t flip_mask = 0;  // sites with X or Y flip the basis bit
  uint64_t yz_mask = 0;    // sites with Y or Z contribute (-1)^bit
  int y_count = 0;         // each Y contributes a factor i
};

StringAction action_of(const PauliString& I, int n) {
  StringAction a;
  for (int site = 0; site < n; ++site) {
    switch (I.code_at(site)) {
      case 0:
        break;
      case 1:  // X: |b> -> |b^1>
        a.flip_mask |= uint64_t{1} << site;
        break;
      case 2:  // Y: |b> -> i(-1)^b |b^1>
        a.flip_mask |= uint64_t{1} << site;
        a.yz_mask |= uint64_t{1} << site;
        ++a.y_count;
        break;
      case 3:  // Z: |b> -> (-1)^b |b>
        a.yz_mask |= uint64_t{1} << site;
        break;
    }
  }
  return a;
}

Complex basis_phase(const StringAction& a, uint64_t basis) {
  static constexpr Complex powers_of_i[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex phase = powers_of_i[a.y_count & 3];
  if (__builtin_popcountll(basis & a.yz_mask) & 1) phase = -phase;
  return phase;
}

void check_width(int n, int limit, const char* what) {
  if (n < 1 || n > limit) {
    throw std::invalid_argument(std::string(what) + " supports 1 <= n <= " +
                                std::to_string(limit) + ", got " +
                                std::to_string(n));
  }
}

}  // namespace

DenseState zero_state(int n) {
  check_width(n, 26, "zero_state");
  DenseState state;
  state.n = n;
  state.amplitudes.assign(uint64_t{1} << n, Complex{0, 0});
  state.amplitudes[0] = Complex{1, 0};
  return state;
}

void apply_rotation(DenseState& state, const Gate& gate) {
  StringAction a = action_of(gate.generator, state.n);
  double half = 0.5 * gate.theta;
  Complex c{std::cos(half), 0.0};
  Complex mis{0.0, -std::sin(half)};  // -i sin(theta/2)
  uint64_t size = state.amplitudes.size();
  auto& amp = state.amplitudes;
  if (a.flip_mask == 0) {
    for (uint64_t b = 0; b < size; ++b) {
      amp[b] *= c + mis * basis_phase(a, b);
    }
    return;
  }
  for (uint64_t b = 0; b < size; ++b) {
    uint64_t partner = b ^ a.flip_mask;
    if (partner < b) continue;
    // (sigma_J psi)_b = lambda(b ^ flip) psi_{b ^ flip}
    Complex vb = amp[b], vp = amp[partner];
    amp[b] = c * vb + mis * basis_phase(a, partner) * vp;
    amp[partner] = c * vp + mis * basis_phase(a, b) * vb;
  }
}

void evolve_state(DenseState& state, const Circuit& circuit) {
  if (circuit.n != state.n) {
    throw std::invalid_argument("circuit width does not match state width");
  }
  for (const auto& layer : circuit.layers) {
    for (const Gate& gate : layer) apply_rotation(state, gate);
  }
}

double expectation(const DenseState& state, const PauliString& I) {
  StringAction a = action_of(I, state.n);
  Complex sum{0, 0};
  const auto& amp = state.amplitudes;
  for (uint64_t b = 0; b < amp.size(); ++b) {
    sum += std::conj(amp[b ^ a.flip_mask]) * basis_phase(a, b) * amp[b];
  }
  return sum.real();
}

double norm(const DenseState& state) {
  double sum = 0.0;
  for (const Complex& a : state.amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

Matrix dense_pauli(const PauliString& I, int n) {
  check_width(n, 12, "dense_pauli");
  uint64_t dim = uint64_t{1} << n;
  StringAction a = action_of(I, n);
  Matrix m = Matrix::Zero(dim, dim);
  for (uint64_t col = 0; col < dim; ++col) {
    m(col ^ a.flip_mask, col) = basis_phase(a, col);
  }
  return m;
}

Matrix gate_matrix(const Gate& gate, int n) {
  check_width(n, 8, "gate_matrix");
  uint64_t dim = uint64_t{1} << n;
  double half = 0.5 * gate.theta;
  return std::cos(half) * Matrix::Identity(dim, dim) -
         kI * std::sin(half) * dense_pauli(gate.generator, n);
}

Matrix brute_conjugate(const Matrix& O, const Gate& gate, int n) {
  Matrix u = gate_matrix(gate, n);
  return u.adjoint() * O * u;
}

Matrix brute_conjugate_circuit(const Matrix& O, const Circuit& circuit) {
  Matrix result = O;
  for (auto layer = circuit.layers.rbegin(); layer != circuit.layers.rend();
       ++layer) {
    for (auto gate = layer->rbegin(); gate != layer->rend(); ++gate) {
      result = brute_conjugate(result, *gate, circuit.n);
    }
  }
  return result;
}

Complex pauli_coefficient(const Matrix& O, const PauliString& I, int n) {
  check_width(n, 12, "pauli_coefficient");
  uint64_t dim = uint64_t{1} << n;
  StringAction a = action_of(I, n);
  Complex trace{0, 0};
  // Tr(sigma_I O) = sum_c lambda(c) O(c, c ^ flip)
  for (uint64_t c = 0; c < dim; ++c) {
    trace += basis_phase(a, c) * O(c, c ^ a.flip_mask);
  }
  return trace / double(dim);
}

Matrix dense_operator(
    const std::vector<std::pair<PauliString, double>>& terms, int n) {
  check_width(n, 12, "dense_operator");
  uint64_t dim = uint64_t{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [index, coeff] : terms) {
    StringAction a = action_of(index, n);
    for (uint64_t col = 0; col < dim; ++col) {
      m(col ^ a.flip_mask, col) += coeff * basis_phase(a, col);
    }
  }
  return m;
}

}  // namespace pauliprop::oracle
