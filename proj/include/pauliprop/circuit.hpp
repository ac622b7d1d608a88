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

#ifndef PAULIPROP_CIRCUIT_HPP
#define PAULIPROP_CIRCUIT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pauliprop/pauli_string.hpp"

namespace pauliprop {

/// A rotation angle, optionally declared as a multiple of pi. Declaring in
/// pi units makes the trig of half-integer multiples exact, so rotations at
/// +-pi/2 map one Pauli string to exactly one Pauli string instead of
/// leaving an O(1e-17) residue behind.
struct Angle {
  double radians = 0.0;
  bool in_pi_units = false;
  double pi_units = 0.0;

  static Angle from_radians(double r);
  static Angle from_pi_units(double r);

  double cosine() const;
  double sine() const;
};

/// Parses "0.25pi" / "-0.5pi" into pi units, anything else as radians.
Angle parse_angle(const std::string& text);

/// One Pauli-string rotation exp(-i theta/2 sigma_J).
struct Gate {
  PauliString generator;
  double theta = 0.0;
  double cos_theta = 1.0;
  double sin_theta = 0.0;

  Gate() = default;
  Gate(const PauliString& generator, Angle angle);
};

/// Gate layers in forward circuit order: layers[0] acts on the state first,
/// and gates within a layer are listed in application order.
struct Circuit {
  int n = 0;
  std::vector<std::vector<Gate>> layers;

  size_t total_gates() const;
};

/// Line-oriented circuit file: each line "pauli-label angle" (the final
/// token is the angle, everything before it the label, so sparse labels
/// with spaces work), blank line = layer boundary, '#' starts a comment.
Circuit parse_circuit(std::istream& in, int n);
Circuit parse_circuit_text(const std::string& text, int n);

std::string format_circuit(const Circuit& circuit);

}  // namespace pauliprop

#endif  // PAULIPROP_CIRCUIT_HPP
