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

#include "pauliprop/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace pauliprop {

namespace {
constexpr double kPi = 3.14159265358979323846;

// cos(r*pi) with exact values at integer and half-integer r.
double cos_pi(double r) {
  double folded = std::fmod(r, 2.0);
  if (folded < 0) folded += 2.0;
  double twice = 2.0 * folded;
  if (twice == std::floor(twice)) {
    static constexpr double table[4] = {1.0, 0.0, -1.0, 0.0};
    return table[static_cast<int>(twice) & 3];
  }
  return std::cos(r * kPi);
}

double sin_pi(double r) { return cos_pi(r - 0.5); }
}  // namespace

Angle Angle::from_radians(double r) {
  Angle a;
  a.radians = r;
  return a;
}

Angle Angle::from_pi_units(double r) {
  Angle a;
  a.radians = r * kPi;
  a.in_pi_units = true;
  a.pi_units = r;
  return a;
}

double Angle::cosine() const {
  return in_pi_units ? cos_pi(pi_units) : std::cos(radians);
}

double Angle::sine() const {
  return in_pi_units ? sin_pi(pi_units) : std::sin(radians);
}

Angle parse_angle(const std::string& text) {
  std::string t = text;
  bool pi = false;
  if (t.size() >= 2 && (t.ends_with("pi") || t.ends_with("PI"))) {
    pi = true;
    t = t.substr(0, t.size() - 2);
    if (t.empty() || t == "-" || t == "+") t += "1";
  }
  size_t pos = 0;
  double value;
  try {
    value = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid angle \"" + text + "\"");
  }
  if (pos != t.size()) {
    throw std::invalid_argument("invalid angle \"" + text + "\"");
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("angle must be finite: \"" + text + "\"");
  }
  return pi ? Angle::from_pi_units(value) : Angle::from_radians(value);
}

Gate::Gate(const PauliString& g, Angle angle)
    : generator(g),
      theta(angle.radians),
      cos_theta(angle.cosine()),
      sin_theta(angle.sine()) {}

size_t Circuit::total_gates() const {
  size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  return total;
}

Circuit parse_circuit(std::istream& in, int n) {
  Circuit circuit;
  circuit.n = n;
  std::vector<Gate> layer;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t last = line.find_last_not_of(" \t\r");
    if (last == std::string::npos) {
      if (!layer.empty()) {
        circuit.layers.push_back(std::move(layer));
        layer.clear();
      }
      continue;
    }
    line = line.substr(0, last + 1);
    size_t split = line.find_last_of(" \t");
    if (split == std::string::npos) {
      throw std::invalid_argument("circuit line " + std::to_string(lineno) +
                                  ": expected \"pauli-label angle\"");
    }
    std::string label = line.substr(0, split);
    std::string angle_text = line.substr(split + 1);
    try {
      layer.emplace_back(parse_pauli_label(label, n),
                         parse_angle(angle_text));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("circuit line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  if (!layer.empty()) circuit.layers.push_back(std::move(layer));
  return circuit;
}

Circuit parse_circuit_text(const std::string& text, int n) {
  std::istringstream in(text);
  return parse_circuit(in, n);
}

std::string format_circuit(const Circuit& circuit) {
  std::ostringstream out;
  char buf[32];
  for (size_t l = 0; l < circuit.layers.size(); ++l) {
    if (l > 0) out << '\n';
    for (const Gate& g : circuit.layers[l]) {
      std::snprintf(buf, sizeof(buf), "%.17g", g.theta);
      out << to_sparse_label(g.generator, circuit.n) << ' ' << buf << '\n';
    }
  }
  return out.str();
}

}  // namespace pauliprop
