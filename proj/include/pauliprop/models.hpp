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

#ifndef PAULIPROP_MODELS_HPP
#define PAULIPROP_MODELS_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pauliprop/circuit.hpp"

namespace pauliprop {

/// Qubit coupling graph, optionally with an edge coloring that splits the
/// edges into rounds of disjoint pairs.
struct Geometry {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_colors;  // per edge; empty when the file has none
  int color_count = 0;

  bool has_coloring() const { return !edge_colors.empty(); }
};

/// Parses an edge-list file: one edge per line, "i j [color]", '#' starts a
/// comment. The qubit count is inferred as max index + 1. Rejects self
/// loops, duplicate edges, mixed colored/uncolored lines, and colors whose
/// edges share a qubit.
Geometry load_geometry(std::istream& in);
Geometry load_geometry_text(const std::string& text);
Geometry load_geometry_file(const std::string& path);

/// The bundled 127-qubit heavy-hexagon map (144 edges, 3 colors), matching
/// the IBM Eagle processor coupling graph.
Geometry heavy_hex_127();

/// Set of qubits within graph distance `radius` of `start`.
std::vector<int> bfs_ball(const Geometry& geom, int start, int radius);

/// One kicked-Ising layer in forward circuit order: X rotations on every
/// qubit (ascending site), then ZZ rotations grouped by color in color
/// order, file order within a color.
std::vector<Gate> kicked_ising_layer(const Geometry& geom, Angle theta_x,
                                     Angle theta_zz);

/// `layers` repetitions of kicked_ising_layer.
Circuit build_kicked_ising(const Geometry& geom, Angle theta_x,
                           Angle theta_zz, int layers);

extern const char* const kHeavyHex127Data;

}  // namespace pauliprop

#endif  // PAULIPROP_MODELS_HPP
