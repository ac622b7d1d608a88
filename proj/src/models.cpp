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

#include "pauliprop/models.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pauliprop {

Geometry load_geometry(std::istream& in) {
  Geometry geom;
  std::set<std::pair<int, int>> seen;
  std::string line;
  int lineno = 0;
  bool any_color = false, any_plain = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    int i, j;
    if (!(ls >> i)) continue;  // blank line
    if (!(ls >> j)) {
      throw std::invalid_argument("geometry line " + std::to_string(lineno) +
                                  ": expected \"i j [color]\"");
    }
    int color = -1;
    if (ls >> color) {
      if (color < 0) {
        throw std::invalid_argument("geometry line " +
                                    std::to_string(lineno) +
                                    ": negative color");
      }
      any_color = true;
    } else {
      any_plain = true;
    }
    std::string trailing;
    if (ls.clear(), ls >> trailing) {
      throw std::invalid_argument("geometry line " + std::to_string(lineno) +
                                  ": trailing content \"" + trailing + "\"");
    }
    if (i < 0 || j < 0) {
      throw std::invalid_argument("geometry line " + std::to_string(lineno) +
                                  ": negative qubit index");
    }
    if (i == j) {
      throw std::invalid_argument("geometry line " + std::to_string(lineno) +
                                  ": self loop on qubit " + std::to_string(i));
    }
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("geometry line " + std::to_string(lineno) +
                                  ": duplicate edge " + std::to_string(i) +
                                  "-" + std::to_string(j));
    }
    geom.edges.emplace_back(i, j);
    geom.edge_colors.push_back(color);
    geom.n = std::max({geom.n, i + 1, j + 1});
  }
  if (geom.edges.empty()) {
    throw std::invalid_argument("geometry file has no edges");
  }
  if (any_color && any_plain) {
    throw std::invalid_argument(
        "geometry file mixes colored and uncolored edges");
  }
  if (!any_color) {
    geom.edge_colors.clear();
    return geom;
  }

  geom.color_count =
      1 + *std::max_element(geom.edge_colors.begin(), geom.edge_colors.end());
  // Within one color no two edges may share a qubit.
  std::vector<std::set<int>> used(geom.color_count);
  for (size_t e = 0; e < geom.edges.size(); ++e) {
    auto [i, j] = geom.edges[e];
    auto& qubits = used[geom.edge_colors[e]];
    if (!qubits.insert(i).second || !qubits.insert(j).second) {
      throw std::invalid_argument(
          "edges overlap within color " +
          std::to_string(geom.edge_colors[e]) + " at edge " +
          std::to_string(i) + "-" + std::to_string(j));
    }
  }
  return geom;
}

Geometry load_geometry_text(const std::string& text) {
  std::istringstream in(text);
  return load_geometry(in);
}

Geometry load_geometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open geometry file: " + path);
  }
  return load_geometry(in);
}

Geometry heavy_hex_127() { return load_geometry_text(kHeavyHex127Data); }

std::vector<int> bfs_ball(const Geometry& geom, int start, int radius) {
  std::vector<std::vector<int>> adj(geom.n);
  for (auto [i, j] : geom.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> dist(geom.n, -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] == radius) continue;
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::vector<int> ball;
  for (int q = 0; q < geom.n; ++q) {
    if (dist[q] >= 0) ball.push_back(q);
  }
  return ball;
}

std::vector<Gate> kicked_ising_layer(const Geometry& geom, Angle theta_x,
                                     Angle theta_zz) {
  std::vector<Gate> layer;
  layer.reserve(geom.n + geom.edges.size());
  for (int q = 0; q < geom.n; ++q) {
    layer.emplace_back(single_site(q, Pauli::X), theta_x);
  }
  auto add_edge = [&](size_t e) {
    auto [i, j] = geom.edges[e];
    PauliString zz = single_site(i, Pauli::Z) ^ single_site(j, Pauli::Z);
    layer.emplace_back(zz, theta_zz);
  };
  if (geom.has_coloring()) {
    for (int c = 0; c < geom.color_count; ++c) {
      for (size_t e = 0; e < geom.edges.size(); ++e) {
        if (geom.edge_colors[e] == c) add_edge(e);
      }
    }
  } else {
    for (size_t e = 0; e < geom.edges.size(); ++e) add_edge(e);
  }
  return layer;
}

Circuit build_kicked_ising(const Geometry& geom, Angle theta_x,
                           Angle theta_zz, int layers) {
  if (layers < 1) throw std::invalid_argument("layer count must be >= 1");
  Circuit circuit;
  circuit.n = geom.n;
  circuit.layers.assign(layers, kicked_ising_layer(geom, theta_x, theta_zz));
  return circuit;
}

}  // namespace pauliprop
