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

#include "pauliprop/sparse_operator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pauliprop {

namespace {

// True when every site is identity or Z, i.e. the string is diagonal in the
// computational basis. Site codes 01 (X) and 10 (Y) have differing bits in
// the pair; identity and Z have equal bits.
bool is_diagonal(const PauliString& s) {
  uint64_t acc = 0;
  for (uint64_t w : s.words) acc |= (w ^ (w >> 1)) & 0x5555555555555555ULL;
  return acc == 0;
}

std::string format_coefficient(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

SparseOperator::SparseOperator(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " +
                                std::to_string(n));
  }
}

void SparseOperator::upsert(const PauliString& index, double delta) {
  terms_.add(index, delta);
}

void SparseOperator::scale_in_place(const PauliString& index, double factor) {
  size_t slot = terms_.find(index);
  if (slot == TermMap::npos) {
    throw std::out_of_range("scale_in_place on absent index " +
                            to_hex(index, n_));
  }
  terms_.values()[slot] *= factor;
}

double SparseOperator::coefficient(const PauliString& index) const {
  size_t slot = terms_.find(index);
  return slot == TermMap::npos ? 0.0 : terms_.values()[slot];
}

bool SparseOperator::contains(const PauliString& index) const {
  return terms_.contains(index);
}

double SparseOperator::local_max_abs() const {
  double m = 0.0;
  for (double v : terms_.values()) m = std::max(m, std::fabs(v));
  return m;
}

size_t SparseOperator::truncate(double global_max,
                                const TruncationPolicy& policy) {
  if (global_max < 0 || std::isnan(global_max)) {
    throw std::invalid_argument("negative global maximum in truncate");
  }
  return terms_.remove_below(policy.epsilon0 * global_max);
}

double SparseOperator::expectation_zero_state() const {
  double sum = 0.0;
  auto keys = terms_.keys();
  auto values = terms_.values();
  for (size_t i = 0; i < keys.size(); ++i) {
    if (is_diagonal(keys[i])) sum += values[i];
  }
  return sum;
}

void SparseOperator::dump(std::ostream& out) const {
  auto keys = terms_.keys();
  auto values = terms_.values();
  for (size_t i = 0; i < keys.size(); ++i) {
    out << to_hex(keys[i], n_) << ' ' << format_coefficient(values[i])
        << '\n';
  }
}

SparseOperator SparseOperator::load_dump(std::istream& in, int n) {
  SparseOperator op(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string hex;
    double value;
    if (!(ls >> hex >> value)) {
      throw std::invalid_argument("malformed dump line: " + line);
    }
    op.terms_.set(from_hex(hex, n), value);
  }
  return op;
}

double expectation_zero_state(std::span<const SparseOperator> shards) {
  double sum = 0.0;
  for (const auto& s : shards) sum += s.expectation_zero_state();
  return sum;
}

double global_max_abs(std::span<const SparseOperator> shards) {
  double m = 0.0;
  for (const auto& s : shards) m = std::max(m, s.local_max_abs());
  return m;
}

std::string DensityHistogram::to_tsv() const {
  std::ostringstream out;
  out << "bin_low\tbin_high\tsign\tnormalized_count\n";
  for (size_t b = 0; b + 1 < bin_edges.size(); ++b) {
    out << format_coefficient(bin_edges[b]) << '\t'
        << format_coefficient(bin_edges[b + 1]) << "\t+\t"
        << format_coefficient(positive[b]) << '\n';
    out << format_coefficient(bin_edges[b]) << '\t'
        << format_coefficient(bin_edges[b + 1]) << "\t-\t"
        << format_coefficient(negative[b]) << '\n';
  }
  return out.str();
}

DensityHistogram density_histogram(std::span<const SparseOperator> shards,
                                   double global_max, int bins,
                                   double epsilon0) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least 1 bin");
  size_t total = 0;
  for (const auto& s : shards) total += s.term_count();
  if (total > 0 && global_max <= 0) {
    throw std::invalid_argument(
        "density_histogram needs a positive global maximum for a nonempty "
        "operator");
  }

  DensityHistogram h;
  double lower = std::max(epsilon0, 1e-16);
  double log_lower = std::log(lower);
  h.bin_edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) {
    h.bin_edges[b] = std::exp(log_lower * (1.0 - double(b) / bins));
  }
  h.bin_edges[bins] = 1.0;
  h.positive.assign(bins, 0.0);
  h.negative.assign(bins, 0.0);
  h.total_terms = total;
  if (total == 0) return h;

  double inv_norm = 1.0 / double(total);
  for (const auto& s : shards) {
    for (double v : s.store().values()) {
      double x = v / global_max;
      double ax = std::fabs(x);
      int b;
      if (ax <= lower) {
        b = 0;
      } else if (ax >= 1.0) {
        b = bins - 1;
      } else {
        b = static_cast<int>(bins * (1.0 - std::log(ax) / log_lower));
        b = std::clamp(b, 0, bins - 1);
      }
      if (x < 0) {
        h.negative[b] += inv_norm;
      } else {
        h.positive[b] += inv_norm;
      }
    }
  }
  return h;
}

}  // namespace pauliprop
