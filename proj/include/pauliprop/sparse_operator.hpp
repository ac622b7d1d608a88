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

#ifndef PAULIPROP_SPARSE_OPERATOR_HPP
#define PAULIPROP_SPARSE_OPERATOR_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pauliprop/pauli_string.hpp"
#include "pauliprop/term_map.hpp"

namespace pauliprop {

/// When the coefficient filter runs relative to the gate loop.
enum class TruncationCadence { PerGate, PerLayer };

/// Relative coefficient cutoff. A coefficient is discarded when
/// |c| <= epsilon0 * max over the full operator (all shards); epsilon0 = 0
/// disables everything except removal of exact zeros.
struct TruncationPolicy {
  double epsilon0 = 0.0;
  TruncationCadence cadence = TruncationCadence::PerGate;
};

/// One worker's share of a Hermitian operator, stored as a map from Pauli
/// string to real coefficient. Width n is fixed at construction.
class SparseOperator {
 public:
  explicit SparseOperator(int n);

  int num_qubits() const { return n_; }
  size_t term_count() const { return terms_.size(); }

  /// coefficient + delta at `index`, inserting when absent. A coefficient
  /// that lands on exactly zero stays stored until the next truncation pass.
  void upsert(const PauliString& index, double delta);

  /// Multiplies the coefficient at `index` by `factor`. Throws
  /// std::out_of_range when the index is absent.
  void scale_in_place(const PauliString& index, double factor);

  double coefficient(const PauliString& index) const;
  bool contains(const PauliString& index) const;

  /// max |coefficient| over this shard, 0 when empty. The global maximum in
  /// the truncation rule is the max of this value across all shards.
  double local_max_abs() const;

  /// Removes every coefficient with |c| <= epsilon0 * global_max (exact
  /// zeros always go). Returns the removed count. global_max must come from
  /// a reduction over local_max_abs at the same logical time; a negative
  /// value throws std::invalid_argument.
  size_t truncate(double global_max, const TruncationPolicy& policy);

  /// Sum of coefficients whose string is diagonal (identity or Z on every
  /// site): <0...0| sigma_I |0...0> is 1 for those strings and 0 otherwise.
  double expectation_zero_state() const;

  TermMap& store() { return terms_; }
  const TermMap& store() const { return terms_; }

  /// Writes one record per line, "index-hex coefficient", with the index as
  /// lowercase hex of the 2n-bit value. Round-trips through load_dump.
  void dump(std::ostream& out) const;
  static SparseOperator load_dump(std::istream& in, int n);

 private:
  int n_;
  TermMap terms_;
};

/// Sum over all shards of expectation_zero_state.
double expectation_zero_state(std::span<const SparseOperator> shards);

/// Max over all shards of local_max_abs.
double global_max_abs(std::span<const SparseOperator> shards);

/// Log-spaced histogram of rescaled coefficients x = c / global_max over
/// |x| in [lower, 1], with separate counts per sign. Snapshot of the "how
/// many strings carry how much weight" picture of the operator.
struct DensityHistogram {
  std::vector<double> bin_edges;       // size bins + 1, ascending |x|
  std::vector<double> positive;        // normalized counts per bin
  std::vector<double> negative;
  size_t total_terms = 0;

  std::string to_tsv() const;  // columns: bin_low, bin_high, sign, count
};

/// Histogram over every term of every shard. global_max must be positive
/// when any shard is nonempty (throws std::invalid_argument otherwise).
/// The lower edge is max(epsilon0, 1e-16); values below it are clamped into
/// the first bin, which only happens when truncation is off.
DensityHistogram density_histogram(std::span<const SparseOperator> shards,
                                   double global_max, int bins,
                                   double epsilon0);

}  // namespace pauliprop

#endif  // PAULIPROP_SPARSE_OPERATOR_HPP
