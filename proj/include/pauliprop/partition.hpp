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

#ifndef PAULIPROP_PARTITION_HPP
#define PAULIPROP_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "pauliprop/pauli_string.hpp"

namespace pauliprop {

/// Deterministic assignment of Pauli strings to logical workers.
///
/// The base map splits the 2n-bit index into ceil(2n/k) blocks of k bits
/// (counted from the least significant end, blocks past the width read as
/// zero), sums the block values and reduces mod worker_count. Because a
/// gate XORs a fixed generator into every index it touches, the owner of
/// the result differs from the source owner by one of a small set of block
/// deltas, which keeps each worker talking to few destinations.
///
/// perturbation_s > 1 adds (h(I) mod s) before the final reduction, where h
/// is the splitmix64 finalizer folded over the index words; s = 1 is the
/// exact unperturbed map, s = worker_count approaches a plain hash.
struct PartitionSpec {
  uint32_t worker_count = 1;
  uint32_t block_size_bits = 1;
  uint32_t perturbation_s = 1;

  /// k such that 2^k is close to the worker count (at least 1).
  static uint32_t default_block_size(uint32_t workers);

  static PartitionSpec make(uint32_t workers, uint32_t block_size_bits,
                            uint32_t perturbation_s = 1);
};

/// Value of the j-th k-bit block of the index (k <= 32; blocks past the
/// width read as zero).
inline uint64_t index_block(const PauliString& s, uint32_t block,
                            uint32_t k) {
  uint64_t lo_bit = uint64_t{block} * k;
  uint64_t mask = (uint64_t{1} << k) - 1;
  size_t word = lo_bit >> 6;
  if (word >= s.words.size()) return 0;
  int shift = static_cast<int>(lo_bit & 63);
  uint64_t v = s.words[word] >> shift;
  if (shift + static_cast<int>(k) > 64 && word + 1 < s.words.size()) {
    v |= s.words[word + 1] << (64 - shift);
  }
  return v & mask;
}

/// Worker owning `index`. Deterministic across runs and platforms.
uint32_t owner(const PartitionSpec& spec, const PauliString& index, int n);

/// Workers that can own I xor J over all I owned by worker m, derived by
/// enumerating the flippable block patterns of J (unperturbed map only; for
/// perturbation_s > 1 the sparsity argument does not apply and every worker
/// is returned). Sorted ascending. Size is bounded by
/// min(worker_count, 2^(2 |J|) + 1).
std::vector<uint32_t> destination_set(const PartitionSpec& spec, uint32_t m,
                                      const PauliString& J, int n);

/// Max over min of shard sizes; the load-balance figure of merit. All sizes
/// must be positive: a zero size returns +infinity (the metric is undefined
/// there) and sets *warning when provided.
double uniformity_ratio(const std::vector<size_t>& shard_sizes,
                        bool* warning = nullptr);

}  // namespace pauliprop

#endif  // PAULIPROP_PARTITION_HPP
