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

#include "pauliprop/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pauliprop {

namespace {
constexpr uint32_t kMaxBlockBits = 32;

uint64_t block_sum(const PauliString& s, int n, uint32_t k) {
  uint32_t blocks = (2 * static_cast<uint32_t>(n) + k - 1) / k;
  uint64_t sum = 0;
  for (uint32_t j = 0; j < blocks; ++j) sum += index_block(s, j, k);
  return sum;
}
}  // namespace

uint32_t PartitionSpec::default_block_size(uint32_t workers) {
  uint32_t k = 1;
  while ((uint64_t{1} << k) < workers) ++k;
  return k;
}

PartitionSpec PartitionSpec::make(uint32_t workers, uint32_t block_size_bits,
                                  uint32_t perturbation_s) {
  if (workers < 1) throw std::invalid_argument("worker_count must be >= 1");
  if (block_size_bits < 1 || block_size_bits > kMaxBlockBits) {
    throw std::invalid_argument("block_size_bits must be in [1, 32]");
  }
  if (perturbation_s < 1) {
    throw std::invalid_argument("perturbation_s must be >= 1");
  }
  return PartitionSpec{workers, block_size_bits, perturbation_s};
}

uint32_t owner(const PartitionSpec& spec, const PauliString& index, int n) {
  uint64_t sum = block_sum(index, n, spec.block_size_bits);
  if (spec.perturbation_s > 1) {
    sum += hash_string(index) % spec.perturbation_s;
  }
  return static_cast<uint32_t>(sum % spec.worker_count);
}

std::vector<uint32_t> destination_set(const PartitionSpec& spec, uint32_t m,
                                      const PauliString& J, int n) {
  uint32_t N = spec.worker_count;
  if (spec.perturbation_s > 1) {
    // No sparsity bound holds for the perturbed map.
    std::vector<uint32_t> all(N);
    std::iota(all.begin(), all.end(), 0u);
    return all;
  }

  uint32_t k = spec.block_size_bits;
  uint32_t blocks = (2 * static_cast<uint32_t>(n) + k - 1) / k;

  // Per affected block, XORing the J block into an arbitrary source block b
  // changes the block value by Jblk - 2*(b & Jblk); enumerating the subsets
  // of Jblk's set bits yields every possible delta.
  std::vector<int64_t> sums{0};
  for (uint32_t j = 0; j < blocks; ++j) {
    uint64_t jblk = index_block(J, j, k);
    if (jblk == 0) continue;
    std::vector<int64_t> deltas;
    uint64_t sub = 0;
    do {
      deltas.push_back(static_cast<int64_t>(jblk) -
                       2 * static_cast<int64_t>(sub));
      sub = (sub - jblk) & jblk;  // next subset of jblk's set bits
    } while (sub != 0);
    std::vector<int64_t> next;
    next.reserve(sums.size() * deltas.size());
    for (int64_t s : sums) {
      for (int64_t d : deltas) next.push_back(s + d);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }

  std::vector<uint32_t> owners;
  owners.reserve(sums.size());
  for (int64_t d : sums) {
    int64_t o = (static_cast<int64_t>(m) + d) % static_cast<int64_t>(N);
    if (o < 0) o += N;
    owners.push_back(static_cast<uint32_t>(o));
  }
  std::sort(owners.begin(), owners.end());
  owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
  return owners;
}

double uniformity_ratio(const std::vector<size_t>& shard_sizes,
                        bool* warning) {
  if (warning) *warning = false;
  if (shard_sizes.empty()) {
    throw std::invalid_argument("uniformity_ratio needs at least one shard");
  }
  size_t lo = shard_sizes[0], hi = shard_sizes[0];
  for (size_t v : shard_sizes) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo == 0) {
    if (warning) *warning = true;
    return std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(hi) / static_cast<double>(lo);
}

}  // namespace pauliprop
