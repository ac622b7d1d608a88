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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace pauliprop;

namespace {

PauliString from_bits(uint64_t bits) {
  PauliString s;
  s.words[0] = bits;
  return s;
}

PauliString random_string(std::mt19937_64& rng, int n) {
  PauliString s;
  for (int site = 0; site < n; ++site) {
    s.set_code(site, static_cast<uint8_t>(rng() & 3));
  }
  return s;
}

}  // namespace

TEST_CASE("owner block-sum formula") {
  // 11001100 in blocks of 2 from the least significant end: 00,11,00,11.
  auto spec = PartitionSpec::make(4, 2);
  CHECK(owner(spec, from_bits(0b11001100), 4) == 2);
  CHECK(owner(spec, PauliString{}, 4) == 0);
  auto single = PartitionSpec::make(1, 2);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    CHECK(owner(single, random_string(rng, 64), 64) == 0);
  }
}

TEST_CASE("default block size tracks worker count") {
  CHECK(PartitionSpec::default_block_size(1) == 1);
  CHECK(PartitionSpec::default_block_size(2) == 1);
  CHECK(PartitionSpec::default_block_size(8) == 3);
  CHECK(PartitionSpec::default_block_size(9) == 4);
  CHECK(PartitionSpec::default_block_size(256) == 8);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(PartitionSpec::make(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(PartitionSpec::make(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(PartitionSpec::make(4, 33), std::invalid_argument);
  CHECK_THROWS_AS(PartitionSpec::make(4, 2, 0), std::invalid_argument);
}

TEST_CASE("perturbation s=1 reproduces the base map") {
  auto base = PartitionSpec::make(16, 4, 1);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    PauliString s = random_string(rng, 80);
    CHECK(owner(base, s, 80) == owner(PartitionSpec::make(16, 4), s, 80));
  }
}

TEST_CASE("destination_set") {
  auto spec = PartitionSpec::make(64, 2);

  SUBCASE("identity stays home") {
    auto dests = destination_set(spec, 7, PauliString{}, 8);
    CHECK(dests == std::vector<uint32_t>{7});
  }

  SUBCASE("weight-2 string has at most 17 destinations") {
    PauliString zz = parse_pauli_label("Z3 Z1", 4);
    auto dests = destination_set(spec, 0, zz, 4);
    CHECK(dests.size() <= 17);
  }

  SUBCASE("single-site string has at most 5 destinations") {
    PauliString x = parse_pauli_label("X5", 8);
    auto dests = destination_set(spec, 3, x, 8);
    CHECK(dests.size() <= 5);
  }

  SUBCASE("perturbed map falls back to all workers") {
    auto perturbed = PartitionSpec::make(8, 2, 4);
    auto dests = destination_set(perturbed, 1, parse_pauli_label("X0", 4), 4);
    CHECK(dests.size() == 8);
  }
}

TEST_CASE("exhaustive small-n ownership properties") {
  // Totality/disjointness and the destination-set bound over every index
  // pair at small width.
  for (auto [N, k] : std::vector<std::pair<uint32_t, uint32_t>>{
           {8, 3}, {16, 4}, {5, 2}, {3, 3}}) {
    auto spec = PartitionSpec::make(N, k);
    const int n = 4;
    const uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t jbits = 0; jbits < total; ++jbits) {
      PauliString J = from_bits(jbits);
      // destination sets per source worker
      std::vector<std::vector<uint32_t>> dests(N);
      for (uint32_t m = 0; m < N; ++m) {
        dests[m] = destination_set(spec, m, J, n);
        size_t bound = std::min<size_t>(
            N, (size_t{1} << (2 * pauli_weight(J))) + 1);
        REQUIRE(dests[m].size() <= bound);
      }
      if (jbits % 16 != 0) continue;  // owner sweep on a sample of J
      for (uint64_t ibits = 0; ibits < total; ++ibits) {
        PauliString I = from_bits(ibits);
        uint32_t m = owner(spec, I, n);
        REQUIRE(m < N);
        uint32_t target = owner(spec, I ^ J, n);
        REQUIRE(std::binary_search(dests[m].begin(), dests[m].end(),
                                   target));
      }
    }
  }
}

TEST_CASE("owner shift depends only on the generator blocks") {
  // owner(I^J) - owner(I) mod N is a function of J and of I's bits at J's
  // blocks only.
  auto spec = PartitionSpec::make(8, 3);
  const int n = 6;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    PauliString J = random_string(rng, n);
    PauliString a = random_string(rng, n);
    PauliString b = a;
    // Change a block in which J is zero; the shift must not change.
    uint32_t blocks = (2 * n + 2) / 3;
    std::vector<uint32_t> free_blocks;
    for (uint32_t j = 0; j < blocks; ++j) {
      if (index_block(J, j, 3) == 0) free_blocks.push_back(j);
    }
    if (free_blocks.empty()) continue;
    uint32_t blk = free_blocks[rng() % free_blocks.size()];
    // Flip a bit inside the free block (staying inside the 2n-bit width).
    uint64_t bit = uint64_t{blk} * 3 + rng() % 3;
    if (bit >= uint64_t(2 * n)) continue;
    b.words[bit >> 6] ^= uint64_t{1} << (bit & 63);

    auto shift = [&](const PauliString& s) {
      return (int(owner(spec, s ^ J, n)) - int(owner(spec, s, n)) + 8) % 8;
    };
    CHECK(shift(a) == shift(b));
  }
}

TEST_CASE("uniformity_ratio") {
  CHECK(uniformity_ratio({100, 100, 100}) == 1.0);
  CHECK(uniformity_ratio({100, 400}) == 4.0);
  bool warning = false;
  CHECK(std::isinf(uniformity_ratio({0, 5}, &warning)));
  CHECK(warning);
  CHECK_THROWS_AS(uniformity_ratio({}), std::invalid_argument);
}

TEST_CASE("random sampling balances across workers") {
  const uint32_t N = 8;
  auto spec = PartitionSpec::make(N, PartitionSpec::default_block_size(N));
  std::mt19937_64 rng(12345);
  std::vector<size_t> counts(N, 0);
  const int samples = 200000;
  for (int i = 0; i < samples; ++i) {
    counts[owner(spec, random_string(rng, 127), 127)]++;
  }
  CHECK(uniformity_ratio(counts) < 1.2);
}

TEST_CASE("s=N approaches the plain hash distribution") {
  // Chi-square sanity: with s=N the owner distribution over random strings
  // should look like h(I) mod N (uniform), not the structured block map.
  const uint32_t N = 8;
  auto spec = PartitionSpec::make(N, 3, N);
  std::mt19937_64 rng(99);
  std::vector<size_t> counts(N, 0);
  const int samples = 80000;
  for (int i = 0; i < samples; ++i) {
    counts[owner(spec, random_string(rng, 31), 31)]++;
  }
  double expected = double(samples) / N;
  double chi2 = 0;
  for (size_t c : counts) {
    chi2 += (double(c) - expected) * (double(c) - expected) / expected;
  }
  // 7 degrees of freedom; 26 is far beyond the 99.9th percentile.
  CHECK(chi2 < 26.0);
}
