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

#ifndef PAULIPROP_TERM_MAP_HPP
#define PAULIPROP_TERM_MAP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pauliprop/pauli_string.hpp"

namespace pauliprop {

/// Associative container from PauliString to a double coefficient, designed
/// around the access pattern of operator propagation: the whole store is
/// scanned linearly several times per gate, point lookups and insertions
/// happen in bulk between scans, and erasure happens in bulk passes.
///
/// Keys and values live in parallel dense arrays, so iteration is a plain
/// linear walk over contiguous memory. A power-of-two open-addressing index
/// (linear probing) maps hashes to dense slots. Removal swaps the last entry
/// into the hole, touching O(1) entries per removal instead of rebuilding.
class TermMap {
 public:
  TermMap() = default;

  size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

  std::span<const PauliString> keys() const { return keys_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  /// Slot of `key` in the dense arrays, or npos.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t find(const PauliString& key) const {
    if (bucket_mask_ == 0) return npos;
    size_t b = hash_string(key) & bucket_mask_;
    while (true) {
      int64_t slot = buckets_[b];
      if (slot < 0) return npos;
      if (keys_[static_cast<size_t>(slot)] == key) {
        return static_cast<size_t>(slot);
      }
      b = (b + 1) & bucket_mask_;
    }
  }

  bool contains(const PauliString& key) const { return find(key) != npos; }

  /// Adds `delta` to the coefficient at `key`, inserting if absent. Entries
  /// that reach exactly zero persist until the next remove_below pass.
  void add(const PauliString& key, double delta) {
    if (keys_.size() + 1 > capacity_threshold_) grow();
    size_t b = hash_string(key) & bucket_mask_;
    while (true) {
      int64_t slot = buckets_[b];
      if (slot < 0) {
        buckets_[b] = static_cast<int64_t>(keys_.size());
        keys_.push_back(key);
        values_.push_back(delta);
        return;
      }
      if (keys_[static_cast<size_t>(slot)] == key) {
        values_[static_cast<size_t>(slot)] += delta;
        return;
      }
      b = (b + 1) & bucket_mask_;
    }
  }

  /// Sets the coefficient at `key`, inserting if absent.
  void set(const PauliString& key, double value) {
    size_t slot = find(key);
    if (slot == npos) {
      add(key, value);
    } else {
      values_[slot] = value;
    }
  }

  /// Removes every entry with |value| <= threshold. Returns the number of
  /// removed entries. Relative order of survivors is not preserved.
  size_t remove_below(double threshold);

  void reserve(size_t n);
  void clear();

 private:
  void grow();
  void erase_slot(size_t slot);

  std::vector<PauliString> keys_;
  std::vector<double> values_;
  std::vector<int64_t> buckets_;  // dense slot per bucket, -1 = empty
  size_t bucket_mask_ = 0;
  size_t capacity_threshold_ = 0;
};

}  // namespace pauliprop

#endif  // PAULIPROP_TERM_MAP_HPP
