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

#include "pauliprop/term_map.hpp"

#include <cmath>

namespace pauliprop {

namespace {
constexpr size_t kInitialBuckets = 16;
// Load factor 0.5: buckets are 8 bytes each, so the index costs 16 bytes per
// entry while probe chains stay short.
constexpr size_t load_threshold(size_t buckets) { return buckets / 2; }
}  // namespace

void TermMap::grow() {
  size_t new_buckets = bucket_mask_ == 0 ? kInitialBuckets
                                         : 2 * (bucket_mask_ + 1);
  buckets_.assign(new_buckets, -1);
  bucket_mask_ = new_buckets - 1;
  capacity_threshold_ = load_threshold(new_buckets);
  for (size_t slot = 0; slot < keys_.size(); ++slot) {
    size_t b = hash_string(keys_[slot]) & bucket_mask_;
    while (buckets_[b] >= 0) b = (b + 1) & bucket_mask_;
    buckets_[b] = static_cast<int64_t>(slot);
  }
}

void TermMap::reserve(size_t n) {
  keys_.reserve(n);
  values_.reserve(n);
  size_t buckets = kInitialBuckets;
  while (load_threshold(buckets) < n) buckets *= 2;
  if (buckets > bucket_mask_ + 1) {
    buckets_.assign(buckets, -1);
    bucket_mask_ = buckets - 1;
    capacity_threshold_ = load_threshold(buckets);
    for (size_t slot = 0; slot < keys_.size(); ++slot) {
      size_t b = hash_string(keys_[slot]) & bucket_mask_;
      while (buckets_[b] >= 0) b = (b + 1) & bucket_mask_;
      buckets_[b] = static_cast<int64_t>(slot);
    }
  }
}

void TermMap::clear() {
  keys_.clear();
  values_.clear();
  buckets_.clear();
  bucket_mask_ = 0;
  capacity_threshold_ = 0;
}

void TermMap::erase_slot(size_t slot) {
  // Vacate the bucket pointing at `slot`, then backshift the probe chain so
  // linear probing stays consistent without tombstones.
  size_t b = hash_string(keys_[slot]) & bucket_mask_;
  while (buckets_[b] != static_cast<int64_t>(slot)) {
    b = (b + 1) & bucket_mask_;
  }
  size_t hole = b;
  buckets_[hole] = -1;
  size_t scan = (hole + 1) & bucket_mask_;
  while (buckets_[scan] >= 0) {
    size_t home = hash_string(keys_[static_cast<size_t>(buckets_[scan])]) &
                  bucket_mask_;
    // Move the entry back if its home bucket lies outside (hole, scan].
    bool between = hole < scan ? (home <= hole || home > scan)
                               : (home <= hole && home > scan);
    if (between) {
      buckets_[hole] = buckets_[scan];
      buckets_[scan] = -1;
      hole = scan;
    }
    scan = (scan + 1) & bucket_mask_;
  }

  size_t last = keys_.size() - 1;
  if (slot != last) {
    // Repoint the bucket of the moved entry before overwriting.
    size_t mb = hash_string(keys_[last]) & bucket_mask_;
    while (buckets_[mb] != static_cast<int64_t>(last)) {
      mb = (mb + 1) & bucket_mask_;
    }
    buckets_[mb] = static_cast<int64_t>(slot);
    keys_[slot] = keys_[last];
    values_[slot] = values_[last];
  }
  keys_.pop_back();
  values_.pop_back();
}

size_t TermMap::remove_below(double threshold) {
  // Per-slot backshift deletion is O(1) per removal but loses to a single
  // compaction + index rebuild once a decent fraction of the store goes;
  // switch strategies when that happens.
  size_t removed = 0;
  size_t slot = 0;
  size_t budget = keys_.size() / 8 + 8;
  while (slot < keys_.size()) {
    if (std::fabs(values_[slot]) <= threshold) {
      if (removed >= budget) break;
      erase_slot(slot);
      ++removed;
    } else {
      ++slot;
    }
  }
  if (slot >= keys_.size()) return removed;

  size_t write = slot;
  for (size_t read = slot; read < keys_.size(); ++read) {
    if (std::fabs(values_[read]) > threshold) {
      if (write != read) {
        keys_[write] = keys_[read];
        values_[write] = values_[read];
      }
      ++write;
    } else {
      ++removed;
    }
  }
  keys_.resize(write);
  values_.resize(write);
  buckets_.assign(bucket_mask_ + 1, -1);
  for (size_t s = 0; s < keys_.size(); ++s) {
    size_t b = hash_string(keys_[s]) & bucket_mask_;
    while (buckets_[b] >= 0) b = (b + 1) & bucket_mask_;
    buckets_[b] = static_cast<int64_t>(s);
  }
  return removed;
}

}  // namespace pauliprop
