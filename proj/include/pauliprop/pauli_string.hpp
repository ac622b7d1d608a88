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

#ifndef PAULIPROP_PAULI_STRING_HPP
#define PAULIPROP_PAULI_STRING_HPP

#include <array>
#include <cstdint>
#include <string>

namespace pauliprop {

/// Maximum number of qubits a PauliString can hold (2 bits per site).
constexpr int kMaxQubits = 128;
constexpr int kIndexWords = (2 * kMaxQubits) / 64;

/// Local Pauli codes. The 2-bit encoding is normative for file formats and
/// the worker distribution map: 00 = identity, 01 = X, 10 = Y, 11 = Z.
enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// An n-qubit Pauli string packed into 2n bits, site i occupying bit pair
/// (2i, 2i+1) counted from the least significant end. The all-zero value is
/// the identity string. The width n is a property of the simulation, not of
/// the value; unused high bits must stay zero so that equality and hashing
/// are width-agnostic.
struct PauliString {
  std::array<uint64_t, kIndexWords> words{};

  bool operator==(const PauliString&) const = default;

  bool is_identity() const {
    uint64_t acc = 0;
    for (uint64_t w : words) acc |= w;
    return acc == 0;
  }

  uint8_t code_at(int site) const {
    return static_cast<uint8_t>((words[site >> 5] >> (2 * (site & 31))) & 3u);
  }

  void set_code(int site, uint8_t code) {
    uint64_t& w = words[site >> 5];
    int shift = 2 * (site & 31);
    w = (w & ~(uint64_t{3} << shift)) | (uint64_t{code} << shift);
  }

  PauliString operator^(const PauliString& o) const {
    PauliString r;
    for (int i = 0; i < kIndexWords; ++i) r.words[i] = words[i] ^ o.words[i];
    return r;
  }
};

/// Single-site string: `pauli` at `site`, identity elsewhere.
PauliString single_site(int site, Pauli pauli);

/// 64-bit mix of the packed words (splitmix64 finalizer, folded word by
/// word). Deterministic and seed-free across platforms.
uint64_t hash_string(const PauliString& s);

struct PauliStringHash {
  size_t operator()(const PauliString& s) const { return hash_string(s); }
};

/// Structure-constant phase of the su(2) algebra on one site: 0 if either
/// code is the identity or the codes are equal, otherwise the Levi-Civita
/// sign eps_{a b k} of the unique completing index k.
int local_phase(uint8_t a, uint8_t b);

/// Exponent B(I,J) of i in sigma_I sigma_J = i^B sigma_{I xor J}, reduced
/// mod 4. Sums the local phases over the first n sites. Even B means the
/// strings commute. This per-site lookup loop is the reference path; any
/// optimized accumulation must be tested against it.
int phase_exponent(const PauliString& I, const PauliString& J, int n);

bool commutes(const PauliString& I, const PauliString& J, int n);

struct StringProduct {
  PauliString index;
  int phase;  // exponent of i, in {0,1,2,3}
};

/// sigma_I sigma_J = i^phase sigma_index with index = I xor J.
StringProduct string_product(const PauliString& I, const PauliString& J, int n);

/// Number of non-identity sites.
int pauli_weight(const PauliString& s);

/// Parses either a dense label over {I,X,Y,Z} of length n (leftmost char is
/// site n-1) or a sparse label like "Z62" / "Z13 Z14". Throws
/// std::invalid_argument on bad characters, out-of-range sites, or a site
/// repeated in sparse form.
PauliString parse_pauli_label(const std::string& text, int n);

/// Dense label of length n, leftmost char = site n-1. Inverse of the dense
/// form accepted by parse_pauli_label.
std::string to_dense_label(const PauliString& s, int n);

/// Sparse label like "Z13 Z14" in ascending site order; "I" for identity.
std::string to_sparse_label(const PauliString& s, int n);

/// Lowercase hex of the 2n-bit value, zero-padded to ceil(2n/4) digits,
/// most significant digit first. Used by operator dump files.
std::string to_hex(const PauliString& s, int n);

PauliString from_hex(const std::string& hex, int n);

}  // namespace pauliprop

#endif  // PAULIPROP_PAULI_STRING_HPP
