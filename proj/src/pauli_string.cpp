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

#include "pauliprop/pauli_string.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pauliprop {

namespace {

// local_phase as a 16-entry table indexed by (a << 2) | b.
// Nonzero entries are the Levi-Civita signs: (X,Y)=+1, (Y,Z)=+1, (Z,X)=+1
// and the reversed pairs -1.
constexpr std::array<int8_t, 16> kLocalPhase = {
    //      b=I  b=X  b=Y  b=Z
    /*a=I*/ 0,   0,   0,   0,
    /*a=X*/ 0,   0,   1,   -1,
    /*a=Y*/ 0,   -1,  0,   1,
    /*a=Z*/ 0,   1,   -1,  0,
};

uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_site(int site, int n) {
  if (site < 0 || site >= n) {
    throw std::invalid_argument("pauli site index " + std::to_string(site) +
                                " out of range for n=" + std::to_string(n));
  }
}

char code_char(uint8_t code) { return "IXYZ"[code]; }

int char_code(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: return -1;
  }
}

}  // namespace

PauliString single_site(int site, Pauli pauli) {
  check_site(site, kMaxQubits);
  PauliString s;
  s.set_code(site, static_cast<uint8_t>(pauli));
  return s;
}

uint64_t hash_string(const PauliString& s) {
  uint64_t h = 0;
  for (uint64_t w : s.words) h = mix64(h ^ w);
  return h;
}

int local_phase(uint8_t a, uint8_t b) { return kLocalPhase[(a << 2) | b]; }

int phase_exponent(const PauliString& I, const PauliString& J, int n) {
  int b = 0;
  for (int site = 0; site < n; ++site) {
    b += local_phase(I.code_at(site), J.code_at(site));
  }
  return ((b % 4) + 4) % 4;
}

bool commutes(const PauliString& I, const PauliString& J, int n) {
  return (phase_exponent(I, J, n) & 1) == 0;
}

StringProduct string_product(const PauliString& I, const PauliString& J,
                             int n) {
  return StringProduct{I ^ J, phase_exponent(I, J, n)};
}

int pauli_weight(const PauliString& s) {
  int weight = 0;
  for (uint64_t w : s.words) {
    uint64_t nonzero = (w | (w >> 1)) & 0x5555555555555555ULL;
    weight += __builtin_popcountll(nonzero);
  }
  return weight;
}

PauliString parse_pauli_label(const std::string& text, int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " +
                                std::to_string(n));
  }
  std::string trimmed;
  {
    size_t first = text.find_first_not_of(" \t");
    size_t last = text.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw std::invalid_argument("empty pauli label");
    }
    trimmed = text.substr(first, last - first + 1);
  }

  bool has_digit = trimmed.find_first_of("0123456789") != std::string::npos;
  bool has_space = trimmed.find_first_of(" \t") != std::string::npos;
  PauliString s;

  if (!has_digit && !has_space) {
    // Dense form: one character per site, leftmost = site n-1.
    if (static_cast<int>(trimmed.size()) != n) {
      throw std::invalid_argument("dense pauli label \"" + trimmed +
                                  "\" has length " +
                                  std::to_string(trimmed.size()) +
                                  ", expected n=" + std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
      int code = char_code(trimmed[i]);
      if (code < 0) {
        throw std::invalid_argument(std::string("invalid pauli character '") +
                                    trimmed[i] + "'");
      }
      s.set_code(n - 1 - i, static_cast<uint8_t>(code));
    }
    return s;
  }

  // Sparse form: whitespace-separated tokens like "Z62".
  std::istringstream in(trimmed);
  std::string token;
  while (in >> token) {
    int code = char_code(token[0]);
    if (code <= 0) {
      // Identity tokens carry no site and make duplicate detection moot.
      throw std::invalid_argument("invalid sparse pauli token \"" + token +
                                  "\"");
    }
    if (token.size() < 2) {
      throw std::invalid_argument("sparse pauli token \"" + token +
                                  "\" is missing a site index");
    }
    size_t pos = 0;
    int site;
    try {
      site = std::stoi(token.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid site index in token \"" + token +
                                  "\"");
    }
    if (pos + 1 != token.size()) {
      throw std::invalid_argument("invalid sparse pauli token \"" + token +
                                  "\"");
    }
    check_site(site, n);
    if (s.code_at(site) != 0) {
      throw std::invalid_argument("site " + std::to_string(site) +
                                  " appears twice in pauli label");
    }
    s.set_code(site, static_cast<uint8_t>(code));
  }
  return s;
}

std::string to_dense_label(const PauliString& s, int n) {
  std::string out(n, 'I');
  for (int site = 0; site < n; ++site) {
    out[n - 1 - site] = code_char(s.code_at(site));
  }
  return out;
}

std::string to_sparse_label(const PauliString& s, int n) {
  std::string out;
  for (int site = 0; site < n; ++site) {
    uint8_t code = s.code_at(site);
    if (code == 0) continue;
    if (!out.empty()) out += ' ';
    out += code_char(code);
    out += std::to_string(site);
  }
  return out.empty() ? "I" : out;
}

std::string to_hex(const PauliString& s, int n) {
  int digits = (2 * n + 3) / 4;
  std::string out(digits, '0');
  for (int d = 0; d < digits; ++d) {
    int bit = 4 * d;
    unsigned nibble = (s.words[bit >> 6] >> (bit & 63)) & 0xf;
    out[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  return out;
}

PauliString from_hex(const std::string& hex, int n) {
  PauliString s;
  int bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
    char c = static_cast<char>(std::tolower(*it));
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = 10 + (c - 'a');
    } else {
      throw std::invalid_argument(std::string("invalid hex digit '") + *it +
                                  "'");
    }
    if (bit >= 2 * kMaxQubits && v != 0) {
      throw std::invalid_argument("hex index wider than the maximum width");
    }
    if (bit < 2 * kMaxQubits && v != 0) {
      s.words[bit >> 6] |= static_cast<uint64_t>(v) << (bit & 63);
    }
    bit += 4;
  }
  for (int site = n; site < kMaxQubits; ++site) {
    if (s.code_at(site) != 0) {
      throw std::invalid_argument("hex index has bits above site " +
                                  std::to_string(n - 1));
    }
  }
  return s;
}

}  // namespace pauliprop
