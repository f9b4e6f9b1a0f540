// Copyright 2026 The cirng Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cirng/bits.hpp"

#include <algorithm>

#include "cirng/errors.hpp"

namespace cirng {

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t b = 0; b < bits.size(); ++b) {
    if (bits[b]) bytes[b / 8] |= static_cast<std::uint8_t>(0x80u >> (b % 8));
  }
  return bytes;
}

BitSequence unpack_bits(std::span<const std::uint8_t> bytes,
                        std::size_t n_bits) {
  n_bits = std::min(n_bits, bytes.size() * 8);
  BitSequence bits(n_bits);
  for (std::size_t b = 0; b < n_bits; ++b) {
    bits[b] = (bytes[b / 8] >> (7 - b % 8)) & 1u;
  }
  return bits;
}

std::string to_bit_string(std::span<const std::uint8_t> bits) {
  std::string s(bits.size(), '0');
  for (std::size_t b = 0; b < bits.size(); ++b) {
    if (bits[b]) s[b] = '1';
  }
  return s;
}

BitSequence parse_bit_string(std::string_view text) {
  BitSequence bits(text.size());
  for (std::size_t b = 0; b < text.size(); ++b) {
    if (text[b] != '0' && text[b] != '1') {
      throw InvalidArgument("character " + std::to_string(b + 1) +
                            " is not '0' or '1'");
    }
    bits[b] = text[b] == '1';
  }
  return bits;
}

}  // namespace cirng
