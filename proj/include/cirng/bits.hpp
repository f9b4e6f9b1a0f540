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

#ifndef CIRNG_BITS_HPP_
#define CIRNG_BITS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cirng {

// One bit per element, each 0 or 1.
using BitSequence = std::vector<std::uint8_t>;

// Packs bits most-significant-first; a partial final byte is zero-padded.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);

// Inverse of pack_bits for the first `n_bits` bits (all of them when
// n_bits is SIZE_MAX).
BitSequence unpack_bits(std::span<const std::uint8_t> bytes,
                        std::size_t n_bits = SIZE_MAX);

std::string to_bit_string(std::span<const std::uint8_t> bits);

// Accepts only '0' and '1'. Throws InvalidArgument otherwise.
BitSequence parse_bit_string(std::string_view text);

}  // namespace cirng

#endif  // CIRNG_BITS_HPP_
