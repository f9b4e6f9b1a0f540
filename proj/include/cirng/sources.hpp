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

// Entropy inputs of the generator: PRNG1 supplies bits, PRNG2 supplies
// coordinates in [1, N].

#ifndef CIRNG_SOURCES_HPP_
#define CIRNG_SOURCES_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace cirng {

// Marsaglia's 64-bit xorshift with the (13, 7, 17) left-right-left triple.
class XorShift64 {
 public:
  // Throws InvalidArgument for a zero seed, the generator's fixed point.
  explicit XorShift64(std::uint64_t seed);

  std::uint64_t next() noexcept {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

// Replays a fixed list of integers. Exhaustion throws SourceExhausted unless
// the source was built to cycle.
class ScriptedSource {
 public:
  explicit ScriptedSource(std::vector<std::uint32_t> script,
                          bool cycle = false);

  std::uint32_t next();
  std::size_t remaining() const noexcept { return script_.size() - cursor_; }
  bool cycles() const noexcept { return cycle_; }

 private:
  std::vector<std::uint32_t> script_;
  std::size_t cursor_ = 0;
  bool cycle_;
};

class EntropySource {
 public:
  enum class Kind { xorshift, scripted };

  static EntropySource xorshift(std::uint64_t seed);
  static EntropySource scripted(std::vector<std::uint32_t> script,
                                bool cycle = false);

  Kind kind() const noexcept {
    return std::holds_alternative<XorShift64>(impl_) ? Kind::xorshift
                                                     : Kind::scripted;
  }

  // Xorshift: least significant bit of the next word. Scripted: the next
  // entry, which must be 0 or 1.
  unsigned next_bit();

  // Xorshift: (word mod N) + 1; the modulo bias is below 2^-60 for N <= 16.
  // Scripted: the next entry, which must lie in [1, N].
  unsigned next_coordinate(unsigned n_bits);

 private:
  template <typename Impl>
  explicit EntropySource(Impl impl) : impl_(std::move(impl)) {}

  std::variant<XorShift64, ScriptedSource> impl_;
};

// Decimal, or hexadecimal with a 0x/0X prefix. Throws InvalidArgument.
std::uint64_t parse_seed(std::string_view text);

// Comma-separated non-negative integers, e.g. "2,4,2,3". Whitespace around
// entries is ignored. Throws InvalidArgument.
std::vector<std::uint32_t> parse_script(std::string_view text);

}  // namespace cirng

#endif  // CIRNG_SOURCES_HPP_
