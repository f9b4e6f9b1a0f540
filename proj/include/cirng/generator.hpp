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

// The CI_f(PRNG1, PRNG2) generator: each round draws m = PRNG1() + k and
// applies m chaotic-iteration updates, each replacing coordinate
// S = PRNG2() of the state by the same coordinate of f(state).

#ifndef CIRNG_GENERATOR_HPP_
#define CIRNG_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cirng/bits.hpp"
#include "cirng/func.hpp"
#include "cirng/sources.hpp"

namespace cirng {

enum class KMode {
  strict,  // k must exceed 3N
  compat,  // any k >= 1; needed to replay the published N = k = 4 example
};

struct GeneratorConfig {
  VectorOfImages f;
  unsigned k;
  State seed_state;
  KMode mode = KMode::strict;

  // Smallest k accepted in strict mode.
  static unsigned min_strict_k(unsigned n_bits) { return 3 * n_bits + 1; }

  // Throws InvalidArgument if k or seed_state is out of range for `mode`.
  void validate() const;
};

// Everything a round consumed and produced, for replay and auditing.
struct RoundTrace {
  unsigned m = 0;
  std::vector<unsigned> coordinates;  // S values, one per update
  std::vector<State> states;          // state after each update
};

class Generator {
 public:
  Generator(GeneratorConfig config, EntropySource prng1, EntropySource prng2);

  // One round; returns the new state.
  State round();
  State round(RoundTrace& trace);

  // Emitted states as N-bit big-endian groups (coordinate 1 first). With
  // include_seed the current state, x^0 for a fresh generator, is written
  // before the first round's output.
  BitSequence bit_stream(std::size_t n_rounds, bool include_seed = false);

  // Runs ceil(8 * n_bytes / N) rounds and packs their bits MSB-first,
  // dropping the bits past the last whole byte requested.
  std::vector<std::uint8_t> byte_stream(std::size_t n_bytes);

  State state() const noexcept { return x_; }
  std::uint64_t rounds_emitted() const noexcept { return rounds_; }
  const GeneratorConfig& config() const noexcept { return config_; }

 private:
  void update(unsigned coordinate) noexcept {
    const State m = coordinate_mask(n_bits_, coordinate);
    x_ = (x_ & ~m) | (config_.f[x_] & m);
  }
  void append_state(BitSequence& out) const;

  GeneratorConfig config_;
  EntropySource prng1_;
  EntropySource prng2_;
  unsigned n_bits_;
  State x_;
  std::uint64_t rounds_ = 0;
};

}  // namespace cirng

#endif  // CIRNG_GENERATOR_HPP_
