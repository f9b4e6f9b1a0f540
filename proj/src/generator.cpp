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

#include "cirng/generator.hpp"

#include <string>

#include "cirng/errors.hpp"

namespace cirng {

void GeneratorConfig::validate() const {
  const unsigned n = f.n_bits();
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (mode == KMode::strict && k < min_strict_k(n)) {
    throw InvalidArgument("strict mode requires k > 3N = " +
                          std::to_string(3 * n) + ", got k = " +
                          std::to_string(k));
  }
  if (seed_state > f.state_mask()) {
    throw InvalidArgument("seed state " + std::to_string(seed_state) +
                          " is outside [0, " +
                          std::to_string(f.state_mask()) + "]");
  }
}

Generator::Generator(GeneratorConfig config, EntropySource prng1,
                     EntropySource prng2)
    : config_(std::move(config)),
      prng1_(std::move(prng1)),
      prng2_(std::move(prng2)),
      n_bits_(config_.f.n_bits()),
      x_(config_.seed_state) {
  config_.validate();
}

State Generator::round() {
  // The published worked example applies exactly m updates per round.
  const unsigned m = prng1_.next_bit() + config_.k;
  for (unsigned step = 0; step < m; ++step) {
    update(prng2_.next_coordinate(n_bits_));
  }
  ++rounds_;
  return x_;
}

State Generator::round(RoundTrace& trace) {
  trace = RoundTrace{};
  trace.m = prng1_.next_bit() + config_.k;
  trace.coordinates.reserve(trace.m);
  trace.states.reserve(trace.m);
  for (unsigned step = 0; step < trace.m; ++step) {
    const unsigned s = prng2_.next_coordinate(n_bits_);
    update(s);
    trace.coordinates.push_back(s);
    trace.states.push_back(x_);
  }
  ++rounds_;
  return x_;
}

void Generator::append_state(BitSequence& out) const {
  for (unsigned p = 1; p <= n_bits_; ++p) {
    out.push_back((x_ & coordinate_mask(n_bits_, p)) ? 1 : 0);
  }
}

BitSequence Generator::bit_stream(std::size_t n_rounds, bool include_seed) {
  if (n_rounds < 1) throw InvalidArgument("n_rounds must be at least 1");
  BitSequence out;
  out.reserve((n_rounds + (include_seed ? 1 : 0)) * n_bits_);
  if (include_seed) append_state(out);
  for (std::size_t r = 0; r < n_rounds; ++r) {
    round();
    append_state(out);
  }
  return out;
}

std::vector<std::uint8_t> Generator::byte_stream(std::size_t n_bytes) {
  if (n_bytes < 1) throw InvalidArgument("n_bytes must be at least 1");
  const std::size_t rounds = (8 * n_bytes + n_bits_ - 1) / n_bits_;
  BitSequence bits = bit_stream(rounds, false);
  bits.resize(8 * n_bytes);
  return pack_bits(bits);
}

}  // namespace cirng
