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

#include "cirng/sources.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "cirng/errors.hpp"

namespace cirng {

XorShift64::XorShift64(std::uint64_t seed) : state_(seed) {
  if (seed == 0) throw InvalidArgument("xorshift seed must be nonzero");
}

ScriptedSource::ScriptedSource(std::vector<std::uint32_t> script, bool cycle)
    : script_(std::move(script)), cycle_(cycle) {
  if (cycle_ && script_.empty()) {
    throw InvalidArgument("a cycling script needs at least one entry");
  }
}

std::uint32_t ScriptedSource::next() {
  if (cursor_ == script_.size()) {
    if (!cycle_) {
      throw SourceExhausted("scripted source exhausted after " +
                            std::to_string(script_.size()) + " entries");
    }
    cursor_ = 0;
  }
  return script_[cursor_++];
}

EntropySource EntropySource::xorshift(std::uint64_t seed) {
  return EntropySource(XorShift64(seed));
}

EntropySource EntropySource::scripted(std::vector<std::uint32_t> script,
                                      bool cycle) {
  return EntropySource(ScriptedSource(std::move(script), cycle));
}

unsigned EntropySource::next_bit() {
  if (auto* x = std::get_if<XorShift64>(&impl_)) {
    return static_cast<unsigned>(x->next() & 1u);
  }
  const std::uint32_t v = std::get<ScriptedSource>(impl_).next();
  if (v > 1) {
    throw InvalidArgument("scripted bit " + std::to_string(v) +
                          " is not 0 or 1");
  }
  return v;
}

unsigned EntropySource::next_coordinate(unsigned n_bits) {
  if (n_bits < 2) {
    throw InvalidArgument("n_bits must be at least 2, got " +
                          std::to_string(n_bits));
  }
  if (auto* x = std::get_if<XorShift64>(&impl_)) {
    return static_cast<unsigned>(x->next() % n_bits) + 1;
  }
  const std::uint32_t v = std::get<ScriptedSource>(impl_).next();
  if (v < 1 || v > n_bits) {
    throw InvalidArgument("scripted coordinate " + std::to_string(v) +
                          " is outside [1, " + std::to_string(n_bits) + "]");
  }
  return v;
}

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.size() > 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  std::uint64_t value = 0;
  const char* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), last, value, base);
  if (digits.empty() || ec != std::errc() || ptr != last) {
    throw InvalidArgument("invalid seed '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::uint32_t> parse_script(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    std::uint32_t v = 0;
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), last, v);
    if (item.empty() || ec != std::errc() || ptr != last) {
      throw InvalidArgument("invalid script entry '" + std::string(item) +
                            "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace cirng
