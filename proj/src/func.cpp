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

#include "cirng/func.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>

#include "cirng/errors.hpp"

namespace cirng {

namespace {

void check_n_bits(unsigned n_bits, const Limits& limits) {
  if (n_bits < 2) {
    throw InvalidArgument("n_bits must be at least 2, got " +
                          std::to_string(n_bits));
  }
  if (n_bits > limits.max_table_bits) {
    throw InvalidArgument("n_bits " + std::to_string(n_bits) +
                          " exceeds the table limit of " +
                          std::to_string(limits.max_table_bits));
  }
}

// First value in `row` whose multiplicity is not one, if any.
std::optional<BalanceViolation> row_violation(std::span<const State> row,
                                              unsigned p,
                                              std::vector<std::uint32_t>& count) {
  std::fill(count.begin(), count.end(), 0);
  for (State v : row) ++count[v];
  for (State v = 0; v < count.size(); ++v) {
    if (count[v] == 1) continue;
    return BalanceViolation{count[v] == 0
                                ? BalanceViolation::Kind::missing_value
                                : BalanceViolation::Kind::duplicated_value,
                            p, v, std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

VectorOfImages::VectorOfImages(unsigned n_bits, std::vector<State> images,
                               const Limits& limits)
    : n_bits_(n_bits), images_(std::move(images)) {
  check_n_bits(n_bits, limits);
  const std::size_t expected = std::size_t{1} << n_bits;
  if (images_.size() != expected) {
    throw InvalidArgument("expected " + std::to_string(expected) +
                          " images for n_bits " + std::to_string(n_bits) +
                          ", got " + std::to_string(images_.size()));
  }
  for (std::size_t q = 0; q < images_.size(); ++q) {
    if (images_[q] >= expected) {
      throw InvalidArgument("image " + std::to_string(images_[q]) +
                            " at position " + std::to_string(q) +
                            " is out of range");
    }
  }
}

VectorOfImages negation(unsigned n_bits, const Limits& limits) {
  check_n_bits(n_bits, limits);
  std::vector<State> images(std::size_t{1} << n_bits);
  const State mask = static_cast<State>(images.size() - 1);
  for (State q = 0; q < images.size(); ++q) images[q] = mask - q;
  return VectorOfImages(n_bits, std::move(images), limits);
}

VectorOfImages identity(unsigned n_bits, const Limits& limits) {
  check_n_bits(n_bits, limits);
  std::vector<State> images(std::size_t{1} << n_bits);
  for (State q = 0; q < images.size(); ++q) images[q] = q;
  return VectorOfImages(n_bits, std::move(images), limits);
}

MappingMatrix::MappingMatrix(const VectorOfImages& f)
    : n_bits_(f.n_bits()), columns_(f.size()), cells_(n_bits_ * columns_) {
  for (unsigned p = 1; p <= n_bits_; ++p) {
    const State m = coordinate_mask(n_bits_, p);
    State* out = cells_.data() + (p - 1) * columns_;
    for (State q = 0; q < columns_; ++q) out[q] = (q & ~m) | (f[q] & m);
  }
}

MappingMatrix mapping_matrix(const VectorOfImages& f) {
  return MappingMatrix(f);
}

BalanceVerdict is_balanced(const VectorOfImages& f) {
  const MappingMatrix matrix(f);
  std::vector<std::uint32_t> count(f.size());
  for (unsigned p = 1; p <= f.n_bits(); ++p) {
    if (auto v = row_violation(matrix.row(p), p, count)) {
      return BalanceVerdict{false, v};
    }
  }
  return {};
}

BalanceVerdict balance_rule_check(const VectorOfImages& f) {
  const State mask = f.state_mask();
  for (State q = 0; q < f.size(); ++q) {
    const State negated = mask - q;
    const State diff = f[q] ^ negated;
    if (diff == 0) continue;
    const std::size_t j = q + 1;
    if (!std::has_single_bit(diff)) {
      return BalanceVerdict{
          false, BalanceViolation{BalanceViolation::Kind::multi_bit_edit, 0,
                                  f[q], j}};
    }
    // F'_{2^N - C} must equal 2^N - j. In 0-based storage the position
    // 2^N - C is index mask - C and 2^N - j is mask - q.
    const State c = f[q];
    if (f[mask - c] != mask - q) {
      const auto bit = static_cast<unsigned>(std::countr_zero(diff)) + 1;
      return BalanceVerdict{
          false, BalanceViolation{BalanceViolation::Kind::unpaired_edit, bit,
                                  c, j}};
    }
  }
  return {};
}

VectorOfImages mutate_pair(const VectorOfImages& f, std::size_t j,
                           unsigned i) {
  if (j < 1 || j > f.size()) {
    throw InvalidArgument("position " + std::to_string(j) +
                          " is outside [1, " + std::to_string(f.size()) + "]");
  }
  if (i < 1 || i > f.n_bits()) {
    throw InvalidArgument("bit " + std::to_string(i) + " is outside [1, " +
                          std::to_string(f.n_bits()) + "]");
  }
  if (!is_balanced(f)) {
    throw InvalidArgument("mutate_pair requires a balanced function");
  }
  const State w = bit_mask(i);
  const State q = static_cast<State>(j - 1);
  std::vector<State> images(f.images().begin(), f.images().end());
  images[q] ^= w;
  images[q ^ w] ^= w;
  Limits limits;
  limits.max_table_bits = std::max(limits.max_table_bits, f.n_bits());
  return VectorOfImages(f.n_bits(), std::move(images), limits);
}

VectorOfImages parse_function(std::string_view text, const Limits& limits) {
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t pos = 0;

  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(line, col, what);
  };
  auto read_uint = [&](const char* what) -> std::uint64_t {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
      throw fail(std::string("expected ") + what);
    }
    std::uint64_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) throw fail(std::string(what) + " is too large");
    const auto consumed = static_cast<std::size_t>(ptr - first);
    pos += consumed;
    col += consumed;
    return value;
  };
  auto expect = [&](char c, const char* what) {
    if (pos >= text.size() || text[pos] != c) throw fail(what);
    ++pos;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };

  const std::uint64_t n = read_uint("the state width N");
  if (n < 2 || n > limits.max_table_bits) {
    col = 1;
    throw fail("N must lie in [2, " + std::to_string(limits.max_table_bits) +
               "], got " + std::to_string(n));
  }
  expect('\n', "expected a newline after N");

  const auto n_bits = static_cast<unsigned>(n);
  const std::size_t count = std::size_t{1} << n_bits;
  std::vector<State> images;
  images.reserve(count);
  while (true) {
    const std::size_t start_col = col;
    const std::uint64_t v = read_uint("an image");
    if (v >= count) {
      col = start_col;
      throw fail("image " + std::to_string(v) + " is outside [0, " +
                 std::to_string(count - 1) + "]");
    }
    images.push_back(static_cast<State>(v));
    if (pos < text.size() && text[pos] == ' ') {
      if (images.size() == count) {
        throw fail("expected " + std::to_string(count) + " images, found more");
      }
      expect(' ', "expected a single space");
      continue;
    }
    break;
  }
  if (images.size() != count) {
    throw fail("expected " + std::to_string(count) + " images, found " +
               std::to_string(images.size()));
  }
  expect('\n', "expected a newline after the last image");
  if (pos != text.size()) throw fail("unexpected trailing content");
  return VectorOfImages(n_bits, std::move(images), limits);
}

std::string format_function(const VectorOfImages& f) {
  std::string out = std::to_string(f.n_bits());
  out += '\n';
  for (std::size_t q = 0; q < f.size(); ++q) {
    if (q != 0) out += ' ';
    out += std::to_string(f[static_cast<State>(q)]);
  }
  out += '\n';
  return out;
}

VectorOfImages read_function_file(const std::filesystem::path& path,
                                  const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_function(text, limits);
}

void write_function_file(const std::filesystem::path& path,
                         const VectorOfImages& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << format_function(f);
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace cirng
