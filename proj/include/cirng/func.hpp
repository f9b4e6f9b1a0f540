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

// Boolean iteration functions f: B^N -> B^N stored as vectors of images,
// their mapping matrices, and the balance checks used to select functions
// for the chaotic-iteration generator.
//
// Conventions used throughout the library:
//
//  * Storage is 0-based: images()[q] = f(q). Published formulas that index
//    positions 1..2^N use j = q + 1; every function taking a `j` says so.
//  * Coordinate p in [1, N] of a state is the p-th bit counted from the
//    left, i.e. it has weight 2^(N-p). Coordinate 1 is the most significant
//    bit of the printed binary form x_1 x_2 ... x_N.
//  * "Bit i" (used by the paired-mutation rule) counts from the right
//    starting at 1, i.e. it has weight 2^(i-1). Bit i is coordinate N-i+1.

#ifndef CIRNG_FUNC_HPP_
#define CIRNG_FUNC_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cirng {

// A state of the N-bit system, in [0, 2^N - 1].
using State = std::uint32_t;

// Size limits for operations that allocate 2^N-sized tables.
struct Limits {
  unsigned max_table_bits = 16;  // vectors of images, mapping matrices
  unsigned max_graph_bits = 12;  // exhaustive graph and search operations
};

// Weight of coordinate p (1 = leftmost) in an n_bits-wide state.
constexpr State coordinate_mask(unsigned n_bits, unsigned p) {
  return State{1} << (n_bits - p);
}

// Weight of bit i counted from the right, starting at 1.
constexpr State bit_mask(unsigned i) { return State{1} << (i - 1); }

// The vector of images F = (f(0), ..., f(2^N - 1)) of an iteration function.
class VectorOfImages {
 public:
  // Throws InvalidArgument unless 2 <= n_bits <= limits.max_table_bits,
  // images.size() == 2^n_bits and every image is below 2^n_bits.
  VectorOfImages(unsigned n_bits, std::vector<State> images,
                 const Limits& limits = {});

  unsigned n_bits() const noexcept { return n_bits_; }
  std::size_t size() const noexcept { return images_.size(); }
  State state_mask() const noexcept { return static_cast<State>(size() - 1); }

  State operator[](State q) const noexcept { return images_[q]; }
  std::span<const State> images() const noexcept { return images_; }

  friend bool operator==(const VectorOfImages&,
                         const VectorOfImages&) = default;

 private:
  unsigned n_bits_;
  std::vector<State> images_;
};

// Vectorial Boolean negation: f(q) = 2^N - 1 - q.
VectorOfImages negation(unsigned n_bits, const Limits& limits = {});

// f(q) = q.
VectorOfImages identity(unsigned n_bits, const Limits& limits = {});

// The N x 2^N table whose cell (p, q) is the successor of state q when
// coordinate p is updated: q with coordinate p replaced by f(q)'s.
class MappingMatrix {
 public:
  explicit MappingMatrix(const VectorOfImages& f);

  unsigned n_bits() const noexcept { return n_bits_; }
  std::size_t columns() const noexcept { return columns_; }

  // p in [1, N], q in [0, 2^N - 1].
  State cell(unsigned p, State q) const noexcept {
    return cells_[(p - 1) * columns_ + q];
  }
  std::span<const State> row(unsigned p) const noexcept {
    return std::span<const State>(cells_).subspan((p - 1) * columns_,
                                                  columns_);
  }

 private:
  unsigned n_bits_;
  std::size_t columns_;
  std::vector<State> cells_;
};

MappingMatrix mapping_matrix(const VectorOfImages& f);

struct BalanceViolation {
  enum class Kind {
    missing_value,     // a mapping-matrix row lacks `value`
    duplicated_value,  // a mapping-matrix row holds `value` more than once
    multi_bit_edit,    // image at `position` differs from the negation in
                       // more than one bit; outside the paired rule
    unpaired_edit,     // bit `row` of the image at `position` was flipped
                       // without the compensating edit
  };

  Kind kind;
  // Mapping-matrix row p for the permutation check; bit i (from the right)
  // for the paired rule. Zero for multi_bit_edit.
  unsigned row;
  State value;
  // 1-based position j of the offending image, for rule violations.
  std::optional<std::size_t> position;

  friend bool operator==(const BalanceViolation&,
                         const BalanceViolation&) = default;
};

struct BalanceVerdict {
  bool balanced = true;
  std::optional<BalanceViolation> first_violation;

  explicit operator bool() const noexcept { return balanced; }
};

// Definitional check: every row of mapping_matrix(f) is a permutation of
// [0, 2^N - 1]. The reported violation is the smallest value whose count in
// the first offending row differs from one.
BalanceVerdict is_balanced(const VectorOfImages& f);

// Balance Iteration Mapping Rule. Every image must either equal the
// negation's image or differ from it in exactly one bit i; in the latter
// case, with C the edited image at 1-based position j, the image at position
// 2^N - C must be 2^N - j. Sound but not complete: balanced functions whose
// images are further from the negation are rejected as multi_bit_edit.
BalanceVerdict balance_rule_check(const VectorOfImages& f);

// Flips bit i (from the right) of the image at 1-based position j together
// with the same bit of the image at the partner position whose state differs
// from j - 1 only in bit i. Starting from an image equal to the negation's,
// the partner is position 2^N - F'_j and its new image is 2^N - j.
//
// Throws InvalidArgument if j or i is out of range, or if f is not balanced
// (the pair flip preserves balance only on balanced input). Applying the
// same (j, i) twice restores f.
VectorOfImages mutate_pair(const VectorOfImages& f, std::size_t j, unsigned i);

// Parses the function file format: line 1 holds N, line 2 holds the 2^N
// images as decimal integers separated by single spaces, and the text ends
// with a newline. Throws ParseError with a 1-based line/column.
VectorOfImages parse_function(std::string_view text,
                              const Limits& limits = {});
std::string format_function(const VectorOfImages& f);

VectorOfImages read_function_file(const std::filesystem::path& path,
                                  const Limits& limits = {});
void write_function_file(const std::filesystem::path& path,
                         const VectorOfImages& f);

}  // namespace cirng

#endif  // CIRNG_FUNC_HPP_
