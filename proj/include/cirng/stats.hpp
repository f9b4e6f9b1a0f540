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

// A desk-scale subset of the NIST SP 800-22 battery: frequency (monobit),
// block frequency, runs, longest run of ones, cumulative sums, serial and
// approximate entropy, plus export of streams for the official suites.

#ifndef CIRNG_STATS_HPP_
#define CIRNG_STATS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cirng/bits.hpp"
#include "cirng/func.hpp"

namespace cirng {

namespace special {

// Regularized upper incomplete gamma Q(a, x).
double igamc(double a, double x);
// Standard normal CDF.
double normal_cdf(double x);

}  // namespace special

using Bits = std::span<const std::uint8_t>;

// Individual tests. Each throws StreamTooShort below its minimum length:
//
//   frequency, runs, cumulative sums   100 bits
//   block frequency                    max(100, block_size) bits
//   longest run of ones                128 bits
//   serial (template length m >= 2)    2^(m+3) bits
//   approximate entropy (m >= 1)       2^(m+6) bits
//
// The serial and approximate-entropy minima are the suite's recommended
// m < floor(log2 n) - 2 and m < floor(log2 n) - 5.
double frequency_test(Bits bits);
double block_frequency_test(Bits bits, std::size_t block_size);
double runs_test(Bits bits);
// Block length and class boundaries follow the stream length: M = 8 below
// 6272 bits, M = 128 below 750000 bits, M = 10^4 otherwise.
double longest_run_test(Bits bits);
// {forward, backward}.
std::array<double, 2> cumulative_sums_test(Bits bits);
// {p1 from the first difference, p2 from the second difference}.
std::array<double, 2> serial_test(Bits bits, unsigned m);
double approximate_entropy_test(Bits bits, unsigned m);

std::size_t serial_min_length(unsigned m);
std::size_t approximate_entropy_min_length(unsigned m);

struct BatteryConfig {
  double alpha = 0.01;
  std::size_t block_frequency_size = 128;
  unsigned serial_m = 10;
  unsigned approximate_entropy_m = 10;

  // Defaults, with the template lengths lowered to the largest values the
  // suite recommends for a stream of n bits.
  static BatteryConfig recommended_for(std::size_t n);
};

struct TestResult {
  std::string name;
  double p_value;
  bool pass;
};

// Arithmetic mean of the sub-test p-values of one family.
struct FamilyMean {
  std::string family;
  double mean_p_value;
};

struct TestReport {
  std::size_t stream_length = 0;
  double significance = 0.01;
  // One entry per sub-test, in fixed order.
  std::vector<TestResult> results;
  // Only for families with more than one sub-test.
  std::vector<FamilyMean> family_means;

  bool all_passed() const;
  // True iff every sub-test of `family` passed.
  bool family_passed(const std::string& family) const;

  // Aligned table for people.
  std::string format_text() const;
  // "name<TAB>p-value<TAB>PASS|FAIL" per sub-test.
  std::string format_porcelain() const;
};

// The seven test families, in report order.
const std::vector<std::string>& battery_families();
// Family a sub-test belongs to, e.g. "serial" for "serial-2".
std::string family_of(const std::string& test_name);

TestReport run_battery(Bits bits, const BatteryConfig& config = {});

// Chi-square goodness of fit of the state histogram against the uniform
// distribution on [0, 2^N - 1]. Needs at least 5 * 2^N samples.
double chi_square_symbols(std::span<const State> states, unsigned n_bits);

enum class StreamFormat {
  raw_bytes,  // MSB-first packing, zero-padded final byte
  ascii01,    // one '0'/'1' per bit, then a newline
};

void export_stream(Bits bits, StreamFormat format, std::ostream& out);
void export_stream(Bits bits, StreamFormat format,
                   const std::filesystem::path& path);

// ascii01 ignores trailing whitespace; raw_bytes yields 8 bits per byte.
BitSequence import_stream(std::istream& in, StreamFormat format);
BitSequence import_stream(const std::filesystem::path& path,
                          StreamFormat format);

}  // namespace cirng

#endif  // CIRNG_STATS_HPP_
