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

#include "cirng/stats.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "cirng/errors.hpp"

namespace cirng {

namespace special {

double igamc(double a, double x) {
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(a, x);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

}  // namespace special

namespace {

double clamp_p(double p) { return std::clamp(p, 0.0, 1.0); }

void require_length(const char* test, Bits bits, std::size_t minimum) {
  if (bits.size() < minimum) {
    throw StreamTooShort(test, minimum, bits.size());
  }
}

// Cumulative-sums p-value for a stream of n bits whose partial sums peak at
// |z|. Summation bounds use truncating integer division, as in the
// reference implementation.
double cusum_p_value(long long n, long long z) {
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double zd = static_cast<double>(z);
  double sum1 = 0.0;
  for (long long k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; ++k) {
    sum1 += special::normal_cdf((4 * k + 1) * zd / sqrt_n);
    sum1 -= special::normal_cdf((4 * k - 1) * zd / sqrt_n);
  }
  double sum2 = 0.0;
  for (long long k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; ++k) {
    sum2 += special::normal_cdf((4 * k + 3) * zd / sqrt_n);
    sum2 -= special::normal_cdf((4 * k + 1) * zd / sqrt_n);
  }
  return clamp_p(1.0 - sum1 + sum2);
}

// Counts of every overlapping m-bit pattern, wrapping around the end.
std::vector<std::uint64_t> pattern_counts(Bits bits, unsigned m) {
  std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
  if (m == 0) {
    counts[0] = bits.size();
    return counts;
  }
  const std::size_t n = bits.size();
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  std::uint64_t window = 0;
  for (unsigned t = 0; t + 1 < m; ++t) window = (window << 1) | bits[t % n];
  for (std::size_t i = 0; i < n; ++i) {
    window = ((window << 1) | bits[(i + m - 1) % n]) & mask;
    ++counts[window];
  }
  return counts;
}

double psi_squared(Bits bits, unsigned m) {
  if (m == 0) return 0.0;
  const auto counts = pattern_counts(bits, m);
  long double sum = 0.0L;
  for (std::uint64_t c : counts) sum += static_cast<long double>(c) * c;
  const long double n = bits.size();
  return static_cast<double>(std::ldexp(sum, static_cast<int>(m)) / n - n);
}

// Sum of c log c over the overlapping m-bit pattern counts. phi(m) is this
// over n minus log n; the log n terms cancel in ApEn, so they are left out.
long double count_entropy(Bits bits, unsigned m) {
  long double sum = 0.0L;
  for (std::uint64_t c : pattern_counts(bits, m)) {
    if (c == 0) continue;
    const auto lc = static_cast<long double>(c);
    sum += lc * std::log(lc);
  }
  return sum;
}

}  // namespace

double frequency_test(Bits bits) {
  require_length("frequency", bits, 100);
  long long sum = 0;
  for (std::uint8_t b : bits) sum += b ? 1 : -1;
  const double s_obs = std::abs(static_cast<double>(sum)) /
                       std::sqrt(static_cast<double>(bits.size()));
  return clamp_p(std::erfc(s_obs / std::numbers::sqrt2));
}

double block_frequency_test(Bits bits, std::size_t block_size) {
  if (block_size < 1) throw InvalidArgument("block size must be positive");
  require_length("block-frequency", bits, std::max<std::size_t>(100, block_size));
  const std::size_t blocks = bits.size() / block_size;
  double chi2 = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t ones = 0;
    for (std::size_t t = 0; t < block_size; ++t) ones += bits[b * block_size + t];
    const double pi = static_cast<double>(ones) / block_size - 0.5;
    chi2 += pi * pi;
  }
  chi2 *= 4.0 * static_cast<double>(block_size);
  return clamp_p(special::igamc(blocks / 2.0, chi2 / 2.0));
}

double runs_test(Bits bits) {
  require_length("runs", bits, 100);
  const double n = static_cast<double>(bits.size());
  std::size_t ones = 0;
  for (std::uint8_t b : bits) ones += b;
  const double pi = ones / n;
  // Frequency prerequisite.
  if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) return 0.0;
  std::size_t v = 1;
  for (std::size_t i = 1; i < bits.size(); ++i) v += bits[i] != bits[i - 1];
  const double num = std::abs(v - 2.0 * n * pi * (1.0 - pi));
  const double den = 2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi);
  return clamp_p(std::erfc(num / den));
}

double longest_run_test(Bits bits) {
  require_length("longest-run", bits, 128);
  std::size_t block;
  unsigned lo;
  std::vector<double> probs;
  if (bits.size() < 6272) {
    block = 8;
    lo = 1;
    probs = {0.21484375, 0.3671875, 0.23046875, 0.1875};
  } else if (bits.size() < 750000) {
    block = 128;
    lo = 4;
    probs = {0.1174035788, 0.242955959, 0.249363483,
             0.17517706,   0.102701071, 0.112398847};
  } else {
    block = 10000;
    lo = 10;
    probs = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }
  const unsigned hi = lo + static_cast<unsigned>(probs.size()) - 1;
  const std::size_t blocks = bits.size() / block;
  std::vector<std::size_t> classes(probs.size(), 0);
  for (std::size_t b = 0; b < blocks; ++b) {
    unsigned run = 0;
    unsigned longest = 0;
    for (std::size_t t = 0; t < block; ++t) {
      run = bits[b * block + t] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    ++classes[std::clamp(longest, lo, hi) - lo];
  }
  double chi2 = 0.0;
  for (std::size_t c = 0; c < probs.size(); ++c) {
    const double expected = blocks * probs[c];
    const double d = classes[c] - expected;
    chi2 += d * d / expected;
  }
  return clamp_p(special::igamc((probs.size() - 1) / 2.0, chi2 / 2.0));
}

std::array<double, 2> cumulative_sums_test(Bits bits) {
  require_length("cumulative-sums", bits, 100);
  const auto n = static_cast<long long>(bits.size());
  long long s = 0;
  long long forward = 0;
  for (std::uint8_t b : bits) {
    s += b ? 1 : -1;
    forward = std::max(forward, std::abs(s));
  }
  s = 0;
  long long backward = 0;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    s += *it ? 1 : -1;
    backward = std::max(backward, std::abs(s));
  }
  return {cusum_p_value(n, forward), cusum_p_value(n, backward)};
}

std::size_t serial_min_length(unsigned m) { return std::size_t{1} << (m + 3); }

std::size_t approximate_entropy_min_length(unsigned m) {
  return std::size_t{1} << (m + 6);
}

std::array<double, 2> serial_test(Bits bits, unsigned m) {
  if (m < 2 || m > 24) {
    throw InvalidArgument("serial template length must lie in [2, 24]");
  }
  require_length("serial", bits, serial_min_length(m));
  const double psi_m = psi_squared(bits, m);
  const double psi_m1 = psi_squared(bits, m - 1);
  const double psi_m2 = psi_squared(bits, m - 2);
  const double del1 = psi_m - psi_m1;
  const double del2 = psi_m - 2.0 * psi_m1 + psi_m2;
  return {clamp_p(special::igamc(std::ldexp(1.0, static_cast<int>(m) - 2),
                                 del1 / 2.0)),
          clamp_p(special::igamc(std::ldexp(1.0, static_cast<int>(m) - 3),
                                 del2 / 2.0))};
}

double approximate_entropy_test(Bits bits, unsigned m) {
  if (m < 1 || m > 20) {
    throw InvalidArgument(
        "approximate entropy block length must lie in [1, 20]");
  }
  require_length("approximate-entropy", bits,
                 approximate_entropy_min_length(m));
  const double n = static_cast<double>(bits.size());
  const double apen = static_cast<double>(
      (count_entropy(bits, m) - count_entropy(bits, m + 1)) /
      static_cast<long double>(n));
  const double chi2 = 2.0 * n * (std::numbers::ln2 - apen);
  return clamp_p(
      special::igamc(std::ldexp(1.0, static_cast<int>(m) - 1), chi2 / 2.0));
}

BatteryConfig BatteryConfig::recommended_for(std::size_t n) {
  BatteryConfig config;
  const int log2n = n == 0 ? 0 : static_cast<int>(std::bit_width(n)) - 1;
  config.serial_m = static_cast<unsigned>(
      std::clamp(log2n - 3, 2, static_cast<int>(config.serial_m)));
  config.approximate_entropy_m = static_cast<unsigned>(std::clamp(
      log2n - 6, 1, static_cast<int>(config.approximate_entropy_m)));
  return config;
}

const std::vector<std::string>& battery_families() {
  static const std::vector<std::string> families = {
      "frequency",       "block-frequency", "runs",
      "longest-run",     "cumulative-sums", "serial",
      "approximate-entropy"};
  return families;
}

std::string family_of(const std::string& test_name) {
  for (const auto& family : battery_families()) {
    if (test_name == family) return family;
    if (test_name.size() > family.size() &&
        test_name.compare(0, family.size(), family) == 0 &&
        test_name[family.size()] == '-') {
      return family;
    }
  }
  return test_name;
}

bool TestReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const TestResult& r) { return r.pass; });
}

bool TestReport::family_passed(const std::string& family) const {
  bool seen = false;
  for (const auto& r : results) {
    if (family_of(r.name) != family) continue;
    seen = true;
    if (!r.pass) return false;
  }
  return seen;
}

std::string TestReport::format_text() const {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& f : family_means) {
    width = std::max(width, f.family.size() + 7);
  }
  std::ostringstream out;
  out << "stream length: " << stream_length << " bits, alpha = "
      << significance << '\n';
  out << std::fixed << std::setprecision(6);
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.name
        << std::right << std::setw(10) << r.p_value << "  "
        << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& f : family_means) {
    out << std::left << std::setw(static_cast<int>(width) + 2)
        << (f.family + " (mean)") << std::right << std::setw(10)
        << f.mean_p_value << '\n';
  }
  return out.str();
}

std::string TestReport::format_porcelain() const {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const auto& r : results) {
    out << r.name << '\t' << r.p_value << '\t' << (r.pass ? "PASS" : "FAIL")
        << '\n';
  }
  return out.str();
}

TestReport run_battery(Bits bits, const BatteryConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw InvalidArgument("significance level must lie in (0, 1)");
  }
  TestReport report;
  report.stream_length = bits.size();
  report.significance = config.alpha;

  auto add = [&](std::string name, double p) {
    report.results.push_back({std::move(name), p, p >= config.alpha});
  };
  add("frequency", frequency_test(bits));
  add("block-frequency", block_frequency_test(bits, config.block_frequency_size));
  add("runs", runs_test(bits));
  add("longest-run", longest_run_test(bits));
  const auto cusum = cumulative_sums_test(bits);
  add("cumulative-sums-forward", cusum[0]);
  add("cumulative-sums-backward", cusum[1]);
  const auto serial = serial_test(bits, config.serial_m);
  add("serial-1", serial[0]);
  add("serial-2", serial[1]);
  add("approximate-entropy",
      approximate_entropy_test(bits, config.approximate_entropy_m));

  report.family_means = {{"cumulative-sums", (cusum[0] + cusum[1]) / 2.0},
                         {"serial", (serial[0] + serial[1]) / 2.0}};
  return report;
}

double chi_square_symbols(std::span<const State> states, unsigned n_bits) {
  if (n_bits < 1 || n_bits > 24) {
    throw InvalidArgument("n_bits must lie in [1, 24]");
  }
  const std::size_t bins = std::size_t{1} << n_bits;
  if (states.size() < 5 * bins) {
    throw StreamTooShort("chi-square-symbols", 5 * bins, states.size());
  }
  std::vector<std::uint64_t> counts(bins, 0);
  for (State s : states) {
    if (s >= bins) {
      throw InvalidArgument("state " + std::to_string(s) +
                            " is outside [0, " + std::to_string(bins - 1) +
                            "]");
    }
    ++counts[s];
  }
  const double expected = static_cast<double>(states.size()) / bins;
  double chi2 = 0.0;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  return clamp_p(special::igamc((bins - 1) / 2.0, chi2 / 2.0));
}

void export_stream(Bits bits, StreamFormat format, std::ostream& out) {
  if (bits.empty()) throw InvalidArgument("cannot export an empty stream");
  if (format == StreamFormat::ascii01) {
    out << to_bit_string(bits) << '\n';
  } else {
    const auto bytes = pack_bits(bits);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) throw Error("failed writing stream");
}

void export_stream(Bits bits, StreamFormat format,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  export_stream(bits, format, out);
}

BitSequence import_stream(std::istream& in, StreamFormat format) {
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (format == StreamFormat::raw_bytes) {
    const auto* first = reinterpret_cast<const std::uint8_t*>(data.data());
    return unpack_bits(std::span<const std::uint8_t>(first, data.size()));
  }
  while (!data.empty() &&
         std::isspace(static_cast<unsigned char>(data.back()))) {
    data.pop_back();
  }
  return parse_bit_string(data);
}

BitSequence import_stream(const std::filesystem::path& path,
                          StreamFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return import_stream(in, format);
}

}  // namespace cirng
