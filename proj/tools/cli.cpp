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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cirng/errors.hpp"
#include "cirng/func.hpp"
#include "cirng/generator.hpp"
#include "cirng/graph.hpp"
#include "cirng/search.hpp"
#include "cirng/sources.hpp"
#include "cirng/stats.hpp"

namespace cirng::cli {

namespace {

constexpr const char* kDefaultPrng1Seed = "0x2545F4914F6CDD1D";
constexpr const char* kDefaultPrng2Seed = "0x9E3779B97F4A7C15";

struct GenArgs {
  unsigned n_bits = 0;
  std::string function_file;
  std::string images;
  unsigned k = 0;
  bool compat = false;
  std::string seed_state = "0";
  std::string prng1_seed = kDefaultPrng1Seed;
  std::string prng2_seed = kDefaultPrng2Seed;
  std::string prng1_script;
  std::string prng2_script;
  std::string prng1_script_file;
  std::string prng2_script_file;
  bool cycle_scripts = false;
  std::size_t rounds = 0;
  std::size_t bytes = 0;
  bool include_seed = false;
  std::string encoding = "ascii";
  std::string output;
};

struct SearchArgs {
  unsigned n_bits = 4;
  unsigned max_mutations = 1;
  bool no_chaos = false;
  std::uint64_t cap = SearchOptions{}.candidate_cap;
  bool count_only = false;
  std::string output;
};

struct TestArgs {
  std::string input;
  std::string format = "ascii";
  double alpha = 0.01;
  std::size_t block_size = 0;
  unsigned serial_m = 0;
  unsigned apen_m = 0;
  std::size_t max_bits = 0;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to `path`, or to `out` when path is empty or "-".
template <typename Writer>
void with_output(const std::string& path, std::ostream& out, Writer write) {
  if (path.empty() || path == "-") {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  write(file);
  if (!file) throw Error("failed writing " + path);
}

EntropySource make_source(const std::string& seed, const std::string& script,
                          const std::string& script_file, bool cycle) {
  if (!script_file.empty()) {
    std::string text = read_text(script_file);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
      text.pop_back();
    }
    return EntropySource::scripted(parse_script(text), cycle);
  }
  if (!script.empty()) {
    return EntropySource::scripted(parse_script(script), cycle);
  }
  return EntropySource::xorshift(parse_seed(seed));
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  std::optional<VectorOfImages> f;
  if (!a.function_file.empty()) {
    f = read_function_file(a.function_file);
  } else if (!a.images.empty()) {
    if (a.n_bits == 0) throw InvalidArgument("--images requires --n-bits");
    const auto raw = parse_script(a.images);
    f = VectorOfImages(a.n_bits, std::vector<State>(raw.begin(), raw.end()));
  } else {
    if (a.n_bits == 0) {
      throw InvalidArgument("give --n-bits, --function or --images");
    }
    f = negation(a.n_bits);
  }
  if (a.n_bits != 0 && a.n_bits != f->n_bits()) {
    throw InvalidArgument("--n-bits " + std::to_string(a.n_bits) +
                          " disagrees with the function's N = " +
                          std::to_string(f->n_bits()));
  }
  const unsigned n = f->n_bits();
  const unsigned k = a.k != 0 ? a.k : GeneratorConfig::min_strict_k(n);
  const std::uint64_t seed_state = parse_seed(a.seed_state);
  if (seed_state > f->state_mask()) {
    throw InvalidArgument("seed state " + a.seed_state + " does not fit in " +
                          std::to_string(n) + " bits");
  }
  GeneratorConfig config{*f, k, static_cast<State>(seed_state),
                         a.compat ? KMode::compat : KMode::strict};
  Generator gen(std::move(config),
                make_source(a.prng1_seed, a.prng1_script,
                            a.prng1_script_file, a.cycle_scripts),
                make_source(a.prng2_seed, a.prng2_script,
                            a.prng2_script_file, a.cycle_scripts));

  if (a.encoding == "integers") {
    if (a.rounds == 0) throw InvalidArgument("--encoding integers needs --rounds");
    std::ostringstream text;
    if (a.include_seed) text << gen.state() << '\n';
    for (std::size_t r = 0; r < a.rounds; ++r) text << gen.round() << '\n';
    with_output(a.output, out, [&](std::ostream& o) { o << text.str(); });
    return kOk;
  }

  BitSequence bits;
  if (a.bytes != 0) {
    bits = unpack_bits(gen.byte_stream(a.bytes));
  } else {
    bits = gen.bit_stream(a.rounds == 0 ? 1 : a.rounds, a.include_seed);
  }
  const StreamFormat format =
      a.encoding == "raw" ? StreamFormat::raw_bytes : StreamFormat::ascii01;
  with_output(a.output, out,
              [&](std::ostream& o) { export_stream(bits, format, o); });
  return kOk;
}

int cmd_verify(const std::string& path, bool porcelain, std::ostream& out) {
  const VectorOfImages f = read_function_file(path);
  const BalanceVerdict oracle = is_balanced(f);
  const BalanceVerdict rule = balance_rule_check(f);
  const ChaosVerdict chaos = is_strongly_connected(build_graph(f));
  auto yn = [](bool b) { return b ? "yes" : "no"; };

  if (porcelain) {
    out << "balanced\t" << yn(oracle.balanced) << '\n'
        << "rule\t" << yn(rule.balanced) << '\n'
        << "chaotic\t" << yn(chaos.strongly_connected) << '\n'
        << "scc-count\t" << chaos.scc_count << '\n';
  } else {
    out << "permutation rows: " << yn(oracle.balanced);
    if (const auto& v = oracle.first_violation) {
      out << " (row " << v->row << ": value " << v->value << ' '
          << (v->kind == BalanceViolation::Kind::missing_value ? "missing"
                                                               : "repeated")
          << ')';
    }
    out << '\n' << "mapping rule: " << yn(rule.balanced);
    if (const auto& v = rule.first_violation) {
      if (v->kind == BalanceViolation::Kind::multi_bit_edit) {
        out << " (position " << *v->position
            << " differs from the negation in several bits)";
      } else {
        out << " (position " << *v->position << ", bit " << v->row
            << " lacks its paired edit)";
      }
    }
    out << '\n'
        << "strongly connected components: " << chaos.scc_count << '\n';
    if (chaos.witness) {
      out << "no path from " << chaos.witness->first << " to "
          << chaos.witness->second << '\n';
    }
    out << "balanced: " << yn(oracle.balanced)
        << ", chaotic: " << yn(chaos.strongly_connected) << '\n';
  }
  return oracle.balanced && chaos.strongly_connected ? kOk : kCheckFailed;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchOptions options;
  options.max_mutations = a.max_mutations;
  options.require_chaos = !a.no_chaos;
  options.candidate_cap = a.cap;
  std::uint64_t count = 0;
  with_output(a.output, out, [&](std::ostream& o) {
    std::string line;
    count = search_functions(a.n_bits, options, [&](const VectorOfImages& f) {
      if (a.count_only) return;
      line.clear();
      for (std::size_t q = 0; q < f.size(); ++q) {
        if (q != 0) line += ' ';
        line += std::to_string(f[static_cast<State>(q)]);
      }
      line += '\n';
      o << line;
    });
    if (a.count_only) o << count << '\n';
  });
  return kOk;
}

int cmd_graph(const std::string& path, const std::string& output,
              std::ostream& out) {
  const VectorOfImages f = read_function_file(path);
  const std::string dot = export_dot(build_graph(f));
  with_output(output, out, [&](std::ostream& o) { o << dot; });
  return kOk;
}

int cmd_test(const TestArgs& a, bool porcelain, std::ostream& out) {
  BitSequence bits = import_stream(
      std::filesystem::path(a.input),
      a.format == "raw" ? StreamFormat::raw_bytes : StreamFormat::ascii01);
  if (a.max_bits != 0 && bits.size() > a.max_bits) bits.resize(a.max_bits);

  BatteryConfig config = BatteryConfig::recommended_for(bits.size());
  config.alpha = a.alpha;
  if (a.block_size != 0) config.block_frequency_size = a.block_size;
  if (a.serial_m != 0) config.serial_m = a.serial_m;
  if (a.apen_m != 0) config.approximate_entropy_m = a.apen_m;

  const TestReport report = run_battery(bits, config);
  out << (porcelain ? report.format_porcelain() : report.format_text());
  return report.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "cirng: build, verify and test chaotic-iteration pseudo-random number "
      "generators"};
  app.name("cirng");
  app.require_subcommand(1, 1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain,
               "Machine-readable output for verify and test");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand(
      "gen",
      "Generate output of CI_f(PRNG1, PRNG2). Each round draws m = PRNG1 bit "
      "+ k and applies m single-coordinate updates chosen by PRNG2.");
  gen_cmd->add_option("--n-bits,-n", gen.n_bits,
                      "State width N (defaults to the function's)");
  auto* fn_opt = gen_cmd->add_option("--function,-f", gen.function_file,
                                     "Function file (default: negation)");
  auto* images_opt = gen_cmd->add_option(
      "--images", gen.images, "Vector of images as a comma-separated list");
  images_opt->excludes(fn_opt);
  gen_cmd->add_option("--k,-k", gen.k,
                      "Round-length constant (default 3N+1; strict mode "
                      "requires k > 3N)");
  gen_cmd->add_flag("--compat", gen.compat,
                    "Compatibility mode: accept any k >= 1, e.g. N = k = 4");
  gen_cmd->add_option("--seed-state", gen.seed_state,
                      "Initial state x^0, decimal or 0x-hex")
      ->capture_default_str();
  auto* s1 = gen_cmd->add_option("--prng1-seed", gen.prng1_seed,
                                 "Xorshift seed of PRNG1 (bits)")
                 ->capture_default_str();
  auto* s2 = gen_cmd->add_option("--prng2-seed", gen.prng2_seed,
                                 "Xorshift seed of PRNG2 (coordinates)")
                 ->capture_default_str();
  auto* c1 = gen_cmd->add_option("--prng1-script", gen.prng1_script,
                                 "Replay PRNG1 bits, e.g. 0,1,0");
  auto* c2 = gen_cmd->add_option("--prng2-script", gen.prng2_script,
                                 "Replay PRNG2 coordinates, e.g. 2,4,2,3");
  auto* f1 = gen_cmd->add_option("--prng1-script-file", gen.prng1_script_file,
                                 "PRNG1 script read from a file");
  auto* f2 = gen_cmd->add_option("--prng2-script-file", gen.prng2_script_file,
                                 "PRNG2 script read from a file");
  c1->excludes(s1)->excludes(f1);
  f1->excludes(s1);
  c2->excludes(s2)->excludes(f2);
  f2->excludes(s2);
  gen_cmd->add_flag("--cycle-scripts", gen.cycle_scripts,
                    "Restart scripts when exhausted instead of failing");
  auto* rounds_opt =
      gen_cmd->add_option("--rounds,-r", gen.rounds, "Rounds to emit (default 1)");
  auto* bytes_opt =
      gen_cmd->add_option("--bytes,-b", gen.bytes, "Bytes to emit instead of rounds");
  bytes_opt->excludes(rounds_opt);
  auto* seed_flag = gen_cmd->add_flag(
      "--include-seed", gen.include_seed,
      "Prefix the output with the initial state x^0");
  seed_flag->excludes(bytes_opt);
  gen_cmd->add_option("--encoding,-e", gen.encoding,
                      "ascii ('0'/'1' line), raw (MSB-first bytes) or "
                      "integers (one state per line)")
      ->check(CLI::IsMember({"ascii", "raw", "integers"}))
      ->capture_default_str();
  gen_cmd->add_option("--output,-o", gen.output, "Output file (default stdout)");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Check a function file for balance (permutation rows and the paired "
      "mapping rule) and chaos (strong connectivity). Exit 0 iff balanced "
      "and chaotic.");
  verify_cmd->add_option("function", verify_path, "Function file")->required();

  SearchArgs search;
  auto* search_cmd = app.add_subcommand(
      "search",
      "List balanced (and by default chaotic) functions reachable from the "
      "negation by paired mutations, one vector of images per line.");
  search_cmd->add_option("--n-bits,-n", search.n_bits, "State width N")
      ->capture_default_str();
  search_cmd->add_option("--max-mutations,-m", search.max_mutations,
                         "Maximum number of paired mutations")
      ->capture_default_str();
  search_cmd->add_flag("--no-chaos", search.no_chaos,
                       "Do not require a strongly connected iteration graph");
  search_cmd->add_option("--cap", search.cap, "Maximum candidates examined")
      ->capture_default_str();
  search_cmd->add_flag("--count", search.count_only,
                       "Print only the number of functions found");
  search_cmd->add_option("--output,-o", search.output,
                         "Output file (default stdout)");

  std::string graph_path;
  std::string graph_output;
  auto* graph_cmd = app.add_subcommand(
      "graph", "Write the iteration graph of a function in DOT format.");
  graph_cmd->add_option("function", graph_path, "Function file")->required();
  graph_cmd->add_option("--output,-o", graph_output,
                        "Output file (default stdout)");

  TestArgs test;
  auto* test_cmd = app.add_subcommand(
      "test",
      "Run the statistical battery on a bit stream. Exit 0 iff every "
      "sub-test passes.");
  test_cmd->add_option("input", test.input, "Stream file")->required();
  test_cmd->add_option("--format", test.format,
                       "ascii ('0'/'1' characters) or raw (MSB-first bytes)")
      ->check(CLI::IsMember({"ascii", "raw"}))
      ->capture_default_str();
  test_cmd->add_option("--alpha", test.alpha, "Significance level")
      ->capture_default_str();
  test_cmd->add_option("--block-size", test.block_size,
                       "Block frequency block length (default 128)");
  test_cmd->add_option("--serial-m", test.serial_m,
                       "Serial template length (default 10, lowered for "
                       "short streams)");
  test_cmd->add_option("--apen-m", test.apen_m,
                       "Approximate entropy block length (default 10, "
                       "lowered for short streams)");
  test_cmd->add_option("--max-bits", test.max_bits,
                       "Use only the first N bits of the stream");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_path, porcelain, out);
    if (search_cmd->parsed()) return cmd_search(search, out);
    if (graph_cmd->parsed()) return cmd_graph(graph_path, graph_output, out);
    if (test_cmd->parsed()) return cmd_test(test, porcelain, out);
  } catch (const Error& e) {
    err << "cirng: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cirng::cli
