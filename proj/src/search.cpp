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

#include "cirng/search.hpp"

#include <limits>
#include <string>

#include "cirng/errors.hpp"
#include "cirng/graph.hpp"

namespace cirng {

namespace {

// Allocation-free equivalent of is_balanced: row p of the mapping matrix is
// a permutation iff, for every state q, the states q and q ^ m (m the weight
// of coordinate p) agree on whether f moves coordinate p.
bool rows_are_permutations(std::span<const State> images, unsigned n_bits) {
  for (unsigned i = 1; i <= n_bits; ++i) {
    const State w = bit_mask(i);
    for (State q = 0; q < images.size(); ++q) {
      if (q & w) continue;
      const State moved_lo = (images[q] ^ q) & w;
      const State moved_hi = (images[q ^ w] ^ (q ^ w)) & w;
      if (moved_lo != moved_hi) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<MutationSite> mutation_sites(unsigned n_bits) {
  std::vector<MutationSite> sites;
  const std::size_t states = std::size_t{1} << n_bits;
  sites.reserve(n_bits * states / 2);
  for (std::size_t q = 0; q < states; ++q) {
    for (unsigned i = 1; i <= n_bits; ++i) {
      if ((q & bit_mask(i)) == 0) sites.push_back({q + 1, i});
    }
  }
  return sites;
}

std::uint64_t count_candidates(unsigned n_bits, unsigned max_mutations) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t sites =
      static_cast<std::uint64_t>(n_bits) << (n_bits - 1);
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(sites, d)
  for (std::uint64_t d = 0; d <= max_mutations && d <= sites; ++d) {
    if (d > 0) {
      // binom * (sites - d + 1) / d stays exact when multiplied first; use
      // 128-bit arithmetic to detect overflow.
      const unsigned __int128 next =
          static_cast<unsigned __int128>(binom) * (sites - d + 1) / d;
      if (next > kMax) return kMax;
      binom = static_cast<std::uint64_t>(next);
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

std::uint64_t search_functions(
    unsigned n_bits, const SearchOptions& options,
    const std::function<void(const VectorOfImages&)>& visit) {
  if (n_bits < 2) {
    throw InvalidArgument("n_bits must be at least 2, got " +
                          std::to_string(n_bits));
  }
  if (n_bits > options.limits.max_graph_bits) {
    throw ResourceLimit("n_bits " + std::to_string(n_bits) +
                        " exceeds the search limit of " +
                        std::to_string(options.limits.max_graph_bits));
  }
  const std::uint64_t candidates =
      count_candidates(n_bits, options.max_mutations);
  if (candidates > options.candidate_cap) {
    throw ResourceLimit(std::to_string(candidates) +
                        " candidates exceed the cap of " +
                        std::to_string(options.candidate_cap));
  }

  const auto sites = mutation_sites(n_bits);
  const VectorOfImages start = negation(n_bits, options.limits);
  std::vector<State> images(start.images().begin(), start.images().end());
  ConnectivityChecker checker;
  std::uint64_t emitted = 0;

  // Pair flips on distinct sites touch disjoint (position, bit) cells, so
  // every combination yields a distinct function.
  auto emit = [&] {
    if (!rows_are_permutations(images, n_bits)) return;
    if (options.require_chaos && !checker.strongly_connected(images, n_bits)) {
      return;
    }
    visit(VectorOfImages(n_bits, images, options.limits));
    ++emitted;
  };
  auto flip = [&](const MutationSite& s) {
    const State w = bit_mask(s.i);
    const auto q = static_cast<State>(s.j - 1);
    images[q] ^= w;
    images[q ^ w] ^= w;
  };

  // Depth-first over increasing site indices gives lexicographic order of
  // the combinations of one size.
  std::function<void(std::size_t, unsigned)> extend =
      [&](std::size_t first, unsigned remaining) {
        if (remaining == 0) {
          emit();
          return;
        }
        for (std::size_t a = first; a + remaining <= sites.size(); ++a) {
          flip(sites[a]);
          extend(a + 1, remaining - 1);
          flip(sites[a]);
        }
      };
  for (unsigned depth = 0; depth <= options.max_mutations; ++depth) {
    if (depth > sites.size()) break;
    extend(0, depth);
  }
  return emitted;
}

std::vector<VectorOfImages> search_functions(unsigned n_bits,
                                             unsigned max_mutations,
                                             bool require_chaos) {
  SearchOptions options;
  options.max_mutations = max_mutations;
  options.require_chaos = require_chaos;
  std::vector<VectorOfImages> found;
  search_functions(n_bits, options,
                   [&found](const VectorOfImages& f) { found.push_back(f); });
  return found;
}

}  // namespace cirng
