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

#ifndef CIRNG_SEARCH_HPP_
#define CIRNG_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cirng/func.hpp"

namespace cirng {

// A paired mutation, named by its lower position: 1-based j whose state
// j - 1 has bit i clear. The mutation flips bit i at j and at its partner.
struct MutationSite {
  std::size_t j;
  unsigned i;

  friend bool operator==(const MutationSite&, const MutationSite&) = default;
};

// All N * 2^(N-1) distinct sites, ordered lexicographically by (j, i).
std::vector<MutationSite> mutation_sites(unsigned n_bits);

struct SearchOptions {
  unsigned max_mutations = 1;
  bool require_chaos = true;
  // Upper bound on the number of candidates examined.
  std::uint64_t candidate_cap = std::uint64_t{1} << 24;
  Limits limits;
};

// Number of functions reachable from the negation by at most
// `max_mutations` distinct paired mutations: sum over d of C(sites, d).
// Saturates at UINT64_MAX.
std::uint64_t count_candidates(unsigned n_bits, unsigned max_mutations);

// Visits every function reachable from negation(n_bits) by up to
// options.max_mutations paired mutations that is balanced and, if required,
// has a strongly connected iteration graph. Candidates are generated
// breadth-first by mutation count and, within one count, as lexicographic
// combinations of mutation_sites(n_bits). Returns the number of functions
// visited.
//
// Throws ResourceLimit before doing any work if n_bits exceeds
// options.limits.max_graph_bits or the candidate count exceeds
// options.candidate_cap.
std::uint64_t search_functions(
    unsigned n_bits, const SearchOptions& options,
    const std::function<void(const VectorOfImages&)>& visit);

// Collecting form of the above.
std::vector<VectorOfImages> search_functions(unsigned n_bits,
                                             unsigned max_mutations,
                                             bool require_chaos);

}  // namespace cirng

#endif  // CIRNG_SEARCH_HPP_
