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

#ifndef CIRNG_GRAPH_HPP_
#define CIRNG_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cirng/func.hpp"

namespace cirng {

// Iteration graph of f: vertices are the 2^N states and every vertex x has
// one arc per label i in [1, N], to x with coordinate i replaced by f(x)'s.
// Arcs are read straight out of the mapping matrix: target(x, i) is cell
// (i, x).
class IterationGraph {
 public:
  // Throws ResourceLimit if f.n_bits() exceeds limits.max_graph_bits.
  explicit IterationGraph(const VectorOfImages& f, const Limits& limits = {});

  unsigned n_bits() const noexcept { return matrix_.n_bits(); }
  std::size_t vertex_count() const noexcept { return matrix_.columns(); }
  std::size_t arc_count() const noexcept { return n_bits() * vertex_count(); }

  State target(State x, unsigned label) const noexcept {
    return matrix_.cell(label, x);
  }
  const MappingMatrix& matrix() const noexcept { return matrix_; }

 private:
  MappingMatrix matrix_;
};

IterationGraph build_graph(const VectorOfImages& f, const Limits& limits = {});

struct ChaosVerdict {
  bool strongly_connected = false;
  std::size_t scc_count = 0;
  // (from, to) with no directed path from `from` to `to`; set iff the graph
  // is not strongly connected.
  std::optional<std::pair<State, State>> witness;
};

// Component index of every vertex. Indices are assigned in the order the
// components complete during a Tarjan traversal started from vertex 0, so
// they are deterministic but not otherwise meaningful.
std::vector<std::uint32_t> strongly_connected_components(
    const IterationGraph& g);

// The generator built on f is chaotic iff this reports strong connectivity.
ChaosVerdict is_strongly_connected(const IterationGraph& g);

// Reusable scratch space for the allocation-free connectivity check used by
// the function search. Not thread-safe; use one per thread.
class ConnectivityChecker {
 public:
  // True iff the iteration graph of the function with these images is
  // strongly connected. images.size() must be 2^n_bits.
  bool strongly_connected(std::span<const State> images, unsigned n_bits);

 private:
  bool strongly_connected_small(std::span<const State> images,
                                unsigned n_bits);

  std::vector<std::uint32_t> index_;
  std::vector<std::uint32_t> low_;
  std::vector<State> stack_;
  std::vector<std::pair<State, unsigned>> frames_;
  std::vector<std::uint8_t> on_stack_;
};

// DOT rendering; vertices are N-character binary strings, vertices and
// labels appear in ascending order.
std::string export_dot(const IterationGraph& g);

}  // namespace cirng

#endif  // CIRNG_GRAPH_HPP_
