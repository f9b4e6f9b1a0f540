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

#include "cirng/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "cirng/errors.hpp"

namespace cirng {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

struct TarjanScratch {
  std::vector<std::uint32_t>& index;
  std::vector<std::uint32_t>& low;
  std::vector<State>& stack;
  std::vector<std::pair<State, unsigned>>& frames;
  std::vector<std::uint8_t>& on_stack;
};

// Iterative Tarjan over an implicit graph whose arcs are produced by
// `target(x, label)` for labels 1..n_labels. `on_component` receives each
// completed component as a span of vertices and returns false to stop early.
// Returns the number of vertices visited.
template <typename Target, typename OnComponent>
std::size_t tarjan(std::size_t n_vertices, unsigned n_labels, State root,
                   Target target, OnComponent on_component,
                   TarjanScratch s) {
  std::uint32_t next_index = 0;
  auto open = [&](State v) {
    s.index[v] = s.low[v] = next_index++;
    s.stack.push_back(v);
    s.on_stack[v] = 1;
    s.frames.emplace_back(v, 1u);
  };
  (void)n_vertices;

  open(root);
  while (!s.frames.empty()) {
    auto& [v, label] = s.frames.back();
    if (label <= n_labels) {
      const State w = target(v, label++);
      if (s.index[w] == kUnvisited) {
        open(w);
      } else if (s.on_stack[w]) {
        s.low[v] = std::min(s.low[v], s.index[w]);
      }
      continue;
    }
    const State done = v;
    s.frames.pop_back();
    if (!s.frames.empty()) {
      const State parent = s.frames.back().first;
      s.low[parent] = std::min(s.low[parent], s.low[done]);
    }
    if (s.low[done] == s.index[done]) {
      auto first = std::find(s.stack.rbegin(), s.stack.rend(), done).base() - 1;
      const std::span<const State> component(&*first,
                                             s.stack.end() - first);
      for (State u : component) s.on_stack[u] = 0;
      const bool keep_going = on_component(component);
      s.stack.erase(first, s.stack.end());
      if (!keep_going) {
        s.frames.clear();
        s.stack.clear();
        break;
      }
    }
  }
  return next_index;
}

}  // namespace

IterationGraph::IterationGraph(const VectorOfImages& f, const Limits& limits)
    : matrix_([&]() -> const VectorOfImages& {
        if (f.n_bits() > limits.max_graph_bits) {
          throw ResourceLimit("n_bits " + std::to_string(f.n_bits()) +
                              " exceeds the graph limit of " +
                              std::to_string(limits.max_graph_bits));
        }
        return f;
      }()) {}

IterationGraph build_graph(const VectorOfImages& f, const Limits& limits) {
  return IterationGraph(f, limits);
}

std::vector<std::uint32_t> strongly_connected_components(
    const IterationGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> index(n, kUnvisited), low(n);
  std::vector<State> stack;
  std::vector<std::pair<State, unsigned>> frames;
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::uint32_t> component_of(n, kUnvisited);
  std::uint32_t components = 0;

  auto target = [&g](State x, unsigned label) { return g.target(x, label); };
  auto record = [&](std::span<const State> c) {
    for (State u : c) component_of[u] = components;
    ++components;
    return true;
  };
  for (State root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    tarjan(n, g.n_bits(), root, target, record,
           TarjanScratch{index, low, stack, frames, on_stack});
  }
  return component_of;
}

ChaosVerdict is_strongly_connected(const IterationGraph& g) {
  const auto component_of = strongly_connected_components(g);
  ChaosVerdict verdict;
  verdict.scc_count =
      *std::max_element(component_of.begin(), component_of.end()) + 1;
  verdict.strongly_connected = verdict.scc_count == 1;
  if (verdict.strongly_connected) return verdict;

  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<State> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (unsigned label = 1; label <= g.n_bits(); ++label) {
      const State w = g.target(queue[head], label);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (State v = 0; v < n; ++v) {
    if (!seen[v]) {
      verdict.witness = std::pair<State, State>{0, v};
      return verdict;
    }
  }
  // Everything is reachable from 0, so any vertex outside 0's component
  // cannot reach 0.
  for (State v = 0; v < n; ++v) {
    if (component_of[v] != component_of[0]) {
      verdict.witness = std::pair<State, State>{v, 0};
      break;
    }
  }
  return verdict;
}

bool ConnectivityChecker::strongly_connected(std::span<const State> images,
                                             unsigned n_bits) {
  const std::size_t n = images.size();
  if (n <= 64) return strongly_connected_small(images, n_bits);
  index_.assign(n, kUnvisited);
  low_.resize(n);
  on_stack_.assign(n, 0);
  stack_.clear();
  frames_.clear();

  auto target = [images, n_bits](State x, unsigned label) {
    const State m = coordinate_mask(n_bits, label);
    return (x & ~m) | (images[x] & m);
  };
  bool single = false;
  auto check = [&](std::span<const State> c) {
    single = c.size() == n;
    return false;
  };
  tarjan(n, n_bits, 0, target, check,
         TarjanScratch{index_, low_, stack_, frames_, on_stack_});
  return single;
}

// Up to 64 vertices: reachability to and from vertex 0 with bitsets.
bool ConnectivityChecker::strongly_connected_small(
    std::span<const State> images, unsigned n_bits) {
  const std::size_t n = images.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  std::uint64_t succ[64];
  for (State x = 0; x < n; ++x) {
    std::uint64_t s = 0;
    for (unsigned label = 1; label <= n_bits; ++label) {
      const State m = coordinate_mask(n_bits, label);
      s |= std::uint64_t{1} << ((x & ~m) | (images[x] & m));
    }
    succ[x] = s;
  }
  std::uint64_t forward = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) {
      next |= succ[std::countr_zero(f)];
    }
    frontier = next & ~forward;
    forward |= frontier;
  }
  if (forward != all) return false;
  std::uint64_t backward = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint64_t rest = all & ~backward; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (succ[v] & backward) {
        backward |= std::uint64_t{1} << v;
        grew = true;
      }
    }
  }
  return backward == all;
}

std::string export_dot(const IterationGraph& g) {
  const unsigned n = g.n_bits();
  auto name = [n](State x) {
    std::string s(n, '0');
    for (unsigned p = 1; p <= n; ++p) {
      if (x & coordinate_mask(n, p)) s[p - 1] = '1';
    }
    return s;
  };

  std::ostringstream out;
  out << "digraph iteration_graph {\n";
  for (State x = 0; x < g.vertex_count(); ++x) {
    out << "  \"" << name(x) << "\";\n";
  }
  for (State x = 0; x < g.vertex_count(); ++x) {
    for (unsigned label = 1; label <= n; ++label) {
      out << "  \"" << name(x) << "\" -> \"" << name(g.target(x, label))
          << "\" [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cirng
