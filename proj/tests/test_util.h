// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared test helpers. The brute-force solvers here deliberately avoid the
// library's oracle code: plain subset scans checked with the validators.

#ifndef STABLEDG_TESTS_TEST_UTIL_H_
#define STABLEDG_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <functional>
#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "stabledg/common.h"
#include "stabledg/dyngraph.h"
#include "stabledg/validate.h"

namespace stabledg::testing {

// Vertices 0..n-1 arrive in order; each edge is attached to its larger end.
inline EventStream StreamFromEdges(int n,
                                   const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<VertexId>> back(n);
  for (auto [a, b] : edges) {
    if (a > b) std::swap(a, b);
    back[b].push_back(a);
  }
  EventStream s;
  for (int v = 0; v < n; ++v) {
    std::sort(back[v].begin(), back[v].end());
    s.events.push_back(StreamEvent::Arrival(v, back[v]));
  }
  return s;
}

inline DynamicGraph GraphFromEdges(int n,
                                   const std::vector<std::pair<int, int>>& edges) {
  return BuildGraph(StreamFromEdges(n, edges));
}

inline DynamicGraph RandomGraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return GraphFromEdges(n, edges);
}

inline DynamicGraph Petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return GraphFromEdges(10, edges);
}

// Scans all 2^n subsets; keeps the best by (size, lexicographic order).
inline VertexSet BruteBest(
    const DynamicGraph& g,
    const std::function<bool(const DynamicGraph&, const VertexSet&)>& ok,
    bool maximize) {
  std::vector<VertexId> ids(g.AliveVertices().begin(), g.AliveVertices().end());
  std::size_t n = ids.size();
  bool found = false;
  VertexSet best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.insert(ids[i]);
    }
    if (!ok(g, s)) continue;
    bool better = !found ||
                  (maximize ? s.size() > best.size() : s.size() < best.size()) ||
                  (s.size() == best.size() && s < best);
    if (better) {
      best = s;
      found = true;
    }
  }
  return best;
}

inline VertexSet BruteMinDominating(const DynamicGraph& g) {
  return BruteBest(g, IsDominatingSet, false);
}
inline VertexSet BruteMinDirected(const DynamicGraph& g) {
  return BruteBest(g, IsDirectedDominatingSet, false);
}
inline VertexSet BruteMaxIndependent(const DynamicGraph& g) {
  return BruteBest(g, IsIndependentSet, true);
}

// Replays `stream`, calling f(graph, delta, t) after every step.
template <typename F>
void Drive(const EventStream& stream, Maintainer& m, F&& f) {
  DynamicGraph g;
  Timestamp t = 0;
  for (const StreamEvent& ev : stream.events) {
    g.Apply(ev);
    StepDelta delta = m.Step(g, ev);
    f(g, delta, ++t);
  }
}

}  // namespace stabledg::testing

#endif  // STABLEDG_TESTS_TEST_UTIL_H_
