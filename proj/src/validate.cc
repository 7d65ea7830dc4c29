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

#include "stabledg/validate.h"

#include <algorithm>

namespace stabledg {

VertexSet UndominatedVertices(const DynamicGraph& graph, const VertexSet& set) {
  VertexSet out;
  for (VertexId v : graph.AliveVertices()) {
    if (set.count(v)) continue;
    const VertexSet& nbrs = graph.Neighbors(v);
    const bool hit = std::any_of(nbrs.begin(), nbrs.end(),
                                 [&](VertexId u) { return set.count(u) > 0; });
    if (!hit) out.insert(v);
  }
  return out;
}

bool IsDominatingSet(const DynamicGraph& graph, const VertexSet& set) {
  return IsAliveSubset(graph, set) && UndominatedVertices(graph, set).empty();
}

bool IsDirectedDominatingSet(const DynamicGraph& graph, const VertexSet& set) {
  if (!IsAliveSubset(graph, set)) return false;
  for (VertexId v : graph.AliveVertices()) {
    const VertexSet out = graph.OutClosedNeighborhood(v);
    const bool hit = std::any_of(out.begin(), out.end(),
                                 [&](VertexId u) { return set.count(u) > 0; });
    if (!hit) return false;
  }
  return true;
}

bool IsIndependentSet(const DynamicGraph& graph, const VertexSet& set) {
  if (!IsAliveSubset(graph, set)) return false;
  for (VertexId v : set) {
    for (VertexId u : graph.Neighbors(v)) {
      if (set.count(u)) return false;
    }
  }
  return true;
}

bool IsAliveSubset(const DynamicGraph& graph, const VertexSet& set) {
  return std::all_of(set.begin(), set.end(),
                     [&](VertexId v) { return graph.IsAlive(v); });
}

int InducedMaxDegree(const DynamicGraph& graph, const VertexSet& set) {
  int best = 0;
  for (VertexId v : set) {
    int degree = 0;
    for (VertexId u : graph.Neighbors(v)) degree += set.count(u) ? 1 : 0;
    best = std::max(best, degree);
  }
  return best;
}

}  // namespace stabledg
