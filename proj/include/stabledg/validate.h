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

// Solution checkers. These look only at the graph and the candidate set and
// share no code with the maintainers or the exact solvers they audit.

#ifndef STABLEDG_VALIDATE_H_
#define STABLEDG_VALIDATE_H_

#include "stabledg/common.h"
#include "stabledg/dyngraph.h"

namespace stabledg {

// Alive vertices with no member of `set` in their closed neighborhood.
VertexSet UndominatedVertices(const DynamicGraph& graph, const VertexSet& set);
bool IsDominatingSet(const DynamicGraph& graph, const VertexSet& set);

// Every alive v has a member of `set` inside {v} ∪ (neighbors v arrived with).
bool IsDirectedDominatingSet(const DynamicGraph& graph, const VertexSet& set);

bool IsIndependentSet(const DynamicGraph& graph, const VertexSet& set);

// All members are alive vertices of `graph`.
bool IsAliveSubset(const DynamicGraph& graph, const VertexSet& set);

// Maximum degree of the subgraph induced by `set`.
int InducedMaxDegree(const DynamicGraph& graph, const VertexSet& set);

}  // namespace stabledg

#endif  // STABLEDG_VALIDATE_H_
