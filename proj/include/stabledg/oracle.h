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

// Exact exponential-time solvers used as ground truth at desk scale.
//
// Two independent engines are provided for each problem: plain subset
// enumeration (in increasing lexicographic order, so the first hit is the
// lexicographically smallest optimum) and a bitmask branch-and-bound. All
// set-valued results are the lexicographically smallest optimal vertex set.

#ifndef STABLEDG_ORACLE_H_
#define STABLEDG_ORACLE_H_

#include <cstdint>
#include <vector>

#include "stabledg/common.h"
#include "stabledg/dyngraph.h"

namespace stabledg {

struct OracleBudget {
  // Solvers refuse larger graphs. Hard limit 64 (one machine word).
  int max_vertices = 24;
  std::int64_t max_nodes_explored = 200'000'000;

  static OracleBudget DomSetDefault() { return OracleBudget{24}; }
  static OracleBudget IndSetDefault() { return OracleBudget{40}; }
};

enum class OracleEngine { kAuto, kEnumeration, kBranchAndBound };

enum class Problem { kDomSet, kIndSet, kDirectedDomSet };

VertexSet MinDominatingSet(const DynamicGraph& graph,
                           const OracleBudget& budget = OracleBudget::DomSetDefault(),
                           OracleEngine engine = OracleEngine::kAuto);

VertexSet MinDirectedDominatingSet(
    const DynamicGraph& graph,
    const OracleBudget& budget = OracleBudget::DomSetDefault(),
    OracleEngine engine = OracleEngine::kAuto);

VertexSet MaxIndependentSet(const DynamicGraph& graph,
                            const OracleBudget& budget = OracleBudget::IndSetDefault(),
                            OracleEngine engine = OracleEngine::kAuto);

// Optimum value only; skips the lexicographic tie-break work.
int OptValue(const DynamicGraph& graph, Problem problem,
             const OracleBudget& budget,
             OracleEngine engine = OracleEngine::kAuto);

OracleBudget DefaultBudget(Problem problem);

struct OptTrace {
  std::vector<int> opt;      // opt after each event
  std::vector<int> max_opt;  // running maximum of opt
};

// Throws kBudgetExceeded with at() = length of the last solvable prefix.
OptTrace ComputeOptTrace(const EventStream& stream, Problem problem,
                         const OracleBudget& budget);

// Greedy max-coverage dominating set (lowest id on ties). Not exact; used as
// a fallback target beyond the oracle budget.
VertexSet GreedyDominatingSet(const DynamicGraph& graph);

}  // namespace stabledg

#endif  // STABLEDG_ORACLE_H_
