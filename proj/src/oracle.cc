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

#include "stabledg/oracle.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stabledg/validate.h"

namespace stabledg {
namespace {

using Mask = std::uint64_t;

// Plain enumeration stops paying off quickly; past this size auto mode
// switches to branch-and-bound.
constexpr int kEnumerationAutoLimit = 14;

Mask Bit(int i) { return Mask{1} << i; }
int Count(Mask m) { return std::popcount(m); }

template <typename F>
void ForEachBit(Mask m, F&& f) {
  while (m != 0) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

class NodeCounter {
 public:
  explicit NodeCounter(std::int64_t limit) : limit_(limit) {}
  void Tick() {
    if (++used_ > limit_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle node budget of " + std::to_string(limit_) +
                      " exhausted");
    }
  }

 private:
  std::int64_t limit_;
  std::int64_t used_ = 0;
};

// Alive vertices in increasing id order; position = bit index. Lexicographic
// order on index sets therefore matches lexicographic order on id sets.
struct Indexing {
  std::vector<VertexId> ids;
  std::unordered_map<VertexId, int> index;
  Mask all = 0;

  VertexSet ToSet(Mask m) const {
    VertexSet out;
    ForEachBit(m, [&](int i) { out.insert(ids[i]); });
    return out;
  }
};

Indexing IndexAlive(const DynamicGraph& graph, const OracleBudget& budget) {
  int limit = std::min(budget.max_vertices, 64);
  if (graph.NumAlive() > static_cast<std::size_t>(limit)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "oracle refuses " + std::to_string(graph.NumAlive()) +
                    " vertices (limit " + std::to_string(limit) + ")");
  }
  Indexing ix;
  for (VertexId v : graph.AliveVertices()) {
    ix.index[v] = static_cast<int>(ix.ids.size());
    ix.ids.push_back(v);
  }
  ix.all = ix.ids.size() == 64 ? ~Mask{0} : Bit(ix.ids.size()) - 1;
  return ix;
}

// Element e is satisfied once a chosen candidate lies in hits[e].
// covers[c] lists the elements candidate c satisfies.
struct HitInstance {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> hits;
  std::vector<Mask> covers;
};

HitInstance DomSetInstance(const DynamicGraph& graph, const Indexing& ix) {
  HitInstance inst;
  inst.n = static_cast<int>(ix.ids.size());
  inst.all = ix.all;
  inst.hits.assign(inst.n, 0);
  for (int i = 0; i < inst.n; ++i) {
    Mask m = Bit(i);
    for (VertexId u : graph.Neighbors(ix.ids[i])) m |= Bit(ix.index.at(u));
    inst.hits[i] = m;
  }
  inst.covers = inst.hits;
  return inst;
}

HitInstance DirectedDomSetInstance(const DynamicGraph& graph,
                                   const Indexing& ix) {
  HitInstance inst;
  inst.n = static_cast<int>(ix.ids.size());
  inst.all = ix.all;
  inst.hits.assign(inst.n, 0);
  inst.covers.assign(inst.n, 0);
  for (int e = 0; e < inst.n; ++e) {
    for (VertexId u : graph.OutClosedNeighborhood(ix.ids[e])) {
      auto it = ix.index.find(u);
      if (it == ix.index.end()) continue;
      inst.hits[e] |= Bit(it->second);
      inst.covers[it->second] |= Bit(e);
    }
  }
  return inst;
}

class HitSolver {
 public:
  HitSolver(const HitInstance& inst, NodeCounter& counter)
      : inst_(inst), counter_(counter) {}

  // Smallest set of `allowed` candidates satisfying `need`, provided its
  // size is at most `limit`.
  std::optional<Mask> Solve(Mask need, Mask allowed, int limit) {
    if (limit < 0) return std::nullopt;
    best_size_ = limit + 1;
    found_ = false;
    Search(need, allowed, 0, 0);
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  int LowerBound(Mask need, Mask allowed) const {
    // Elements with pairwise disjoint candidate sets each need their own
    // candidate.
    int packing = 0;
    Mask used = 0;
    ForEachBit(need, [&](int e) {
      Mask options = inst_.hits[e] & allowed;
      if ((options & used) == 0) {
        ++packing;
        used |= options;
      }
    });
    int max_cover = 0;
    ForEachBit(allowed, [&](int c) {
      max_cover = std::max(max_cover, Count(inst_.covers[c] & need));
    });
    if (max_cover == 0) return inst_.n + 1;
    int by_cover = (Count(need) + max_cover - 1) / max_cover;
    return std::max(packing, by_cover);
  }

  void Search(Mask need, Mask allowed, Mask chosen, int size) {
    counter_.Tick();
    if (need == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen;
        found_ = true;
      }
      return;
    }
    if (size + LowerBound(need, allowed) >= best_size_) return;

    int pick = -1;
    int fewest = 65;
    Mask need_copy = need;
    while (need_copy != 0) {
      int e = std::countr_zero(need_copy);
      need_copy &= need_copy - 1;
      int c = Count(inst_.hits[e] & allowed);
      if (c == 0) return;
      if (c < fewest) {
        fewest = c;
        pick = e;
      }
    }

    std::vector<std::pair<int, int>> order;
    ForEachBit(inst_.hits[pick] & allowed, [&](int c) {
      order.emplace_back(-Count(inst_.covers[c] & need), c);
    });
    std::sort(order.begin(), order.end());
    for (const auto& [unused, c] : order) {
      allowed &= ~Bit(c);
      Search(need & ~inst_.covers[c], allowed, chosen | Bit(c), size + 1);
    }
  }

  const HitInstance& inst_;
  NodeCounter& counter_;
  int best_size_ = 0;
  Mask best_ = 0;
  bool found_ = false;
};

// Visits k-subsets of {0..n-1} in lexicographic order until `f` returns true.
template <typename F>
std::optional<Mask> FirstCombination(int n, int k, NodeCounter& counter,
                                     F&& f) {
  if (k < 0 || k > n) return std::nullopt;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    counter.Tick();
    Mask m = 0;
    for (int i : idx) m |= Bit(i);
    if (f(m)) return m;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return std::nullopt;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool UseEnumeration(OracleEngine engine, int n) {
  if (engine == OracleEngine::kEnumeration) return true;
  if (engine == OracleEngine::kBranchAndBound) return false;
  return n <= kEnumerationAutoLimit;
}

// Lexicographically smallest minimum hitting set; size only if !want_set.
Mask SolveHitting(const HitInstance& inst, const OracleBudget& budget,
                  OracleEngine engine, bool want_set) {
  NodeCounter counter(budget.max_nodes_explored);
  if (UseEnumeration(engine, inst.n)) {
    for (int k = 0; k <= inst.n; ++k) {
      auto hit = FirstCombination(inst.n, k, counter, [&](Mask m) {
        for (int e = 0; e < inst.n; ++e) {
          if ((inst.hits[e] & m) == 0) return false;
        }
        return true;
      });
      if (hit) return *hit;
    }
    throw Error(ErrorCode::kInvariantBreached, "hitting instance infeasible");
  }

  HitSolver solver(inst, counter);
  auto best = solver.Solve(inst.all, inst.all, inst.n);
  if (!best) {
    throw Error(ErrorCode::kInvariantBreached, "hitting instance infeasible");
  }
  if (!want_set) return *best;
  int k = Count(*best);

  Mask forced = 0;
  Mask excluded = 0;
  for (int i = 0; i < inst.n; ++i) {
    Mask covered = 0;
    ForEachBit(forced, [&](int c) { covered |= inst.covers[c]; });
    Mask need = inst.all & ~covered;
    if (need == 0) break;
    Mask with = forced | Bit(i);
    Mask allowed = inst.all & ~excluded & ~with;
    if (solver.Solve(need & ~inst.covers[i], allowed, k - Count(with))) {
      forced = with;
    } else {
      excluded |= Bit(i);
    }
  }
  return forced;
}

class MisSolver {
 public:
  MisSolver(const std::vector<Mask>& adj, NodeCounter& counter)
      : adj_(adj), counter_(counter) {}

  // Independent subset of `pool` with at least `need` vertices, if any.
  std::optional<Mask> Solve(Mask pool, int need) {
    best_size_ = need - 1;
    found_ = false;
    Search(pool, 0, 0);
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  // Greedy clique cover of G[pool]; one vertex per clique at most.
  int CliqueCoverBound(Mask pool) const {
    std::vector<Mask> cliques;
    ForEachBit(pool, [&](int v) {
      for (Mask& c : cliques) {
        if ((c & ~adj_[v]) == 0) {
          c |= Bit(v);
          return;
        }
      }
      cliques.push_back(Bit(v));
    });
    return static_cast<int>(cliques.size());
  }

  void Search(Mask pool, Mask chosen, int size) {
    counter_.Tick();
    if (pool == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
        found_ = true;
      }
      return;
    }
    if (size + CliqueCoverBound(pool) <= best_size_) return;

    int min_v = -1, min_deg = 65, max_v = -1, max_deg = -1;
    ForEachBit(pool, [&](int v) {
      int deg = Count(adj_[v] & pool);
      if (deg < min_deg) {
        min_deg = deg;
        min_v = v;
      }
      if (deg > max_deg) {
        max_deg = deg;
        max_v = v;
      }
    });
    // A vertex of degree <= 1 belongs to some maximum independent set.
    if (min_deg <= 1) {
      Search(pool & ~(Bit(min_v) | adj_[min_v]), chosen | Bit(min_v),
             size + 1);
      return;
    }
    Search(pool & ~(Bit(max_v) | adj_[max_v]), chosen | Bit(max_v), size + 1);
    Search(pool & ~Bit(max_v), chosen, size);
  }

  const std::vector<Mask>& adj_;
  NodeCounter& counter_;
  int best_size_ = 0;
  Mask best_ = 0;
  bool found_ = false;
};

Mask SolveIndependent(const DynamicGraph& graph, const Indexing& ix,
                      const OracleBudget& budget, OracleEngine engine,
                      bool want_set) {
  int n = static_cast<int>(ix.ids.size());
  std::vector<Mask> adj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (VertexId u : graph.Neighbors(ix.ids[i])) adj[i] |= Bit(ix.index.at(u));
  }
  NodeCounter counter(budget.max_nodes_explored);

  if (UseEnumeration(engine, n)) {
    for (int k = n; k >= 0; --k) {
      auto hit = FirstCombination(n, k, counter, [&](Mask m) {
        Mask rest = m;
        while (rest != 0) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          if ((adj[v] & m) != 0) return false;
        }
        return true;
      });
      if (hit) return *hit;
    }
    return 0;
  }

  MisSolver solver(adj, counter);
  Mask best = solver.Solve(ix.all, 0).value_or(0);
  if (!want_set) return best;
  int k = Count(best);

  Mask forced = 0;
  Mask pool = ix.all;
  for (int i = 0; i < n && Count(forced) < k; ++i) {
    if ((pool & Bit(i)) == 0) continue;
    Mask rest = pool & ~(Bit(i) | adj[i]);
    if (solver.Solve(rest, k - Count(forced) - 1)) {
      forced |= Bit(i);
      pool = rest;
    } else {
      pool &= ~Bit(i);
    }
  }
  return forced;
}

}  // namespace

OracleBudget DefaultBudget(Problem problem) {
  return problem == Problem::kIndSet ? OracleBudget::IndSetDefault()
                                     : OracleBudget::DomSetDefault();
}

VertexSet MinDominatingSet(const DynamicGraph& graph,
                           const OracleBudget& budget, OracleEngine engine) {
  Indexing ix = IndexAlive(graph, budget);
  VertexSet result =
      ix.ToSet(SolveHitting(DomSetInstance(graph, ix), budget, engine, true));
  if (!IsDominatingSet(graph, result)) {
    throw Error(ErrorCode::kInvariantBreached,
                "oracle produced a non-dominating set");
  }
  return result;
}

VertexSet MinDirectedDominatingSet(const DynamicGraph& graph,
                                   const OracleBudget& budget,
                                   OracleEngine engine) {
  Indexing ix = IndexAlive(graph, budget);
  VertexSet result = ix.ToSet(
      SolveHitting(DirectedDomSetInstance(graph, ix), budget, engine, true));
  if (!IsDirectedDominatingSet(graph, result)) {
    throw Error(ErrorCode::kInvariantBreached,
                "oracle produced a non-dominating set");
  }
  return result;
}

VertexSet MaxIndependentSet(const DynamicGraph& graph,
                            const OracleBudget& budget, OracleEngine engine) {
  Indexing ix = IndexAlive(graph, budget);
  VertexSet result =
      ix.ToSet(SolveIndependent(graph, ix, budget, engine, true));
  if (!IsIndependentSet(graph, result)) {
    throw Error(ErrorCode::kInvariantBreached,
                "oracle produced a dependent set");
  }
  return result;
}

int OptValue(const DynamicGraph& graph, Problem problem,
             const OracleBudget& budget, OracleEngine engine) {
  Indexing ix = IndexAlive(graph, budget);
  switch (problem) {
    case Problem::kDomSet:
      return Count(
          SolveHitting(DomSetInstance(graph, ix), budget, engine, false));
    case Problem::kDirectedDomSet:
      return Count(SolveHitting(DirectedDomSetInstance(graph, ix), budget,
                                engine, false));
    case Problem::kIndSet:
      return Count(SolveIndependent(graph, ix, budget, engine, false));
  }
  return 0;
}

OptTrace ComputeOptTrace(const EventStream& stream, Problem problem,
                         const OracleBudget& budget) {
  OptTrace trace;
  DynamicGraph graph;
  int running = 0;
  for (std::size_t i = 0; i < stream.events.size(); ++i) {
    graph.Apply(stream.events[i]);
    int opt;
    try {
      opt = OptValue(graph, problem, budget);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      throw Error(ErrorCode::kBudgetExceeded,
                  std::string(e.what()) + " at event " + std::to_string(i + 1),
                  static_cast<std::int64_t>(i));
    }
    running = std::max(running, opt);
    trace.opt.push_back(opt);
    trace.max_opt.push_back(running);
  }
  return trace;
}

VertexSet GreedyDominatingSet(const DynamicGraph& graph) {
  VertexSet undominated = graph.AliveVertices();
  VertexSet result;
  while (!undominated.empty()) {
    VertexId best = 0;
    std::size_t best_gain = 0;
    for (VertexId v : graph.AliveVertices()) {
      std::size_t gain = Contains(undominated, v) ? 1 : 0;
      for (VertexId u : graph.Neighbors(v)) gain += Contains(undominated, u);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    result.insert(best);
    undominated.erase(best);
    for (VertexId u : graph.Neighbors(best)) undominated.erase(u);
  }
  return result;
}

}  // namespace stabledg
