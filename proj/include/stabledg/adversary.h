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

// Adversarial stream constructions and the bipartite expanders they are
// built from.

#ifndef STABLEDG_ADVERSARY_H_
#define STABLEDG_ADVERSARY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabledg/common.h"
#include "stabledg/dyngraph.h"

namespace stabledg {

// Bipartite graph G(L ∪ R) with local indices 0..|L|-1 and 0..|R|-1.
// Generated instances also keep the 3-regular host graph H they were cut
// from: parts A and B of equal size, T ⊂ A removed, R = A \ T, L = B.
struct BipartiteExpander {
  int num_left = 0;
  int num_right = 0;
  std::vector<std::pair<int, int>> edges;  // (left, right)

  // Generation parameters; absent for hand-built instances.
  int n = 0;
  Rational eps;
  Rational mu;
  std::uint64_t seed = 0;
  int t_radius = 0;  // requested radius t (T pairwise > 2t apart in H)
  int t_used = 0;    // radius actually achieved
  bool radius_reduced = false;
  std::vector<std::string> warnings;

  int host_side = 0;                            // |A| = |B|
  std::vector<std::pair<int, int>> host_edges;  // (a, b)
  std::vector<int> t_set;                       // indices into A
  std::vector<int> right_to_host;               // R index -> A index

  std::vector<std::vector<int>> LeftAdjacency() const;
  std::vector<std::vector<int>> RightAdjacency() const;
  int MaxDegree() const;
};

BipartiteExpander HandBuiltExpander(
    int num_left, int num_right, std::vector<std::pair<int, int>> edges);

struct ExpanderOptions {
  // Defaults to ceil(1/mu) + 1.
  std::optional<int> t_radius;
  // Shrink t until T can be selected instead of failing.
  bool adaptive_radius = true;
  int max_configuration_tries = 1000;
};

// Random cubic bipartite host on ceil((1+eps)n) + ceil((1+eps)n) vertices
// (configuration model, multi-edges rejected), greedy T ⊂ A of ceil(eps n)
// vertices pairwise more than 2t apart, result induced on (A \ T) ∪ B.
// Throws kSelectionFailed (non-adaptive) and kConfigModelStuck.
BipartiteExpander GenerateExpanderCandidate(int n, Rational eps, Rational mu,
                                            std::uint64_t seed,
                                            const ExpanderOptions& options = {});

// Pairwise distance of T vertices in H, minimum over pairs (max int if
// |T| < 2).
int MinTDistance(const BipartiteExpander& exp);

struct ExpansionResult {
  bool certified = false;
  std::optional<std::vector<int>> counterexample;  // left indices
  // Largest s such that every S with |S| <= s expands.
  int max_certified_size = 0;
  std::int64_t subsets_checked = 0;
};

// Checks |N(S)| >= factor |S| for every S ⊆ L with 1 <= |S| <= size_cap, in
// increasing size and lexicographic order; stops at the first violation.
// Throws kTooLarge beyond `max_subsets`.
ExpansionResult VerifyExpansion(const BipartiteExpander& exp, int size_cap,
                                Rational factor,
                                std::int64_t max_subsets = 200'000'000);

// 2 - 2 mu.
Rational ExpansionFactor(Rational mu);

struct LowerBoundStream {
  EventStream stream;
  std::map<std::string, Timestamp> landmarks;
  std::map<VertexId, std::string> layers;
};

// R arrives as singletons, then every L vertex with its expander edges.
// Landmark "t" is the final event.
LowerBoundStream IsLowerBoundStream(const BipartiteExpander& exp);

// Five layers, one chain per left vertex j: u_j, then v_j - u_j, then
// w_j - v_j, then bag L_j of deg(j) vertices hanging off w_j, then r_i for
// each right vertex, wired to one bag vertex per expander edge plus v_i.
// Landmarks "t1" (last bag vertex) and "t2" (last r).
LowerBoundStream DomsetLowerBoundStream(const BipartiteExpander& exp);

// Arrival-degree-d stream on which the directed maintainer ends with d^2+2
// vertices while three suffice.
EventStream DirectedDomSetTightStream(int d);

// Center 0, then leaves 1..n-1 attached to it.
EventStream StarAdversaryStream(int n);

}  // namespace stabledg

#endif  // STABLEDG_ADVERSARY_H_
