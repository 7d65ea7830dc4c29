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

// Independent-set maintainers built on a working subgraph W of bounded
// maximum degree. W drifts towards a target made of the lowest-degree
// vertices; the output I only ever grows by Greedy-Addition inside W.
//
//   kInsertionOnly  one W migration and one greedy addition per arrival.
//   kFullyDynamic   two W migrations, greedy tries 3, then 2, then 1.

#ifndef STABLEDG_INDSET_H_
#define STABLEDG_INDSET_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabledg/common.h"
#include "stabledg/dyngraph.h"

namespace stabledg {

// Number of vertices kept by SelectLowDegreeTarget: ceil(99n / 100).
std::size_t LowDegreeTargetSize(std::size_t n);

// The LowDegreeTargetSize(|V|) alive vertices of smallest degree, ties by
// lowest id. Throws kAverageDegreeExceeded if the average degree exceeds d.
VertexSet SelectLowDegreeTarget(const DynamicGraph& graph, int d);

// Adds up to max_adds (1 or 3) vertices of w_star \ i_star to i_star while
// keeping it independent; with 3, the largest feasible count wins and the
// lexicographically first combination of that size is taken.
StepDelta GreedyAddition(const DynamicGraph& graph, VertexSet& i_star,
                         const VertexSet& w_star, int max_adds);

enum class IndSetMode { kInsertionOnly, kFullyDynamic };

class PhaseIndSet : public Maintainer {
 public:
  // Without d the running maximum of ceil(average degree) is used.
  PhaseIndSet(IndSetMode mode, std::optional<int> d);

  StepDelta Step(const DynamicGraph& graph, const StreamEvent& event) override;
  const VertexSet& Solution() const override { return i_alg_; }
  AuxFields Aux() const override;

  IndSetMode mode() const { return mode_; }
  int d() const { return d_; }
  const VertexSet& w_set() const { return w_set_; }
  const VertexSet& w_plus() const { return w_plus_; }
  const VertexSet& w_minus() const { return w_minus_; }
  bool phase_started() const { return phase_started_; }
  // Whether |W| > 102 d |I| held just before the last greedy step, and
  // whether that step added anything.
  bool claim_premise() const { return claim_premise_; }
  bool greedy_added() const { return greedy_added_; }

 private:
  IndSetMode mode_;
  bool d_pinned_;
  int d_;
  VertexSet w_set_;
  VertexSet w_plus_;
  VertexSet w_minus_;
  VertexSet i_alg_;
  bool phase_started_ = false;
  bool claim_premise_ = false;
  bool greedy_added_ = false;
};

struct IndSetSample {
  std::int64_t n_alive = 0;
  std::int64_t w_size = 0;
  std::int64_t i_size = 0;
  std::optional<int> opt;
  bool phase_start = false;
  std::int64_t stability = 0;
  bool claim_premise = false;
  bool greedy_added = false;
};

struct IndSetViolation {
  Timestamp t = 0;
  std::string what;
};

struct IndSetReport {
  bool satisfied = true;
  double worst_w_over_i = 0.0;    // +inf when I is empty and W is not
  double worst_opt_over_i = 0.0;  // only steps with an oracle value
  double min_w_fraction = 1.0;    // min |W| / |V| over non-empty graphs
  std::int64_t max_stability = 0;
  std::vector<IndSetViolation> violations;
};

// Checks |W| <= 102 d |I|, opt / |I| <= (1000/455) 102 d, the lower bounds
// on |W| / |V| (any step and phase start), the stability bound and the
// greedy claim.
IndSetReport IndSetRatioReport(const std::vector<IndSetSample>& samples,
                               IndSetMode mode, int d);

}  // namespace stabledg

#endif  // STABLEDG_INDSET_H_
