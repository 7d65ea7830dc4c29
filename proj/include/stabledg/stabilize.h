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

// Stable approximation scheme for continuous problems: after each event,
// repair the solution, then apply bounded-size local swaps until the
// solution is within a (1+eps) factor of the optimum.

#ifndef STABLEDG_STABILIZE_H_
#define STABLEDG_STABILIZE_H_

#include <cstdint>
#include <functional>
#include <string>

#include "stabledg/common.h"
#include "stabledg/dyngraph.h"
#include "stabledg/oracle.h"

namespace stabledg {

enum class Sense { kMin, kMax };

struct ProblemAdapter {
  std::string name;
  Sense sense = Sense::kMin;
  std::function<bool(const DynamicGraph&, const VertexSet&)> feasible;
  std::function<int(const DynamicGraph&)> opt;
  // Bound on |opt(t+1) - opt(t)| the run relies on.
  int continuity_d = 1;
  // Subsets of feasible sets are feasible; lets the swap search prune.
  bool hereditary = false;
};

ProblemAdapter MinDominatingSetAdapter(
    int continuity_d, OracleBudget budget = OracleBudget::DomSetDefault());
ProblemAdapter MaxIndependentSetAdapter(
    int continuity_d, OracleBudget budget = OracleBudget::IndSetDefault());

// Worst-case changes per event: (ceil((1+eps)d)+1)(2f-1) for Min and
// d(2f+1) for Max.
std::int64_t SasStabilityBound(Sense sense, int continuity_d, Rational eps,
                               int f);

class SasMaintainer : public Maintainer {
 public:
  SasMaintainer(ProblemAdapter adapter, Rational eps, int f);

  // Throws kNoImprovingSwap when no swap of size <= f helps and
  // kContinuityViolated when opt jumps by more than continuity_d.
  StepDelta Step(const DynamicGraph& graph, const StreamEvent& event) override;
  const VertexSet& Solution() const override { return s_alg_; }
  AuxFields Aux() const override;

  int last_opt() const { return last_opt_; }
  int last_swaps() const { return last_swaps_; }

 private:
  bool WithinFactor(std::size_t size, int opt) const;
  bool ApplyFirstSwap(const DynamicGraph& graph);

  ProblemAdapter adapter_;
  Rational eps_;
  int f_;
  VertexSet s_alg_;
  int last_opt_ = 0;
  int last_swaps_ = 0;
};

}  // namespace stabledg

#endif  // STABLEDG_STABILIZE_H_
