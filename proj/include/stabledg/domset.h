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

// Dominating-set maintainers for the vertex-arrival model.
//
//   DirectedDomSet  keeps a directed dominating set; changes at most one
//                   vertex per arrival.
//   PhaseDomSet     walks towards a periodically recomputed minimum
//                   dominating set, `batch` migrations per arrival.
//
// All "pick an arbitrary vertex" choices resolve to the lowest id.

#ifndef STABLEDG_DOMSET_H_
#define STABLEDG_DOMSET_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "stabledg/common.h"
#include "stabledg/dyngraph.h"
#include "stabledg/oracle.h"

namespace stabledg {

class DirectedDomSet : public Maintainer {
 public:
  StepDelta Step(const DynamicGraph& graph, const StreamEvent& event) override;
  const VertexSet& Solution() const override { return d_alg_; }
  AuxFields Aux() const override;

  // Pairwise unrelated witnesses.
  const VertexSet& u_set() const { return u_set_; }

 private:
  VertexSet d_alg_;
  VertexSet u_set_;
};

struct DomSetTarget {
  VertexSet set;
  bool exact = true;
};

using DomSetTargetSolver = std::function<DomSetTarget(const DynamicGraph&)>;

// Minimum dominating set from the oracle. Beyond the budget it either falls
// back to a greedy set (marked non-exact) or throws kTargetUnavailable.
DomSetTargetSolver ExactTargetSolver(
    OracleBudget budget = OracleBudget::DomSetDefault(),
    bool greedy_fallback = false);

class PhaseDomSet : public Maintainer {
 public:
  // batch >= 2. Use batch 2 for the 3-stable variant and KBatch(d) for the
  // variant whose ratio does not depend on d.
  PhaseDomSet(int batch, DomSetTargetSolver solver);

  static int KBatch(int d) { return 22 * d + 1; }

  StepDelta Step(const DynamicGraph& graph, const StreamEvent& event) override;
  const VertexSet& Solution() const override { return d_alg_; }
  AuxFields Aux() const override;

  int batch() const { return batch_; }
  const VertexSet& pending_additions() const { return d_plus_; }
  const VertexSet& pending_removals() const { return d_minus_; }
  bool phase_started() const { return phase_started_; }
  bool last_target_exact() const { return last_target_exact_; }
  // False once any target came from the fallback.
  bool all_targets_exact() const { return all_targets_exact_; }

 private:
  int batch_;
  DomSetTargetSolver solver_;
  VertexSet d_alg_;
  VertexSet d_plus_;
  VertexSet d_minus_;
  bool phase_started_ = false;
  bool last_target_exact_ = true;
  bool all_targets_exact_ = true;
};

// One replayed step of a PhaseDomSet run, paired with oracle values.
struct DomSetSample {
  std::int64_t sol_size = 0;
  int opt = 0;
  int max_opt = 0;
  bool phase_start = false;
  std::int64_t stability = 0;
};

struct DomSetBoundViolation {
  Timestamp t = 0;
  std::string what;
};

struct DomSetBoundsReport {
  bool satisfied = true;
  // |D| / max-opt for batch 2, |D| / opt for the k-variant.
  double worst_ratio = 0.0;
  double worst_phase_start_ratio = 0.0;
  std::int64_t max_stability = 0;
  std::vector<DomSetBoundViolation> violations;
};

// Checks the per-step and phase-start size bounds plus the stability bound.
// batch must be 2 or KBatch(d).
DomSetBoundsReport PhaseDomSetBounds(const std::vector<DomSetSample>& samples,
                                     int batch, int d);

}  // namespace stabledg

#endif  // STABLEDG_DOMSET_H_
