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

#include "stabledg/domset.h"

#include <algorithm>
#include <string>
#include <utility>

namespace stabledg {
namespace {

void RequireArrival(const StreamEvent& event) {
  if (event.kind != EventKind::kArrival) {
    throw Error(ErrorCode::kModelViolation,
                "dominating-set maintainers accept arrivals only");
  }
}

bool Intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

StepDelta DirectedDomSet::Step(const DynamicGraph& graph,
                               const StreamEvent& event) {
  RequireArrival(event);
  VertexId v = event.vertex;
  VertexSet out_v = graph.OutClosedNeighborhood(v);
  StepDelta delta;
  if (Intersects(out_v, d_alg_)) return delta;

  for (VertexId u : u_set_) {
    VertexSet common = Intersection(graph.OutClosedNeighborhood(u), out_v);
    if (!common.empty()) {
      VertexId w = *common.begin();
      d_alg_.insert(w);
      delta.added.insert(w);
      return delta;
    }
  }
  u_set_.insert(v);
  d_alg_.insert(v);
  delta.added.insert(v);
  return delta;
}

AuxFields DirectedDomSet::Aux() const {
  return {{"u_size", static_cast<std::int64_t>(u_set_.size())}};
}

DomSetTargetSolver ExactTargetSolver(OracleBudget budget,
                                     bool greedy_fallback) {
  return [budget, greedy_fallback](const DynamicGraph& graph) {
    try {
      return DomSetTarget{MinDominatingSet(graph, budget), true};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      if (!greedy_fallback) {
        throw Error(ErrorCode::kTargetUnavailable,
                    std::string("no exact target: ") + e.what(),
                    graph.current_time());
      }
      return DomSetTarget{GreedyDominatingSet(graph), false};
    }
  };
}

PhaseDomSet::PhaseDomSet(int batch, DomSetTargetSolver solver)
    : batch_(batch), solver_(std::move(solver)) {
  if (batch_ < 2) {
    throw Error(ErrorCode::kInvalidArgument, "batch must be at least 2");
  }
}

StepDelta PhaseDomSet::Step(const DynamicGraph& graph,
                            const StreamEvent& event) {
  RequireArrival(event);
  VertexSet before = d_alg_;
  d_alg_.insert(event.vertex);

  phase_started_ = d_plus_.empty() && d_minus_.empty();
  if (phase_started_) {
    DomSetTarget target = solver_(graph);
    last_target_exact_ = target.exact;
    all_targets_exact_ = all_targets_exact_ && target.exact;
    d_plus_ = Difference(target.set, d_alg_);
    d_minus_ = Difference(before, target.set);
  }

  int added = 0;
  while (added < batch_ && !d_plus_.empty()) {
    d_alg_.insert(*d_plus_.begin());
    d_plus_.erase(d_plus_.begin());
    ++added;
  }
  int removed = 0;
  while (added + removed < batch_ && !d_minus_.empty()) {
    d_alg_.erase(*d_minus_.begin());
    d_minus_.erase(d_minus_.begin());
    ++removed;
  }
  return Diff(before, d_alg_);
}

AuxFields PhaseDomSet::Aux() const {
  return {{"phase_start", phase_started_ ? 1 : 0},
          {"target_exact", last_target_exact_ ? 1 : 0},
          {"d_plus", static_cast<std::int64_t>(d_plus_.size())},
          {"d_minus", static_cast<std::int64_t>(d_minus_.size())}};
}

DomSetBoundsReport PhaseDomSetBounds(const std::vector<DomSetSample>& samples,
                                     int batch, int d) {
  bool k_variant;
  if (batch == 2) {
    k_variant = false;
  } else if (d >= 1 && batch == PhaseDomSet::KBatch(d)) {
    k_variant = true;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "bounds are known for batch 2 and 22d+1 only");
  }

  DomSetBoundsReport report;
  auto fail = [&](std::size_t i, std::string what) {
    report.satisfied = false;
    report.violations.push_back(
        {static_cast<Timestamp>(i + 1), std::move(what)});
  };

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const DomSetSample& s = samples[i];
    report.max_stability = std::max(report.max_stability, s.stability);
    if (s.stability > batch + 1) fail(i, "stability");

    // Any time: 2|D| <= 9 max-opt (batch 2) or 2|D| <= 45 opt (k-variant).
    std::int64_t denom = k_variant ? s.opt : s.max_opt;
    std::int64_t factor = k_variant ? 45 : 9;
    if (denom > 0) {
      report.worst_ratio = std::max(
          report.worst_ratio, static_cast<double>(s.sol_size) / denom);
    }
    if (2 * s.sol_size > factor * denom) fail(i, "size");

    // Phase start: the set before the arrival against the optimum before it.
    if (s.phase_start && i > 0) {
      const DomSetSample& p = samples[i - 1];
      std::int64_t pd = k_variant ? p.opt : p.max_opt;
      if (pd > 0) {
        report.worst_phase_start_ratio =
            std::max(report.worst_phase_start_ratio,
                     static_cast<double>(p.sol_size) / pd);
      }
      bool ok = k_variant ? 2 * p.sol_size <= 9 * pd : p.sol_size <= 3 * pd;
      if (!ok) fail(i, "phase-start size");
    }
  }
  return report;
}

}  // namespace stabledg
