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

#include "stabledg/indset.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "stabledg/validate.h"

namespace stabledg {
namespace {

// Degree cap of the working subgraph is kDegreeFactor * d.
constexpr int kDegreeFactor = 100;
constexpr std::int64_t kSizeFactor = 102;

bool FreeOf(const DynamicGraph& graph, VertexId v, const VertexSet& set) {
  for (VertexId u : graph.Neighbors(v)) {
    if (Contains(set, u)) return false;
  }
  return true;
}

// Lexicographically first independent k-subset of `cand`, if any.
bool FirstIndependent(const DynamicGraph& graph,
                      const std::vector<VertexId>& cand, std::size_t from,
                      int k, std::vector<VertexId>& picked) {
  if (k == 0) return true;
  for (std::size_t i = from; i < cand.size(); ++i) {
    VertexId v = cand[i];
    bool ok = true;
    for (VertexId p : picked) {
      if (graph.Adjacent(p, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    picked.push_back(v);
    if (FirstIndependent(graph, cand, i + 1, k - 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

int CeilAverageDegree(const DynamicGraph& graph) {
  if (graph.Empty()) return 0;
  Rational avg = graph.AverageDegree();
  return static_cast<int>((avg.num + avg.den - 1) / avg.den);
}

}  // namespace

std::size_t LowDegreeTargetSize(std::size_t n) { return (99 * n + 99) / 100; }

VertexSet SelectLowDegreeTarget(const DynamicGraph& graph, int d) {
  if (graph.Empty()) return {};
  if (graph.AverageDegree() > Rational(d)) {
    throw Error(ErrorCode::kAverageDegreeExceeded,
                "average degree " + graph.AverageDegree().ToString() +
                    " exceeds d = " + std::to_string(d),
                graph.current_time());
  }
  std::vector<std::pair<std::size_t, VertexId>> order;
  order.reserve(graph.NumAlive());
  for (VertexId v : graph.AliveVertices()) {
    order.emplace_back(graph.Degree(v), v);
  }
  std::sort(order.begin(), order.end());
  order.resize(LowDegreeTargetSize(order.size()));
  VertexSet target;
  for (const auto& [deg, v] : order) target.insert(v);
  if (InducedMaxDegree(graph, target) > kDegreeFactor * d) {
    throw Error(ErrorCode::kInvariantBreached,
                "low-degree target exceeds the induced degree cap",
                graph.current_time());
  }
  return target;
}

StepDelta GreedyAddition(const DynamicGraph& graph, VertexSet& i_star,
                         const VertexSet& w_star, int max_adds) {
  if (max_adds != 1 && max_adds != 3) {
    throw Error(ErrorCode::kInvalidArgument, "max_adds must be 1 or 3");
  }
  if (!IsIndependentSet(graph, i_star) ||
      !std::includes(w_star.begin(), w_star.end(), i_star.begin(),
                     i_star.end())) {
    throw Error(ErrorCode::kNotIndependent,
                "greedy addition needs an independent I* inside W*");
  }
  std::vector<VertexId> cand;
  for (VertexId v : w_star) {
    if (!Contains(i_star, v) && FreeOf(graph, v, i_star)) cand.push_back(v);
  }
  StepDelta delta;
  for (int k = max_adds; k >= 1; --k) {
    std::vector<VertexId> picked;
    if (FirstIndependent(graph, cand, 0, k, picked)) {
      for (VertexId v : picked) {
        i_star.insert(v);
        delta.added.insert(v);
      }
      break;
    }
  }
  return delta;
}

PhaseIndSet::PhaseIndSet(IndSetMode mode, std::optional<int> d)
    : mode_(mode), d_pinned_(d.has_value()), d_(d.value_or(1)) {
  if (d_ < 1) throw Error(ErrorCode::kInvalidArgument, "d must be >= 1");
}

StepDelta PhaseIndSet::Step(const DynamicGraph& graph,
                            const StreamEvent& event) {
  VertexSet before = i_alg_;
  if (event.kind == EventKind::kDeparture) {
    if (mode_ == IndSetMode::kInsertionOnly) {
      throw Error(ErrorCode::kModelViolation,
                  "insertion-only maintainer got a departure",
                  graph.current_time());
    }
    w_set_.erase(event.vertex);
    w_plus_.erase(event.vertex);
    w_minus_.erase(event.vertex);
    i_alg_.erase(event.vertex);
  }
  if (d_pinned_) {
    if (!graph.Empty() && graph.AverageDegree() > Rational(d_)) {
      throw Error(ErrorCode::kAverageDegreeExceeded,
                  "average degree " + graph.AverageDegree().ToString() +
                      " exceeds d = " + std::to_string(d_),
                  graph.current_time());
    }
  } else {
    d_ = std::max(d_, CeilAverageDegree(graph));
  }

  phase_started_ = w_plus_.empty() && w_minus_.empty();
  if (phase_started_) {
    VertexSet target = SelectLowDegreeTarget(graph, d_);
    w_plus_ = Difference(target, w_set_);
    w_minus_ = Difference(w_set_, target);
  }

  std::size_t batch = mode_ == IndSetMode::kInsertionOnly ? 1 : 2;
  std::size_t removed = 0;
  while (removed < batch && !w_minus_.empty()) {
    VertexId v = *w_minus_.begin();
    w_minus_.erase(w_minus_.begin());
    w_set_.erase(v);
    i_alg_.erase(v);
    ++removed;
  }
  std::size_t added = 0;
  while (removed + added < batch && !w_plus_.empty()) {
    w_set_.insert(*w_plus_.begin());
    w_plus_.erase(w_plus_.begin());
    ++added;
  }

  claim_premise_ = static_cast<std::int64_t>(w_set_.size()) >
                   kSizeFactor * d_ * static_cast<std::int64_t>(i_alg_.size());
  StepDelta greedy = GreedyAddition(
      graph, i_alg_, w_set_, mode_ == IndSetMode::kInsertionOnly ? 1 : 3);
  greedy_added_ = !greedy.added.empty();
  return Diff(before, i_alg_);
}

AuxFields PhaseIndSet::Aux() const {
  return {{"w_size", static_cast<std::int64_t>(w_set_.size())},
          {"phase_start", phase_started_ ? 1 : 0},
          {"w_plus", static_cast<std::int64_t>(w_plus_.size())},
          {"w_minus", static_cast<std::int64_t>(w_minus_.size())},
          {"claim_premise", claim_premise_ ? 1 : 0},
          {"greedy_added", greedy_added_ ? 1 : 0}};
}

IndSetReport IndSetRatioReport(const std::vector<IndSetSample>& samples,
                               IndSetMode mode, int d) {
  bool insertion = mode == IndSetMode::kInsertionOnly;
  // |W| >= (num/den) |V| at any step and at phase start.
  std::int64_t any_num = insertion ? 455 : 89;
  std::int64_t any_den = insertion ? 1000 : 603;
  std::int64_t start_num = insertion ? 495 : 98;
  std::int64_t start_den = insertion ? 1000 : 300;
  std::int64_t max_stability = insertion ? 2 : 6;

  IndSetReport report;
  auto fail = [&](std::size_t i, std::string what) {
    report.satisfied = false;
    report.violations.push_back(
        {static_cast<Timestamp>(i + 1), std::move(what)});
  };

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const IndSetSample& s = samples[i];
    report.max_stability = std::max(report.max_stability, s.stability);
    if (s.stability > max_stability) fail(i, "stability");

    if (s.i_size > 0) {
      report.worst_w_over_i = std::max(
          report.worst_w_over_i, static_cast<double>(s.w_size) / s.i_size);
    } else if (s.w_size > 0) {
      report.worst_w_over_i = std::numeric_limits<double>::infinity();
    }
    if (s.w_size > kSizeFactor * d * s.i_size) fail(i, "|W| > 102d|I|");

    if (s.opt) {
      if (s.i_size > 0) {
        report.worst_opt_over_i = std::max(
            report.worst_opt_over_i, static_cast<double>(*s.opt) / s.i_size);
      } else if (*s.opt > 0) {
        report.worst_opt_over_i = std::numeric_limits<double>::infinity();
      }
      // opt / |I| <= (1000 / 455) * 102 d
      if (455 * static_cast<std::int64_t>(*s.opt) >
          1000 * kSizeFactor * d * s.i_size) {
        fail(i, "opt ratio");
      }
    }

    if (s.n_alive > 0) {
      report.min_w_fraction =
          std::min(report.min_w_fraction,
                   static_cast<double>(s.w_size) / s.n_alive);
    }
    if (any_den * s.w_size < any_num * s.n_alive) fail(i, "|W| / |V|");

    if (s.phase_start && i > 0) {
      const IndSetSample& p = samples[i - 1];
      if (start_den * p.w_size < start_num * p.n_alive) {
        fail(i, "phase-start |W| / |V|");
      }
    }
    if (s.claim_premise && !s.greedy_added) fail(i, "greedy claim");
  }
  return report;
}

}  // namespace stabledg
