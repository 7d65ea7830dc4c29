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

#include "stabledg/stabilize.h"

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "stabledg/validate.h"

namespace stabledg {
namespace {

// Enumerates k-subsets of `pool` in lexicographic order, calling `visit` on
// each complete subset until it returns true. With `prune`, a partial subset
// rejected by `prune` is not extended.
class Combinations {
 public:
  using Visit = std::function<bool(const std::vector<VertexId>&)>;

  Combinations(const std::vector<VertexId>& pool, std::size_t k, Visit visit,
               Visit prune)
      : pool_(pool), k_(k), visit_(std::move(visit)), prune_(std::move(prune)) {}

  bool Run() { return Extend(0); }

 private:
  bool Extend(std::size_t from) {
    if (picked_.size() == k_) return visit_(picked_);
    std::size_t need = k_ - picked_.size();
    for (std::size_t i = from; i + need <= pool_.size(); ++i) {
      picked_.push_back(pool_[i]);
      bool keep = !prune_ || prune_(picked_);
      if (keep && Extend(i + 1)) return true;
      picked_.pop_back();
    }
    return false;
  }

  const std::vector<VertexId>& pool_;
  std::size_t k_;
  Visit visit_;
  Visit prune_;
  std::vector<VertexId> picked_;
};

}  // namespace

ProblemAdapter MinDominatingSetAdapter(int continuity_d, OracleBudget budget) {
  ProblemAdapter a;
  a.name = "min-ds";
  a.sense = Sense::kMin;
  a.feasible = [](const DynamicGraph& g, const VertexSet& s) {
    return IsDominatingSet(g, s);
  };
  a.opt = [budget](const DynamicGraph& g) {
    return OptValue(g, Problem::kDomSet, budget);
  };
  a.continuity_d = continuity_d;
  return a;
}

ProblemAdapter MaxIndependentSetAdapter(int continuity_d, OracleBudget budget) {
  ProblemAdapter a;
  a.name = "max-is";
  a.sense = Sense::kMax;
  a.feasible = [](const DynamicGraph& g, const VertexSet& s) {
    return IsIndependentSet(g, s);
  };
  a.opt = [budget](const DynamicGraph& g) {
    return OptValue(g, Problem::kIndSet, budget);
  };
  a.continuity_d = continuity_d;
  a.hereditary = true;
  return a;
}

std::int64_t SasStabilityBound(Sense sense, int continuity_d, Rational eps,
                               int f) {
  if (sense == Sense::kMax) {
    return static_cast<std::int64_t>(continuity_d) * (2 * f + 1);
  }
  std::int64_t scaled = (eps.den + eps.num) * continuity_d;
  std::int64_t ceil = (scaled + eps.den - 1) / eps.den;
  return (ceil + 1) * (2 * f - 1);
}

SasMaintainer::SasMaintainer(ProblemAdapter adapter, Rational eps, int f)
    : adapter_(std::move(adapter)), eps_(eps), f_(f) {
  if (eps_.num <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "eps must be positive");
  }
  if (f_ < 1) throw Error(ErrorCode::kInvalidArgument, "f must be >= 1");
}

bool SasMaintainer::WithinFactor(std::size_t size, int opt) const {
  auto s = static_cast<std::int64_t>(size);
  if (adapter_.sense == Sense::kMin) {
    return s * eps_.den <= (eps_.den + eps_.num) * opt;
  }
  return (eps_.den + eps_.num) * s >= eps_.den * opt;
}

bool SasMaintainer::ApplyFirstSwap(const DynamicGraph& graph) {
  std::vector<VertexId> inside(s_alg_.begin(), s_alg_.end());
  std::vector<VertexId> outside;
  for (VertexId v : graph.AliveVertices()) {
    if (!Contains(s_alg_, v)) outside.push_back(v);
  }
  bool grow = adapter_.sense == Sense::kMax;

  for (int k_old = grow ? 0 : 1; k_old <= f_; ++k_old) {
    std::size_t k_new = grow ? k_old + 1 : k_old - 1;
    VertexSet base;
    VertexSet chosen_old;
    VertexSet chosen_new;
    bool found = false;

    auto try_old = [&](const std::vector<VertexId>& old) {
      base = s_alg_;
      for (VertexId v : old) base.erase(v);
      auto with = [&](const std::vector<VertexId>& extra) {
        VertexSet s = base;
        s.insert(extra.begin(), extra.end());
        return s;
      };
      Combinations::Visit prune;
      if (adapter_.hereditary) {
        prune = [&](const std::vector<VertexId>& partial) {
          return adapter_.feasible(graph, with(partial));
        };
      }
      Combinations news(
          outside, k_new,
          [&](const std::vector<VertexId>& fresh) {
            if (!adapter_.feasible(graph, with(fresh))) return false;
            chosen_old = VertexSet(old.begin(), old.end());
            chosen_new = VertexSet(fresh.begin(), fresh.end());
            return true;
          },
          prune);
      return news.Run();
    };
    Combinations olds(inside, k_old, try_old, nullptr);
    found = olds.Run();
    if (found) {
      for (VertexId v : chosen_old) s_alg_.erase(v);
      s_alg_.insert(chosen_new.begin(), chosen_new.end());
      return true;
    }
  }
  return false;
}

StepDelta SasMaintainer::Step(const DynamicGraph& graph,
                              const StreamEvent& event) {
  VertexSet before = s_alg_;
  if (event.kind == EventKind::kDeparture) {
    if (adapter_.sense == Sense::kMin) {
      throw Error(ErrorCode::kModelViolation,
                  "minimization wrapper accepts arrivals only",
                  graph.current_time());
    }
    s_alg_.erase(event.vertex);
  } else if (adapter_.sense == Sense::kMin) {
    s_alg_.insert(event.vertex);
  }

  int opt = adapter_.opt(graph);
  if (std::abs(opt - last_opt_) > adapter_.continuity_d) {
    throw Error(ErrorCode::kContinuityViolated,
                "opt moved from " + std::to_string(last_opt_) + " to " +
                    std::to_string(opt),
                graph.current_time());
  }
  last_opt_ = opt;

  last_swaps_ = 0;
  while (!WithinFactor(s_alg_.size(), opt)) {
    if (!ApplyFirstSwap(graph)) {
      throw Error(ErrorCode::kNoImprovingSwap,
                  "no improving swap with at most " + std::to_string(f_) +
                      " removed vertices",
                  graph.current_time());
    }
    ++last_swaps_;
  }
  return Diff(before, s_alg_);
}

AuxFields SasMaintainer::Aux() const {
  return {{"swaps", last_swaps_}};
}

}  // namespace stabledg
