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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "stabledg/adversary.h"
#include "stabledg/oracle.h"
#include "stabledg/random_streams.h"
#include "test_util.h"

namespace stabledg {
namespace {

using testing::Drive;
using testing::GraphFromEdges;

TEST(LowDegreeTargetTest, Sizes) {
  EXPECT_EQ(LowDegreeTargetSize(200), 198u);
  EXPECT_EQ(LowDegreeTargetSize(100), 99u);
  EXPECT_EQ(LowDegreeTargetSize(101), 100u);
  EXPECT_EQ(LowDegreeTargetSize(50), 50u);
  EXPECT_EQ(LowDegreeTargetSize(1), 1u);
  EXPECT_EQ(LowDegreeTargetSize(0), 0u);
}

TEST(LowDegreeTargetTest, IsolatedVertices) {
  DynamicGraph g = GraphFromEdges(50, {});
  VertexSet t = SelectLowDegreeTarget(g, 1);
  EXPECT_EQ(t.size(), 50u);
  EXPECT_EQ(InducedMaxDegree(g, t), 0);
}

TEST(LowDegreeTargetTest, DropsHighestDegreeVertices) {
  // Star on 0..199 plus nothing else: the center is the one left out.
  EventStream s = StarAdversaryStream(200);
  DynamicGraph g = BuildGraph(s);
  VertexSet t = SelectLowDegreeTarget(g, 2);
  EXPECT_EQ(t.size(), 198u);
  EXPECT_FALSE(Contains(t, 0));
  EXPECT_FALSE(Contains(t, 199));  // ties broken towards lower ids
  EXPECT_TRUE(Contains(t, 198));
}

TEST(LowDegreeTargetTest, RandomInducedDegreeBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DynamicGraph g = BuildGraph(RandomAverageDegreeStream(60, 2, seed));
    EXPECT_LE(InducedMaxDegree(g, SelectLowDegreeTarget(g, 2)), 200);
  }
}

TEST(LowDegreeTargetTest, RejectsDenseGraphs) {
  DynamicGraph tri = GraphFromEdges(3, {{0, 1}, {1, 2}, {0, 2}});
  try {
    SelectLowDegreeTarget(tri, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAverageDegreeExceeded);
  }
}

TEST(GreedyAdditionTest, Examples) {
  DynamicGraph path = GraphFromEdges(3, {{0, 1}, {1, 2}});
  VertexSet i;
  EXPECT_TRUE(GreedyAddition(path, i, {}, 1).empty());
  EXPECT_EQ(GreedyAddition(path, i, {0, 1, 2}, 1).added, (VertexSet{0}));
  EXPECT_EQ(GreedyAddition(path, i, {0, 1, 2}, 1).added, (VertexSet{2}));
  EXPECT_TRUE(GreedyAddition(path, i, {0, 1, 2}, 1).empty());
}

TEST(GreedyAdditionTest, PrefersLargestCount) {
  DynamicGraph g = GraphFromEdges(4, {});
  VertexSet i;
  EXPECT_EQ(GreedyAddition(g, i, {0, 1, 2, 3}, 3).added, (VertexSet{0, 1, 2}));
  // Triangle 0-1-2 plus isolated 3: no triple, best pair {0,3}.
  DynamicGraph tri = GraphFromEdges(4, {{0, 1}, {1, 2}, {0, 2}});
  VertexSet j;
  EXPECT_EQ(GreedyAddition(tri, j, {0, 1, 2, 3}, 3).added, (VertexSet{0, 3}));
  // A lexicographically early vertex may be skipped to fit three.
  DynamicGraph star = GraphFromEdges(4, {{0, 1}, {0, 2}, {0, 3}});
  VertexSet k;
  EXPECT_EQ(GreedyAddition(star, k, {0, 1, 2, 3}, 3).added,
            (VertexSet{1, 2, 3}));
}

TEST(GreedyAdditionTest, ChecksPrecondition) {
  DynamicGraph path = GraphFromEdges(3, {{0, 1}, {1, 2}});
  VertexSet dependent{0, 1};
  try {
    GreedyAddition(path, dependent, {0, 1, 2}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIndependent);
  }
  VertexSet outside{2};
  EXPECT_THROW(GreedyAddition(path, outside, {0, 1}, 1), Error);
  VertexSet ok;
  EXPECT_THROW(GreedyAddition(path, ok, {0}, 2), Error);
}

TEST(PhaseIndSetTest, FirstArrival) {
  PhaseIndSet alg(IndSetMode::kInsertionOnly, 1);
  DynamicGraph g;
  g.Apply(StreamEvent::Arrival(1));
  StepDelta d = alg.Step(g, StreamEvent::Arrival(1));
  EXPECT_EQ(alg.w_set(), (VertexSet{1}));
  EXPECT_EQ(alg.Solution(), (VertexSet{1}));
  EXPECT_LE(d.stability(), 2);
}

TEST(PhaseIndSetTest, InsertionOnlyRejectsDepartures) {
  PhaseIndSet alg(IndSetMode::kInsertionOnly, 1);
  DynamicGraph g;
  g.Apply(StreamEvent::Arrival(1));
  alg.Step(g, StreamEvent::Arrival(1));
  g.Apply(StreamEvent::Departure(1));
  try {
    alg.Step(g, StreamEvent::Departure(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModelViolation);
  }
}

TEST(PhaseIndSetTest, DepartureOfOutputVertexCounts) {
  PhaseIndSet alg(IndSetMode::kFullyDynamic, 1);
  EventStream s;
  s.events = {StreamEvent::Arrival(0), StreamEvent::Departure(0)};
  std::vector<StepDelta> deltas;
  Drive(s, alg, [&](const DynamicGraph&, const StepDelta& d, Timestamp) {
    deltas.push_back(d);
  });
  EXPECT_EQ(deltas[1].removed, (VertexSet{0}));
  EXPECT_TRUE(alg.w_set().empty());
}

TEST(PhaseIndSetTest, PinnedDegreeIsEnforced) {
  PhaseIndSet alg(IndSetMode::kInsertionOnly, 1);
  EventStream s = testing::StreamFromEdges(3, {{0, 1}, {1, 2}, {0, 2}});
  try {
    Drive(s, alg, [](const DynamicGraph&, const StepDelta&, Timestamp) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAverageDegreeExceeded);
  }
}

void CheckRun(const EventStream& s, IndSetMode mode, int d) {
  PhaseIndSet alg(mode, d);
  std::vector<IndSetSample> samples;
  Drive(s, alg, [&](const DynamicGraph& g, const StepDelta& delta, Timestamp) {
    const VertexSet& i = alg.Solution();
    ASSERT_TRUE(IsIndependentSet(g, i));
    ASSERT_TRUE(std::includes(alg.w_set().begin(), alg.w_set().end(),
                              i.begin(), i.end()));
    ASSERT_TRUE(IsAliveSubset(g, alg.w_set()));
    EXPECT_LE(InducedMaxDegree(g, alg.w_set()), 100 * d);
    samples.push_back({static_cast<std::int64_t>(g.NumAlive()),
                       static_cast<std::int64_t>(alg.w_set().size()),
                       static_cast<std::int64_t>(i.size()), std::nullopt,
                       alg.phase_started(), delta.stability(),
                       alg.claim_premise(), alg.greedy_added()});
  });
  IndSetReport r = IndSetRatioReport(samples, mode, d);
  EXPECT_TRUE(r.satisfied) << (r.violations.empty() ? "" : r.violations[0].what)
                           << " at t=" << (r.violations.empty() ? 0 : r.violations[0].t);
}

TEST(PhaseIndSetTest, InsertionOnlyBounds) {
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      CheckRun(RandomAverageDegreeStream(150, d, seed),
               IndSetMode::kInsertionOnly, d);
    }
  }
}

TEST(PhaseIndSetTest, FullyDynamicBounds) {
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      FullyDynamicOptions o;
      o.events = 300;
      o.d = d;
      CheckRun(RandomFullyDynamicStream(o, seed), IndSetMode::kFullyDynamic, d);
    }
  }
}

TEST(IndSetReportTest, EmptyOutputTripsWire) {
  std::vector<IndSetSample> s = {{3, 2, 0, std::nullopt, true, 0, true, false}};
  IndSetReport r = IndSetRatioReport(s, IndSetMode::kInsertionOnly, 1);
  EXPECT_FALSE(r.satisfied);
  EXPECT_TRUE(std::isinf(r.worst_w_over_i));
}

TEST(IndSetReportTest, OracleRatio) {
  EventStream s = RandomAverageDegreeStream(36, 2, 5);
  PhaseIndSet alg(IndSetMode::kInsertionOnly, 2);
  std::vector<IndSetSample> samples;
  Drive(s, alg, [&](const DynamicGraph& g, const StepDelta& delta, Timestamp) {
    samples.push_back({static_cast<std::int64_t>(g.NumAlive()),
                       static_cast<std::int64_t>(alg.w_set().size()),
                       static_cast<std::int64_t>(alg.Solution().size()),
                       OptValue(g, Problem::kIndSet,
                                OracleBudget::IndSetDefault()),
                       alg.phase_started(), delta.stability(),
                       alg.claim_premise(), alg.greedy_added()});
  });
  IndSetReport r = IndSetRatioReport(samples, IndSetMode::kInsertionOnly, 2);
  EXPECT_TRUE(r.satisfied);
  EXPECT_LE(r.worst_w_over_i, 204.0);
  EXPECT_LE(r.worst_opt_over_i, 1000.0 / 455.0 * 204.0);
}

}  // namespace
}  // namespace stabledg
