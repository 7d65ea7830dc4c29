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

#include <gtest/gtest.h>

#include <algorithm>

#include "stabledg/random_streams.h"
#include "test_util.h"

namespace stabledg {
namespace {

using testing::GraphFromEdges;
using testing::RandomGraph;

constexpr OracleEngine kEngines[] = {OracleEngine::kEnumeration,
                                     OracleEngine::kBranchAndBound};

TEST(OracleTest, StarHasCenter) {
  DynamicGraph g = GraphFromEdges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  for (OracleEngine e : kEngines) {
    EXPECT_EQ(MinDominatingSet(g, OracleBudget::DomSetDefault(), e),
              (VertexSet{0}));
  }
}

TEST(OracleTest, PathOfFourPicksLexSmallestOptimum) {
  DynamicGraph g = GraphFromEdges(4, {{0, 1}, {1, 2}, {2, 3}});
  for (OracleEngine e : kEngines) {
    EXPECT_EQ(MinDominatingSet(g, OracleBudget::DomSetDefault(), e),
              (VertexSet{0, 2}));
  }
}

TEST(OracleTest, PetersenDominationNumberIsThree) {
  DynamicGraph g = testing::Petersen();
  VertexSet brute = testing::BruteMinDominating(g);
  ASSERT_EQ(brute.size(), 3u);
  for (OracleEngine e : kEngines) {
    EXPECT_EQ(MinDominatingSet(g, OracleBudget::DomSetDefault(), e), brute);
  }
}

TEST(OracleTest, IndependentSetBasics) {
  DynamicGraph empty4 = GraphFromEdges(4, {});
  EXPECT_EQ(MaxIndependentSet(empty4), (VertexSet{0, 1, 2, 3}));
  DynamicGraph c5 = GraphFromEdges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  for (OracleEngine e : kEngines) {
    EXPECT_EQ(MaxIndependentSet(c5, OracleBudget::IndSetDefault(), e),
              (VertexSet{0, 2}));
  }
}

TEST(OracleTest, RandomTwelveVertexGraphMatchesTwoScans) {
  DynamicGraph g = RandomGraph(12, 0.3, 1);
  std::vector<VertexId> ids(g.AliveVertices().begin(), g.AliveVertices().end());
  // Scan 1: all subsets, keep the largest independent one.
  std::size_t best_up = 0;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    VertexSet s;
    for (int i = 0; i < 12; ++i) {
      if (mask >> i & 1) s.insert(ids[i]);
    }
    if (IsIndependentSet(g, s)) best_up = std::max(best_up, s.size());
  }
  // Scan 2: descending sizes, stop at the first size that has a witness.
  std::size_t best_down = 0;
  for (int k = 12; k >= 0 && best_down == 0; --k) {
    std::vector<bool> pick(12, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      VertexSet s;
      for (int i = 0; i < 12; ++i) {
        if (pick[i]) s.insert(ids[i]);
      }
      if (IsIndependentSet(g, s)) {
        best_down = s.size();
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  ASSERT_EQ(best_up, best_down);
  EXPECT_EQ(MaxIndependentSet(g).size(), best_up);
  EXPECT_EQ(OptValue(g, Problem::kIndSet, OracleBudget::IndSetDefault()),
            static_cast<int>(best_up));
}

TEST(OracleTest, DirectedBasics) {
  DynamicGraph g;
  g.Apply(StreamEvent::Arrival(1));
  EXPECT_EQ(MinDirectedDominatingSet(g), (VertexSet{1}));
  g.Apply(StreamEvent::Arrival(2, {1}));
  EXPECT_EQ(MinDirectedDominatingSet(g), (VertexSet{1}));
}

TEST(OracleTest, EnginesAgreeWithBruteForceOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 1 + static_cast<int>(seed % 10);
    double p = 0.1 + 0.1 * static_cast<double>(seed % 5);
    DynamicGraph g = RandomGraph(n, p, seed);
    VertexSet ds = testing::BruteMinDominating(g);
    VertexSet dds = testing::BruteMinDirected(g);
    VertexSet mis = testing::BruteMaxIndependent(g);
    for (OracleEngine e : kEngines) {
      SCOPED_TRACE(::testing::Message() << "seed " << seed);
      EXPECT_EQ(MinDominatingSet(g, OracleBudget::DomSetDefault(), e), ds);
      EXPECT_EQ(MinDirectedDominatingSet(g, OracleBudget::DomSetDefault(), e),
                dds);
      EXPECT_EQ(MaxIndependentSet(g, OracleBudget::IndSetDefault(), e), mis);
      EXPECT_EQ(OptValue(g, Problem::kDomSet, OracleBudget::DomSetDefault(), e),
                static_cast<int>(ds.size()));
    }
  }
}

TEST(OracleTest, EnginesAgreeOnMediumGraphs) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DynamicGraph g = RandomGraph(16, 0.2, 100 + seed);
    EXPECT_EQ(MinDominatingSet(g, OracleBudget::DomSetDefault(),
                               OracleEngine::kEnumeration),
              MinDominatingSet(g, OracleBudget::DomSetDefault(),
                               OracleEngine::kBranchAndBound));
    EXPECT_EQ(MaxIndependentSet(g, OracleBudget::IndSetDefault(),
                                OracleEngine::kEnumeration),
              MaxIndependentSet(g, OracleBudget::IndSetDefault(),
                                OracleEngine::kBranchAndBound));
  }
}

TEST(OracleTest, RefusesOversizedInput) {
  DynamicGraph g = GraphFromEdges(25, {});
  try {
    MinDominatingSet(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_EQ(MaxIndependentSet(g).size(), 25u);  // IS budget is 40
  OracleBudget tiny{25, 10};
  EXPECT_THROW(MinDominatingSet(RandomGraph(20, 0.2, 3), tiny), Error);
}

TEST(OptTraceTest, SingletonsGrowIndependentSet) {
  EventStream s = testing::StreamFromEdges(5, {});
  OptTrace tr = ComputeOptTrace(s, Problem::kIndSet, OracleBudget::IndSetDefault());
  EXPECT_EQ(tr.opt, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(tr.max_opt, tr.opt);
}

TEST(OptTraceTest, ReportsLastSolvablePrefix) {
  EventStream s = testing::StreamFromEdges(6, {});
  try {
    ComputeOptTrace(s, Problem::kDomSet, OracleBudget{4, 1'000'000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    EXPECT_EQ(e.at(), 4);
  }
}

TEST(OptTraceTest, ArrivalStreamLemmas) {
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      EventStream s = RandomArrivalStream(18, d, seed);
      OptTrace tr = ComputeOptTrace(s, Problem::kDomSet,
                                    OracleBudget::DomSetDefault());
      OptTrace out = ComputeOptTrace(s, Problem::kDirectedDomSet,
                                     OracleBudget::DomSetDefault());
      for (std::size_t t = 0; t < tr.opt.size(); ++t) {
        if (t + 1 < tr.opt.size()) {
          EXPECT_LE(tr.opt[t] - (d - 1), tr.opt[t + 1]);
          EXPECT_LE(tr.opt[t + 1], tr.opt[t] + 1);
        }
        EXPECT_LE(tr.max_opt[t], d * tr.opt[t]);
        EXPECT_LE(out.opt[t], (d + 1) * tr.opt[t]);
        EXPECT_GE(out.opt[t], tr.opt[t]);
      }
    }
  }
}

TEST(GreedyDominatingSetTest, Dominates) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DynamicGraph g = RandomGraph(30, 0.1, seed);
    EXPECT_TRUE(IsDominatingSet(g, GreedyDominatingSet(g)));
  }
}

}  // namespace
}  // namespace stabledg
