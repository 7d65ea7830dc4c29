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

#include "stabledg/harness.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "stabledg/adversary.h"
#include "stabledg/random_streams.h"
#include "stabledg/stream_io.h"

namespace stabledg {
namespace {

RunConfig Config(Algorithm alg, bool oracle) {
  RunConfig cfg;
  cfg.alg = alg;
  cfg.oracle = oracle ? OracleMode::kExact : OracleMode::kOff;
  cfg.strict = true;
  return cfg;
}

TEST(ReplayTest, EmptyStreamGivesEmptyTrace) {
  EXPECT_TRUE(Replay(Config(Algorithm::kPhase2, true), EventStream{})
                  .records.empty());
}

TEST(ReplayTest, DirectedOnTightExample) {
  RunConfig cfg = Config(Algorithm::kDirected, true);
  cfg.oracle_max_vertices = 40;
  Trace tr = Replay(cfg, DirectedDomSetTightStream(3));
  ASSERT_FALSE(tr.records.empty());
  EXPECT_EQ(tr.records.back().sol_size, 11);
  EXPECT_EQ(tr.records.back().opt, 3);
}

TEST(ReplayTest, PhaseTwoStaysThreeStable) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Trace tr = Replay(Config(Algorithm::kPhase2, true),
                      RandomArrivalStream(20, 2, seed));
    for (const auto& r : tr.records) EXPECT_LE(r.stability(), 3);
    EXPECT_EQ(tr.Header("breaches"), "0");
  }
}

TEST(ReplayTest, ModelCompatibility) {
  FullyDynamicOptions o;
  EventStream dyn = RandomFullyDynamicStream(o, 2);
  for (Algorithm a : {Algorithm::kDirected, Algorithm::kPhase2,
                      Algorithm::kPhaseK, Algorithm::kIs2}) {
    try {
      Replay(Config(a, false), dyn);
      ADD_FAILURE() << AlgorithmName(a);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kModelViolation);
    }
  }
  EXPECT_EQ(Replay(Config(Algorithm::kIs6, false), dyn).records.size(),
            dyn.events.size());
}

TEST(ReplayTest, FallbackIsFlagged) {
  RunConfig cfg = Config(Algorithm::kPhase2, false);
  cfg.greedy_fallback = true;
  Trace tr = Replay(cfg, RandomArrivalStream(40, 2, 1));
  EXPECT_EQ(tr.Header("flags"), "bounds-not-guaranteed");
  cfg.greedy_fallback = false;
  EXPECT_THROW(Replay(cfg, RandomArrivalStream(40, 2, 1)), Error);
}

TEST(ReplayTest, SparseOracle) {
  RunConfig cfg = Config(Algorithm::kIs2, true);
  cfg.sparse_oracle = 4;
  Trace tr = Replay(cfg, RandomAverageDegreeStream(20, 2, 1));
  for (const auto& r : tr.records) EXPECT_EQ(r.opt.has_value(), r.t % 4 == 0);
  EXPECT_EQ(tr.Header("flags"), "ratios-lower-bounds");
}

TEST(ReplayTest, DeterministicBytes) {
  RunConfig cfg = Config(Algorithm::kIs6, true);
  FullyDynamicOptions o;
  o.max_alive = 30;
  EventStream s = RandomFullyDynamicStream(o, 8);
  EXPECT_EQ(FormatTraceCsv(Replay(cfg, s)), FormatTraceCsv(Replay(cfg, s)));
}

TEST(ReplayTest, SeedFromEnvironment) {
  RunConfig cfg;
  cfg.seed = 5;
  unsetenv("STABLE_DG_SEED");
  EXPECT_EQ(EffectiveSeed(cfg), 5u);
  setenv("STABLE_DG_SEED", "42", 1);
  EXPECT_EQ(EffectiveSeed(cfg), 42u);
  setenv("STABLE_DG_SEED", "x", 1);
  EXPECT_THROW(EffectiveSeed(cfg), Error);
  unsetenv("STABLE_DG_SEED");
}

TEST(ReplayTest, LoadsAndSavesFiles) {
  auto dir = std::filesystem::temp_directory_path();
  auto stream_path = dir / "stabledg_harness_stream.jsonl";
  auto trace_path = dir / "stabledg_harness_trace.csv";
  SaveEventStream(stream_path, StarAdversaryStream(6));
  RunConfig cfg = Config(Algorithm::kIs2, true);
  cfg.stream_path = stream_path.string();
  cfg.out_path = trace_path.string();
  Trace tr = Replay(cfg);
  EXPECT_EQ(LoadTrace(cfg.out_path), tr);
  std::filesystem::remove(stream_path);
  std::filesystem::remove(trace_path);
}

TEST(TraceCsvTest, RoundTrip) {
  Trace tr;
  tr.SetHeader("alg", "is6");
  tr.SetHeader("sense", "max");
  TraceRecord a;
  a.t = 1;
  a.n_alive = 1;
  a.sol_size = 1;
  a.opt = 1;
  a.max_opt = 1;
  a.added = 1;
  a.aux = {{"w_size", 1}, {"phase_start", 1}};
  TraceRecord b;
  b.t = 2;
  b.event = EventKind::kDeparture;
  b.removed = 1;
  b.aux = {{"w_size", 0}, {"phase_start", 0}};
  tr.records = {a, b};
  std::string text = FormatTraceCsv(tr);
  EXPECT_NE(text.find("t,event,n_alive,sol_size,opt,max_opt,added,removed,"
                      "aux_w_size,aux_phase_start\n"),
            std::string::npos);
  EXPECT_NE(text.find("2,del,0,0,,,0,1,0,0\n"), std::string::npos);
  EXPECT_EQ(ParseTraceCsv(text), tr);
}

TEST(TraceCsvTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseTraceCsv("a,b\n"), Error);
  EXPECT_THROW(ParseTraceCsv("t,event,n_alive,sol_size,opt,max_opt,added,"
                             "removed\n1,add,1\n"),
               Error);
  EXPECT_THROW(ParseTraceCsv("t,event,n_alive,sol_size,opt,max_opt,added,"
                             "removed\n1,jump,1,1,,,1,0\n"),
               Error);
}

TEST(SummaryTest, RatiosAndStability) {
  EXPECT_THROW(Summarize(Trace{}), Error);

  Trace no_opt = Replay(Config(Algorithm::kDirected, false),
                        RandomArrivalStream(10, 2, 1));
  Summary s = Summarize(no_opt);
  EXPECT_FALSE(s.worst_ratio.has_value());
  EXPECT_LE(s.max_stability, 1);
  EXPECT_NE(FormatSummary(s).find("\"n/a\""), std::string::npos);

  Trace is2 = Replay(Config(Algorithm::kIs2, true),
                     RandomAverageDegreeStream(30, 2, 3));
  Summary t = Summarize(is2);
  ASSERT_TRUE(t.min_w_fraction.has_value());
  EXPECT_GE(*t.min_w_fraction, 0.455);
  ASSERT_TRUE(t.worst_ratio.has_value());
  EXPECT_GE(*t.worst_ratio, 1.0);

  RunConfig k = Config(Algorithm::kPhaseK, true);
  k.d = 1;
  Summary u = Summarize(Replay(k, RandomArrivalStream(20, 1, 2)));
  EXPECT_LE(*u.worst_ratio, 22.5);
}

}  // namespace
}  // namespace stabledg
