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

// Replay engine: runs a maintainer over a stream, validates every step,
// optionally attaches exact optima, and reads/writes CSV traces.

#ifndef STABLEDG_HARNESS_H_
#define STABLEDG_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabledg/common.h"
#include "stabledg/dyngraph.h"
#include "stabledg/stabilize.h"

namespace stabledg {

enum class Algorithm { kDirected, kPhase2, kPhaseK, kIs2, kIs6, kSas };

std::string AlgorithmName(Algorithm alg);
Algorithm ParseAlgorithm(const std::string& name);

enum class OracleMode { kOff, kExact };

struct RunConfig {
  Algorithm alg = Algorithm::kDirected;
  std::string stream_path;
  OracleMode oracle = OracleMode::kOff;
  bool strict = false;
  std::uint64_t seed = 0;
  std::string out_path;

  // Overrides the stream's d.
  std::optional<int> d;
  // Oracle on every k-th event only; ratios then are lower bounds.
  int sparse_oracle = 1;
  std::optional<int> oracle_max_vertices;
  // Phase targets beyond the oracle budget come from a greedy set.
  bool greedy_fallback = false;

  Sense sas_sense = Sense::kMax;
  Rational eps{1, 2};
  int f = 3;
  std::optional<int> continuity_d;
};

// STABLE_DG_SEED, when set, replaces cfg.seed.
std::uint64_t EffectiveSeed(const RunConfig& cfg);

struct TraceRecord {
  Timestamp t = 0;
  EventKind event = EventKind::kArrival;
  std::int64_t n_alive = 0;
  std::int64_t sol_size = 0;
  std::optional<int> opt;
  std::optional<int> max_opt;
  std::int64_t added = 0;
  std::int64_t removed = 0;
  AuxFields aux;

  std::int64_t stability() const { return added + removed; }
  std::optional<std::int64_t> Aux(const std::string& name) const;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Trace {
  // Run description, written as one "# k=v k=v" line above the CSV header.
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<TraceRecord> records;

  std::optional<std::string> Header(const std::string& key) const;
  void SetHeader(const std::string& key, const std::string& value);

  friend bool operator==(const Trace&, const Trace&) = default;
};

// Per-step stability bound the algorithm promises under `cfg` for `stream`.
std::int64_t DeclaredStabilityBound(const RunConfig& cfg,
                                    const EventStream& stream);

// Throws kModelViolation, kBudgetExceeded (oracle), kTargetUnavailable and,
// in strict mode, kInvariantBreached with at() = offending t.
Trace Replay(const RunConfig& cfg, const EventStream& stream);
// Loads cfg.stream_path and, if cfg.out_path is set, writes the trace.
Trace Replay(const RunConfig& cfg);

void WriteTraceCsv(std::ostream& out, const Trace& trace);
std::string FormatTraceCsv(const Trace& trace);
Trace ReadTraceCsv(std::istream& in);
Trace ParseTraceCsv(const std::string& text);
void SaveTrace(const std::string& path, const Trace& trace);
Trace LoadTrace(const std::string& path);

struct Summary {
  std::string alg;
  std::size_t events = 0;
  // sol/opt for minimization, opt/sol for maximization; absent without opt.
  std::optional<double> worst_ratio;
  std::int64_t max_stability = 0;
  std::optional<double> min_w_fraction;
};

// Throws kEmptyTrace.
Summary Summarize(const Trace& trace);
std::string FormatSummary(const Summary& summary);

}  // namespace stabledg

#endif  // STABLEDG_HARNESS_H_
