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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "stabledg/domset.h"
#include "stabledg/indset.h"
#include "stabledg/oracle.h"
#include "stabledg/stream_io.h"
#include "stabledg/validate.h"

namespace stabledg {
namespace {

constexpr const char* kColumns[] = {"t",       "event",   "n_alive",
                                    "sol_size", "opt",     "max_opt",
                                    "added",   "removed"};
constexpr std::size_t kNumColumns = 8;

bool ArrivalOnly(Algorithm alg, const RunConfig& cfg) {
  switch (alg) {
    case Algorithm::kIs6:
      return false;
    case Algorithm::kSas:
      return cfg.sas_sense == Sense::kMin;
    default:
      return true;
  }
}

Sense AlgorithmSense(const RunConfig& cfg) {
  switch (cfg.alg) {
    case Algorithm::kIs2:
    case Algorithm::kIs6:
      return Sense::kMax;
    case Algorithm::kSas:
      return cfg.sas_sense;
    default:
      return Sense::kMin;
  }
}

std::optional<int> PinnedD(const RunConfig& cfg, const EventStream& stream) {
  if (cfg.d) return cfg.d;
  if (stream.meta && stream.meta->d) return stream.meta->d;
  return std::nullopt;
}

int StreamD(const RunConfig& cfg, const EventStream& stream) {
  return PinnedD(cfg, stream).value_or(std::max(1, stream.MaxArrivalDegree()));
}

int SasContinuity(const RunConfig& cfg, const EventStream& stream) {
  if (cfg.continuity_d) return *cfg.continuity_d;
  if (cfg.sas_sense == Sense::kMax) return 1;
  return std::max(1, stream.MaxArrivalDegree() - 1);
}

std::int64_t ParseInt(const std::string& text, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ": bad integer '" + text + "'",
                static_cast<std::int64_t>(line));
  }
  return value;
}

std::vector<std::string> SplitComma(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string FormatRatio(double r) {
  if (r == std::numeric_limits<double>::infinity()) return "inf";
  std::ostringstream out;
  out.precision(6);
  out << r;
  return out.str();
}

}  // namespace

std::string AlgorithmName(Algorithm alg) {
  switch (alg) {
    case Algorithm::kDirected: return "directed";
    case Algorithm::kPhase2: return "phase2";
    case Algorithm::kPhaseK: return "phasek";
    case Algorithm::kIs2: return "is2";
    case Algorithm::kIs6: return "is6";
    case Algorithm::kSas: return "sas";
  }
  return "?";
}

Algorithm ParseAlgorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kDirected, Algorithm::kPhase2,
                      Algorithm::kPhaseK, Algorithm::kIs2, Algorithm::kIs6,
                      Algorithm::kSas}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + name + "'");
}

std::uint64_t EffectiveSeed(const RunConfig& cfg) {
  const char* env = std::getenv("STABLE_DG_SEED");
  if (env == nullptr || *env == '\0') return cfg.seed;
  std::string text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument, "STABLE_DG_SEED is not a number");
  }
  return value;
}

std::optional<std::int64_t> TraceRecord::Aux(const std::string& name) const {
  for (const auto& [key, value] : aux) {
    if (key == name) return value;
  }
  return std::nullopt;
}

std::optional<std::string> Trace::Header(const std::string& key) const {
  for (const auto& [k, v] : header) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void Trace::SetHeader(const std::string& key, const std::string& value) {
  for (auto& [k, v] : header) {
    if (k == key) {
      v = value;
      return;
    }
  }
  header.emplace_back(key, value);
}

std::int64_t DeclaredStabilityBound(const RunConfig& cfg,
                                    const EventStream& stream) {
  switch (cfg.alg) {
    case Algorithm::kDirected: return 1;
    case Algorithm::kPhase2: return 3;
    case Algorithm::kPhaseK:
      return PhaseDomSet::KBatch(StreamD(cfg, stream)) + 1;
    case Algorithm::kIs2: return 2;
    case Algorithm::kIs6: return 6;
    case Algorithm::kSas:
      return SasStabilityBound(cfg.sas_sense, SasContinuity(cfg, stream),
                               cfg.eps, cfg.f);
  }
  return 0;
}

Trace Replay(const RunConfig& cfg, const EventStream& stream) {
  if (cfg.sparse_oracle < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sparse oracle step must be >= 1");
  }
  bool dynamic = stream.HasDepartures() ||
                 (stream.meta && stream.meta->model == StreamModel::kFullyDynamic);
  if (dynamic && ArrivalOnly(cfg.alg, cfg)) {
    throw Error(ErrorCode::kModelViolation,
                AlgorithmName(cfg.alg) + " needs an arrival-only stream");
  }

  Sense sense = AlgorithmSense(cfg);
  Problem problem = sense == Sense::kMax ? Problem::kIndSet : Problem::kDomSet;
  OracleBudget budget = DefaultBudget(problem);
  if (cfg.oracle_max_vertices) budget.max_vertices = *cfg.oracle_max_vertices;
  OracleBudget target_budget = OracleBudget::DomSetDefault();
  if (cfg.oracle_max_vertices) target_budget.max_vertices = *cfg.oracle_max_vertices;

  Trace trace;
  trace.SetHeader("alg", AlgorithmName(cfg.alg));
  trace.SetHeader("sense", sense == Sense::kMin ? "min" : "max");

  std::unique_ptr<Maintainer> maintainer;
  PhaseDomSet* phase_ds = nullptr;
  PhaseIndSet* phase_is = nullptr;
  int d_value = StreamD(cfg, stream);
  switch (cfg.alg) {
    case Algorithm::kDirected:
      maintainer = std::make_unique<DirectedDomSet>();
      break;
    case Algorithm::kPhase2:
    case Algorithm::kPhaseK: {
      int batch = cfg.alg == Algorithm::kPhase2 ? 2 : PhaseDomSet::KBatch(d_value);
      auto p = std::make_unique<PhaseDomSet>(
          batch, ExactTargetSolver(target_budget, cfg.greedy_fallback));
      phase_ds = p.get();
      maintainer = std::move(p);
      trace.SetHeader("batch", std::to_string(batch));
      break;
    }
    case Algorithm::kIs2:
    case Algorithm::kIs6: {
      auto p = std::make_unique<PhaseIndSet>(
          cfg.alg == Algorithm::kIs2 ? IndSetMode::kInsertionOnly
                                     : IndSetMode::kFullyDynamic,
          PinnedD(cfg, stream));
      phase_is = p.get();
      maintainer = std::move(p);
      break;
    }
    case Algorithm::kSas: {
      int cont = SasContinuity(cfg, stream);
      ProblemAdapter adapter = sense == Sense::kMin
                                   ? MinDominatingSetAdapter(cont, budget)
                                   : MaxIndependentSetAdapter(cont, budget);
      maintainer = std::make_unique<SasMaintainer>(adapter, cfg.eps, cfg.f);
      trace.SetHeader("eps", cfg.eps.ToString());
      trace.SetHeader("f", std::to_string(cfg.f));
      trace.SetHeader("continuity", std::to_string(cont));
      break;
    }
  }
  if (cfg.alg != Algorithm::kDirected && cfg.alg != Algorithm::kSas) {
    trace.SetHeader("d", std::to_string(d_value));
  }
  std::int64_t stability_bound = DeclaredStabilityBound(cfg, stream);
  trace.SetHeader("stability_bound", std::to_string(stability_bound));
  trace.SetHeader("seed", std::to_string(EffectiveSeed(cfg)));
  trace.SetHeader("oracle", cfg.oracle == OracleMode::kOff ? "off"
                            : cfg.sparse_oracle == 1
                                ? "exact"
                                : "sparse:" + std::to_string(cfg.sparse_oracle));

  std::int64_t breaches = 0;
  auto breach = [&](Timestamp t, const std::string& what) {
    if (cfg.strict) {
      throw Error(ErrorCode::kInvariantBreached,
                  what + " breached at t=" + std::to_string(t), t);
    }
    ++breaches;
  };

  DynamicGraph graph;
  int running_opt = 0;
  bool have_opt = false;
  std::int64_t prev_w = 0;
  std::int64_t prev_n = 0;
  for (std::size_t i = 0; i < stream.events.size(); ++i) {
    const StreamEvent& ev = stream.events[i];
    Timestamp t = static_cast<Timestamp>(i + 1);
    graph.Apply(ev);
    StepDelta delta = maintainer->Step(graph, ev);
    const VertexSet& sol = maintainer->Solution();

    TraceRecord rec;
    rec.t = t;
    rec.event = ev.kind;
    rec.n_alive = static_cast<std::int64_t>(graph.NumAlive());
    rec.sol_size = static_cast<std::int64_t>(sol.size());
    rec.added = static_cast<std::int64_t>(delta.added.size());
    rec.removed = static_cast<std::int64_t>(delta.removed.size());
    rec.aux = maintainer->Aux();

    if (cfg.oracle == OracleMode::kExact && t % cfg.sparse_oracle == 0) {
      int opt;
      try {
        opt = OptValue(graph, problem, budget);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
        throw Error(ErrorCode::kBudgetExceeded,
                    "oracle limit of " + std::to_string(budget.max_vertices) +
                        " vertices exceeded at t=" + std::to_string(t) +
                        "; last exact prefix",
                    t - 1);
      }
      running_opt = std::max(running_opt, opt);
      have_opt = true;
      rec.opt = opt;
      rec.max_opt = running_opt;
    }

    bool valid = IsAliveSubset(graph, sol);
    switch (cfg.alg) {
      case Algorithm::kDirected:
        valid = valid && IsDirectedDominatingSet(graph, sol);
        break;
      case Algorithm::kPhase2:
      case Algorithm::kPhaseK:
        valid = valid && IsDominatingSet(graph, sol);
        break;
      case Algorithm::kSas:
        valid = valid && (sense == Sense::kMin ? IsDominatingSet(graph, sol)
                                               : IsIndependentSet(graph, sol));
        break;
      default:
        valid = valid && IsIndependentSet(graph, sol);
    }
    if (!valid) breach(t, "feasibility");
    if (rec.stability() > stability_bound) breach(t, "stability");

    if (phase_is != nullptr) {
      std::int64_t w = static_cast<std::int64_t>(phase_is->w_set().size());
      bool insertion = cfg.alg == Algorithm::kIs2;
      if (InducedMaxDegree(graph, phase_is->w_set()) > 100 * phase_is->d()) {
        breach(t, "working-set degree");
      }
      if (w > 102 * phase_is->d() * rec.sol_size) breach(t, "|W| <= 102d|I|");
      if ((insertion ? 1000 * w < 455 * rec.n_alive
                     : 603 * w < 89 * rec.n_alive)) {
        breach(t, "|W| / |V|");
      }
      if (phase_is->phase_started() &&
          (insertion ? 1000 * prev_w < 495 * prev_n
                     : 300 * prev_w < 98 * prev_n)) {
        breach(t, "phase-start |W| / |V|");
      }
      if (phase_is->claim_premise() && !phase_is->greedy_added()) {
        breach(t, "greedy claim");
      }
      prev_w = w;
      prev_n = rec.n_alive;
    }

    // Ratio bounds need every opt value, so sparse runs skip them.
    if (rec.opt && cfg.sparse_oracle == 1) {
      std::int64_t s = rec.sol_size;
      std::int64_t opt = *rec.opt;
      switch (cfg.alg) {
        case Algorithm::kDirected: {
          std::int64_t dd = std::max(1, graph.MaxArrivalDegree()) + 1;
          if (s > dd * dd * opt) breach(t, "(d+1)^2 ratio");
          break;
        }
        case Algorithm::kPhase2:
          if (phase_ds->all_targets_exact() && 2 * s > 9 * *rec.max_opt) {
            breach(t, "9/2 max-opt ratio");
          }
          break;
        case Algorithm::kPhaseK:
          if (phase_ds->all_targets_exact() && 2 * s > 45 * opt) {
            breach(t, "45/2 ratio");
          }
          break;
        case Algorithm::kSas:
          if (sense == Sense::kMin
                  ? s * cfg.eps.den > (cfg.eps.den + cfg.eps.num) * opt
                  : (cfg.eps.den + cfg.eps.num) * s < cfg.eps.den * opt) {
            breach(t, "(1+eps) ratio");
          }
          break;
        default:
          if (455 * opt > 1000 * 102 * phase_is->d() * s) {
            breach(t, "opt / |I| ratio");
          }
      }
    }
    trace.records.push_back(std::move(rec));
  }

  std::vector<std::string> flags;
  if (phase_ds != nullptr && !phase_ds->all_targets_exact()) {
    flags.push_back("bounds-not-guaranteed");
  }
  if (have_opt && cfg.sparse_oracle > 1) flags.push_back("ratios-lower-bounds");
  if (!flags.empty()) {
    std::string joined;
    for (const auto& f : flags) joined += (joined.empty() ? "" : "|") + f;
    trace.SetHeader("flags", joined);
  }
  trace.SetHeader("breaches", std::to_string(breaches));
  return trace;
}

Trace Replay(const RunConfig& cfg) {
  Trace trace = Replay(cfg, LoadEventStream(cfg.stream_path));
  if (!cfg.out_path.empty()) SaveTrace(cfg.out_path, trace);
  return trace;
}

void WriteTraceCsv(std::ostream& out, const Trace& trace) {
  if (!trace.header.empty()) {
    out << "#";
    for (const auto& [k, v] : trace.header) out << ' ' << k << '=' << v;
    out << '\n';
  }
  std::vector<std::string> aux_names;
  for (const auto& rec : trace.records) {
    for (const auto& [name, value] : rec.aux) {
      if (std::find(aux_names.begin(), aux_names.end(), name) ==
          aux_names.end()) {
        aux_names.push_back(name);
      }
    }
  }
  for (std::size_t c = 0; c < kNumColumns; ++c) {
    out << (c ? "," : "") << kColumns[c];
  }
  for (const auto& name : aux_names) out << ",aux_" << name;
  out << '\n';
  for (const auto& r : trace.records) {
    out << r.t << ',' << (r.event == EventKind::kArrival ? "add" : "del")
        << ',' << r.n_alive << ',' << r.sol_size << ',';
    if (r.opt) out << *r.opt;
    out << ',';
    if (r.max_opt) out << *r.max_opt;
    out << ',' << r.added << ',' << r.removed;
    for (const auto& name : aux_names) {
      out << ',';
      if (auto v = r.Aux(name)) out << *v;
    }
    out << '\n';
  }
}

std::string FormatTraceCsv(const Trace& trace) {
  std::ostringstream out;
  WriteTraceCsv(out, trace);
  return out.str();
}

Trace ReadTraceCsv(std::istream& in) {
  Trace trace;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> aux_names;
  bool have_columns = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_columns && line[0] == '#') {
      std::istringstream words(line.substr(1));
      std::string word;
      while (words >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) {
          throw Error(ErrorCode::kParseError,
                      "line " + std::to_string(line_no) + ": bad header entry",
                      static_cast<std::int64_t>(line_no));
        }
        trace.header.emplace_back(word.substr(0, eq), word.substr(eq + 1));
      }
      continue;
    }
    std::vector<std::string> cells = SplitComma(line);
    if (!have_columns) {
      if (cells.size() < kNumColumns) {
        throw Error(ErrorCode::kParseError, "trace header is too short", 1);
      }
      for (std::size_t c = 0; c < kNumColumns; ++c) {
        if (cells[c] != kColumns[c]) {
          throw Error(ErrorCode::kParseError,
                      "unexpected column '" + cells[c] + "'",
                      static_cast<std::int64_t>(line_no));
        }
      }
      for (std::size_t c = kNumColumns; c < cells.size(); ++c) {
        if (cells[c].rfind("aux_", 0) != 0) {
          throw Error(ErrorCode::kParseError,
                      "extra column '" + cells[c] + "' lacks aux_ prefix",
                      static_cast<std::int64_t>(line_no));
        }
        aux_names.push_back(cells[c].substr(4));
      }
      have_columns = true;
      continue;
    }
    if (cells.size() != kNumColumns + aux_names.size()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": wrong cell count",
                  static_cast<std::int64_t>(line_no));
    }
    TraceRecord r;
    r.t = ParseInt(cells[0], line_no);
    if (cells[1] == "add") {
      r.event = EventKind::kArrival;
    } else if (cells[1] == "del") {
      r.event = EventKind::kDeparture;
    } else {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": bad event",
                  static_cast<std::int64_t>(line_no));
    }
    r.n_alive = ParseInt(cells[2], line_no);
    r.sol_size = ParseInt(cells[3], line_no);
    if (!cells[4].empty()) r.opt = static_cast<int>(ParseInt(cells[4], line_no));
    if (!cells[5].empty()) {
      r.max_opt = static_cast<int>(ParseInt(cells[5], line_no));
    }
    r.added = ParseInt(cells[6], line_no);
    r.removed = ParseInt(cells[7], line_no);
    for (std::size_t a = 0; a < aux_names.size(); ++a) {
      const std::string& cell = cells[kNumColumns + a];
      if (!cell.empty()) r.aux.emplace_back(aux_names[a], ParseInt(cell, line_no));
    }
    trace.records.push_back(std::move(r));
  }
  return trace;
}

Trace ParseTraceCsv(const std::string& text) {
  std::istringstream in(text);
  return ReadTraceCsv(in);
}

void SaveTrace(const std::string& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  WriteTraceCsv(out, trace);
}

Trace LoadTrace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  return ReadTraceCsv(in);
}

Summary Summarize(const Trace& trace) {
  if (trace.records.empty()) {
    throw Error(ErrorCode::kEmptyTrace, "trace has no records");
  }
  Summary s;
  s.alg = trace.Header("alg").value_or("");
  s.events = trace.records.size();
  bool maximize = trace.Header("sense") == std::optional<std::string>("max");
  for (const auto& r : trace.records) {
    s.max_stability = std::max(s.max_stability, r.stability());
    if (r.opt) {
      double ratio = 0.0;
      if (maximize) {
        if (r.sol_size > 0) {
          ratio = static_cast<double>(*r.opt) / r.sol_size;
        } else if (*r.opt > 0) {
          ratio = std::numeric_limits<double>::infinity();
        }
      } else if (*r.opt > 0) {
        ratio = static_cast<double>(r.sol_size) / *r.opt;
      }
      s.worst_ratio = std::max(s.worst_ratio.value_or(0.0), ratio);
    }
    if (auto w = r.Aux("w_size"); w && r.n_alive > 0) {
      double frac = static_cast<double>(*w) / r.n_alive;
      s.min_w_fraction = std::min(s.min_w_fraction.value_or(1.0), frac);
    }
  }
  return s;
}

std::string FormatSummary(const Summary& summary) {
  nlohmann::ordered_json j;
  j["alg"] = summary.alg;
  j["events"] = summary.events;
  j["worst_ratio"] = summary.worst_ratio ? FormatRatio(*summary.worst_ratio)
                                         : std::string("n/a");
  j["max_stability"] = summary.max_stability;
  if (summary.min_w_fraction) {
    j["min_w_fraction"] = *summary.min_w_fraction;
  } else {
    j["min_w_fraction"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace stabledg
