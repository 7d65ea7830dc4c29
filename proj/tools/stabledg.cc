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

// Command-line front end: run / gen / summarize / verify.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabledg/adversary.h"
#include "stabledg/common.h"
#include "stabledg/harness.h"
#include "stabledg/random_streams.h"
#include "stabledg/stream_io.h"

namespace {

using nlohmann::ordered_json;
using stabledg::BipartiteExpander;
using stabledg::Error;
using stabledg::ErrorCode;
using stabledg::Rational;

constexpr int kExitInvariant = 2;

ordered_json ExpanderJson(const BipartiteExpander& exp) {
  ordered_json j;
  j["num_left"] = exp.num_left;
  j["num_right"] = exp.num_right;
  j["edges"] = exp.edges;
  j["n"] = exp.n;
  j["eps"] = exp.eps.ToString();
  j["mu"] = exp.mu.ToString();
  j["seed"] = exp.seed;
  j["t_radius"] = exp.t_radius;
  j["t_used"] = exp.t_used;
  j["radius_reduced"] = exp.radius_reduced;
  j["warnings"] = exp.warnings;
  j["host_side"] = exp.host_side;
  j["host_edges"] = exp.host_edges;
  j["t_set"] = exp.t_set;
  j["right_to_host"] = exp.right_to_host;
  return j;
}

BipartiteExpander ExpanderFromJson(const ordered_json& j) {
  BipartiteExpander exp = stabledg::HandBuiltExpander(
      j.at("num_left").get<int>(), j.at("num_right").get<int>(),
      j.at("edges").get<std::vector<std::pair<int, int>>>());
  exp.n = j.value("n", exp.num_right);
  if (j.contains("eps")) exp.eps = Rational::Parse(j["eps"].get<std::string>());
  if (j.contains("mu")) exp.mu = Rational::Parse(j["mu"].get<std::string>());
  exp.seed = j.value("seed", std::uint64_t{0});
  exp.t_radius = j.value("t_radius", 0);
  exp.t_used = j.value("t_used", 0);
  exp.radius_reduced = j.value("radius_reduced", false);
  exp.host_side = j.value("host_side", 0);
  if (j.contains("host_edges")) {
    exp.host_edges = j["host_edges"].get<std::vector<std::pair<int, int>>>();
  }
  if (j.contains("t_set")) exp.t_set = j["t_set"].get<std::vector<int>>();
  if (j.contains("right_to_host")) {
    exp.right_to_host = j["right_to_host"].get<std::vector<int>>();
  }
  return exp;
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

void WriteStream(const std::string& path, const stabledg::EventStream& s) {
  WriteText(path, stabledg::FormatEventStream(s));
}

void WriteSidecar(const std::string& out, const ordered_json& j) {
  if (out.empty() || out == "-") {
    std::cerr << j.dump(2) << '\n';
  } else {
    WriteText(out + ".json", j.dump(2) + "\n");
  }
}

struct ExpanderArgs {
  int n = 40;
  std::string eps = "1/40";
  std::string mu = "1/200";
  std::uint64_t seed = 1;
  std::optional<int> t_radius;
  bool fixed_radius = false;
  int cap = 0;
  std::string from;

  void Register(CLI::App* app) {
    app->add_option("--n", n, "Size of R");
    app->add_option("--eps", eps, "Rational eps, e.g. 1/40");
    app->add_option("--mu", mu, "Rational mu");
    app->add_option("--seed", seed);
    app->add_option("--t-radius", t_radius, "Spacing radius t for T");
    app->add_flag("--fixed-radius", fixed_radius,
                  "Fail instead of shrinking t");
    app->add_option("--cap", cap, "Certify expansion up to this |S|");
    app->add_option("--expander", from, "Load a saved expander JSON");
  }

  BipartiteExpander Build() const {
    if (!from.empty()) {
      std::ifstream in(from);
      if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + from);
      return ExpanderFromJson(ordered_json::parse(in));
    }
    stabledg::ExpanderOptions opts;
    opts.t_radius = t_radius;
    opts.adaptive_radius = !fixed_radius;
    return stabledg::GenerateExpanderCandidate(n, Rational::Parse(eps),
                                               Rational::Parse(mu), seed, opts);
  }

  ordered_json Certificate(const BipartiteExpander& exp) const {
    ordered_json j;
    if (cap <= 0) return j;
    Rational mu_value = exp.mu.num > 0 ? exp.mu : Rational::Parse(mu);
    Rational factor = stabledg::ExpansionFactor(mu_value);
    auto res = stabledg::VerifyExpansion(exp, cap, factor);
    j["cap"] = cap;
    j["factor"] = factor.ToString();
    j["certified"] = res.certified;
    j["max_certified_size"] = res.max_certified_size;
    j["subsets_checked"] = res.subsets_checked;
    if (res.counterexample) j["counterexample"] = *res.counterexample;
    return j;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable dynamic graph algorithms: replay, generators, traces"};
  app.require_subcommand(1);

  // run / verify
  stabledg::RunConfig cfg;
  std::string alg = "directed";
  std::string oracle = "off";
  std::string sense = "max-is";
  std::string eps = "1/2";
  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--alg", alg,
                    "directed|phase2|phasek|is2|is6|sas")->required();
    sub->add_option("--stream", cfg.stream_path, "Event stream (JSONL)")
        ->required();
    sub->add_option("--oracle", oracle, "on|off");
    sub->add_option("--out", cfg.out_path, "Trace CSV path");
    sub->add_option("--seed", cfg.seed);
    sub->add_option("--d", cfg.d, "Override the stream's d");
    sub->add_option("--sparse-oracle", cfg.sparse_oracle,
                    "Oracle on every k-th event");
    sub->add_option("--oracle-max-vertices", cfg.oracle_max_vertices);
    sub->add_flag("--fallback", cfg.greedy_fallback,
                  "Greedy phase targets beyond the oracle budget");
    sub->add_option("--sense", sense, "min-ds|max-is (sas only)");
    sub->add_option("--eps", eps, "Rational eps (sas only)");
    sub->add_option("--f", cfg.f, "Swap size cap (sas only)");
    sub->add_option("--continuity", cfg.continuity_d);
  };
  CLI::App* run = app.add_subcommand("run", "Replay a stream");
  add_run_options(run);
  run->add_flag("--strict", cfg.strict, "Abort on the first breached bound");
  CLI::App* verify =
      app.add_subcommand("verify", "Strict replay; exit 2 on a breach");
  add_run_options(verify);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generate streams");
  gen->require_subcommand(1);
  std::string gen_out;
  ExpanderArgs exp_args;
  CLI::App* g_exp = gen->add_subcommand("expander", "Expander candidate");
  exp_args.Register(g_exp);
  g_exp->add_option("--out", gen_out);
  CLI::App* g_is = gen->add_subcommand("is-lb", "Independent-set adversary");
  exp_args.Register(g_is);
  g_is->add_option("--out", gen_out);
  CLI::App* g_ds = gen->add_subcommand("ds-lb", "Dominating-set adversary");
  exp_args.Register(g_ds);
  g_ds->add_option("--out", gen_out);
  int tight_d = 3;
  CLI::App* g_tight = gen->add_subcommand("tight", "Directed tight example");
  g_tight->add_option("--d", tight_d);
  g_tight->add_option("--out", gen_out);
  int star_n = 100;
  CLI::App* g_star = gen->add_subcommand("star", "Star adversary");
  g_star->add_option("--n", star_n);
  g_star->add_option("--out", gen_out);
  std::string kind = "arrival";
  int rn = 40, rd = 2, max_alive = 1 << 30;
  double p_depart = 0.3;
  std::uint64_t rseed = 1;
  CLI::App* g_rand = gen->add_subcommand("random", "Random stream");
  g_rand->add_option("--kind", kind, "arrival|avg|dynamic|path|cycle");
  g_rand->add_option("--n", rn, "Arrivals (events for dynamic)");
  g_rand->add_option("--d", rd);
  g_rand->add_option("--seed", rseed);
  g_rand->add_option("--departure-prob", p_depart);
  g_rand->add_option("--max-alive", max_alive);
  g_rand->add_option("--out", gen_out);

  // summarize
  std::string trace_path;
  CLI::App* summarize = app.add_subcommand("summarize", "Summarize a trace");
  summarize->add_option("--trace", trace_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run || *verify) {
      cfg.alg = stabledg::ParseAlgorithm(alg);
      if (oracle != "on" && oracle != "off") {
        throw Error(ErrorCode::kInvalidArgument, "--oracle takes on|off");
      }
      cfg.oracle = oracle == "on" ? stabledg::OracleMode::kExact
                                  : stabledg::OracleMode::kOff;
      if (sense == "min-ds") {
        cfg.sas_sense = stabledg::Sense::kMin;
      } else if (sense == "max-is") {
        cfg.sas_sense = stabledg::Sense::kMax;
      } else {
        throw Error(ErrorCode::kInvalidArgument, "--sense takes min-ds|max-is");
      }
      cfg.eps = Rational::Parse(eps);
      if (*verify) cfg.strict = true;
      bool to_stdout = cfg.out_path.empty() && !*verify;
      stabledg::Trace trace = stabledg::Replay(cfg);
      if (to_stdout) {
        std::cout << stabledg::FormatTraceCsv(trace);
      } else if (*verify) {
        std::cout << "OK " << trace.records.size() << " events\n";
      } else {
        std::cout << stabledg::FormatSummary(stabledg::Summarize(trace)) << '\n';
      }
    } else if (*summarize) {
      std::cout << stabledg::FormatSummary(
                       stabledg::Summarize(stabledg::LoadTrace(trace_path)))
                << '\n';
    } else if (*g_exp) {
      BipartiteExpander exp = exp_args.Build();
      ordered_json j = ExpanderJson(exp);
      j["min_t_distance"] = stabledg::MinTDistance(exp);
      j["max_degree"] = exp.MaxDegree();
      ordered_json cert = exp_args.Certificate(exp);
      if (!cert.empty()) j["certificate"] = cert;
      for (const auto& w : exp.warnings) std::cerr << "warning: " << w << '\n';
      WriteText(gen_out, j.dump(2) + "\n");
    } else if (*g_is || *g_ds) {
      BipartiteExpander exp = exp_args.Build();
      stabledg::LowerBoundStream lb = *g_is ? stabledg::IsLowerBoundStream(exp)
                                            : stabledg::DomsetLowerBoundStream(exp);
      WriteStream(gen_out, lb.stream);
      ordered_json side;
      side["landmarks"] = lb.landmarks;
      ordered_json layers;
      for (const auto& [v, tag] : lb.layers) layers[tag].push_back(v);
      side["layers"] = layers;
      side["expander"] = ExpanderJson(exp);
      ordered_json cert = exp_args.Certificate(exp);
      if (!cert.empty()) side["certificate"] = cert;
      WriteSidecar(gen_out, side);
    } else if (*g_tight) {
      WriteStream(gen_out, stabledg::DirectedDomSetTightStream(tight_d));
    } else if (*g_star) {
      WriteStream(gen_out, stabledg::StarAdversaryStream(star_n));
    } else if (*g_rand) {
      stabledg::EventStream s;
      if (kind == "arrival") {
        s = stabledg::RandomArrivalStream(rn, rd, rseed);
      } else if (kind == "avg") {
        s = stabledg::RandomAverageDegreeStream(rn, rd, rseed);
      } else if (kind == "dynamic") {
        stabledg::FullyDynamicOptions opts;
        opts.events = rn;
        opts.d = rd;
        opts.departure_prob = p_depart;
        opts.max_alive = max_alive;
        s = stabledg::RandomFullyDynamicStream(opts, rseed);
      } else if (kind == "path") {
        s = stabledg::PathStream(rn);
      } else if (kind == "cycle") {
        s = stabledg::CycleStream(rn);
      } else {
        throw Error(ErrorCode::kInvalidArgument, "unknown --kind " + kind);
      }
      WriteStream(gen_out, s);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (e.at()) std::cerr << " (at " << *e.at() << ")";
    std::cerr << '\n';
    return e.code() == ErrorCode::kInvariantBreached ? kExitInvariant : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
