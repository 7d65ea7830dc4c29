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

#include "stabledg/random_streams.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace stabledg {
namespace {

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<VertexId> Sample(const VertexSet& pool, int k,
                             std::mt19937_64& rng) {
  std::vector<VertexId> all(pool.begin(), pool.end());
  std::vector<VertexId> out;
  std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
  std::sort(out.begin(), out.end());
  return out;
}

// Largest k such that one more vertex with k edges keeps avg degree <= d.
int EdgeAllowance(const DynamicGraph& g, int d) {
  std::int64_t cap = static_cast<std::int64_t>(d) *
                         (static_cast<std::int64_t>(g.NumAlive()) + 1) / 2 -
                     static_cast<std::int64_t>(g.NumEdges());
  cap = std::min<std::int64_t>({cap, d, static_cast<std::int64_t>(g.NumAlive())});
  return static_cast<int>(std::max<std::int64_t>(cap, 0));
}

StreamMeta Meta(int d, StreamModel model, const std::string& desc) {
  return StreamMeta{d, model, desc};
}

}  // namespace

EventStream RandomArrivalStream(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EventStream stream;
  DynamicGraph g;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    int k = std::min<int>(Uniform(rng, 0, d), static_cast<int>(g.NumAlive()));
    StreamEvent ev = StreamEvent::Arrival(v, Sample(g.AliveVertices(), k, rng));
    g.Apply(ev);
    stream.events.push_back(std::move(ev));
  }
  stream.meta = Meta(d, StreamModel::kArrival, "random arrival-degree");
  return stream;
}

EventStream RandomAverageDegreeStream(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EventStream stream;
  DynamicGraph g;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    int k = Uniform(rng, 0, EdgeAllowance(g, d));
    StreamEvent ev = StreamEvent::Arrival(v, Sample(g.AliveVertices(), k, rng));
    g.Apply(ev);
    stream.events.push_back(std::move(ev));
  }
  stream.meta = Meta(d, StreamModel::kArrival, "random average-degree");
  return stream;
}

EventStream RandomFullyDynamicStream(const FullyDynamicOptions& options,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution depart(options.departure_prob);
  EventStream stream;
  DynamicGraph g;
  VertexId next = 0;
  const std::int64_t d = options.d;
  for (int i = 0; i < options.events; ++i) {
    bool full = static_cast<int>(g.NumAlive()) >= options.max_alive;
    if (!g.Empty() && (full || depart(rng))) {
      // Removing v keeps 2(|E| - deg v) <= d (|V| - 1).
      std::vector<VertexId> ok;
      for (VertexId v : g.AliveVertices()) {
        std::int64_t e = static_cast<std::int64_t>(g.NumEdges()) -
                         static_cast<std::int64_t>(g.Degree(v));
        if (2 * e <= d * (static_cast<std::int64_t>(g.NumAlive()) - 1)) {
          ok.push_back(v);
        }
      }
      if (!ok.empty()) {
        VertexId v = ok[Uniform(rng, 0, static_cast<int>(ok.size()) - 1)];
        StreamEvent ev = StreamEvent::Departure(v);
        g.Apply(ev);
        stream.events.push_back(std::move(ev));
        continue;
      }
      if (full) continue;
    }
    int k = Uniform(rng, 0, EdgeAllowance(g, options.d));
    StreamEvent ev =
        StreamEvent::Arrival(next++, Sample(g.AliveVertices(), k, rng));
    g.Apply(ev);
    stream.events.push_back(std::move(ev));
  }
  stream.meta = Meta(options.d, StreamModel::kFullyDynamic,
                     "random fully-dynamic");
  return stream;
}

EventStream PathStream(int n) {
  EventStream stream;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    stream.events.push_back(
        v == 0 ? StreamEvent::Arrival(v) : StreamEvent::Arrival(v, {v - 1}));
  }
  stream.meta = Meta(2, StreamModel::kArrival, "path");
  return stream;
}

EventStream CycleStream(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  EventStream stream = PathStream(n);
  stream.events.back().neighbors = {0, static_cast<VertexId>(n - 2)};
  stream.meta = Meta(2, StreamModel::kArrival, "cycle");
  return stream;
}

}  // namespace stabledg
