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

// Seeded random and simple deterministic stream generators.

#ifndef STABLEDG_RANDOM_STREAMS_H_
#define STABLEDG_RANDOM_STREAMS_H_

#include <cstdint>

#include "stabledg/dyngraph.h"

namespace stabledg {

// n arrivals, each with a uniform number in [0, d] of distinct uniformly
// chosen earlier vertices (fewer if not enough exist).
EventStream RandomArrivalStream(int n, int d, std::uint64_t seed);

// n arrivals keeping the average degree at most d after every event.
EventStream RandomAverageDegreeStream(int n, int d, std::uint64_t seed);

struct FullyDynamicOptions {
  int events = 60;
  int d = 2;
  double departure_prob = 0.3;
  // Arrivals are forced to departures above this many alive vertices.
  int max_alive = 1 << 30;
};

// Mixed arrivals and departures with average degree at most d throughout.
// Departures only pick vertices whose removal keeps that bound.
EventStream RandomFullyDynamicStream(const FullyDynamicOptions& options,
                                     std::uint64_t seed);

// Vertex i arrives attached to i-1.
EventStream PathStream(int n);
// A path whose last vertex also attaches to vertex 0 (n >= 3).
EventStream CycleStream(int n);

}  // namespace stabledg

#endif  // STABLEDG_RANDOM_STREAMS_H_
