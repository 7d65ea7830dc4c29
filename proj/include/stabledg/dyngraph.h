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

// Vertex-arrival / fully-dynamic graph shared by all maintainers.
//
// Every vertex keeps the neighbor list it arrived with, so the arrival
// orientation (edges point from the newer to the older endpoint) stays
// answerable after later arrivals and departures.

#ifndef STABLEDG_DYNGRAPH_H_
#define STABLEDG_DYNGRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stabledg/common.h"

namespace stabledg {

enum class EventKind { kArrival, kDeparture };

struct StreamEvent {
  EventKind kind = EventKind::kArrival;
  VertexId vertex = 0;
  std::vector<VertexId> neighbors;  // Arrival only.

  static StreamEvent Arrival(VertexId v, std::vector<VertexId> nbrs = {}) {
    return StreamEvent{EventKind::kArrival, v, std::move(nbrs)};
  }
  static StreamEvent Departure(VertexId v) {
    return StreamEvent{EventKind::kDeparture, v, {}};
  }

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

enum class StreamModel { kArrival, kFullyDynamic };

struct StreamMeta {
  std::optional<int> d;
  std::optional<StreamModel> model;
  std::string desc;

  friend bool operator==(const StreamMeta&, const StreamMeta&) = default;
};

struct EventStream {
  std::optional<StreamMeta> meta;
  std::vector<StreamEvent> events;

  bool HasDepartures() const;
  // Largest neighbor-list length over all arrivals.
  int MaxArrivalDegree() const;

  friend bool operator==(const EventStream&, const EventStream&) = default;
};

class DynamicGraph {
 public:
  DynamicGraph() = default;

  // Adds `v` with edges to `nbrs` and returns the new timestamp.
  Timestamp ApplyArrival(VertexId v, std::span<const VertexId> nbrs);
  // Removes `v` and its incident edges; its arrival record is kept.
  Timestamp ApplyDeparture(VertexId v);
  Timestamp Apply(const StreamEvent& event);

  bool IsAlive(VertexId v) const;
  // True for every vertex that ever arrived, including departed ones.
  bool IsKnown(VertexId v) const { return records_.count(v) > 0; }

  const VertexSet& AliveVertices() const { return alive_; }
  std::size_t NumAlive() const { return alive_.size(); }
  std::size_t NumEdges() const { return num_edges_; }
  bool Empty() const { return alive_.empty(); }
  Timestamp current_time() const { return current_time_; }

  // Alive neighbors of an alive vertex.
  const VertexSet& Neighbors(VertexId v) const;
  std::size_t Degree(VertexId v) const { return Neighbors(v).size(); }
  bool Adjacent(VertexId u, VertexId v) const;

  Timestamp ArrivalTime(VertexId v) const;
  int ArrivalDegree(VertexId v) const;
  // {v} plus the neighbors v arrived with.
  VertexSet OutClosedNeighborhood(VertexId v) const;
  // {v} plus its current alive neighbors.
  VertexSet ClosedNeighborhood(VertexId v) const;

  Rational AverageDegree() const;
  int MaxDegree() const;
  // Largest arrival degree over every vertex seen so far.
  int MaxArrivalDegree() const { return max_arrival_degree_; }

  friend bool operator==(const DynamicGraph& a, const DynamicGraph& b);

 private:
  struct Record {
    Timestamp arrival_time = 0;
    std::vector<VertexId> arrival_neighbors;
    VertexSet adjacency;
    bool alive = true;

    friend bool operator==(const Record&, const Record&) = default;
  };

  const Record& Lookup(VertexId v) const;

  std::unordered_map<VertexId, Record> records_;
  VertexSet alive_;
  std::size_t num_edges_ = 0;
  Timestamp current_time_ = 0;
  int max_arrival_degree_ = 0;
};

// Replays a whole stream into a fresh graph.
DynamicGraph BuildGraph(const EventStream& stream);

}  // namespace stabledg

#endif  // STABLEDG_DYNGRAPH_H_
