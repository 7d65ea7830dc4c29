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

#include "stabledg/dyngraph.h"

#include <algorithm>
#include <string>

namespace stabledg {

namespace {

std::string VertexName(VertexId v) { return "vertex " + std::to_string(v); }

}  // namespace

bool EventStream::HasDepartures() const {
  return std::any_of(events.begin(), events.end(), [](const StreamEvent& e) {
    return e.kind == EventKind::kDeparture;
  });
}

int EventStream::MaxArrivalDegree() const {
  int best = 0;
  for (const StreamEvent& e : events) {
    best = std::max(best, static_cast<int>(e.neighbors.size()));
  }
  return best;
}

Timestamp DynamicGraph::ApplyArrival(VertexId v,
                                     std::span<const VertexId> nbrs) {
  if (IsKnown(v)) {
    throw Error(ErrorCode::kDuplicateVertex, VertexName(v) + " already used",
                current_time_ + 1);
  }
  VertexSet seen;
  for (VertexId u : nbrs) {
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, VertexName(v), current_time_ + 1);
    }
    if (!IsAlive(u)) {
      throw Error(ErrorCode::kUnknownNeighbor,
                  VertexName(u) + " is not alive", current_time_ + 1);
    }
    if (!seen.insert(u).second) {
      throw Error(ErrorCode::kDuplicateNeighbor,
                  VertexName(u) + " listed twice", current_time_ + 1);
    }
  }
  Record record;
  record.arrival_time = ++current_time_;
  record.arrival_neighbors.assign(nbrs.begin(), nbrs.end());
  std::sort(record.arrival_neighbors.begin(), record.arrival_neighbors.end());
  record.adjacency = std::move(seen);
  for (VertexId u : nbrs) records_.at(u).adjacency.insert(v);
  num_edges_ += nbrs.size();
  max_arrival_degree_ =
      std::max(max_arrival_degree_, static_cast<int>(nbrs.size()));
  records_.emplace(v, std::move(record));
  alive_.insert(v);
  return current_time_;
}

Timestamp DynamicGraph::ApplyDeparture(VertexId v) {
  if (!IsAlive(v)) {
    throw Error(ErrorCode::kUnknownVertex, VertexName(v) + " is not alive",
                current_time_ + 1);
  }
  Record& record = records_.at(v);
  for (VertexId u : record.adjacency) records_.at(u).adjacency.erase(v);
  num_edges_ -= record.adjacency.size();
  record.adjacency.clear();
  record.alive = false;
  alive_.erase(v);
  return ++current_time_;
}

Timestamp DynamicGraph::Apply(const StreamEvent& event) {
  if (event.kind == EventKind::kArrival) {
    return ApplyArrival(event.vertex, event.neighbors);
  }
  return ApplyDeparture(event.vertex);
}

bool DynamicGraph::IsAlive(VertexId v) const {
  auto it = records_.find(v);
  return it != records_.end() && it->second.alive;
}

const DynamicGraph::Record& DynamicGraph::Lookup(VertexId v) const {
  auto it = records_.find(v);
  if (it == records_.end()) {
    throw Error(ErrorCode::kUnknownVertex, VertexName(v) + " never arrived");
  }
  return it->second;
}

const VertexSet& DynamicGraph::Neighbors(VertexId v) const {
  const Record& record = Lookup(v);
  if (!record.alive) {
    throw Error(ErrorCode::kUnknownVertex, VertexName(v) + " has departed");
  }
  return record.adjacency;
}

bool DynamicGraph::Adjacent(VertexId u, VertexId v) const {
  return Neighbors(u).count(v) > 0;
}

Timestamp DynamicGraph::ArrivalTime(VertexId v) const {
  return Lookup(v).arrival_time;
}

int DynamicGraph::ArrivalDegree(VertexId v) const {
  return static_cast<int>(Lookup(v).arrival_neighbors.size());
}

VertexSet DynamicGraph::OutClosedNeighborhood(VertexId v) const {
  const Record& record = Lookup(v);
  VertexSet out(record.arrival_neighbors.begin(),
                record.arrival_neighbors.end());
  out.insert(v);
  return out;
}

VertexSet DynamicGraph::ClosedNeighborhood(VertexId v) const {
  VertexSet out = Neighbors(v);
  out.insert(v);
  return out;
}

Rational DynamicGraph::AverageDegree() const {
  if (alive_.empty()) {
    throw Error(ErrorCode::kEmptyGraph, "average degree of an empty graph");
  }
  return Rational(2 * static_cast<std::int64_t>(num_edges_),
                  static_cast<std::int64_t>(alive_.size()));
}

int DynamicGraph::MaxDegree() const {
  std::size_t best = 0;
  for (VertexId v : alive_) best = std::max(best, Degree(v));
  return static_cast<int>(best);
}

bool operator==(const DynamicGraph& a, const DynamicGraph& b) {
  return a.records_ == b.records_ && a.alive_ == b.alive_ &&
         a.num_edges_ == b.num_edges_ && a.current_time_ == b.current_time_;
}

DynamicGraph BuildGraph(const EventStream& stream) {
  DynamicGraph graph;
  for (const StreamEvent& event : stream.events) graph.Apply(event);
  return graph;
}

}  // namespace stabledg
