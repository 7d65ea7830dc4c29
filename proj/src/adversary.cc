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

#include "stabledg/adversary.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stabledg {
namespace {

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Vertices of H: A is [0, m), B is [m, 2m).
std::vector<std::vector<int>> HostAdjacency(const BipartiteExpander& exp) {
  int m = exp.host_side;
  std::vector<std::vector<int>> adj(2 * m);
  for (const auto& [a, b] : exp.host_edges) {
    adj[a].push_back(m + b);
    adj[m + b].push_back(a);
  }
  return adj;
}

std::vector<int> BfsDistances(const std::vector<std::vector<int>>& adj,
                              int source, int limit) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (dist[x] == limit) continue;
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::pair<int, int>> CubicBipartite(int m, std::mt19937_64& rng,
                                                int max_tries) {
  std::vector<int> stubs;
  for (int b = 0; b < m; ++b) stubs.insert(stubs.end(), 3, b);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (int i = 0; i < 3 * m && simple; ++i) {
      simple = seen.emplace(i / 3, stubs[i]).second;
    }
    if (simple) return {seen.begin(), seen.end()};
  }
  throw Error(ErrorCode::kConfigModelStuck,
              "configuration model kept producing multi-edges");
}

// Greedy pick of `count` A-vertices pairwise more than 2t apart.
std::optional<std::vector<int>> SelectSpread(
    const std::vector<std::vector<int>>& adj, int m, int count, int t) {
  std::vector<bool> blocked(2 * m, false);
  std::vector<int> chosen;
  for (int a = 0; a < m && static_cast<int>(chosen.size()) < count; ++a) {
    if (blocked[a]) continue;
    chosen.push_back(a);
    std::vector<int> dist = BfsDistances(adj, a, 2 * t);
    for (int x = 0; x < 2 * m; ++x) {
      if (dist[x] >= 0) blocked[x] = true;
    }
  }
  if (static_cast<int>(chosen.size()) < count) return std::nullopt;
  return chosen;
}

}  // namespace

std::vector<std::vector<int>> BipartiteExpander::LeftAdjacency() const {
  std::vector<std::vector<int>> adj(num_left);
  for (const auto& [l, r] : edges) adj[l].push_back(r);
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<std::vector<int>> BipartiteExpander::RightAdjacency() const {
  std::vector<std::vector<int>> adj(num_right);
  for (const auto& [l, r] : edges) adj[r].push_back(l);
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

int BipartiteExpander::MaxDegree() const {
  int best = 0;
  for (const auto& list : LeftAdjacency()) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  for (const auto& list : RightAdjacency()) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  return best;
}

BipartiteExpander HandBuiltExpander(int num_left, int num_right,
                                    std::vector<std::pair<int, int>> edges) {
  BipartiteExpander exp;
  exp.num_left = num_left;
  exp.num_right = num_right;
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [l, r] = edges[i];
    if (l < 0 || l >= num_left || r < 0 || r >= num_right ||
        (i > 0 && edges[i - 1] == edges[i])) {
      throw Error(ErrorCode::kInvalidArgument, "bad expander edge list");
    }
  }
  exp.edges = std::move(edges);
  exp.n = num_right;
  return exp;
}

BipartiteExpander GenerateExpanderCandidate(int n, Rational eps, Rational mu,
                                            std::uint64_t seed,
                                            const ExpanderOptions& options) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "n must be >= 4");
  if (eps.num <= 0 || mu.num <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "eps and mu must be positive");
  }
  BipartiteExpander exp;
  exp.n = n;
  exp.eps = eps;
  exp.mu = mu;
  exp.seed = seed;
  exp.t_radius = options.t_radius.value_or(
      static_cast<int>(CeilDiv(mu.den, mu.num)) + 1);
  if (exp.t_radius < 0) {
    throw Error(ErrorCode::kInvalidArgument, "t_radius must be >= 0");
  }
  if (eps.ToDouble() * std::pow(3.0, 2 * exp.t_radius + 1) > 1.0) {
    exp.warnings.push_back("eps exceeds 1/3^(2t+1); T may not fit");
  }

  int m = static_cast<int>(CeilDiv((eps.den + eps.num) * n, eps.den));
  int t_count = m - n;
  exp.host_side = m;

  std::mt19937_64 rng(seed);
  exp.host_edges = CubicBipartite(m, rng, options.max_configuration_tries);
  auto adj = HostAdjacency(exp);

  int lowest = options.adaptive_radius ? 0 : exp.t_radius;
  for (int t = exp.t_radius; t >= lowest; --t) {
    auto picked = SelectSpread(adj, m, t_count, t);
    if (picked) {
      exp.t_set = *picked;
      exp.t_used = t;
      break;
    }
    if (t == lowest) {
      throw Error(ErrorCode::kSelectionFailed,
                  "cannot place " + std::to_string(t_count) +
                      " vertices pairwise more than " + std::to_string(2 * t) +
                      " apart");
    }
  }
  exp.radius_reduced = exp.t_used < exp.t_radius;
  if (exp.radius_reduced) {
    exp.warnings.push_back("radius reduced from " +
                           std::to_string(exp.t_radius) + " to " +
                           std::to_string(exp.t_used));
  }

  std::vector<int> host_to_right(m, -1);
  std::vector<bool> in_t(m, false);
  for (int a : exp.t_set) in_t[a] = true;
  for (int a = 0; a < m; ++a) {
    if (in_t[a]) continue;
    host_to_right[a] = static_cast<int>(exp.right_to_host.size());
    exp.right_to_host.push_back(a);
  }
  exp.num_left = m;
  exp.num_right = static_cast<int>(exp.right_to_host.size());
  for (const auto& [a, b] : exp.host_edges) {
    if (!in_t[a]) exp.edges.emplace_back(b, host_to_right[a]);
  }
  std::sort(exp.edges.begin(), exp.edges.end());
  return exp;
}

int MinTDistance(const BipartiteExpander& exp) {
  int best = std::numeric_limits<int>::max();
  if (exp.t_set.size() < 2) return best;
  auto adj = HostAdjacency(exp);
  for (std::size_t i = 0; i < exp.t_set.size(); ++i) {
    std::vector<int> dist = BfsDistances(adj, exp.t_set[i], 2 * exp.host_side);
    for (std::size_t j = i + 1; j < exp.t_set.size(); ++j) {
      int d = dist[exp.t_set[j]];
      if (d >= 0) best = std::min(best, d);
    }
  }
  return best;
}

Rational ExpansionFactor(Rational mu) {
  return Rational(2 * mu.den - 2 * mu.num, mu.den);
}

ExpansionResult VerifyExpansion(const BipartiteExpander& exp, int size_cap,
                                Rational factor, std::int64_t max_subsets) {
  int nl = exp.num_left;
  size_cap = std::min(size_cap, nl);
  // Total work: sum of C(nl, s) for s <= cap.
  double total = 0.0;
  double binom = 1.0;
  for (int s = 1; s <= size_cap; ++s) {
    binom = binom * (nl - s + 1) / s;
    total += binom;
  }
  if (total > static_cast<double>(max_subsets)) {
    throw Error(ErrorCode::kTooLarge,
                "expansion check needs about " +
                    std::to_string(static_cast<std::int64_t>(total)) +
                    " subsets");
  }

  std::size_t words = (exp.num_right + 63) / 64;
  std::vector<std::vector<std::uint64_t>> nbr(
      nl, std::vector<std::uint64_t>(words, 0));
  for (const auto& [l, r] : exp.edges) nbr[l][r / 64] |= std::uint64_t{1} << (r % 64);

  ExpansionResult result;
  std::vector<int> picked;
  std::vector<std::vector<std::uint64_t>> unions(
      size_cap + 1, std::vector<std::uint64_t>(words, 0));

  for (int s = 1; s <= size_cap; ++s) {
    // Depth-first over lexicographic s-subsets with running unions.
    std::function<bool(int)> extend = [&](int from) -> bool {
      int depth = static_cast<int>(picked.size());
      if (depth == s) {
        ++result.subsets_checked;
        std::int64_t size = 0;
        for (std::uint64_t w : unions[depth]) size += std::popcount(w);
        return size * factor.den < factor.num * s;
      }
      for (int l = from; l + (s - depth) <= nl; ++l) {
        picked.push_back(l);
        for (std::size_t w = 0; w < words; ++w) {
          unions[depth + 1][w] = unions[depth][w] | nbr[l][w];
        }
        if (extend(l + 1)) return true;
        picked.pop_back();
      }
      return false;
    };
    if (extend(0)) {
      result.counterexample = picked;
      result.max_certified_size = s - 1;
      return result;
    }
    result.max_certified_size = s;
  }
  result.certified = true;
  return result;
}

LowerBoundStream IsLowerBoundStream(const BipartiteExpander& exp) {
  LowerBoundStream out;
  auto radj = exp.LeftAdjacency();
  VertexId n = exp.num_right;
  for (VertexId r = 0; r < n; ++r) {
    out.stream.events.push_back(StreamEvent::Arrival(r));
    out.layers[r] = "R";
  }
  for (int l = 0; l < exp.num_left; ++l) {
    VertexId id = n + l;
    std::vector<VertexId> nbrs(radj[l].begin(), radj[l].end());
    out.stream.events.push_back(StreamEvent::Arrival(id, nbrs));
    out.layers[id] = "L";
  }
  out.landmarks["t"] = static_cast<Timestamp>(out.stream.events.size());
  out.stream.meta = StreamMeta{std::max(1, exp.MaxDegree()),
                               StreamModel::kArrival, "is-lb"};
  return out;
}

LowerBoundStream DomsetLowerBoundStream(const BipartiteExpander& exp) {
  int nl = exp.num_left;
  int nr = exp.num_right;
  if (nr < 1 || nr > nl) {
    throw Error(ErrorCode::kWiringInfeasible,
                "need 1 <= |R| <= |L| to attach r_i to v_i");
  }
  auto ladj = exp.LeftAdjacency();
  auto radj = exp.RightAdjacency();
  LowerBoundStream out;
  auto& events = out.stream.events;
  auto u = [](int j) { return static_cast<VertexId>(j); };
  auto v = [nl](int j) { return static_cast<VertexId>(nl + j); };
  auto w = [nl](int j) { return static_cast<VertexId>(2 * nl + j); };

  for (int j = 0; j < nl; ++j) {
    events.push_back(StreamEvent::Arrival(u(j)));
    out.layers[u(j)] = "u";
  }
  for (int j = 0; j < nl; ++j) {
    events.push_back(StreamEvent::Arrival(v(j), {u(j)}));
    out.layers[v(j)] = "v";
  }
  for (int j = 0; j < nl; ++j) {
    events.push_back(StreamEvent::Arrival(w(j), {v(j)}));
    out.layers[w(j)] = "w";
  }
  VertexId next = 3 * nl;
  std::vector<std::deque<VertexId>> free_bag(nl);
  for (int j = 0; j < nl; ++j) {
    for (std::size_t k = 0; k < ladj[j].size(); ++k) {
      events.push_back(StreamEvent::Arrival(next, {w(j)}));
      out.layers[next] = "bag";
      free_bag[j].push_back(next++);
    }
  }
  out.landmarks["t1"] = static_cast<Timestamp>(events.size());

  for (int i = 0; i < nr; ++i) {
    std::vector<VertexId> nbrs;
    for (int j : radj[i]) {
      if (free_bag[j].empty()) {
        throw Error(ErrorCode::kWiringInfeasible,
                    "bag " + std::to_string(j) + " exhausted");
      }
      nbrs.push_back(free_bag[j].front());
      free_bag[j].pop_front();
    }
    nbrs.push_back(v(i));
    std::sort(nbrs.begin(), nbrs.end());
    events.push_back(StreamEvent::Arrival(next, nbrs));
    out.layers[next] = "r";
    ++next;
  }
  for (const auto& bag : free_bag) {
    if (!bag.empty()) {
      throw Error(ErrorCode::kWiringInfeasible, "bag vertex left unwired");
    }
  }
  out.landmarks["t2"] = static_cast<Timestamp>(events.size());
  out.stream.meta = StreamMeta{std::max(1, out.stream.MaxArrivalDegree()),
                               StreamModel::kArrival, "ds-lb"};
  return out;
}

EventStream DirectedDomSetTightStream(int d) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "tight stream needs d >= 2");
  EventStream stream;
  auto& events = stream.events;
  const VertexId a1 = 0;
  events.push_back(StreamEvent::Arrival(a1));
  // v_1..v_{d^2} hang off a1.
  for (int k = 1; k <= d * d; ++k) {
    events.push_back(StreamEvent::Arrival(k, {a1}));
  }
  // w_j covers block j of the v's.
  VertexId w0 = d * d + 1;
  for (int j = 0; j < d; ++j) {
    std::vector<VertexId> nbrs;
    for (int k = j * d + 1; k <= (j + 1) * d; ++k) nbrs.push_back(k);
    events.push_back(StreamEvent::Arrival(w0 + j, nbrs));
  }
  // a2 sees every w, so it joins nothing.
  VertexId a2 = w0 + d;
  std::vector<VertexId> ws;
  for (int j = 0; j < d; ++j) ws.push_back(w0 + j);
  events.push_back(StreamEvent::Arrival(a2, ws));
  // Each x_k forces v_k into the solution.
  VertexId x0 = a2 + 1;
  for (int k = 1; k <= d * (d - 1); ++k) {
    events.push_back(StreamEvent::Arrival(x0 + k - 1, {static_cast<VertexId>(k), a2}));
  }
  VertexId z = x0 + d * (d - 1);
  events.push_back(StreamEvent::Arrival(z));
  stream.meta = StreamMeta{d, StreamModel::kArrival,
                           "directed tight example d=" + std::to_string(d)};
  return stream;
}

EventStream StarAdversaryStream(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "star needs n >= 2");
  EventStream stream;
  stream.events.push_back(StreamEvent::Arrival(0));
  for (VertexId v = 1; v < static_cast<VertexId>(n); ++v) {
    stream.events.push_back(StreamEvent::Arrival(v, {0}));
  }
  stream.meta = StreamMeta{2, StreamModel::kArrival,
                           "star n=" + std::to_string(n)};
  return stream;
}

}  // namespace stabledg
