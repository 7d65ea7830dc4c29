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

// Shared vocabulary types: vertex ids, solution deltas, the error type and
// the interface every solution maintainer implements.

#ifndef STABLEDG_COMMON_H_
#define STABLEDG_COMMON_H_

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stabledg {

using VertexId = std::uint32_t;
// 1-based event index. 0 means "before the first event".
using Timestamp = std::int64_t;
using VertexSet = std::set<VertexId>;

enum class ErrorCode {
  kDuplicateVertex,
  kDuplicateNeighbor,
  kUnknownNeighbor,
  kSelfLoop,
  kUnknownVertex,
  kEmptyGraph,
  kBudgetExceeded,
  kModelViolation,
  kTargetUnavailable,
  kNotIndependent,
  kAverageDegreeExceeded,
  kNoImprovingSwap,
  kContinuityViolated,
  kSelectionFailed,
  kConfigModelStuck,
  kTooLarge,
  kWiringInfeasible,
  kParseError,
  kInvariantBreached,
  kEmptyTrace,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. `at` carries the
// event timestamp (or solvable prefix length) when the error is tied to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::int64_t> at = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::int64_t> at() const { return at_; }

 private:
  ErrorCode code_;
  std::optional<std::int64_t> at_;
};

// Exact non-negative-denominator fraction, always kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  double ToDouble() const { return static_cast<double>(num) / den; }
  std::string ToString() const;
  // Accepts "p/q", integers and finite decimals such as "0.5".
  static Rational Parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

// Changes to an output set across one event.
struct StepDelta {
  VertexSet added;
  VertexSet removed;

  std::int64_t stability() const {
    return static_cast<std::int64_t>(added.size() + removed.size());
  }
  bool empty() const { return added.empty() && removed.empty(); }
};

// Symmetric difference of two snapshots of an output set.
StepDelta Diff(const VertexSet& before, const VertexSet& after);

bool Contains(const VertexSet& set, VertexId v);
VertexSet Union(const VertexSet& a, const VertexSet& b);
VertexSet Intersection(const VertexSet& a, const VertexSet& b);
VertexSet Difference(const VertexSet& a, const VertexSet& b);

// Named integer diagnostics exported into trace rows as aux_<name> columns.
using AuxFields = std::vector<std::pair<std::string, std::int64_t>>;

class DynamicGraph;
struct StreamEvent;

// A dynamic algorithm that keeps an output vertex set up to date. Step() is
// invoked after the event has been applied to `graph`.
class Maintainer {
 public:
  virtual ~Maintainer() = default;

  virtual StepDelta Step(const DynamicGraph& graph,
                         const StreamEvent& event) = 0;
  virtual const VertexSet& Solution() const = 0;
  virtual AuxFields Aux() const { return {}; }
};

}  // namespace stabledg

#endif  // STABLEDG_COMMON_H_
