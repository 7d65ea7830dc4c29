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

#include "stabledg/common.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

namespace stabledg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kDuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorCode::kUnknownNeighbor: return "UnknownNeighbor";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kModelViolation: return "ModelViolation";
    case ErrorCode::kTargetUnavailable: return "TargetUnavailable";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kAverageDegreeExceeded: return "AverageDegreeExceeded";
    case ErrorCode::kNoImprovingSwap: return "NoImprovingSwap";
    case ErrorCode::kContinuityViolated: return "ContinuityViolated";
    case ErrorCode::kSelectionFailed: return "SelectionFailed";
    case ErrorCode::kConfigModelStuck: return "ConfigModelStuck";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kWiringInfeasible: return "WiringInfeasible";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvariantBreached: return "InvariantBreached";
    case ErrorCode::kEmptyTrace: return "EmptyTrace";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::int64_t> at)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      at_(at) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g == 0 ? 0 : n / g;
  den = g == 0 ? 1 : d / g;
}

std::string Rational::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t ParseInt(std::string_view text) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::kParseError,
                "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(ParseInt(text.substr(0, slash)),
                    ParseInt(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 12) {
      throw Error(ErrorCode::kParseError, "too many decimals in '" +
                                              std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string_view whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t int_part =
        whole.empty() || whole == "-" ? 0 : ParseInt(whole);
    const std::int64_t frac_part = frac.empty() ? 0 : ParseInt(frac);
    const std::int64_t magnitude =
        (negative ? -int_part : int_part) * scale + frac_part;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  return Rational(ParseInt(text));
}

StepDelta Diff(const VertexSet& before, const VertexSet& after) {
  return StepDelta{Difference(after, before), Difference(before, after)};
}

bool Contains(const VertexSet& set, VertexId v) { return set.count(v) > 0; }

VertexSet Union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VertexSet Intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

VertexSet Difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

}  // namespace stabledg
