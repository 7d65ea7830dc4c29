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

#include <gtest/gtest.h>

namespace stabledg {
namespace {

TEST(RationalTest, NormalizesAndParses) {
  EXPECT_EQ(Rational(3, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational::Parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("0.5"), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("0.005"), Rational(1, 200));
  EXPECT_EQ(Rational::Parse("7"), Rational(7));
  EXPECT_EQ(Rational(89, 603).ToString(), "89/603");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(RationalTest, RejectsGarbage) {
  EXPECT_THROW(Rational(1, 0), Error);
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.2.3"}) {
    EXPECT_THROW(Rational::Parse(bad), Error) << bad;
  }
}

TEST(DiffTest, SymmetricDifference) {
  StepDelta d = Diff({1, 2, 3}, {2, 3, 4, 5});
  EXPECT_EQ(d.added, (VertexSet{4, 5}));
  EXPECT_EQ(d.removed, (VertexSet{1}));
  EXPECT_EQ(d.stability(), 3);
  EXPECT_TRUE(Diff({1}, {1}).empty());
}

TEST(ErrorTest, CarriesCodeAndTimestamp) {
  Error e(ErrorCode::kInvariantBreached, "boom", 7);
  EXPECT_EQ(e.code(), ErrorCode::kInvariantBreached);
  EXPECT_EQ(e.at(), 7);
  EXPECT_EQ(ErrorCodeName(ErrorCode::kBudgetExceeded), "BudgetExceeded");
}

}  // namespace
}  // namespace stabledg
