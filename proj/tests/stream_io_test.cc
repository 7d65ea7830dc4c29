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

#include "stabledg/stream_io.h"

#include <gtest/gtest.h>

#include <string>

namespace stabledg {
namespace {

TEST(StreamIoTest, RoundTrip) {
  EventStream s;
  s.meta = StreamMeta{3, StreamModel::kFullyDynamic, "demo"};
  s.events = {StreamEvent::Arrival(0), StreamEvent::Arrival(4, {0}),
              StreamEvent::Departure(0)};
  std::string text = FormatEventStream(s);
  EXPECT_EQ(ParseEventStream(text), s);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            R"({"meta":{"d":3,"model":"fully-dynamic","desc":"demo"}})");
}

TEST(StreamIoTest, MetaIsOptional) {
  EventStream s = ParseEventStream(
      "{\"op\":\"add\",\"v\":1,\"nbrs\":[]}\n\n{\"op\":\"add\",\"v\":2,\"nbrs\":[1]}\n");
  EXPECT_FALSE(s.meta.has_value());
  ASSERT_EQ(s.events.size(), 2u);
  EXPECT_EQ(s.events[1].neighbors, (std::vector<VertexId>{1}));
}

TEST(StreamIoTest, ReportsLineOfBadInput) {
  try {
    ParseEventStream("{\"op\":\"add\",\"v\":1,\"nbrs\":[]}\n{\"op\":\"jump\"}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_EQ(e.at(), 2);
  }
  EXPECT_THROW(ParseEventStream("not json\n"), Error);
  // Meta only allowed first.
  EXPECT_THROW(ParseEventStream("{\"op\":\"add\",\"v\":1,\"nbrs\":[]}\n"
                                "{\"meta\":{\"d\":1}}\n"),
               Error);
}

}  // namespace
}  // namespace stabledg
