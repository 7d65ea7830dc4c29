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

// JSON Lines serialization of event streams:
//
//   {"meta":{"d":2,"model":"arrival","desc":"..."}}     optional first line
//   {"op":"add","v":3,"nbrs":[0,2]}
//   {"op":"del","v":0}

#ifndef STABLEDG_STREAM_IO_H_
#define STABLEDG_STREAM_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "stabledg/dyngraph.h"

namespace stabledg {

EventStream ReadEventStream(std::istream& in);
EventStream ParseEventStream(const std::string& text);
EventStream LoadEventStream(const std::filesystem::path& path);

void WriteEventStream(std::ostream& out, const EventStream& stream);
std::string FormatEventStream(const EventStream& stream);
void SaveEventStream(const std::filesystem::path& path,
                     const EventStream& stream);

std::string_view ModelName(StreamModel model);

}  // namespace stabledg

#endif  // STABLEDG_STREAM_IO_H_
