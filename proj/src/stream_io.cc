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

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stabledg {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line_no) + ": " + what,
              static_cast<std::int64_t>(line_no));
}

VertexId ToVertex(const Json& value, std::size_t line_no) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0 ||
      value.get<std::int64_t>() > std::numeric_limits<VertexId>::max()) {
    Fail(line_no, "vertex ids must be non-negative integers");
  }
  return static_cast<VertexId>(value.get<std::int64_t>());
}

StreamMeta ParseMeta(const Json& meta, std::size_t line_no) {
  if (!meta.is_object()) Fail(line_no, "\"meta\" must be an object");
  StreamMeta out;
  if (auto it = meta.find("d"); it != meta.end()) {
    if (!it->is_number_integer() || it->get<int>() < 0) {
      Fail(line_no, "\"d\" must be a non-negative integer");
    }
    out.d = it->get<int>();
  }
  if (auto it = meta.find("model"); it != meta.end()) {
    const std::string model = it->is_string() ? it->get<std::string>() : "";
    if (model == "arrival") {
      out.model = StreamModel::kArrival;
    } else if (model == "fully-dynamic") {
      out.model = StreamModel::kFullyDynamic;
    } else {
      Fail(line_no, "unknown model '" + model + "'");
    }
  }
  if (auto it = meta.find("desc"); it != meta.end()) {
    if (!it->is_string()) Fail(line_no, "\"desc\" must be a string");
    out.desc = it->get<std::string>();
  }
  return out;
}

}  // namespace

std::string_view ModelName(StreamModel model) {
  return model == StreamModel::kArrival ? "arrival" : "fully-dynamic";
}

EventStream ReadEventStream(std::istream& in) {
  EventStream stream;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json row;
    try {
      row = Json::parse(line);
    } catch (const Json::parse_error& e) {
      Fail(line_no, e.what());
    }
    if (!row.is_object()) Fail(line_no, "expected a JSON object");
    if (auto it = row.find("meta"); it != row.end()) {
      if (stream.meta || !stream.events.empty()) {
        Fail(line_no, "meta header must be the first line");
      }
      stream.meta = ParseMeta(*it, line_no);
      continue;
    }
    auto op = row.find("op");
    auto v = row.find("v");
    if (op == row.end() || !op->is_string() || v == row.end()) {
      Fail(line_no, "expected \"op\" and \"v\"");
    }
    const std::string kind = op->get<std::string>();
    if (kind == "add") {
      StreamEvent event = StreamEvent::Arrival(ToVertex(*v, line_no));
      if (auto nbrs = row.find("nbrs"); nbrs != row.end()) {
        if (!nbrs->is_array()) Fail(line_no, "\"nbrs\" must be an array");
        for (const Json& u : *nbrs) {
          event.neighbors.push_back(ToVertex(u, line_no));
        }
      }
      stream.events.push_back(std::move(event));
    } else if (kind == "del") {
      if (row.contains("nbrs")) Fail(line_no, "\"del\" takes no neighbors");
      stream.events.push_back(StreamEvent::Departure(ToVertex(*v, line_no)));
    } else {
      Fail(line_no, "unknown op '" + kind + "'");
    }
  }
  return stream;
}

EventStream ParseEventStream(const std::string& text) {
  std::istringstream in(text);
  return ReadEventStream(in);
}

EventStream LoadEventStream(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  return ReadEventStream(in);
}

void WriteEventStream(std::ostream& out, const EventStream& stream) {
  if (stream.meta) {
    Json meta = Json::object();
    if (stream.meta->d) meta["d"] = *stream.meta->d;
    if (stream.meta->model) meta["model"] = ModelName(*stream.meta->model);
    if (!stream.meta->desc.empty()) meta["desc"] = stream.meta->desc;
    out << Json{{"meta", meta}}.dump() << '\n';
  }
  for (const StreamEvent& event : stream.events) {
    Json row = Json::object();
    if (event.kind == EventKind::kArrival) {
      row["op"] = "add";
      row["v"] = event.vertex;
      row["nbrs"] = event.neighbors;
    } else {
      row["op"] = "del";
      row["v"] = event.vertex;
    }
    out << row.dump() << '\n';
  }
}

std::string FormatEventStream(const EventStream& stream) {
  std::ostringstream out;
  WriteEventStream(out, stream);
  return out.str();
}

void SaveEventStream(const std::filesystem::path& path,
                     const EventStream& stream) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
  WriteEventStream(out, stream);
}

}  // namespace stabledg
