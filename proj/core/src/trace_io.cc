// Copyright 2026 The hccov Authors
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

#include "hccov/trace_io.h"

#include <nlohmann/json.hpp>

namespace hccov {

using Json = nlohmann::ordered_json;

namespace {

Json LocationList(const std::vector<Location>& locs) {
  Json out = Json::array();
  for (const auto& l : locs) out.push_back(l.ToString());
  return out;
}

template <typename T>
Json OrNull(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string TraceEventToJson(const TraceEvent& event, const std::string& test) {
  Json j;
  j["idx"] = event.idx;
  j["stmt"] = event.StmtLabel();
  j["test"] = test;
  j["defs"] = LocationList(event.defs);
  j["uses"] = LocationList(event.uses);
  j["ctrl_parent"] = OrNull(event.ctrl_parent);
  j["call_parent"] = OrNull(event.call_parent);
  j["outcome"] = OrNull(event.outcome);
  return j.dump();
}

void WriteTraceJsonl(const Trace& trace, std::ostream& os) {
  for (const auto& e : trace.events) os << TraceEventToJson(e, trace.test) << "\n";
}

std::string SliceToJson(const Slice& slice) {
  Json j;
  j["test"] = slice.criterion.test;
  j["event"] = slice.criterion.event;
  Json stmts = Json::array();
  for (StatementId id : slice.statements) stmts.push_back(ToString(id));
  j["statements"] = std::move(stmts);
  Json arms = Json::array();
  for (const BranchArm& arm : slice.arms) {
    arms.push_back(Json::array({ToString(arm.predicate), arm.outcome}));
  }
  j["arm_outcomes"] = std::move(arms);
  return j.dump();
}

void WriteSlicesJsonl(const std::vector<Slice>& slices, std::ostream& os) {
  for (const auto& s : slices) os << SliceToJson(s) << "\n";
}

}  // namespace hccov
