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

#include "hccov/trace.h"

#include <unordered_set>

namespace hccov {

Location Location::Local(int activation, std::string name) {
  return {Kind::kLocal, activation, std::move(name), 0};
}

Location Location::Global(std::string name) {
  return {Kind::kGlobal, -1, std::move(name), 0};
}

Location Location::GlobalElement(std::string name, std::int64_t index) {
  return {Kind::kArrayElement, -1, std::move(name), index};
}

Location Location::CallResult(std::int64_t call_event) {
  return {Kind::kCallResult, -1, "", call_event};
}

std::string Location::ToString() const {
  switch (kind) {
    case Kind::kLocal:
      return "local:" + std::to_string(activation) + ":" + name;
    case Kind::kGlobal:
      return "global:" + name;
    case Kind::kArrayElement:
      return "arr:global:" + name + "[" + std::to_string(index) + "]";
    case Kind::kCallResult:
      return "ret:" + std::to_string(index);
  }
  return "?";
}

std::size_t LocationHash::operator()(const Location& loc) const {
  std::size_t h = std::hash<std::string>()(loc.name);
  h ^= std::hash<std::int64_t>()(loc.index) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  h ^= std::hash<int>()(loc.activation * 4 + static_cast<int>(loc.kind)) +
       0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string TraceEvent::StmtLabel() const {
  return IsAssertion() ? ToString(assertion) : ToString(stmt);
}

const char* Spelling(TrapKind kind) {
  switch (kind) {
    case TrapKind::kDivByZero: return "div-by-zero";
    case TrapKind::kIndexOutOfBounds: return "index-out-of-bounds";
    case TrapKind::kMissingReturnValue: return "missing-return-value";
    case TrapKind::kTypeError: return "type-error";
    case TrapKind::kStackOverflow: return "stack-overflow";
  }
  return "?";
}

std::string TestOutcome::ToString() const {
  switch (status) {
    case Status::kPass:
      return "pass";
    case Status::kAssertionFailure:
      return "assertion-failure(" + hccov::ToString(failed_assertion) + ")";
    case Status::kTrap: {
      std::string s = std::string("trap(") + Spelling(trap);
      if (trap_stmt.value != 0) s += "," + hccov::ToString(trap_stmt);
      return s + ")";
    }
    case Status::kTimeout:
      return "timeout";
  }
  return "?";
}

std::vector<std::string> ValidateTrace(const Trace& trace) {
  std::vector<std::string> problems;
  std::unordered_set<Location, LocationHash> defined;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];
    const std::string where = "event " + std::to_string(i) + ": ";
    if (e.idx != static_cast<std::int64_t>(i)) {
      problems.push_back(where + "idx mismatch");
    }
    if (e.ctrl_parent && (*e.ctrl_parent < 0 || *e.ctrl_parent >= e.idx)) {
      problems.push_back(where + "ctrl_parent does not precede event");
    }
    if (e.call_parent && (*e.call_parent < 0 || *e.call_parent >= e.idx)) {
      problems.push_back(where + "call_parent does not precede event");
    }
    if (e.ctrl_parent &&
        trace.events[static_cast<std::size_t>(*e.ctrl_parent)].kind !=
            EventKind::kPredicate) {
      problems.push_back(where + "ctrl_parent is not a predicate instance");
    }
    if (e.call_parent &&
        trace.events[static_cast<std::size_t>(*e.call_parent)].kind !=
            EventKind::kCallBinding) {
      problems.push_back(where + "call_parent is not a call event");
    }
    if (e.outcome.has_value() != (e.kind == EventKind::kPredicate)) {
      problems.push_back(where + "outcome present iff predicate violated");
    }
    for (const Location& use : e.uses) {
      bool initializer = use.kind == Location::Kind::kGlobal ||
                         use.kind == Location::Kind::kArrayElement;
      if (!initializer && !defined.count(use)) {
        problems.push_back(where + "use of " + use.ToString() +
                           " has no earlier definition");
      }
    }
    for (const Location& def : e.defs) defined.insert(def);
  }
  return problems;
}

}  // namespace hccov
