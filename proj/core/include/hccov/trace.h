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

#ifndef HCCOV_TRACE_H_
#define HCCOV_TRACE_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hccov/ast.h"

namespace hccov {

// A unit of memory for def/use purposes. Array dependences are element
// precise: a[i] evaluated with i == 3 touches arr:global:a[3].
struct Location {
  enum class Kind { kLocal, kGlobal, kArrayElement, kCallResult };

  Kind kind = Kind::kLocal;
  int activation = -1;      // locals only
  std::string name;         // locals, globals, arrays
  std::int64_t index = 0;   // array index, or call event idx for results

  static Location Local(int activation, std::string name);
  static Location Global(std::string name);
  static Location GlobalElement(std::string name, std::int64_t index);
  static Location CallResult(std::int64_t call_event);

  // "local:<activation>:<name>", "global:<name>",
  // "arr:global:<name>[<index>]", "ret:<idx>"
  std::string ToString() const;

  auto operator<=>(const Location&) const = default;
};

struct LocationHash {
  std::size_t operator()(const Location& loc) const;
};

enum class EventKind {
  kStatement,    // assign, array-assign, return
  kPredicate,    // if/while condition evaluation; carries an outcome
  kCallBinding,  // argument evaluation + parameter binding for one call
  kAssertion,    // an enabled assert in a test
};

struct TraceEvent {
  std::int64_t idx = 0;
  EventKind kind = EventKind::kStatement;
  StatementId stmt;        // unset for assertions
  AssertionId assertion;   // assertions only
  std::vector<Location> defs;  // sorted, unique
  std::vector<Location> uses;  // sorted, unique
  std::optional<std::int64_t> ctrl_parent;
  std::optional<std::int64_t> call_parent;
  std::optional<bool> outcome;  // predicates only

  bool IsAssertion() const { return kind == EventKind::kAssertion; }
  // "s4" or "A1"
  std::string StmtLabel() const;
};

struct Trace {
  std::string test;
  std::vector<TraceEvent> events;

  std::size_t size() const { return events.size(); }
};

enum class TrapKind {
  kDivByZero,
  kIndexOutOfBounds,
  kMissingReturnValue,
  kTypeError,
  kStackOverflow,
};

const char* Spelling(TrapKind kind);

struct TestOutcome {
  enum class Status { kPass, kAssertionFailure, kTrap, kTimeout };

  std::string test;
  Status status = Status::kPass;
  AssertionId failed_assertion;  // kAssertionFailure
  TrapKind trap = TrapKind::kDivByZero;  // kTrap
  StatementId trap_stmt;         // kTrap; unset when inside an assertion
  std::int64_t steps = 0;

  bool passed() const { return status == Status::kPass; }
  // "pass", "assertion-failure(A1)", "trap(div-by-zero,s3)", "timeout"
  std::string ToString() const;
};

// Problems found by checking a trace against its structural invariants:
// parents point backwards, outcomes exactly on predicates, and every local or
// call-result use has an earlier definition. Empty means valid.
std::vector<std::string> ValidateTrace(const Trace& trace);

struct SlicingCriterion {
  std::string test;
  std::int64_t event = 0;
  std::vector<Location> locations;  // subset of the event's uses

  friend bool operator==(const SlicingCriterion&,
                         const SlicingCriterion&) = default;
};

}  // namespace hccov

#endif  // HCCOV_TRACE_H_
