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

#ifndef HCCOV_INTERPRETER_H_
#define HCCOV_INTERPRETER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hccov/ast.h"
#include "hccov/trace.h"

namespace hccov {

inline constexpr std::int64_t kDefaultStepLimit = 1'000'000;

struct ExecConfig {
  // Maximum number of trace events per test; exceeding it is a timeout.
  std::int64_t step_limit = kDefaultStepLimit;
  // Mutation runs only need outcomes.
  bool record_trace = true;
  int max_call_depth = 256;
};

struct Value {
  bool is_bool = false;
  std::int64_t number = 0;  // 0/1 for booleans

  static Value Int(std::int64_t v) { return {false, v}; }
  static Value Bool(bool b) { return {true, b ? 1 : 0}; }

  // Literal expression denoting this value.
  Expr ToExpr() const;
  std::string ToString() const;
  friend bool operator==(const Value&, const Value&) = default;
};

// Evaluate `expr` in the test's activation right after the top-level test
// statement `after` executes. Used to capture regression-oracle values.
struct Probe {
  StatementId after;
  Expr expr;
};

struct TestRun {
  Trace trace;
  TestOutcome outcome;
  std::optional<Value> probe_value;
};

using SuiteRun = std::map<std::string, TestRun>;

// Runs one test on fresh globals. Execution stops at the first trap,
// assertion failure or step-limit overrun. Disabled assertions are skipped
// without evaluating their expressions.
TestRun RunTest(const Program& program, const std::string& test,
                const ExecConfig& config = {}, const Probe* probe = nullptr);

// Runs every test independently, keyed by test name.
SuiteRun RunSuite(const Program& program, const ExecConfig& config = {});

// Total event count of a suite run.
std::int64_t TotalSteps(const SuiteRun& run);

// One criterion per executed assertion instance, ordered by (test, event).
std::vector<SlicingCriterion> GenerateCriteria(const SuiteRun& run);

}  // namespace hccov

#endif  // HCCOV_INTERPRETER_H_
