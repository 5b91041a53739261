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

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "hccov/error.h"
#include "hccov/interpreter.h"
#include "hccov/parser.h"
#include "hccov/structures.h"
#include "hccov/suitegen.h"
#include "random_program.h"
#include "test_util.h"

namespace hccov {
namespace {

using ::hccov::testing::CorpusStems;
using ::hccov::testing::LoadCorpusProgram;
using ::hccov::testing::MustParse;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

std::vector<std::string> Labels(const Trace& trace) {
  std::vector<std::string> out;
  for (const auto& e : trace.events) out.push_back(e.StmtLabel());
  return out;
}

TestOutcome RunOnly(const std::string& source, const ExecConfig& config = {}) {
  Program p = MustParse(source);
  return RunTest(p, p.tests.at(0).name, config).outcome;
}

TEST(InterpreterTest, P1Trace) {
  Program p = LoadCorpusProgram("p1_add_abs");
  TestRun run = RunTest(p, "t1");
  EXPECT_TRUE(run.outcome.passed());
  // The call binding and the assignment of its result both belong to s6.
  EXPECT_THAT(Labels(run.trace),
              ElementsAre("s6", "s1", "s2", "s3", "s4", "s5", "s6", "A1"));
  EXPECT_EQ(run.trace.events[2].outcome, std::optional<bool>(true));
  EXPECT_EQ(run.trace.events[3].ctrl_parent, std::optional<std::int64_t>(2));
  for (int i = 1; i <= 5; ++i) {
    EXPECT_EQ(run.trace.events[i].call_parent, std::optional<std::int64_t>(0));
  }
  EXPECT_EQ(run.outcome.steps, 8);
  EXPECT_EQ(run.outcome.ToString(), "pass");
}

TEST(InterpreterTest, EventLocations) {
  Program p = LoadCorpusProgram("p1_add_abs");
  TestRun run = RunTest(p, "t1");
  const auto& binding = run.trace.events[0];
  EXPECT_EQ(binding.kind, EventKind::kCallBinding);
  EXPECT_THAT(binding.defs, ElementsAre(Location::Local(1, "a"), Location::Local(1, "b")));
  EXPECT_THAT(run.trace.events[4].defs, ElementsAre(Location::Global("g")));
  EXPECT_THAT(run.trace.events[5].defs, ElementsAre(Location::CallResult(0)));
  EXPECT_THAT(run.trace.events[6].uses, ElementsAre(Location::CallResult(0)));
  EXPECT_EQ(Location::Local(1, "d").ToString(), "local:1:d");
  EXPECT_EQ(Location::GlobalElement("a", 3).ToString(), "arr:global:a[3]");
  EXPECT_EQ(Location::CallResult(4).ToString(), "ret:4");
}

TEST(InterpreterTest, AssertTrueOnly) {
  Program p = MustParse("test t { assert true; }");
  TestRun run = RunTest(p, "t");
  EXPECT_TRUE(run.outcome.passed());
  EXPECT_EQ(run.trace.size(), 1u);
}

TEST(InterpreterTest, Traps) {
  EXPECT_EQ(RunOnly("fn f(x) { return 1 / x; }\ntest t { y = f(0); }").ToString(),
            "trap(div-by-zero,s1)");
  EXPECT_EQ(RunOnly("fn f(x) { return 1 % x; }\ntest t { y = f(0); }").ToString(),
            "trap(div-by-zero,s1)");
  EXPECT_EQ(RunOnly("global a[2];\nfn f(i) { return a[i]; }\ntest t { y = f(2); }")
                .ToString(),
            "trap(index-out-of-bounds,s1)");
  EXPECT_EQ(RunOnly("global a[2];\nfn f(i) { a[i] = 1; return 0; }\ntest t { y = f(-1); }")
                .ToString(),
            "trap(index-out-of-bounds,s1)");
  EXPECT_EQ(RunOnly("fn f(x) { if (x > 0) { return 1; } }\ntest t { y = f(0); }").ToString(),
            "trap(missing-return-value,s3)");
  EXPECT_EQ(RunOnly("fn f(x) { return x + true; }\ntest t { y = f(1); }").ToString(),
            "trap(type-error,s1)");
  EXPECT_EQ(RunOnly("fn f(x) { return f(x + 1); }\ntest t { y = f(0); }").ToString(),
            "trap(stack-overflow,s1)");
}

TEST(InterpreterTest, MissingReturnIsFineForCallStatements) {
  EXPECT_TRUE(RunOnly("global g;\nfn f() { g = 1; }\ntest t { f(); assert g == 1; }")
                  .passed());
}

TEST(InterpreterTest, TrapStopsTestAndDropsTrappingEvent) {
  Program p = MustParse("fn f(x) { y = x + 1; z = 10 / x; return z; }\n"
                        "test t { r = f(0); assert r == 1; }");
  TestRun run = RunTest(p, "t");
  EXPECT_EQ(run.outcome.status, TestOutcome::Status::kTrap);
  EXPECT_THAT(Labels(run.trace), ElementsAre("s4", "s1"));
}

TEST(InterpreterTest, AssertionFailureStopsTest) {
  Program p = MustParse("test t { x = 1; assert x == 2; x = 3; assert x == 3; }");
  TestRun run = RunTest(p, "t");
  EXPECT_EQ(run.outcome.ToString(), "assertion-failure(A1)");
  EXPECT_THAT(Labels(run.trace), ElementsAre("s1", "A1"));
}

TEST(InterpreterTest, Timeout) {
  ExecConfig config;
  config.step_limit = 100;
  TestOutcome out =
      RunOnly("fn f() { x = 0; while (true) { x = x + 1; } return x; }\ntest t { y = f(); }",
              config);
  EXPECT_EQ(out.ToString(), "timeout");
  EXPECT_EQ(out.steps, 100);
}

TEST(InterpreterTest, RejectsBadConfig) {
  Program p = MustParse("test t { assert true; }");
  ExecConfig config;
  config.step_limit = 0;
  EXPECT_THROW(RunTest(p, "t", config), Error);
  EXPECT_THROW(RunTest(p, "missing"), Error);
}

TEST(InterpreterTest, WrappingArithmetic) {
  EXPECT_TRUE(RunOnly("test t {\n"
                      "  m = 9223372036854775807;\n"
                      "  x = m + 1;\n"
                      "  assert x == -9223372036854775807 - 1;\n"
                      "  y = x / -1;\n"
                      "  assert y == x;\n"
                      "  z = x % -1;\n"
                      "  assert z == 0;\n"
                      "  assert -7 / 2 == -3;\n"
                      "  assert -7 % 2 == -1;\n"
                      "}")
                  .passed());
}

TEST(InterpreterTest, ShortCircuit) {
  EXPECT_TRUE(RunOnly("fn f(x) { if (x == 0 || 10 / x > 1) { return 1; } return 0; }\n"
                      "test t { y = f(0); assert y == 1; }")
                  .passed());
}

TEST(InterpreterTest, DisabledAssertionsDoNotRun) {
  Program p = MustParse("test t { x = 0; disabled assert 1 / x == 1; assert x == 0; }");
  TestRun run = RunTest(p, "t");
  EXPECT_TRUE(run.outcome.passed());
  EXPECT_THAT(Labels(run.trace), ElementsAre("s1", "A2"));
}

TEST(InterpreterTest, FreshGlobalsPerTest) {
  Program p = MustParse("global g = 1;\nfn bump() { g = g + 1; return g; }\n"
                        "test a { x = bump(); assert x == 2; }\n"
                        "test b { x = bump(); assert x == 2; }");
  SuiteRun suite = RunSuite(p);
  ASSERT_EQ(suite.size(), 2u);
  EXPECT_TRUE(suite.at("a").outcome.passed());
  EXPECT_TRUE(suite.at("b").outcome.passed());
}

TEST(InterpreterTest, SuiteKeepsRunningAfterFailure) {
  Program p = MustParse("test a { assert 1 == 2; }\ntest b { x = 1 / 0; }\n"
                        "test c { assert true; }");
  SuiteRun suite = RunSuite(p);
  EXPECT_EQ(suite.at("a").outcome.status, TestOutcome::Status::kAssertionFailure);
  EXPECT_EQ(suite.at("b").outcome.status, TestOutcome::Status::kTrap);
  EXPECT_TRUE(suite.at("c").outcome.passed());
  EXPECT_THAT(RunSuite(MustParse("")), IsEmpty());
}

TEST(InterpreterTest, P1Suite) {
  SuiteRun suite = RunSuite(LoadCorpusProgram("p1_add_abs"));
  ASSERT_EQ(suite.size(), 1u);
  EXPECT_TRUE(suite.at("t1").outcome.passed());
}

TEST(InterpreterTest, ArrayElementLocations) {
  Program p = MustParse("global a[4];\nfn set(i, v) { a[i] = v; return a[i]; }\n"
                        "test t { x = set(3, 5); assert a[3] == 5; }");
  TestRun run = RunTest(p, "t");
  ASSERT_TRUE(run.outcome.passed());
  EXPECT_THAT(run.trace.events[1].defs, ElementsAre(Location::GlobalElement("a", 3)));
  EXPECT_THAT(run.trace.events.back().uses, ElementsAre(Location::GlobalElement("a", 3)));
}

TEST(InterpreterTest, ProbeReadsValueAfterStatement) {
  Program p = LoadCorpusProgram("p1_add_abs");
  Probe probe{StatementId{6}, Expr::Var("g")};
  TestRun run = RunTest(p, "t1", {}, &probe);
  ASSERT_TRUE(run.probe_value.has_value());
  EXPECT_EQ(*run.probe_value, Value::Int(7));
}

TEST(CriteriaTest, P1) {
  SuiteRun suite = RunSuite(LoadCorpusProgram("p1_add_abs"));
  std::vector<SlicingCriterion> criteria = GenerateCriteria(suite);
  ASSERT_EQ(criteria.size(), 1u);
  EXPECT_EQ(criteria[0].test, "t1");
  EXPECT_EQ(criteria[0].event, 7);
  EXPECT_THAT(criteria[0].locations, ElementsAre(Location::Local(0, "r")));
}

TEST(CriteriaTest, AllDisabled) {
  Program p = WithEnabledAssertions(LoadCorpusProgram("p1_add_abs"), {});
  EXPECT_THAT(GenerateCriteria(RunSuite(p)), IsEmpty());
}

TEST(CriteriaTest, OnePerInstance) {
  Program p = MustParse("global g;\nfn f() { g = g + 1; return g; }\n"
                        "test t { i = 0; while (i < 3) { x = f(); assert x > 0; i = i + 1; } }");
  EXPECT_EQ(GenerateCriteria(RunSuite(p)).size(), 3u);
}

// Trace invariants over the corpus and random programs: parents point
// backwards, outcomes sit on predicates, every use resolves.
TEST(TracePropertyTest, TracesValidate) {
  std::vector<Program> programs;
  for (const auto& stem : CorpusStems()) programs.push_back(LoadCorpusProgram(stem));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    programs.push_back(MustParse(testing::RandomProgramSource(seed)));
  }
  for (const auto& p : programs) {
    for (const auto& [name, run] : RunSuite(p)) {
      EXPECT_THAT(ValidateTrace(run.trace), IsEmpty()) << name;
      EXPECT_EQ(run.trace.size(), static_cast<std::size_t>(run.outcome.steps));
    }
  }
}

TEST(TracePropertyTest, Deterministic) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Program p = MustParse(testing::RandomProgramSource(seed));
    SuiteRun a = RunSuite(p);
    SuiteRun b = RunSuite(p);
    ASSERT_EQ(a.size(), b.size());
    for (const auto& [name, run] : a) {
      const Trace& other = b.at(name).trace;
      ASSERT_EQ(run.trace.size(), other.size());
      for (std::size_t i = 0; i < other.size(); ++i) {
        EXPECT_EQ(run.trace.events[i].defs, other.events[i].defs);
        EXPECT_EQ(run.trace.events[i].uses, other.events[i].uses);
      }
    }
  }
}

TEST(TracePropertyTest, TracedStatementsArePutStatements) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    Structures s(p);
    std::set<StatementId> traced_put;
    for (const auto& [name, run] : RunSuite(p)) {
      for (const auto& e : run.trace.events) {
        if (!e.IsAssertion() && s.IsPut(e.stmt)) traced_put.insert(e.stmt);
      }
    }
    for (StatementId id : traced_put) {
      EXPECT_TRUE(std::count(s.statements().begin(), s.statements().end(), id)) << stem;
    }
  }
}

std::vector<TraceEvent> PutEvents(const Trace& trace, const Structures& s) {
  std::vector<TraceEvent> out;
  for (const auto& e : trace.events) {
    if (!e.IsAssertion() && s.IsPut(e.stmt)) out.push_back(e);
  }
  return out;
}

TEST(TracePropertyTest, AblationLeavesPutEventsUnchanged) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    Structures s(p);
    SuiteRun base = RunSuite(p);
    for (const auto& v : GenerateVariants(p, {0.0, 0.5}, {1, 2})) {
      SuiteRun run = RunSuite(v.program);
      for (const auto& [name, r] : base) {
        auto expected = PutEvents(r.trace, s);
        auto actual = PutEvents(run.at(name).trace, s);
        ASSERT_EQ(expected.size(), actual.size()) << stem << " " << name;
        for (std::size_t i = 0; i < expected.size(); ++i) {
          EXPECT_EQ(expected[i].stmt, actual[i].stmt);
          EXPECT_EQ(expected[i].outcome, actual[i].outcome);
        }
      }
    }
  }
}

}  // namespace
}  // namespace hccov
