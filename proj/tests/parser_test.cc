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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "hccov/checker.h"
#include "hccov/parser.h"
#include "hccov/printer.h"
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
using ::testing::HasSubstr;
using ::testing::IsEmpty;

std::string FirstDiagnostic(const std::string& source) {
  ParseResult r = Parse(source);
  EXPECT_FALSE(r.ok()) << source;
  return r.diagnostics.empty() ? "" : r.diagnostics.front().ToString();
}

TEST(ParserTest, EmptyFile) {
  Program p = MustParse("");
  EXPECT_THAT(p.functions, IsEmpty());
  EXPECT_THAT(p.tests, IsEmpty());
}

TEST(ParserTest, P1Shape) {
  Program p = LoadCorpusProgram("p1_add_abs");
  ASSERT_EQ(p.functions.size(), 1u);
  EXPECT_EQ(p.tests.size(), 1u);
  EXPECT_EQ(p.AssertionCount(), 1);
  Structures s(p);
  EXPECT_EQ(s.statements().size(), 5u);
  EXPECT_THAT(s.arms(), ElementsAre(BranchArm{StatementId{2}, false},
                                    BranchArm{StatementId{2}, true}));
}

TEST(ParserTest, StatementIdsArePreorder) {
  Program p = LoadCorpusProgram("p1_add_abs");
  const auto& body = p.functions[0].body;
  EXPECT_EQ(body[0].id.value, 1);
  EXPECT_EQ(body[1].id.value, 2);
  EXPECT_EQ(body[1].body[0].id.value, 3);
  EXPECT_EQ(body[2].id.value, 4);
  EXPECT_EQ(body[3].id.value, 5);
  const auto& test = p.tests[0].body;
  EXPECT_EQ(test[0].id.value, 6);
  EXPECT_EQ(test[1].kind, StmtKind::kAssert);
  EXPECT_EQ(test[1].id.value, 0);
  EXPECT_EQ(test[1].assertion.value, 1);
}

TEST(ParserTest, SyntaxErrorReportsLine) {
  ParseResult r = Parse("fn f( {");
  ASSERT_FALSE(r.ok());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].kind, Diagnostic::Kind::kSyntax);
  EXPECT_EQ(r.diagnostics[0].loc.line, 1);
  EXPECT_THAT(r.diagnostics[0].ToString(), HasSubstr("1:"));
}

TEST(ParserTest, SyntaxErrorOnLaterLine) {
  ParseResult r = Parse("fn f() {\n  x = 1\n  return x;\n}\n");
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].loc.line, 3);
}

TEST(ParserTest, StaticErrors) {
  EXPECT_THAT(FirstDiagnostic("fn f() { return y; }"), HasSubstr("y"));
  EXPECT_THAT(FirstDiagnostic("fn f() { return 1; }\nfn f() { return 2; }"),
              HasSubstr("f"));
  EXPECT_THAT(FirstDiagnostic("fn f(a) { if (a) { b = 1; } return b; }"),
              HasSubstr("b"));
  EXPECT_THAT(FirstDiagnostic("fn f(a) { return a; }\ntest t { x = f(1, 2); }"),
              HasSubstr("f"));
  EXPECT_THAT(FirstDiagnostic("fn f() { return 1; }\ntest t { assert f() == 1; }"),
              HasSubstr("assert"));
  EXPECT_THAT(FirstDiagnostic("test t { return 1; }"), HasSubstr("return"));
  EXPECT_THAT(FirstDiagnostic("fn f() { assert true; return 1; }"),
              HasSubstr("assert"));
  EXPECT_THAT(FirstDiagnostic("global g = 1;\nfn f() { return g[0]; }"),
              HasSubstr("g"));
  EXPECT_THAT(FirstDiagnostic("global a[2];\nfn f() { return a + 1; }"),
              HasSubstr("a"));
}

TEST(ParserTest, StaticErrorsCarryLocation) {
  ParseResult r = Parse("fn f() {\n  return y;\n}\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].kind, Diagnostic::Kind::kStatic);
  EXPECT_EQ(r.diagnostics[0].loc.line, 2);
}

TEST(ParserTest, GlobalsAndArrays) {
  Program p = MustParse(
      "global g = -3;\nglobal h;\nglobal a[3] = {1, -2, 3};\nglobal z[2];\n");
  ASSERT_EQ(p.globals.size(), 4u);
  EXPECT_EQ(p.globals[0].init, std::vector<std::int64_t>{-3});
  EXPECT_EQ(p.globals[1].init, std::vector<std::int64_t>{0});
  EXPECT_TRUE(p.globals[2].is_array);
  EXPECT_EQ(p.globals[2].init, (std::vector<std::int64_t>{1, -2, 3}));
  EXPECT_EQ(p.globals[3].init, (std::vector<std::int64_t>{0, 0}));
}

TEST(ParserTest, Precedence) {
  Program p = MustParse("fn f(a, b, c) { return a + b * c < a || !(b == c) && a > 0; }");
  EXPECT_EQ(Print(p.functions[0].body[0].value),
            "a + b * c < a || !(b == c) && a > 0");
}

TEST(ParserTest, PrinterKeepsNeededParentheses) {
  Program p = MustParse("fn f(a, b, c) { return (a - b) - (c - a) * (b + c); }");
  EXPECT_EQ(Print(p.functions[0].body[0].value), "a - b - (c - a) * (b + c)");
}

TEST(ParserTest, ElseIfChains) {
  Program p = MustParse(
      "fn s(x) {\n if (x > 0) { return 1; } else if (x < 0) { return -1; } else { "
      "return 0; }\n}\n");
  const Statement& outer = p.functions[0].body[0];
  ASSERT_EQ(outer.else_body.size(), 1u);
  EXPECT_EQ(outer.else_body[0].kind, StmtKind::kIf);
  EXPECT_EQ(MustParse(Print(p)), p);
}

TEST(ParserTest, DisabledAssertions) {
  Program p = MustParse("test t {\n  disabled assert 1 == 2;\n  assert true;\n}\n");
  EXPECT_EQ(p.AssertionCount(), 2);
  EXPECT_EQ(p.EnabledAssertionCount(), 1);
  EXPECT_THAT(Print(p), HasSubstr("disabled assert 1 == 2;"));
}

TEST(ParserTest, CorpusRoundTrip) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    EXPECT_EQ(MustParse(Print(p)), p) << stem;
  }
}

TEST(ParserTest, RandomProgramsRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::string source = testing::RandomProgramSource(seed);
    Program p = MustParse(source);
    EXPECT_LE(testing::StatementCount(p), 40) << source;
    EXPECT_EQ(MustParse(Print(p)), p) << source;
  }
}

TEST(StructuresTest, NoConditionals) {
  Structures s(MustParse("fn f(a) { b = a + 1; return b; }"));
  EXPECT_EQ(s.statements().size(), 2u);
  EXPECT_THAT(s.arms(), IsEmpty());
}

TEST(StructuresTest, TestOnlyFile) {
  Structures s(MustParse("test t { x = 1; assert x == 1; }"));
  EXPECT_THAT(s.statements(), IsEmpty());
  EXPECT_THAT(s.arms(), IsEmpty());
}

TEST(StructuresTest, WhileExitArmIsUncheckable) {
  Program p = MustParse("fn f(n) { while (n > 0) { n = n - 1; } return n; }");
  Structures s(p);
  EXPECT_TRUE(s.IsWhile(StatementId{1}));
  EXPECT_TRUE(s.IsStructurallyUncheckable({StatementId{1}, false}));
  EXPECT_FALSE(s.IsStructurallyUncheckable({StatementId{1}, true}));
}

TEST(StructuresTest, AblationLeavesStructuresUnchanged) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    Structures base(p);
    for (const auto& v : GenerateVariants(p, kDefaultKeepRates, kDefaultSeeds)) {
      Structures s(v.program);
      EXPECT_EQ(s.statements(), base.statements()) << stem;
      EXPECT_EQ(s.arms(), base.arms()) << stem;
    }
  }
}

}  // namespace
}  // namespace hccov
