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

#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "hccov/analysis.h"
#include "hccov/coverage.h"
#include "hccov/suitegen.h"
#include "test_util.h"

namespace hccov {
namespace {

using ::hccov::testing::CorpusStems;
using ::hccov::testing::LoadCorpusProgram;
using ::hccov::testing::MustParse;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(RatioTest, RoundsHalfUp) {
  EXPECT_EQ((Ratio{4, 5}.Hundredths()), 8000);
  EXPECT_EQ((Ratio{2, 3}.Hundredths()), 6667);
  EXPECT_EQ((Ratio{1, 3}.Hundredths()), 3333);
  EXPECT_EQ((Ratio{1, 8}.Hundredths()), 1250);
  EXPECT_EQ((Ratio{1, 16}.Hundredths()), 625);     // 6.25 exactly
  EXPECT_EQ((Ratio{1, 1600}.Hundredths()), 6);     // 0.0625 -> 0.06
  EXPECT_EQ((Ratio{1, 800}.Hundredths()), 13);     // 0.125 -> 0.13
  EXPECT_EQ((Ratio{0, 0}.Hundredths()), 10000);
}

TEST(RatioTest, Formatting) {
  EXPECT_EQ(FormatHundredths(8000), "80.00");
  EXPECT_EQ(FormatHundredths(5), "0.05");
  EXPECT_EQ(FormatHundredths(0), "0.00");
  EXPECT_EQ(FormatHundredths(-325), "-3.25");
  EXPECT_EQ(FormatHundredths(10000), "100.00");
}

TEST(CoverageTest, P1) {
  Analysis a = Analyze(LoadCorpusProgram("p1_add_abs"));
  EXPECT_EQ(a.report.CoveredStatements(), 5);
  EXPECT_EQ(a.report.CheckedStatements(), 4);
  EXPECT_EQ(a.gap.stmt_coverage, 10000);
  EXPECT_EQ(a.gap.scc, 8000);
  EXPECT_EQ(a.gap.stmt_gap, 2000);
  EXPECT_EQ(a.gap.branch_coverage, 5000);
  EXPECT_EQ(a.gap.obcc, 5000);
  EXPECT_EQ(a.gap.branch_gap, 0);
  EXPECT_THAT(GapStatements(a.report), ElementsAre(StatementId{4}));
}

TEST(CoverageTest, NoTests) {
  Analysis a = Analyze(MustParse("fn f(x) { return x; }"));
  EXPECT_EQ(a.gap.stmt_coverage, 0);
  EXPECT_EQ(a.gap.scc, 0);
  EXPECT_EQ(a.gap.stmt_gap, 0);
}

TEST(CoverageTest, EmptyDenominators) {
  Analysis a = Analyze(MustParse("test t { assert true; }"));
  EXPECT_EQ(a.gap.stmt_coverage, 10000);
  EXPECT_EQ(a.gap.scc, 10000);
  EXPECT_EQ(a.gap.stmt_gap, 0);
  EXPECT_EQ(a.gap.branch_gap, 0);
}

TEST(CoverageTest, BothArmsAcrossTests) {
  Program p = MustParse("fn f(x) { if (x > 0) { return 1; } else { return 0; } }\n"
                        "test a { y = f(1); assert y == 1; }\n"
                        "test b { y = f(0); assert y == 0; }");
  Analysis a = Analyze(p);
  EXPECT_EQ(a.report.CoveredArms(), 2);
  EXPECT_EQ(a.gap.branch_coverage, 10000);
  EXPECT_EQ(a.gap.obcc, 10000);
}

// A false outcome that governs no statement is covered but never checked.
TEST(CoverageTest, FalseArmWithoutElse) {
  Program p = MustParse("fn f(x) { if (x > 0) { return 1; } return 0; }\n"
                        "test a { y = f(1); assert y == 1; }\n"
                        "test b { y = f(0); assert y == 0; }");
  Analysis a = Analyze(p);
  EXPECT_EQ(a.gap.branch_coverage, 10000);
  EXPECT_EQ(a.gap.obcc, 5000);
}

TEST(CoverageTest, EmptyUnionChecksNothing) {
  CoverageReport regular = Analyze(LoadCorpusProgram("p1_add_abs")).report;
  CoverageReport checked = CheckedCoverage(regular, {});
  EXPECT_EQ(checked.Scc().Hundredths(), 0);
  EXPECT_EQ(checked.Obcc().Hundredths(), 0);
}

TEST(CoverageTest, NoAssertionsMeansGapEqualsCoverage) {
  Analysis a = Analyze(WithEnabledAssertions(LoadCorpusProgram("p3_gcd"), {}));
  EXPECT_EQ(a.gap.scc, 0);
  EXPECT_EQ(a.gap.stmt_gap, a.gap.stmt_coverage);
}

TEST(CoverageTest, UnexecutedStatementIsNotAGap) {
  Program p = MustParse("fn f(x) { if (x > 0) { x = 2; } return x; }\n"
                        "test t { y = f(0); }");
  Analysis a = Analyze(p);
  EXPECT_THAT(GapStatements(a.report), ElementsAre(StatementId{1}, StatementId{3}));
}

TEST(CoverageTest, WhileExitArmFlagged) {
  Program p = MustParse("fn f(n) { while (n > 0) { n = n - 1; } return n; }\n"
                        "test t { y = f(2); assert y == 0; }");
  Analysis a = Analyze(p);
  ASSERT_EQ(a.report.arms.size(), 2u);
  EXPECT_TRUE(a.report.arms[0].structurally_uncheckable);  // s1:F
  EXPECT_TRUE(a.report.arms[0].covered);
  EXPECT_FALSE(a.report.arms[0].checked);
  EXPECT_TRUE(a.report.arms[1].checked);
  EXPECT_EQ(a.report.UncheckableArms(), 1);
}

// Sanity invariants on every corpus program and every default variant.
TEST(CoveragePropertyTest, MetricSanity) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    for (const auto& v : GenerateVariants(p, kDefaultKeepRates, kDefaultSeeds)) {
      Analysis a = Analyze(v.program);
      for (const auto& s : a.report.statements) EXPECT_TRUE(!s.checked || s.covered);
      for (const auto& arm : a.report.arms) {
        EXPECT_TRUE(!arm.checked || arm.covered);
        EXPECT_TRUE(!arm.structurally_uncheckable || !arm.checked);
      }
      EXPECT_LE(a.gap.scc, a.gap.stmt_coverage);
      EXPECT_LE(a.gap.obcc, a.gap.branch_coverage);
      for (auto gap : {a.gap.stmt_gap, a.gap.branch_gap}) {
        EXPECT_GE(gap, 0);
        EXPECT_LE(gap, 10000);
      }
      EXPECT_EQ(a.gap.stmt_gap, a.gap.stmt_coverage - a.gap.scc);
      EXPECT_EQ(a.gap.branch_gap, a.gap.branch_coverage - a.gap.obcc);
    }
  }
}

TEST(CoveragePropertyTest, UncheckableArmsAreWhileExits) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    Analysis a = Analyze(p);
    for (const auto& arm : a.report.arms) {
      EXPECT_EQ(arm.structurally_uncheckable,
                a.structures.IsWhile(arm.arm.predicate) && !arm.arm.outcome);
    }
  }
}

TEST(CoveragePropertyTest, CheckedGrowsWithAssertions) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    for (std::uint64_t seed : kDefaultSeeds) {
      Analysis prev = Analyze(MakeVariant(p, 0.0, seed).program);
      for (double rate : {0.25, 0.5, 0.75, 1.0}) {
        Analysis next = Analyze(MakeVariant(p, rate, seed).program);
        EXPECT_LE(prev.report.Scc().count, next.report.Scc().count) << stem;
        EXPECT_LE(prev.report.Obcc().count, next.report.Obcc().count) << stem;
        EXPECT_EQ(prev.gap.stmt_coverage, next.gap.stmt_coverage);
        EXPECT_EQ(prev.gap.branch_coverage, next.gap.branch_coverage);
        prev = std::move(next);
      }
    }
  }
}

}  // namespace
}  // namespace hccov
