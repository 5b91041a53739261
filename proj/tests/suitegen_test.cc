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

#include <algorithm>
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "hccov/analysis.h"
#include "hccov/error.h"
#include "hccov/random.h"
#include "hccov/suitegen.h"
#include "test_util.h"

namespace hccov {
namespace {

using ::hccov::testing::CorpusStems;
using ::hccov::testing::LoadCorpusProgram;
using ::hccov::testing::MustParse;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

AssertionId A(int v) { return AssertionId{v}; }

const char* kFourAssertions =
    "test t {\n  x = 1;\n  assert x == 1;\n  assert x > 0;\n  assert x < 2;\n"
    "  assert x != 3;\n}\n";

TEST(SplitMix64Test, ReferenceValues) {
  SplitMix64 zero(0);
  EXPECT_EQ(zero.Next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(zero.Next(), 0x6E789E6AA1B965F4ULL);
  SplitMix64 seven(7);
  EXPECT_EQ(seven.Next(), 7191089600892374487ULL);
}

TEST(SeededShuffleTest, FrozenOrders) {
  std::vector<int> v = {1, 2, 3, 4};
  SeededShuffle(v, 7);
  EXPECT_THAT(v, ElementsAre(2, 3, 1, 4));
  std::vector<int> w = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  SeededShuffle(w, 42);
  EXPECT_THAT(w, ElementsAre(1, 10, 6, 9, 7, 5, 8, 3, 2, 4));
}

TEST(SuitegenTest, KeptCountRoundsHalfUp) {
  EXPECT_EQ(KeptAssertionCount(0.5, 4), 2);
  EXPECT_EQ(KeptAssertionCount(0.5, 1), 1);
  EXPECT_EQ(KeptAssertionCount(0.25, 1), 0);
  EXPECT_EQ(KeptAssertionCount(0.25, 6), 2);  // 1.5 -> 2
  EXPECT_EQ(KeptAssertionCount(0.75, 6), 5);  // 4.5 -> 5
  EXPECT_EQ(KeptAssertionCount(1.0, 6), 6);
  EXPECT_EQ(KeptAssertionCount(0.0, 6), 0);
}

TEST(SuitegenTest, FourAssertionsHalfSeedSeven) {
  Program p = MustParse(kFourAssertions);
  SuiteVariant v = MakeVariant(p, 0.5, 7);
  EXPECT_EQ(v.enabled_count(), 2);
  EXPECT_THAT(v.disabled, ElementsAre(A(1), A(4)));
  EXPECT_THAT(KeepOrder(p, 7), ElementsAre(A(2), A(3), A(1), A(4)));
}

TEST(SuitegenTest, FullAndEmptyRates) {
  Program p = LoadCorpusProgram("p2_account");
  SuiteVariant full = MakeVariant(p, 1.0, 3);
  EXPECT_THAT(full.disabled, IsEmpty());
  EXPECT_EQ(full.program, p);
  EXPECT_EQ(Analyze(full.program).gap.stmt_gap, Analyze(p).gap.stmt_gap);
  SuiteVariant none = MakeVariant(p, 0.0, 3);
  EXPECT_EQ(none.enabled_count(), 0);
  EXPECT_EQ(Analyze(none.program).gap.scc, 0);
}

TEST(SuitegenTest, Errors) {
  Program p = MustParse(kFourAssertions);
  EXPECT_THROW(GenerateVariants(p, {}, {1}), Error);
  EXPECT_THROW(GenerateVariants(p, {0.5}, {}), Error);
  EXPECT_THROW(GenerateVariants(p, {1.5}, {1}), Error);
  EXPECT_THROW(GenerateVariants(MustParse("test t { x = 1; }"), {0.5}, {1}), Error);
}

TEST(SuitegenTest, GridOrder) {
  Program p = MustParse(kFourAssertions);
  auto variants = GenerateVariants(p, {0.0, 1.0}, {5, 6});
  ASSERT_EQ(variants.size(), 4u);
  EXPECT_EQ(variants[0].keep_rate, 0.0);
  EXPECT_EQ(variants[0].seed, 5u);
  EXPECT_EQ(variants[1].seed, 6u);
  EXPECT_EQ(variants[2].keep_rate, 1.0);
  EXPECT_EQ(GenerateVariants(p, kDefaultKeepRates, kDefaultSeeds).size(), 20u);
}

TEST(SuitegenTest, Deterministic) {
  Program p = LoadCorpusProgram("p5_stats");
  auto a = GenerateVariants(p, kDefaultKeepRates, kDefaultSeeds);
  auto b = GenerateVariants(p, kDefaultKeepRates, kDefaultSeeds);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].disabled, b[i].disabled);
}

TEST(SuitegenPropertyTest, NestedBySeed) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    for (std::uint64_t seed : kDefaultSeeds) {
      std::set<AssertionId> previous_enabled;
      for (double rate : kDefaultKeepRates) {
        SuiteVariant v = MakeVariant(p, rate, seed);
        std::set<AssertionId> enabled;
        for (AssertionId id : p.AssertionIds()) {
          if (!v.disabled.count(id)) enabled.insert(id);
        }
        EXPECT_EQ(static_cast<int>(enabled.size()),
                  KeptAssertionCount(rate, p.AssertionCount()));
        EXPECT_TRUE(std::includes(enabled.begin(), enabled.end(),
                                  previous_enabled.begin(), previous_enabled.end()));
        previous_enabled = enabled;
      }
    }
  }
}

TEST(SuitegenPropertyTest, GapNonIncreasingInKeepRate) {
  for (const auto& stem : CorpusStems()) {
    Program p = LoadCorpusProgram(stem);
    for (std::uint64_t seed : kDefaultSeeds) {
      std::int64_t previous = 10001;
      for (double rate : kDefaultKeepRates) {
        std::int64_t gap = Analyze(MakeVariant(p, rate, seed).program).gap.stmt_gap;
        EXPECT_LE(gap, previous) << stem << " seed " << seed << " rate " << rate;
        previous = gap;
      }
    }
  }
}

}  // namespace
}  // namespace hccov
