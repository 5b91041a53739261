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

#ifndef HCCOV_SUITEGEN_H_
#define HCCOV_SUITEGEN_H_

#include <cstdint>
#include <set>
#include <vector>

#include "hccov/ast.h"

namespace hccov {

struct SuiteVariant {
  double keep_rate = 1.0;
  std::uint64_t seed = 0;
  std::set<AssertionId> disabled;
  Program program;  // `disabled` switched off, everything else unchanged

  int enabled_count() const { return program.EnabledAssertionCount(); }
};

inline const std::vector<double> kDefaultKeepRates = {0.0, 0.25, 0.5, 0.75, 1.0};
inline const std::vector<std::uint64_t> kDefaultSeeds = {1, 2, 3, 4};

// round(rate * n), half up.
int KeptAssertionCount(double keep_rate, int total);

// Assertion ids in the order a seed keeps them: ascending ids shuffled with
// SeededShuffle(seed). A variant with rate r keeps the first
// KeptAssertionCount(r, n) of this order, so variants of one seed are nested.
std::vector<AssertionId> KeepOrder(const Program& program, std::uint64_t seed);

SuiteVariant MakeVariant(const Program& program, double keep_rate,
                         std::uint64_t seed);

// One variant per (rate, seed), rates outermost. Throws hccov::Error on empty
// rate or seed lists, rates outside [0, 1], or a program without assertions.
std::vector<SuiteVariant> GenerateVariants(const Program& program,
                                           const std::vector<double>& keep_rates,
                                           const std::vector<std::uint64_t>& seeds);

// Returns a copy with exactly the assertions in `enabled` switched on.
Program WithEnabledAssertions(const Program& program,
                              const std::set<AssertionId>& enabled);

}  // namespace hccov

#endif  // HCCOV_SUITEGEN_H_
