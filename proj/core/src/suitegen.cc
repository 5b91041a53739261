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

#include "hccov/suitegen.h"

#include <cmath>

#include "hccov/error.h"
#include "hccov/random.h"

namespace hccov {

int KeptAssertionCount(double keep_rate, int total) {
  return static_cast<int>(std::floor(keep_rate * total + 0.5));
}

std::vector<AssertionId> KeepOrder(const Program& program, std::uint64_t seed) {
  std::vector<AssertionId> ids = program.AssertionIds();
  SeededShuffle(ids, seed);
  return ids;
}

Program WithEnabledAssertions(const Program& program,
                              const std::set<AssertionId>& enabled) {
  Program copy = program;
  for (auto& t : copy.tests) {
    ForEachStatement(t.body, [&](Statement& s) {
      if (s.kind == StmtKind::kAssert) s.enabled = enabled.count(s.assertion) > 0;
    });
  }
  return copy;
}

SuiteVariant MakeVariant(const Program& program, double keep_rate,
                         std::uint64_t seed) {
  if (!(keep_rate >= 0.0 && keep_rate <= 1.0)) {
    throw Error("keep rate must be in [0, 1]");
  }
  std::vector<AssertionId> order = KeepOrder(program, seed);
  int k = KeptAssertionCount(keep_rate, static_cast<int>(order.size()));
  SuiteVariant v;
  v.keep_rate = keep_rate;
  v.seed = seed;
  std::set<AssertionId> enabled(order.begin(), order.begin() + k);
  v.disabled.insert(order.begin() + k, order.end());
  v.program = WithEnabledAssertions(program, enabled);
  return v;
}

std::vector<SuiteVariant> GenerateVariants(
    const Program& program, const std::vector<double>& keep_rates,
    const std::vector<std::uint64_t>& seeds) {
  if (keep_rates.empty()) throw Error("no keep rates given");
  if (seeds.empty()) throw Error("no seeds given");
  if (program.AssertionCount() == 0) {
    throw Error("program has no assertions to ablate");
  }
  std::vector<SuiteVariant> out;
  for (double rate : keep_rates) {
    for (std::uint64_t seed : seeds) out.push_back(MakeVariant(program, rate, seed));
  }
  return out;
}

}  // namespace hccov
