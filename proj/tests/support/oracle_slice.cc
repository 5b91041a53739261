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

#include "oracle_slice.h"

#include <algorithm>
#include <vector>

namespace hccov::testing {
namespace {

const TraceEvent* LatestDefinition(const Trace& trace, std::int64_t before,
                                   const Location& loc) {
  for (std::int64_t i = before - 1; i >= 0; --i) {
    const TraceEvent& e = trace.events[static_cast<std::size_t>(i)];
    if (std::find(e.defs.begin(), e.defs.end(), loc) != e.defs.end()) return &e;
  }
  return nullptr;
}

}  // namespace

Slice OracleSlice(const Trace& trace, const SlicingCriterion& criterion,
                  const Structures& structures) {
  Slice slice;
  slice.criterion = criterion;
  std::vector<std::int64_t> work;
  auto add = [&](std::int64_t idx) {
    if (slice.events.insert(idx).second) work.push_back(idx);
  };
  auto parents = [&](const TraceEvent& e) {
    if (e.ctrl_parent) add(*e.ctrl_parent);
    if (e.call_parent) add(*e.call_parent);
  };

  const TraceEvent& start = trace.events.at(static_cast<std::size_t>(criterion.event));
  slice.events.insert(start.idx);
  for (const Location& loc : criterion.locations) {
    if (const TraceEvent* d = LatestDefinition(trace, start.idx, loc)) add(d->idx);
  }
  parents(start);

  while (!work.empty()) {
    std::int64_t idx = work.back();
    work.pop_back();
    const TraceEvent& e = trace.events[static_cast<std::size_t>(idx)];
    for (const Location& loc : e.uses) {
      if (const TraceEvent* d = LatestDefinition(trace, idx, loc)) add(d->idx);
    }
    parents(e);
  }

  for (std::int64_t idx : slice.events) {
    const TraceEvent& e = trace.events[static_cast<std::size_t>(idx)];
    if (e.IsAssertion() || !structures.IsPut(e.stmt)) continue;
    slice.statements.insert(e.stmt);
    if (e.outcome) slice.arms.insert(BranchArm{e.stmt, *e.outcome});
  }
  return slice;
}

}  // namespace hccov::testing
