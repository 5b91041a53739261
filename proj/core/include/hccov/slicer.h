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

#ifndef HCCOV_SLICER_H_
#define HCCOV_SLICER_H_

#include <cstdint>
#include <set>
#include <vector>

#include "hccov/ddg.h"
#include "hccov/structures.h"
#include "hccov/trace.h"

namespace hccov {

struct Slice {
  SlicingCriterion criterion;
  std::set<std::int64_t> events;
  // Projection of `events` onto statements of the program under test.
  std::set<StatementId> statements;
  // (predicate, outcome) of every PUT predicate instance in `events`.
  std::set<BranchArm> arms;
};

// Backward dynamic slice: the criterion event, the definitions of its
// criterion locations, its control and call parents, and everything those
// transitively depend on through data, control and call edges. Throws
// hccov::Error when the criterion event is not in the graph.
Slice BackwardSlice(const DynamicDependenceGraph& ddg,
                    const SlicingCriterion& criterion,
                    const Structures& structures);

struct CheckedSet {
  std::set<StatementId> statements;
  std::set<BranchArm> arms;

  friend bool operator==(const CheckedSet&, const CheckedSet&) = default;
};

CheckedSet UnionSlices(const std::vector<Slice>& slices);

}  // namespace hccov

#endif  // HCCOV_SLICER_H_
