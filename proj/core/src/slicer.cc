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

#include "hccov/slicer.h"

#include <algorithm>

#include "hccov/error.h"

namespace hccov {

Slice BackwardSlice(const DynamicDependenceGraph& ddg,
                    const SlicingCriterion& criterion,
                    const Structures& structures) {
  if (!ddg.Contains(criterion.event)) {
    throw Error("unknown criterion event " + std::to_string(criterion.event) +
                " in test " + criterion.test);
  }
  Slice slice;
  slice.criterion = criterion;

  std::vector<char> visited(ddg.size(), 0);
  std::vector<std::int64_t> worklist;
  auto push = [&](std::int64_t idx) {
    if (!visited[static_cast<std::size_t>(idx)]) {
      visited[static_cast<std::size_t>(idx)] = 1;
      worklist.push_back(idx);
    }
  };

  // The criterion event follows only the data edges of the criterion
  // locations; every other event follows all of its edges.
  const auto& root = ddg.node(criterion.event);
  visited[static_cast<std::size_t>(criterion.event)] = 1;
  for (const DataEdge& edge : root.data) {
    if (std::find(criterion.locations.begin(), criterion.locations.end(),
                  edge.location) != criterion.locations.end()) {
      push(edge.to);
    }
  }
  if (root.ctrl) push(*root.ctrl);
  if (root.call) push(*root.call);

  while (!worklist.empty()) {
    std::int64_t idx = worklist.back();
    worklist.pop_back();
    const auto& node = ddg.node(idx);
    for (const DataEdge& edge : node.data) push(edge.to);
    if (node.ctrl) push(*node.ctrl);
    if (node.call) push(*node.call);
  }

  for (std::size_t i = 0; i < visited.size(); ++i) {
    if (!visited[i]) continue;
    auto idx = static_cast<std::int64_t>(i);
    slice.events.insert(idx);
    const auto& node = ddg.node(idx);
    if (node.kind == EventKind::kAssertion || !structures.IsPut(node.stmt)) {
      continue;
    }
    slice.statements.insert(node.stmt);
    if (node.kind == EventKind::kPredicate) {
      slice.arms.insert({node.stmt, *node.outcome});
    }
  }
  return slice;
}

CheckedSet UnionSlices(const std::vector<Slice>& slices) {
  CheckedSet out;
  for (const Slice& s : slices) {
    out.statements.insert(s.statements.begin(), s.statements.end());
    out.arms.insert(s.arms.begin(), s.arms.end());
  }
  return out;
}

}  // namespace hccov
