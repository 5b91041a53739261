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

#include "hccov/ddg.h"

#include <unordered_map>

#include "hccov/error.h"

namespace hccov {

DynamicDependenceGraph BuildDdg(const Trace& trace) {
  DynamicDependenceGraph g;
  g.nodes_.resize(trace.events.size());
  std::unordered_map<Location, std::int64_t, LocationHash> last_def;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];
    auto& node = g.nodes_[i];
    node.kind = e.kind;
    node.stmt = e.stmt;
    node.outcome = e.outcome;
    node.ctrl = e.ctrl_parent;
    node.call = e.call_parent;
    for (const Location& use : e.uses) {
      auto it = last_def.find(use);
      if (it != last_def.end()) {
        node.data.push_back({e.idx, it->second, use});
        continue;
      }
      if (use.kind == Location::Kind::kLocal ||
          use.kind == Location::Kind::kCallResult) {
        throw Error("dangling use of " + use.ToString() + " at event " +
                    std::to_string(e.idx) + " in test " + trace.test);
      }
    }
    for (const Location& def : e.defs) last_def[def] = e.idx;
  }
  return g;
}

std::size_t DynamicDependenceGraph::DataEdgeCount() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.data.size();
  return n;
}

std::size_t DynamicDependenceGraph::CtrlEdgeCount() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.ctrl ? 1 : 0;
  return n;
}

std::size_t DynamicDependenceGraph::CallEdgeCount() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.call ? 1 : 0;
  return n;
}

}  // namespace hccov
