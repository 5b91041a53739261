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

#ifndef HCCOV_DDG_H_
#define HCCOV_DDG_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hccov/trace.h"

namespace hccov {

struct DataEdge {
  std::int64_t from = 0;  // using event
  std::int64_t to = 0;    // latest earlier event defining `location`
  Location location;
};

// Dynamic dependence graph over the events of one trace. Every edge points
// from a later event to an earlier one.
class DynamicDependenceGraph {
 public:
  struct Node {
    EventKind kind = EventKind::kStatement;
    StatementId stmt;
    std::optional<bool> outcome;
    std::vector<DataEdge> data;  // one per used location with a definition
    std::optional<std::int64_t> ctrl;
    std::optional<std::int64_t> call;
  };

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::int64_t idx) const {
    return nodes_[static_cast<std::size_t>(idx)];
  }
  bool Contains(std::int64_t idx) const {
    return idx >= 0 && static_cast<std::size_t>(idx) < nodes_.size();
  }
  std::size_t DataEdgeCount() const;
  std::size_t CtrlEdgeCount() const;
  std::size_t CallEdgeCount() const;

 private:
  friend DynamicDependenceGraph BuildDdg(const Trace& trace);
  std::vector<Node> nodes_;
};

// Linear pass with a last-definition table. Uses of globals and array
// elements with no earlier definition read initializers and get no edge; any
// other undefined use throws hccov::Error (dangling use, a tracer bug).
DynamicDependenceGraph BuildDdg(const Trace& trace);

}  // namespace hccov

#endif  // HCCOV_DDG_H_
