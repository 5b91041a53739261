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

#include "hccov/structures.h"

#include <algorithm>

namespace hccov {

std::string ToString(const BranchArm& arm) {
  return ToString(arm.predicate) + (arm.outcome ? ":T" : ":F");
}

Structures::Structures(const Program& program) {
  const std::size_t n = static_cast<std::size_t>(program.MaxStatementId()) + 1;
  put_.assign(n, 0);
  while_.assign(n, 0);
  for (const auto& f : program.functions) {
    ForEachStatement(f.body, [&](const Statement& s) {
      if (s.kind == StmtKind::kAssert) return;
      statements_.push_back(s.id);
      put_[s.id.value] = 1;
      if (s.IsPredicate()) {
        arms_.push_back({s.id, true});
        arms_.push_back({s.id, false});
      }
      if (s.kind == StmtKind::kWhile) while_[s.id.value] = 1;
    });
  }
  std::sort(statements_.begin(), statements_.end());
  std::sort(arms_.begin(), arms_.end());
}

bool Structures::IsPut(StatementId id) const {
  return id.value > 0 && static_cast<std::size_t>(id.value) < put_.size() &&
         put_[id.value];
}

bool Structures::IsWhile(StatementId id) const {
  return id.value > 0 && static_cast<std::size_t>(id.value) < while_.size() &&
         while_[id.value];
}

bool Structures::IsStructurallyUncheckable(const BranchArm& arm) const {
  return !arm.outcome && IsWhile(arm.predicate);
}

Structures EnumerateStructures(const Program& program) {
  return Structures(program);
}

}  // namespace hccov
