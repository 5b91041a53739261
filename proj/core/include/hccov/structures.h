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

#ifndef HCCOV_STRUCTURES_H_
#define HCCOV_STRUCTURES_H_

#include <compare>
#include <string>
#include <vector>

#include "hccov/ast.h"

namespace hccov {

// One of the two outcomes of an if/while predicate. For a while loop `true`
// is the enter arm and `false` the exit arm.
struct BranchArm {
  StatementId predicate;
  bool outcome = true;

  auto operator<=>(const BranchArm&) const = default;
};

std::string ToString(const BranchArm& arm);  // "s2:T" / "s2:F"

// Coverage denominators: the statements and branch arms of the program under
// test, i.e. of every non-test function.
class Structures {
 public:
  Structures() = default;
  explicit Structures(const Program& program);

  const std::vector<StatementId>& statements() const { return statements_; }
  const std::vector<BranchArm>& arms() const { return arms_; }

  bool IsPut(StatementId id) const;
  bool IsWhile(StatementId id) const;
  // While-exit arms govern no statements and so can never be checked.
  bool IsStructurallyUncheckable(const BranchArm& arm) const;

 private:
  std::vector<StatementId> statements_;
  std::vector<BranchArm> arms_;
  std::vector<char> put_;    // indexed by StatementId value
  std::vector<char> while_;  // indexed by StatementId value
};

// Statement and arm lists of the program under test, ordered by id.
Structures EnumerateStructures(const Program& program);

}  // namespace hccov

#endif  // HCCOV_STRUCTURES_H_
