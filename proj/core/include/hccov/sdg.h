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

#ifndef HCCOV_SDG_H_
#define HCCOV_SDG_H_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hccov/ast.h"
#include "hccov/interpreter.h"

namespace hccov {

// A statement, or one call inside it. Call nodes stand for the argument
// evaluation and parameter binding of that call; the statement node for the
// rest of the statement. `call` numbers the calls of the statement's own
// expressions in preorder.
struct SdgNode {
  StatementId stmt;
  int call = -1;

  bool IsCall() const { return call >= 0; }
  auto operator<=>(const SdgNode&) const = default;
};

// Flow-insensitive static dependences:
//  data    a read of a local depends on every assignment to it in the same
//          function; a parameter additionally on every call binding it; a
//          global (arrays as a whole) on every assignment anywhere; a call
//          result on every `return <expr>` of the callee;
//  control every node depends on its nearest enclosing if/while;
//  call    every node inside a function depends on every call of it.
class StaticDependenceGraph {
 public:
  explicit StaticDependenceGraph(const Program& program);

  const std::set<SdgNode>& Dependencies(const SdgNode& node) const;
  std::vector<SdgNode> Nodes() const;
  std::size_t EdgeCount() const;

  // Nodes that assign scalar global or array `name`.
  std::vector<SdgNode> GlobalDefinitions(const std::string& name) const;

  std::set<SdgNode> BackwardClosure(const std::vector<SdgNode>& seeds) const;
  // Statement projection of BackwardClosure.
  std::set<StatementId> ClosureStatements(const std::vector<SdgNode>& seeds) const;

  // Dependences projected to statement pairs (dependent, dependee).
  std::set<std::pair<StatementId, StatementId>> StatementEdges() const;

 private:
  std::map<SdgNode, std::set<SdgNode>> deps_;
  std::map<std::string, std::vector<SdgNode>> global_defs_;
};

inline StaticDependenceGraph BuildSdg(const Program& program) {
  return StaticDependenceGraph(program);
}

// Statement-level dependences observed in a run: (dependent, dependee) for
// every data, control and call edge between two non-assertion events.
std::set<std::pair<StatementId, StatementId>> DynamicStatementEdges(
    const SuiteRun& suite);

}  // namespace hccov

#endif  // HCCOV_SDG_H_
