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

#include "hccov/sdg.h"

#include <deque>

#include "hccov/ddg.h"

namespace hccov {
namespace {

struct Builder {
  explicit Builder(const Program& p) : program(p) {
    for (const auto& g : p.globals) globals.insert(g.name);
  }

  struct Owner {
    std::string name;
    bool is_test = false;
    std::set<std::string> params;
  };

  struct StatementInfo {
    const Statement* stmt;
    const Owner* owner;
    std::optional<StatementId> enclosing;
    int call_count = 0;
  };

  void Collect() {
    owners.reserve(program.functions.size() + program.tests.size());
    for (const auto& f : program.functions) {
      owners.push_back({f.name, false, {f.params.begin(), f.params.end()}});
      Walk(f.body, &owners.back(), std::nullopt);
    }
    for (const auto& t : program.tests) {
      owners.push_back({t.name, true, {}});
      Walk(t.body, &owners.back(), std::nullopt);
    }
  }

  void Walk(const std::vector<Statement>& block, const Owner* owner,
            std::optional<StatementId> enclosing) {
    for (const Statement& s : block) {
      if (s.kind == StmtKind::kAssert) continue;
      StatementInfo info{&s, owner, enclosing, 0};
      for (const Expr* root : OwnExpressions(s)) {
        ForEachExpr(*root, [&](const Expr& e) {
          if (e.kind != ExprKind::kCall) return;
          call_sites[e.name].push_back({s.id, info.call_count++});
        });
      }
      infos.push_back(info);
      if (s.kind == StmtKind::kAssign) {
        if (IsLocal(*owner, s.target)) {
          local_defs[{owner->name, s.target}].push_back({s.id, -1});
        } else {
          global_defs[s.target].push_back({s.id, -1});
        }
      } else if (s.kind == StmtKind::kArrayAssign) {
        global_defs[s.target].push_back({s.id, -1});
      } else if (s.kind == StmtKind::kReturn && s.has_value) {
        returns[owner->name].push_back({s.id, -1});
      }
      std::optional<StatementId> inner =
          s.IsPredicate() ? std::optional<StatementId>(s.id) : enclosing;
      Walk(s.body, owner, inner);
      Walk(s.else_body, owner, inner);
    }
  }

  bool IsLocal(const Owner& owner, const std::string& name) const {
    return owner.params.count(name) || !globals.count(name);
  }

  void AddUse(const SdgNode& node, const Owner& owner, const std::string& name,
              std::map<SdgNode, std::set<SdgNode>>& deps) {
    auto& d = deps[node];
    if (IsLocal(owner, name)) {
      auto it = local_defs.find({owner.name, name});
      if (it != local_defs.end()) d.insert(it->second.begin(), it->second.end());
      if (owner.params.count(name)) {
        auto cs = call_sites.find(owner.name);
        if (cs != call_sites.end()) d.insert(cs->second.begin(), cs->second.end());
      }
      return;
    }
    auto it = global_defs.find(name);
    if (it != global_defs.end()) d.insert(it->second.begin(), it->second.end());
  }

  // Attributes reads in `e` to `node`; reads inside call arguments belong to
  // that call's binding node.
  void Uses(const Expr& e, const SdgNode& node, const Owner& owner,
            int& call_counter, std::map<SdgNode, std::set<SdgNode>>& deps) {
    switch (e.kind) {
      case ExprKind::kVarRead:
        AddUse(node, owner, e.name, deps);
        return;
      case ExprKind::kArrayRead:
        AddUse(node, owner, e.name, deps);
        break;
      case ExprKind::kCall: {
        SdgNode binding{node.stmt, call_counter++};
        deps[binding];
        for (const Expr& arg : e.operands) {
          Uses(arg, binding, owner, call_counter, deps);
        }
        auto it = returns.find(e.name);
        if (it != returns.end()) {
          deps[node].insert(it->second.begin(), it->second.end());
        }
        return;
      }
      default:
        break;
    }
    for (const Expr& child : e.operands) {
      Uses(child, node, owner, call_counter, deps);
    }
  }

  void Build(std::map<SdgNode, std::set<SdgNode>>& deps) {
    for (const StatementInfo& info : infos) {
      const Statement& s = *info.stmt;
      SdgNode proper{s.id, -1};
      deps[proper];
      int call_counter = 0;
      for (const Expr* root : OwnExpressions(s)) {
        Uses(*root, proper, *info.owner, call_counter, deps);
      }
      std::vector<SdgNode> nodes{proper};
      for (int i = 0; i < info.call_count; ++i) nodes.push_back({s.id, i});
      for (const SdgNode& n : nodes) {
        if (info.enclosing) deps[n].insert({*info.enclosing, -1});
        if (!info.owner->is_test) {
          auto cs = call_sites.find(info.owner->name);
          if (cs != call_sites.end()) {
            deps[n].insert(cs->second.begin(), cs->second.end());
          }
        }
      }
    }
  }

  const Program& program;
  std::set<std::string> globals;
  std::vector<Owner> owners;
  std::vector<StatementInfo> infos;
  std::map<std::pair<std::string, std::string>, std::vector<SdgNode>> local_defs;
  std::map<std::string, std::vector<SdgNode>> global_defs;
  std::map<std::string, std::vector<SdgNode>> returns;
  std::map<std::string, std::vector<SdgNode>> call_sites;
};

}  // namespace

StaticDependenceGraph::StaticDependenceGraph(const Program& program) {
  Builder b(program);
  b.Collect();
  b.Build(deps_);
  global_defs_ = b.global_defs;
}

const std::set<SdgNode>& StaticDependenceGraph::Dependencies(
    const SdgNode& node) const {
  static const std::set<SdgNode> kEmpty;
  auto it = deps_.find(node);
  return it == deps_.end() ? kEmpty : it->second;
}

std::vector<SdgNode> StaticDependenceGraph::Nodes() const {
  std::vector<SdgNode> out;
  for (const auto& [node, d] : deps_) out.push_back(node);
  return out;
}

std::size_t StaticDependenceGraph::EdgeCount() const {
  std::size_t n = 0;
  for (const auto& [node, d] : deps_) n += d.size();
  return n;
}

std::vector<SdgNode> StaticDependenceGraph::GlobalDefinitions(
    const std::string& name) const {
  auto it = global_defs_.find(name);
  return it == global_defs_.end() ? std::vector<SdgNode>{} : it->second;
}

std::set<SdgNode> StaticDependenceGraph::BackwardClosure(
    const std::vector<SdgNode>& seeds) const {
  std::set<SdgNode> seen(seeds.begin(), seeds.end());
  std::deque<SdgNode> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    SdgNode n = work.front();
    work.pop_front();
    for (const SdgNode& d : Dependencies(n)) {
      if (seen.insert(d).second) work.push_back(d);
    }
  }
  return seen;
}

std::set<StatementId> StaticDependenceGraph::ClosureStatements(
    const std::vector<SdgNode>& seeds) const {
  std::set<StatementId> out;
  for (const SdgNode& n : BackwardClosure(seeds)) out.insert(n.stmt);
  return out;
}

std::set<std::pair<StatementId, StatementId>>
StaticDependenceGraph::StatementEdges() const {
  std::set<std::pair<StatementId, StatementId>> out;
  for (const auto& [node, d] : deps_) {
    for (const SdgNode& target : d) out.insert({node.stmt, target.stmt});
  }
  return out;
}

std::set<std::pair<StatementId, StatementId>> DynamicStatementEdges(
    const SuiteRun& suite) {
  std::set<std::pair<StatementId, StatementId>> out;
  for (const auto& [name, run] : suite) {
    DynamicDependenceGraph ddg = BuildDdg(run.trace);
    for (std::size_t i = 0; i < ddg.size(); ++i) {
      const auto& node = ddg.node(static_cast<std::int64_t>(i));
      if (node.kind == EventKind::kAssertion) continue;
      auto add = [&](std::int64_t target) {
        const auto& t = ddg.node(target);
        if (t.kind != EventKind::kAssertion) out.insert({node.stmt, t.stmt});
      };
      for (const DataEdge& e : node.data) add(e.to);
      if (node.ctrl) add(*node.ctrl);
      if (node.call) add(*node.call);
    }
  }
  return out;
}

}  // namespace hccov
