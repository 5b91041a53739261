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

#include "hccov/recommender.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "hccov/checker.h"
#include "hccov/error.h"
#include "hccov/sdg.h"

namespace hccov {
namespace {

void CollectCalls(const Statement& s, std::set<std::string>& out) {
  for (const Expr* root : OwnExpressions(s)) {
    ForEachExpr(*root, [&](const Expr& e) {
      if (e.kind == ExprKind::kCall) out.insert(e.name);
    });
  }
  for (const auto& b : s.body) CollectCalls(b, out);
  for (const auto& b : s.else_body) CollectCalls(b, out);
}

// Statements of every function transitively called from `roots`.
std::set<StatementId> ReachableStatements(const Program& p,
                                          std::set<std::string> functions) {
  std::vector<std::string> work(functions.begin(), functions.end());
  while (!work.empty()) {
    std::string name = work.back();
    work.pop_back();
    const Function* f = p.FindFunction(name);
    if (f == nullptr) continue;
    std::set<std::string> callees;
    for (const auto& s : f->body) CollectCalls(s, callees);
    for (const auto& c : callees) {
      if (functions.insert(c).second) work.push_back(c);
    }
  }
  std::set<StatementId> out;
  for (const auto& name : functions) {
    const Function* f = p.FindFunction(name);
    if (f == nullptr) continue;
    ForEachStatement(f->body, [&](const Statement& s) {
      if (s.kind != StmtKind::kAssert) out.insert(s.id);
    });
  }
  return out;
}

bool Reads(const Expr& root, const std::string& name) {
  bool found = false;
  ForEachExpr(root, [&](const Expr& e) {
    if (e.kind == ExprKind::kVarRead && e.name == name) found = true;
  });
  return found;
}

bool MayRedefine(const Statement& s, const std::string& name) {
  bool found = false;
  auto visit = [&](const Statement& n) {
    if (n.kind == StmtKind::kAssign && n.target == name) found = true;
    for (const Expr* e : OwnExpressions(n)) found = found || e->ContainsCall();
  };
  visit(s);
  ForEachStatement(s.body, visit);
  ForEachStatement(s.else_body, visit);
  return found;
}

// True when an enabled top-level assertion after `after` already reads
// `name` before anything can change it.
bool AlreadyAsserted(const TestCase& t, StatementId after, const std::string& name) {
  auto it = std::find_if(t.body.begin(), t.body.end(), [&](const Statement& s) {
    return s.kind != StmtKind::kAssert && s.id == after;
  });
  if (it == t.body.end()) return false;
  for (++it; it != t.body.end(); ++it) {
    if (it->kind == StmtKind::kAssert) {
      if (it->enabled && Reads(it->value, name)) return true;
      continue;
    }
    if (MayRedefine(*it, name)) return false;
  }
  return false;
}

struct Candidate {
  Recommendation rec;
  std::size_t test_order = 0;
  bool observed = false;  // an existing assertion already reads the target
};

}  // namespace

RecommendationSet Recommend(const Program& program,
                            const std::vector<StatementId>& gaps, int k) {
  RecommendationSet result;
  if (gaps.empty()) return result;
  const std::set<StatementId> gap_set(gaps.begin(), gaps.end());
  const StaticDependenceGraph sdg(program);

  std::vector<Candidate> candidates;
  auto add = [&](ObservableTarget target, std::size_t test_order,
                 const TestCase& t, StatementId after,
                 const std::set<std::string>& called,
                 const std::vector<SdgNode>& seeds) {
    std::set<StatementId> reach = ReachableStatements(program, called);
    Candidate c;
    c.test_order = test_order;
    c.rec.target = std::move(target);
    c.rec.test = t.name;
    c.rec.after = after;
    for (StatementId id : sdg.ClosureStatements(seeds)) {
      if (gap_set.count(id) && reach.count(id)) c.rec.would_check.push_back(id);
    }
    c.rec.score = static_cast<int>(c.rec.would_check.size());
    c.observed = AlreadyAsserted(t, after, c.rec.target.name);
    candidates.push_back(std::move(c));
  };

  for (std::size_t ti = 0; ti < program.tests.size(); ++ti) {
    const TestCase& t = program.tests[ti];
    std::set<std::string> called;
    const Statement* last_calling = nullptr;
    std::set<std::string> called_by_last;
    for (const Statement& s : t.body) {
      std::set<std::string> here;
      CollectCalls(s, here);
      if (here.empty()) continue;
      called.insert(here.begin(), here.end());
      last_calling = &s;
      called_by_last = called;
      if (s.kind == StmtKind::kAssign && s.value.ContainsCall() &&
          program.FindGlobal(s.target) == nullptr) {
        add({ObservableTarget::Kind::kCallResult, s.target}, ti, t, s.id,
            called, {SdgNode{s.id, -1}});
      }
    }
    if (last_calling == nullptr) continue;
    for (const auto& g : program.globals) {
      if (g.is_array) continue;
      add({ObservableTarget::Kind::kGlobal, g.name}, ti, t, last_calling->id,
          called_by_last, sdg.GlobalDefinitions(g.name));
    }
  }

  std::set<StatementId> observable;
  for (const auto& c : candidates) {
    observable.insert(c.rec.would_check.begin(), c.rec.would_check.end());
  }
  for (StatementId id : gap_set) {
    if (!observable.count(id)) result.unobservable.push_back(id);
  }

  std::vector<Candidate> scored;
  for (auto& c : candidates) {
    if (c.rec.score >= 1 && !c.observed) scored.push_back(std::move(c));
  }
  std::sort(scored.begin(), scored.end(), [](const Candidate& a, const Candidate& b) {
    return std::make_tuple(-a.rec.score, a.rec.would_check.front(),
                           a.rec.target.name, a.test_order, a.rec.after) <
           std::make_tuple(-b.rec.score, b.rec.would_check.front(),
                           b.rec.target.name, b.test_order, b.rec.after);
  });
  if (k >= 0 && scored.size() > static_cast<std::size_t>(k)) scored.resize(k);
  for (std::size_t i = 0; i < scored.size(); ++i) {
    scored[i].rec.rank = static_cast<int>(i) + 1;
    result.recommendations.push_back(std::move(scored[i].rec));
  }
  return result;
}

Program ApplyRecommendation(const Program& program, const Recommendation& rec,
                            const ExecConfig& config) {
  const TestCase* test = program.FindTest(rec.test);
  if (test == nullptr) throw Error("no such test: " + rec.test);
  auto pos = std::find_if(test->body.begin(), test->body.end(),
                          [&](const Statement& s) {
                            return s.kind != StmtKind::kAssert && s.id == rec.after;
                          });
  if (pos == test->body.end()) {
    throw Error("insertion point " + ToString(rec.after) +
                " is not a top-level statement of test " + rec.test);
  }

  Probe probe{rec.after, Expr::Var(rec.target.name)};
  ExecConfig traced = config;
  traced.record_trace = false;
  TestRun run = RunTest(program, rec.test, traced, &probe);
  if (!run.outcome.passed()) {
    throw Error("test " + rec.test + " does not pass: " + run.outcome.ToString());
  }
  if (!run.probe_value) {
    throw Error("target '" + rec.target.name + "' is not evaluable after " +
                ToString(rec.after) + " in test " + rec.test);
  }

  Statement assertion;
  assertion.kind = StmtKind::kAssert;
  assertion.assertion = AssertionId{program.MaxAssertionId() + 1};
  assertion.enabled = true;
  assertion.value = Expr::Binary(BinaryOp::kEq, Expr::Var(rec.target.name),
                                 run.probe_value->ToExpr());
  assertion.loc = pos->loc;

  Program enriched = program;
  for (auto& t : enriched.tests) {
    if (t.name != rec.test) continue;
    auto offset = pos - test->body.begin();
    t.body.insert(t.body.begin() + offset + 1, std::move(assertion));
    break;
  }
  auto diags = CheckProgram(enriched);
  if (!diags.empty()) {
    throw Error("enriched program is ill-formed: " + diags.front().ToString());
  }
  return enriched;
}

}  // namespace hccov
