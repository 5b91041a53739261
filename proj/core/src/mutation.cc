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

#include "hccov/mutation.h"

#include <algorithm>
#include <functional>
#include <limits>

#include "hccov/checker.h"
#include "hccov/error.h"
#include "hccov/parallel.h"
#include "hccov/printer.h"
#include "hccov/random.h"

namespace hccov {
namespace {

constexpr BinaryOp kRelational[] = {BinaryOp::kLt, BinaryOp::kLe,
                                    BinaryOp::kGt, BinaryOp::kGe,
                                    BinaryOp::kEq, BinaryOp::kNe};

BinaryOp AorReplacement(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return BinaryOp::kSub;
    case BinaryOp::kSub: return BinaryOp::kAdd;
    case BinaryOp::kMul: return BinaryOp::kDiv;
    case BinaryOp::kDiv: return BinaryOp::kMul;
    default: return BinaryOp::kMul;  // %
  }
}

std::int64_t CrpReplacement(std::int64_t c) {
  if (c == 0) return 1;
  if (c == 1) return 0;
  if (c == std::numeric_limits<std::int64_t>::max()) return c - 1;
  return c + 1;
}

bool IsArithmeticNode(const Expr& e) {
  return e.kind == ExprKind::kBinary && IsArithmetic(e.binary_op);
}
bool IsRelationalNode(const Expr& e) {
  return e.kind == ExprKind::kBinary && IsRelational(e.binary_op);
}
bool IsIntLiteral(const Expr& e) { return e.kind == ExprKind::kIntLiteral; }

// The n-th node (preorder over the statement's own expressions) that matches.
template <typename S, typename Pred>
auto NthMatch(S& s, Pred pred, int n) {
  using E = std::conditional_t<std::is_const_v<S>, const Expr, Expr>;
  E* found = nullptr;
  int k = 0;
  for (E* root : OwnExpressions(s)) {
    ForEachExpr(*root, [&](E& x) {
      if (pred(x)) {
        if (k == n) found = &x;
        ++k;
      }
    });
  }
  return found;
}

template <typename Pred>
int CountMatches(const Statement& s, Pred pred) {
  int k = 0;
  for (const Expr* root : OwnExpressions(s)) {
    ForEachExpr(*root, [&](const Expr& x) { k += pred(x) ? 1 : 0; });
  }
  return k;
}

bool RemoveStatement(std::vector<Statement>& list, StatementId id) {
  for (auto it = list.begin(); it != list.end(); ++it) {
    if (it->kind != StmtKind::kAssert && it->id == id) {
      list.erase(it);
      return true;
    }
    if (RemoveStatement(it->body, id) || RemoveStatement(it->else_body, id)) {
      return true;
    }
  }
  return false;
}

bool IsSoleReturn(const Program& p, StatementId id) {
  for (const auto& f : p.functions) {
    int returns = 0;
    bool contains = false;
    ForEachStatement(f.body, [&](const Statement& s) {
      if (s.kind != StmtKind::kReturn) return;
      ++returns;
      if (s.id == id) contains = true;
    });
    if (contains) return returns == 1;
  }
  return false;
}

struct Candidate {
  MutationOperator op;
  StatementId stmt;
  std::string description;
  Program program;
};

std::string Describe(MutationOperator op, const Statement& before,
                     const Statement& after) {
  return ToString(before.id) + " " + Spelling(op) + ": " + PrintHeader(before) +
         " => " + PrintHeader(after);
}

class Generator {
 public:
  Generator(const Program& p, const std::set<MutationOperator>& ops)
      : program_(p), ops_(ops) {}

  std::vector<Candidate> Run() {
    std::vector<const Statement*> put;
    for (const auto& f : program_.functions) {
      ForEachStatement(f.body, [&](const Statement& s) { put.push_back(&s); });
    }
    std::sort(put.begin(), put.end(),
              [](const Statement* a, const Statement* b) { return a->id < b->id; });
    for (const Statement* s : put) {
      for (MutationOperator op : ops_) Sites(*s, op);
    }
    return std::move(out_);
  }

 private:
  // Applies `edit` to a copy of the program's statement `id` and records it.
  void Emit(MutationOperator op, const Statement& original,
            const std::function<void(Statement&)>& edit) {
    Program copy = program_;
    Statement* target = copy.FindStatement(original.id);
    edit(*target);
    std::string description = Describe(op, original, *target);
    out_.push_back({op, original.id, std::move(description), std::move(copy)});
  }

  void Sites(const Statement& s, MutationOperator op) {
    switch (op) {
      case MutationOperator::kAor: {
        int n = CountMatches(s, IsArithmeticNode);
        for (int i = 0; i < n; ++i) {
          Emit(op, s, [&](Statement& t) {
            Expr* e = NthMatch(t, IsArithmeticNode, i);
            e->binary_op = AorReplacement(e->binary_op);
          });
        }
        break;
      }
      case MutationOperator::kRor: {
        int n = CountMatches(s, IsRelationalNode);
        for (int i = 0; i < n; ++i) {
          BinaryOp current = NthMatch(s, IsRelationalNode, i)->binary_op;
          for (BinaryOp replacement : kRelational) {
            if (replacement == current) continue;
            Emit(op, s, [&](Statement& t) {
              NthMatch(t, IsRelationalNode, i)->binary_op = replacement;
            });
          }
        }
        break;
      }
      case MutationOperator::kUoi:
        if (s.IsPredicate()) {
          Emit(op, s, [](Statement& t) {
            t.value = Expr::Unary(UnaryOp::kNot, std::move(t.value), t.value.loc);
          });
        }
        break;
      case MutationOperator::kCrp: {
        int n = CountMatches(s, IsIntLiteral);
        for (int i = 0; i < n; ++i) {
          Emit(op, s, [&](Statement& t) {
            Expr* e = NthMatch(t, IsIntLiteral, i);
            e->int_value = CrpReplacement(e->int_value);
          });
        }
        break;
      }
      case MutationOperator::kSdl: {
        if (s.kind == StmtKind::kReturn && IsSoleReturn(program_, s.id)) break;
        Program copy = program_;
        for (auto& f : copy.functions) {
          if (RemoveStatement(f.body, s.id)) break;
        }
        if (!CheckProgram(copy).empty()) break;
        std::string description = ToString(s.id) + " SDL: delete " + PrintHeader(s);
        out_.push_back({op, s.id, std::move(description), std::move(copy)});
        break;
      }
    }
  }

  const Program& program_;
  const std::set<MutationOperator>& ops_;
  std::vector<Candidate> out_;
};

}  // namespace

const char* Spelling(MutationOperator op) {
  switch (op) {
    case MutationOperator::kAor: return "AOR";
    case MutationOperator::kRor: return "ROR";
    case MutationOperator::kUoi: return "UOI";
    case MutationOperator::kCrp: return "CRP";
    case MutationOperator::kSdl: return "SDL";
  }
  return "?";
}

std::optional<MutationOperator> ParseOperator(std::string_view name) {
  for (MutationOperator op : AllOperators()) {
    if (name == Spelling(op)) return op;
  }
  return std::nullopt;
}

std::set<MutationOperator> AllOperators() {
  return {MutationOperator::kAor, MutationOperator::kRor, MutationOperator::kUoi,
          MutationOperator::kCrp, MutationOperator::kSdl};
}

const char* Spelling(MutantStatus status) {
  switch (status) {
    case MutantStatus::kKilledByAssertion: return "killed-by-assertion";
    case MutantStatus::kKilledByTrap: return "killed-by-trap";
    case MutantStatus::kSurvived: return "survived";
    case MutantStatus::kTimeout: return "timeout";
  }
  return "?";
}

std::vector<Mutant> GenerateMutants(const Program& program,
                                    const std::set<MutationOperator>& ops,
                                    std::uint64_t seed,
                                    std::size_t max_mutants) {
  std::vector<Candidate> candidates = Generator(program, ops).Run();
  std::vector<std::size_t> keep(candidates.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  if (max_mutants > 0 && max_mutants < keep.size()) {
    SeededShuffle(keep, seed);
    keep.resize(max_mutants);
    std::sort(keep.begin(), keep.end());
  }
  std::vector<Mutant> mutants;
  mutants.reserve(keep.size());
  for (std::size_t i : keep) {
    Candidate& c = candidates[i];
    mutants.push_back({static_cast<int>(mutants.size()) + 1, c.op, c.stmt,
                       std::move(c.description), std::move(c.program)});
  }
  return mutants;
}

std::string MutationRun::ScoreText() const {
  if (results.empty()) return "n/a";
  return FormatHundredths(Score().Hundredths());
}

MutationRun RunMutation(const Program& program,
                        const std::vector<Mutant>& mutants,
                        const MutationConfig& config) {
  ExecConfig base = config.exec;
  base.record_trace = false;
  SuiteRun original = RunSuite(program, base);
  for (const auto& t : program.tests) {
    const TestOutcome& o = original.at(t.name).outcome;
    if (!o.passed()) {
      throw Error("green-suite violation: test '" + t.name + "' " +
                  o.ToString() + " on the unmutated program");
    }
  }

  MutationRun run;
  run.step_limit = std::max<std::int64_t>(1, 10 * TotalSteps(original));
  ExecConfig mutant_exec = base;
  mutant_exec.step_limit = run.step_limit;

  run.results.resize(mutants.size());
  ParallelFor(mutants.size(), config.jobs, [&](std::size_t i) {
    const Mutant& m = mutants[i];
    MutationResult r;
    r.mutant_id = m.id;
    std::string timed_out_test;
    Program combined;
    combined.globals = program.globals;
    combined.functions = m.program.functions;
    combined.tests = program.tests;
    for (const auto& t : combined.tests) {
      TestOutcome o = RunTest(combined, t.name, mutant_exec).outcome;
      if (o.status == TestOutcome::Status::kPass) continue;
      if (o.status == TestOutcome::Status::kTimeout) {
        if (timed_out_test.empty()) timed_out_test = t.name;
        if (config.timeout_kills) break;
        continue;
      }
      r.test = t.name;
      r.killed = true;
      if (o.status == TestOutcome::Status::kAssertionFailure) {
        r.status = MutantStatus::kKilledByAssertion;
        r.site = o.failed_assertion;
      } else {
        r.status = MutantStatus::kKilledByTrap;
      }
      break;
    }
    if (!r.killed && !timed_out_test.empty()) {
      r.status = MutantStatus::kTimeout;
      r.test = timed_out_test;
      r.killed = config.timeout_kills;
    }
    run.results[i] = std::move(r);
  });
  for (const auto& r : run.results) {
    run.killed += r.killed ? 1 : 0;
    run.timeouts += r.status == MutantStatus::kTimeout ? 1 : 0;
  }
  return run;
}

}  // namespace hccov
