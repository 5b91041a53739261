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

#include "hccov/checker.h"

#include <set>
#include <string>

namespace hccov {
namespace {

class Checker {
 public:
  explicit Checker(const Program& p) : program_(p) {}

  std::vector<Diagnostic> Run() {
    std::set<std::string> seen;
    for (const auto& g : program_.globals) {
      if (!seen.insert(g.name).second) {
        Report(g.loc, "duplicate global '" + g.name + "'");
      }
    }
    seen.clear();
    for (const auto& f : program_.functions) {
      if (!seen.insert(f.name).second) {
        Report(f.loc, "duplicate function '" + f.name + "'");
      }
    }
    seen.clear();
    for (const auto& t : program_.tests) {
      if (!seen.insert(t.name).second) {
        Report(t.loc, "duplicate test '" + t.name + "'");
      }
    }
    for (const auto& f : program_.functions) {
      in_test_ = false;
      scopes_.clear();
      scopes_.emplace_back();
      std::set<std::string> params;
      for (const auto& param : f.params) {
        if (!params.insert(param).second) {
          Report(f.loc, "duplicate parameter '" + param + "' in '" + f.name + "'");
        }
        scopes_.back().insert(param);
      }
      CheckBlock(f.body);
    }
    for (const auto& t : program_.tests) {
      in_test_ = true;
      scopes_.clear();
      scopes_.emplace_back();
      CheckBlock(t.body);
    }
    return std::move(diags_);
  }

 private:
  void Report(SourceLoc loc, std::string msg) {
    diags_.push_back({Diagnostic::Kind::kStatic, loc, std::move(msg)});
  }

  bool IsLocal(const std::string& name) const {
    for (const auto& scope : scopes_) {
      if (scope.count(name)) return true;
    }
    return false;
  }

  void CheckBlock(const std::vector<Statement>& block) {
    scopes_.emplace_back();
    for (const auto& s : block) CheckStatement(s);
    scopes_.pop_back();
  }

  void CheckStatement(const Statement& s) {
    switch (s.kind) {
      case StmtKind::kAssign: {
        CheckExpr(s.value);
        if (IsLocal(s.target)) break;
        if (const GlobalDecl* g = program_.FindGlobal(s.target)) {
          if (g->is_array) {
            Report(s.loc, "cannot assign to array '" + s.target + "'");
          }
          break;
        }
        scopes_.back().insert(s.target);
        break;
      }
      case StmtKind::kArrayAssign:
        CheckArrayName(s.target, s.loc);
        CheckExpr(s.index);
        CheckExpr(s.value);
        break;
      case StmtKind::kIf:
        CheckExpr(s.value);
        CheckBlock(s.body);
        CheckBlock(s.else_body);
        break;
      case StmtKind::kWhile:
        CheckExpr(s.value);
        CheckBlock(s.body);
        break;
      case StmtKind::kCall:
        if (s.value.kind != ExprKind::kCall) {
          Report(s.loc, "expression statement must be a call");
        }
        CheckExpr(s.value);
        break;
      case StmtKind::kReturn:
        if (in_test_) Report(s.loc, "return is not allowed in a test");
        if (s.has_value) CheckExpr(s.value);
        break;
      case StmtKind::kAssert:
        if (!in_test_) {
          Report(s.loc, "assert is only allowed in tests");
        }
        if (s.value.ContainsCall()) {
          Report(s.loc, "assert expression must not contain calls");
        }
        CheckExpr(s.value);
        break;
    }
  }

  void CheckArrayName(const std::string& name, SourceLoc loc) {
    const GlobalDecl* g = program_.FindGlobal(name);
    if (IsLocal(name) || g == nullptr || !g->is_array) {
      Report(loc, "'" + name + "' is not a global array");
    }
  }

  void CheckExpr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kIntLiteral:
      case ExprKind::kBoolLiteral:
        return;
      case ExprKind::kVarRead: {
        if (IsLocal(e.name)) return;
        const GlobalDecl* g = program_.FindGlobal(e.name);
        if (g == nullptr) {
          Report(e.loc, "undeclared variable '" + e.name + "'");
        } else if (g->is_array) {
          Report(e.loc, "array '" + e.name + "' used as a scalar");
        }
        return;
      }
      case ExprKind::kArrayRead:
        CheckArrayName(e.name, e.loc);
        break;
      case ExprKind::kCall: {
        const Function* f = program_.FindFunction(e.name);
        if (f == nullptr) {
          Report(e.loc, "call to undeclared function '" + e.name + "'");
        } else if (f->params.size() != e.operands.size()) {
          Report(e.loc, "'" + e.name + "' expects " +
                            std::to_string(f->params.size()) +
                            " arguments, got " +
                            std::to_string(e.operands.size()));
        }
        break;
      }
      case ExprKind::kBinary:
      case ExprKind::kUnary:
        break;
    }
    for (const auto& child : e.operands) CheckExpr(child);
  }

  const Program& program_;
  bool in_test_ = false;
  std::vector<std::set<std::string>> scopes_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> CheckProgram(const Program& program) {
  return Checker(program).Run();
}

}  // namespace hccov
