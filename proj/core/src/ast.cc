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

#include "hccov/ast.h"

#include <algorithm>

namespace hccov {

std::string ToString(StatementId id) { return "s" + std::to_string(id.value); }

std::string ToString(AssertionId id) { return "A" + std::to_string(id.value); }

const char* Spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

const char* Spelling(UnaryOp op) { return op == UnaryOp::kNeg ? "-" : "!"; }

const char* Spelling(StmtKind kind) {
  switch (kind) {
    case StmtKind::kAssign: return "assign";
    case StmtKind::kArrayAssign: return "array-assign";
    case StmtKind::kIf: return "if";
    case StmtKind::kWhile: return "while";
    case StmtKind::kCall: return "call";
    case StmtKind::kReturn: return "return";
    case StmtKind::kAssert: return "assert";
  }
  return "?";
}

bool IsArithmetic(BinaryOp op) {
  return op == BinaryOp::kAdd || op == BinaryOp::kSub || op == BinaryOp::kMul ||
         op == BinaryOp::kDiv || op == BinaryOp::kMod;
}

bool IsRelational(BinaryOp op) {
  return op == BinaryOp::kLt || op == BinaryOp::kLe || op == BinaryOp::kGt ||
         op == BinaryOp::kGe || op == BinaryOp::kEq || op == BinaryOp::kNe;
}

Expr Expr::Int(std::int64_t v, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::kIntLiteral;
  e.int_value = v;
  e.loc = loc;
  return e;
}

Expr Expr::Bool(bool v, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::kBoolLiteral;
  e.bool_value = v;
  e.loc = loc;
  return e;
}

Expr Expr::Var(std::string name, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::kVarRead;
  e.name = std::move(name);
  e.loc = loc;
  return e;
}

Expr Expr::Binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::kBinary;
  e.binary_op = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  e.loc = loc;
  return e;
}

Expr Expr::Unary(UnaryOp op, Expr operand, SourceLoc loc) {
  Expr e;
  e.kind = ExprKind::kUnary;
  e.unary_op = op;
  e.operands.push_back(std::move(operand));
  e.loc = loc;
  return e;
}

bool Expr::ContainsCall() const {
  bool found = false;
  ForEachExpr(*this, [&](const Expr& e) {
    if (e.kind == ExprKind::kCall) found = true;
  });
  return found;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::kIntLiteral:
      return a.int_value == b.int_value;
    case ExprKind::kBoolLiteral:
      return a.bool_value == b.bool_value;
    case ExprKind::kVarRead:
      return a.name == b.name;
    case ExprKind::kArrayRead:
    case ExprKind::kCall:
      return a.name == b.name && a.operands == b.operands;
    case ExprKind::kBinary:
      return a.binary_op == b.binary_op && a.operands == b.operands;
    case ExprKind::kUnary:
      return a.unary_op == b.unary_op && a.operands == b.operands;
  }
  return false;
}

bool operator==(const Statement& a, const Statement& b) {
  if (a.kind != b.kind || a.id != b.id) return false;
  switch (a.kind) {
    case StmtKind::kAssign:
      return a.target == b.target && a.value == b.value;
    case StmtKind::kArrayAssign:
      return a.target == b.target && a.index == b.index && a.value == b.value;
    case StmtKind::kIf:
      return a.value == b.value && a.body == b.body &&
             a.else_body == b.else_body;
    case StmtKind::kWhile:
      return a.value == b.value && a.body == b.body;
    case StmtKind::kCall:
      return a.value == b.value;
    case StmtKind::kReturn:
      return a.has_value == b.has_value && (!a.has_value || a.value == b.value);
    case StmtKind::kAssert:
      return a.assertion == b.assertion && a.enabled == b.enabled &&
             a.value == b.value;
  }
  return false;
}

bool operator==(const GlobalDecl& a, const GlobalDecl& b) {
  return a.name == b.name && a.is_array == b.is_array && a.init == b.init;
}

bool operator==(const Function& a, const Function& b) {
  return a.name == b.name && a.params == b.params && a.body == b.body;
}

bool operator==(const TestCase& a, const TestCase& b) {
  return a.name == b.name && a.body == b.body;
}

bool operator==(const Program& a, const Program& b) {
  return a.globals == b.globals && a.functions == b.functions &&
         a.tests == b.tests;
}

std::vector<const Statement*> TestCase::Assertions() const {
  std::vector<const Statement*> out;
  ForEachStatement(body, [&](const Statement& s) {
    if (s.kind == StmtKind::kAssert) out.push_back(&s);
  });
  return out;
}

const Function* Program::FindFunction(const std::string& name) const {
  for (const auto& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const TestCase* Program::FindTest(const std::string& name) const {
  for (const auto& t : tests) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const GlobalDecl* Program::FindGlobal(const std::string& name) const {
  for (const auto& g : globals) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

namespace {

template <typename P, typename S>
S* FindIn(P& program, StatementId id) {
  S* found = nullptr;
  auto visit = [&](S& s) {
    if (s.kind != StmtKind::kAssert && s.id == id) found = &s;
  };
  for (auto& f : program.functions) ForEachStatement(f.body, visit);
  for (auto& t : program.tests) ForEachStatement(t.body, visit);
  return found;
}

}  // namespace

const Statement* Program::FindStatement(StatementId id) const {
  return FindIn<const Program, const Statement>(*this, id);
}

Statement* Program::FindStatement(StatementId id) {
  return FindIn<Program, Statement>(*this, id);
}

std::vector<AssertionId> Program::AssertionIds() const {
  std::vector<AssertionId> ids;
  for (const auto& t : tests) {
    for (const Statement* a : t.Assertions()) ids.push_back(a->assertion);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

int Program::AssertionCount() const {
  return static_cast<int>(AssertionIds().size());
}

int Program::EnabledAssertionCount() const {
  int n = 0;
  for (const auto& t : tests) {
    for (const Statement* a : t.Assertions()) n += a->enabled ? 1 : 0;
  }
  return n;
}

int Program::MaxStatementId() const {
  int max_id = 0;
  auto visit = [&](const Statement& s) {
    if (s.kind != StmtKind::kAssert) max_id = std::max(max_id, s.id.value);
  };
  for (const auto& f : functions) ForEachStatement(f.body, visit);
  for (const auto& t : tests) ForEachStatement(t.body, visit);
  return max_id;
}

int Program::MaxAssertionId() const {
  int max_id = 0;
  for (AssertionId id : AssertionIds()) max_id = std::max(max_id, id.value);
  return max_id;
}

template <typename S, typename E>
static std::vector<E*> OwnExpressionsImpl(S& s) {
  switch (s.kind) {
    case StmtKind::kArrayAssign:
      return {&s.index, &s.value};
    case StmtKind::kReturn:
      if (!s.has_value) return {};
      return {&s.value};
    default:
      return {&s.value};
  }
}

std::vector<const Expr*> OwnExpressions(const Statement& s) {
  return OwnExpressionsImpl<const Statement, const Expr>(s);
}

std::vector<Expr*> OwnExpressions(Statement& s) {
  return OwnExpressionsImpl<Statement, Expr>(s);
}

}  // namespace hccov
