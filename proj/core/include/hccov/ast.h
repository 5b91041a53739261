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

#ifndef HCCOV_AST_H_
#define HCCOV_AST_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hccov {

// Statement identifiers are assigned in preorder over the source, starting at
// 1, to every non-assert statement of every function and test.
struct StatementId {
  int value = 0;
  auto operator<=>(const StatementId&) const = default;
};

// Assertion sites are numbered separately (A1, A2, ...) in source order.
struct AssertionId {
  int value = 0;
  auto operator<=>(const AssertionId&) const = default;
};

std::string ToString(StatementId id);  // "s4"
std::string ToString(AssertionId id);  // "A1"

struct SourceLoc {
  int line = 0;
  int column = 0;
};

enum class BinaryOp {
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAnd,
  kOr,
};

enum class UnaryOp { kNeg, kNot };

const char* Spelling(BinaryOp op);
const char* Spelling(UnaryOp op);
bool IsArithmetic(BinaryOp op);
bool IsRelational(BinaryOp op);

enum class ExprKind {
  kIntLiteral,
  kBoolLiteral,
  kVarRead,     // local, parameter or scalar global
  kArrayRead,   // name[operands[0]]
  kBinary,      // operands[0] op operands[1]
  kUnary,       // op operands[0]
  kCall,        // name(operands...)
};

struct Expr {
  ExprKind kind = ExprKind::kIntLiteral;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;
  BinaryOp binary_op = BinaryOp::kAdd;
  UnaryOp unary_op = UnaryOp::kNeg;
  std::vector<Expr> operands;
  SourceLoc loc;

  static Expr Int(std::int64_t v, SourceLoc loc = {});
  static Expr Bool(bool v, SourceLoc loc = {});
  static Expr Var(std::string name, SourceLoc loc = {});
  static Expr Binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc = {});
  static Expr Unary(UnaryOp op, Expr operand, SourceLoc loc = {});

  bool ContainsCall() const;

  // Structural equality; source locations are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

enum class StmtKind {
  kAssign,       // target = value;
  kArrayAssign,  // target[index] = value;
  kIf,           // if (value) body else else_body
  kWhile,        // while (value) body
  kCall,         // value;  (value is a call expression)
  kReturn,       // return value?;
  kAssert,       // assert value;  (tests only, not a PUT statement)
};

const char* Spelling(StmtKind kind);

struct Statement {
  StmtKind kind = StmtKind::kAssign;
  StatementId id;          // unset (0) for asserts
  AssertionId assertion;   // asserts only
  bool enabled = true;     // asserts only
  std::string target;
  Expr index;
  Expr value;
  bool has_value = true;   // false only for a bare `return;`
  std::vector<Statement> body;
  std::vector<Statement> else_body;
  SourceLoc loc;

  bool IsPredicate() const {
    return kind == StmtKind::kIf || kind == StmtKind::kWhile;
  }

  friend bool operator==(const Statement& a, const Statement& b);
};

struct GlobalDecl {
  std::string name;
  bool is_array = false;
  // Scalars hold one value; arrays hold exactly `size` values.
  std::vector<std::int64_t> init;
  SourceLoc loc;

  std::size_t size() const { return init.size(); }
  friend bool operator==(const GlobalDecl& a, const GlobalDecl& b);
};

struct Function {
  std::string name;
  std::vector<std::string> params;
  std::vector<Statement> body;
  SourceLoc loc;

  friend bool operator==(const Function& a, const Function& b);
};

struct TestCase {
  std::string name;
  std::vector<Statement> body;
  SourceLoc loc;

  // All assertion sites in the body, in source order.
  std::vector<const Statement*> Assertions() const;

  friend bool operator==(const TestCase& a, const TestCase& b);
};

struct Program {
  std::vector<GlobalDecl> globals;
  std::vector<Function> functions;
  std::vector<TestCase> tests;

  const Function* FindFunction(const std::string& name) const;
  const TestCase* FindTest(const std::string& name) const;
  const GlobalDecl* FindGlobal(const std::string& name) const;

  // Finds a statement (including asserts nested in tests) by id, or null.
  const Statement* FindStatement(StatementId id) const;
  Statement* FindStatement(StatementId id);

  std::vector<AssertionId> AssertionIds() const;
  int AssertionCount() const;
  int EnabledAssertionCount() const;
  int MaxStatementId() const;
  int MaxAssertionId() const;

  friend bool operator==(const Program& a, const Program& b);
};

// Walks every statement (recursively) in a statement list.
template <typename StatementList, typename Fn>
void ForEachStatement(StatementList& list, Fn&& fn) {
  for (auto& s : list) {
    fn(s);
    ForEachStatement(s.body, fn);
    ForEachStatement(s.else_body, fn);
  }
}

// Walks every expression node reachable from `e` in preorder.
template <typename E, typename Fn>
void ForEachExpr(E& e, Fn&& fn) {
  fn(e);
  for (auto& child : e.operands) {
    ForEachExpr(child, fn);
  }
}

// The expressions owned directly by a statement (not by nested statements),
// in evaluation order.
std::vector<const Expr*> OwnExpressions(const Statement& s);
std::vector<Expr*> OwnExpressions(Statement& s);

}  // namespace hccov

#endif  // HCCOV_AST_H_
