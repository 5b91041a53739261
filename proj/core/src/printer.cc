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

#include "hccov/printer.h"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace hccov {
namespace {

constexpr int kUnaryPrec = 7;
constexpr int kPrimaryPrec = 8;

int Precedence(const Expr& e) {
  if (e.kind == ExprKind::kBinary) {
    switch (e.binary_op) {
      case BinaryOp::kOr: return 1;
      case BinaryOp::kAnd: return 2;
      case BinaryOp::kEq:
      case BinaryOp::kNe: return 3;
      case BinaryOp::kLt:
      case BinaryOp::kLe:
      case BinaryOp::kGt:
      case BinaryOp::kGe: return 4;
      case BinaryOp::kAdd:
      case BinaryOp::kSub: return 5;
      default: return 6;
    }
  }
  if (e.kind == ExprKind::kUnary) return kUnaryPrec;
  return kPrimaryPrec;
}

void PrintExpr(const Expr& e, std::ostream& os);

void PrintOperand(const Expr& e, bool parens, std::ostream& os) {
  if (parens) os << "(";
  PrintExpr(e, os);
  if (parens) os << ")";
}

void PrintExpr(const Expr& e, std::ostream& os) {
  switch (e.kind) {
    case ExprKind::kIntLiteral:
      os << e.int_value;
      return;
    case ExprKind::kBoolLiteral:
      os << (e.bool_value ? "true" : "false");
      return;
    case ExprKind::kVarRead:
      os << e.name;
      return;
    case ExprKind::kArrayRead:
      os << e.name << "[";
      PrintExpr(e.operands[0], os);
      os << "]";
      return;
    case ExprKind::kCall:
      os << e.name << "(";
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) os << ", ";
        PrintExpr(e.operands[i], os);
      }
      os << ")";
      return;
    case ExprKind::kUnary: {
      const Expr& operand = e.operands[0];
      // "-5" would parse back as a literal, so negated literals keep parens.
      bool parens = Precedence(operand) < kUnaryPrec ||
                    operand.kind == ExprKind::kIntLiteral;
      os << Spelling(e.unary_op);
      PrintOperand(operand, parens, os);
      return;
    }
    case ExprKind::kBinary: {
      int prec = Precedence(e);
      PrintOperand(e.operands[0], Precedence(e.operands[0]) < prec, os);
      os << " " << Spelling(e.binary_op) << " ";
      PrintOperand(e.operands[1], Precedence(e.operands[1]) <= prec, os);
      return;
    }
  }
}

void Indent(int depth, std::ostream& os) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void PrintBlock(const std::vector<Statement>& block, int depth,
                std::ostream& os);

void PrintStatement(const Statement& s, int depth, std::ostream& os) {
  Indent(depth, os);
  os << PrintHeader(s);
  switch (s.kind) {
    case StmtKind::kIf: {
      os << " {\n";
      PrintBlock(s.body, depth + 1, os);
      Indent(depth, os);
      os << "}";
      const Statement* tail = &s;
      while (!tail->else_body.empty()) {
        const auto& eb = tail->else_body;
        if (eb.size() == 1 && eb[0].kind == StmtKind::kIf) {
          os << " else " << PrintHeader(eb[0]) << " {\n";
          PrintBlock(eb[0].body, depth + 1, os);
          Indent(depth, os);
          os << "}";
          tail = &eb[0];
        } else {
          os << " else {\n";
          PrintBlock(eb, depth + 1, os);
          Indent(depth, os);
          os << "}";
          break;
        }
      }
      os << "\n";
      return;
    }
    case StmtKind::kWhile:
      os << " {\n";
      PrintBlock(s.body, depth + 1, os);
      Indent(depth, os);
      os << "}\n";
      return;
    default:
      os << "\n";
      return;
  }
}

void PrintBlock(const std::vector<Statement>& block, int depth,
                std::ostream& os) {
  for (const auto& s : block) PrintStatement(s, depth, os);
}

}  // namespace

std::string Print(const Expr& expr) {
  std::ostringstream os;
  PrintExpr(expr, os);
  return os.str();
}

std::string PrintHeader(const Statement& s) {
  std::ostringstream os;
  switch (s.kind) {
    case StmtKind::kAssign:
      os << s.target << " = ";
      PrintExpr(s.value, os);
      os << ";";
      break;
    case StmtKind::kArrayAssign:
      os << s.target << "[";
      PrintExpr(s.index, os);
      os << "] = ";
      PrintExpr(s.value, os);
      os << ";";
      break;
    case StmtKind::kIf:
      os << "if (";
      PrintExpr(s.value, os);
      os << ")";
      break;
    case StmtKind::kWhile:
      os << "while (";
      PrintExpr(s.value, os);
      os << ")";
      break;
    case StmtKind::kCall:
      PrintExpr(s.value, os);
      os << ";";
      break;
    case StmtKind::kReturn:
      os << "return";
      if (s.has_value) {
        os << " ";
        PrintExpr(s.value, os);
      }
      os << ";";
      break;
    case StmtKind::kAssert:
      if (!s.enabled) os << "disabled ";
      os << "assert ";
      PrintExpr(s.value, os);
      os << ";";
      break;
  }
  return os.str();
}

std::string Print(const Program& program) {
  // Top-level items are emitted in their original source order so statement
  // ids survive a reparse; synthesized items (no location) keep declaration
  // order after sorting.
  struct Item {
    SourceLoc loc;
    int kind;  // 0 global, 1 function, 2 test
    std::size_t index;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < program.globals.size(); ++i) {
    items.push_back({program.globals[i].loc, 0, i});
  }
  for (std::size_t i = 0; i < program.functions.size(); ++i) {
    items.push_back({program.functions[i].loc, 1, i});
  }
  for (std::size_t i = 0; i < program.tests.size(); ++i) {
    items.push_back({program.tests[i].loc, 2, i});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.loc.line, a.loc.column) <
           std::tie(b.loc.line, b.loc.column);
  });

  std::ostringstream os;
  int previous_kind = -1;
  for (const Item& item : items) {
    if (previous_kind != -1 && (item.kind != 0 || previous_kind != 0)) {
      os << "\n";
    }
    previous_kind = item.kind;
    switch (item.kind) {
      case 0: {
        const GlobalDecl& g = program.globals[item.index];
        os << "global " << g.name;
        if (g.is_array) {
          os << "[" << g.size() << "]";
          bool all_zero = std::all_of(g.init.begin(), g.init.end(),
                                      [](std::int64_t v) { return v == 0; });
          if (!all_zero) {
            os << " = {";
            for (std::size_t i = 0; i < g.init.size(); ++i) {
              if (i) os << ", ";
              os << g.init[i];
            }
            os << "}";
          }
        } else {
          os << " = " << g.init[0];
        }
        os << ";\n";
        break;
      }
      case 1: {
        const Function& f = program.functions[item.index];
        os << "fn " << f.name << "(";
        for (std::size_t i = 0; i < f.params.size(); ++i) {
          if (i) os << ", ";
          os << f.params[i];
        }
        os << ") {\n";
        PrintBlock(f.body, 1, os);
        os << "}\n";
        break;
      }
      default: {
        const TestCase& t = program.tests[item.index];
        os << "test " << t.name << " {\n";
        PrintBlock(t.body, 1, os);
        os << "}\n";
        break;
      }
    }
  }
  return os.str();
}

}  // namespace hccov
