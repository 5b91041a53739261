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

#include "hccov/parser.h"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "hccov/checker.h"
#include "hccov/error.h"

namespace hccov {
namespace {

enum class Tok {
  kEof,
  kIdent,
  kInt,
  // keywords
  kGlobal,
  kFn,
  kTest,
  kIf,
  kElse,
  kWhile,
  kReturn,
  kAssert,
  kDisabled,
  kTrue,
  kFalse,
  // punctuation
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kComma,
  kSemi,
  kAssign,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kPercent,
  kLt,
  kLe,
  kGt,
  kGe,
  kEqEq,
  kNe,
  kAndAnd,
  kOrOr,
  kBang,
};

struct Token {
  Tok kind = Tok::kEof;
  std::string text;
  SourceLoc loc;
};

struct SyntaxError {
  SourceLoc loc;
  std::string message;
};

const char* Describe(Tok t) {
  switch (t) {
    case Tok::kEof: return "end of file";
    case Tok::kIdent: return "identifier";
    case Tok::kInt: return "integer";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kSemi: return "';'";
    case Tok::kAssign: return "'='";
    default: return "token";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      SkipSpaceAndComments();
      Token t;
      t.loc = {line_, col_};
      if (pos_ >= src_.size()) {
        t.kind = Tok::kEof;
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          Advance();
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        t.kind = Keyword(t.text);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          Advance();
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        t.kind = Tok::kInt;
      } else {
        t.kind = Punct(t.loc);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static Tok Keyword(const std::string& s) {
    if (s == "global") return Tok::kGlobal;
    if (s == "fn") return Tok::kFn;
    if (s == "test") return Tok::kTest;
    if (s == "if") return Tok::kIf;
    if (s == "else") return Tok::kElse;
    if (s == "while") return Tok::kWhile;
    if (s == "return") return Tok::kReturn;
    if (s == "assert") return Tok::kAssert;
    if (s == "disabled") return Tok::kDisabled;
    if (s == "true") return Tok::kTrue;
    if (s == "false") return Tok::kFalse;
    return Tok::kIdent;
  }

  Tok Punct(SourceLoc loc) {
    char c = src_[pos_];
    char next = pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
    auto two = [&](Tok t) {
      Advance();
      Advance();
      return t;
    };
    auto one = [&](Tok t) {
      Advance();
      return t;
    };
    switch (c) {
      case '(': return one(Tok::kLParen);
      case ')': return one(Tok::kRParen);
      case '{': return one(Tok::kLBrace);
      case '}': return one(Tok::kRBrace);
      case '[': return one(Tok::kLBracket);
      case ']': return one(Tok::kRBracket);
      case ',': return one(Tok::kComma);
      case ';': return one(Tok::kSemi);
      case '+': return one(Tok::kPlus);
      case '-': return one(Tok::kMinus);
      case '*': return one(Tok::kStar);
      case '/': return one(Tok::kSlash);
      case '%': return one(Tok::kPercent);
      case '<': return next == '=' ? two(Tok::kLe) : one(Tok::kLt);
      case '>': return next == '=' ? two(Tok::kGe) : one(Tok::kGt);
      case '=': return next == '=' ? two(Tok::kEqEq) : one(Tok::kAssign);
      case '!': return next == '=' ? two(Tok::kNe) : one(Tok::kBang);
      case '&':
        if (next == '&') return two(Tok::kAndAnd);
        break;
      case '|':
        if (next == '|') return two(Tok::kOrOr);
        break;
      default:
        break;
    }
    throw SyntaxError{loc, std::string("unexpected character '") + c + "'"};
  }

  void SkipSpaceAndComments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        return;
      }
    }
  }

  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program ParseProgram() {
    Program p;
    while (!At(Tok::kEof)) {
      if (At(Tok::kGlobal)) {
        p.globals.push_back(ParseGlobal());
      } else if (At(Tok::kFn)) {
        p.functions.push_back(ParseFunction());
      } else if (At(Tok::kTest)) {
        p.tests.push_back(ParseTest());
      } else {
        Fail("expected 'global', 'fn' or 'test'");
      }
    }
    return p;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool At(Tok t) const { return Peek().kind == t; }
  Token Take() {
    Token t = Peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool Accept(Tok t) {
    if (!At(t)) return false;
    Take();
    return true;
  }
  Token Expect(Tok t, const char* what = nullptr) {
    if (!At(t)) {
      Fail(std::string("expected ") + (what ? what : Describe(t)));
    }
    return Take();
  }
  [[noreturn]] void Fail(const std::string& msg) const {
    std::string found = At(Tok::kEof) ? "end of file" : "'" + Peek().text + "'";
    if (Peek().text.empty() && !At(Tok::kEof)) found = Describe(Peek().kind);
    throw SyntaxError{Peek().loc, msg + ", found " + found};
  }

  std::int64_t ParseIntText(const Token& t, bool negative) const {
    // Accumulate in unsigned so INT64_MIN is representable.
    unsigned long long v = 0;
    const unsigned long long limit =
        negative ? 9223372036854775808ULL : 9223372036854775807ULL;
    for (char c : t.text) {
      unsigned long long d = static_cast<unsigned long long>(c - '0');
      if (v > (limit - d) / 10) {
        throw SyntaxError{t.loc, "integer literal out of range"};
      }
      v = v * 10 + d;
    }
    if (negative) return static_cast<std::int64_t>(0ULL - v);
    return static_cast<std::int64_t>(v);
  }

  std::int64_t ParseSignedInt() {
    bool negative = Accept(Tok::kMinus);
    Token t = Expect(Tok::kInt, "integer");
    return ParseIntText(t, negative);
  }

  GlobalDecl ParseGlobal() {
    GlobalDecl g;
    g.loc = Take().loc;
    g.name = Expect(Tok::kIdent).text;
    if (Accept(Tok::kLBracket)) {
      Token size_tok = Expect(Tok::kInt, "array size");
      std::int64_t size = ParseIntText(size_tok, false);
      if (size <= 0 || size > 1'000'000) {
        throw SyntaxError{size_tok.loc, "array size must be in [1, 1000000]"};
      }
      Expect(Tok::kRBracket);
      g.is_array = true;
      g.init.assign(static_cast<std::size_t>(size), 0);
      if (Accept(Tok::kAssign)) {
        SourceLoc init_loc = Peek().loc;
        Expect(Tok::kLBrace);
        std::vector<std::int64_t> values;
        if (!At(Tok::kRBrace)) {
          values.push_back(ParseSignedInt());
          while (Accept(Tok::kComma)) values.push_back(ParseSignedInt());
        }
        Expect(Tok::kRBrace);
        if (values.size() != g.init.size()) {
          throw SyntaxError{init_loc,
                            "array initializer has " +
                                std::to_string(values.size()) +
                                " values, expected " +
                                std::to_string(g.init.size())};
        }
        g.init = std::move(values);
      }
    } else {
      g.init = {0};
      if (Accept(Tok::kAssign)) g.init[0] = ParseSignedInt();
    }
    Expect(Tok::kSemi);
    return g;
  }

  Function ParseFunction() {
    Function f;
    f.loc = Take().loc;
    f.name = Expect(Tok::kIdent).text;
    Expect(Tok::kLParen);
    if (!At(Tok::kRParen)) {
      f.params.push_back(Expect(Tok::kIdent, "parameter name").text);
      while (Accept(Tok::kComma)) {
        f.params.push_back(Expect(Tok::kIdent, "parameter name").text);
      }
    }
    Expect(Tok::kRParen);
    f.body = ParseBlock();
    return f;
  }

  TestCase ParseTest() {
    TestCase t;
    t.loc = Take().loc;
    t.name = Expect(Tok::kIdent).text;
    t.body = ParseBlock();
    return t;
  }

  std::vector<Statement> ParseBlock() {
    Expect(Tok::kLBrace);
    std::vector<Statement> out;
    while (!At(Tok::kRBrace)) {
      if (At(Tok::kEof)) Fail("expected '}'");
      out.push_back(ParseStatement());
    }
    Take();
    return out;
  }

  Statement ParseStatement() {
    Statement s;
    s.loc = Peek().loc;
    if (At(Tok::kIf)) return ParseIf();
    if (Accept(Tok::kWhile)) {
      s.kind = StmtKind::kWhile;
      s.id = NextId();
      Expect(Tok::kLParen);
      s.value = ParseExpr();
      Expect(Tok::kRParen);
      s.body = ParseBlock();
      return s;
    }
    if (Accept(Tok::kReturn)) {
      s.kind = StmtKind::kReturn;
      s.id = NextId();
      if (Accept(Tok::kSemi)) {
        s.has_value = false;
        return s;
      }
      s.value = ParseExpr();
      Expect(Tok::kSemi);
      return s;
    }
    if (At(Tok::kDisabled) || At(Tok::kAssert)) {
      s.kind = StmtKind::kAssert;
      s.enabled = !Accept(Tok::kDisabled);
      Expect(Tok::kAssert);
      s.assertion = AssertionId{++assertion_counter_};
      s.value = ParseExpr();
      Expect(Tok::kSemi);
      return s;
    }
    if (At(Tok::kIdent)) {
      if (Peek(1).kind == Tok::kLParen) {
        s.kind = StmtKind::kCall;
        s.id = NextId();
        s.value = ParsePrimary();
        Expect(Tok::kSemi);
        return s;
      }
      s.id = NextId();
      s.target = Take().text;
      if (Accept(Tok::kLBracket)) {
        s.kind = StmtKind::kArrayAssign;
        s.index = ParseExpr();
        Expect(Tok::kRBracket);
      } else {
        s.kind = StmtKind::kAssign;
      }
      Expect(Tok::kAssign);
      s.value = ParseExpr();
      Expect(Tok::kSemi);
      return s;
    }
    Fail("expected a statement");
  }

  Statement ParseIf() {
    Statement s;
    s.loc = Take().loc;
    s.kind = StmtKind::kIf;
    s.id = NextId();
    Expect(Tok::kLParen);
    s.value = ParseExpr();
    Expect(Tok::kRParen);
    s.body = ParseBlock();
    if (Accept(Tok::kElse)) {
      if (At(Tok::kIf)) {
        s.else_body.push_back(ParseIf());
      } else {
        s.else_body = ParseBlock();
      }
    }
    return s;
  }

  // Precedence climbing, lowest first: || && (== !=) (< <= > >=) (+ -) (* / %)
  Expr ParseExpr() { return ParseBinary(0); }

  static int Precedence(Tok t) {
    switch (t) {
      case Tok::kOrOr: return 1;
      case Tok::kAndAnd: return 2;
      case Tok::kEqEq:
      case Tok::kNe: return 3;
      case Tok::kLt:
      case Tok::kLe:
      case Tok::kGt:
      case Tok::kGe: return 4;
      case Tok::kPlus:
      case Tok::kMinus: return 5;
      case Tok::kStar:
      case Tok::kSlash:
      case Tok::kPercent: return 6;
      default: return 0;
    }
  }

  static BinaryOp ToBinary(Tok t) {
    switch (t) {
      case Tok::kOrOr: return BinaryOp::kOr;
      case Tok::kAndAnd: return BinaryOp::kAnd;
      case Tok::kEqEq: return BinaryOp::kEq;
      case Tok::kNe: return BinaryOp::kNe;
      case Tok::kLt: return BinaryOp::kLt;
      case Tok::kLe: return BinaryOp::kLe;
      case Tok::kGt: return BinaryOp::kGt;
      case Tok::kGe: return BinaryOp::kGe;
      case Tok::kPlus: return BinaryOp::kAdd;
      case Tok::kMinus: return BinaryOp::kSub;
      case Tok::kStar: return BinaryOp::kMul;
      case Tok::kSlash: return BinaryOp::kDiv;
      default: return BinaryOp::kMod;
    }
  }

  Expr ParseBinary(int min_prec) {
    Expr lhs = ParseUnary();
    for (;;) {
      int prec = Precedence(Peek().kind);
      if (prec == 0 || prec <= min_prec) return lhs;
      Token op = Take();
      Expr rhs = ParseBinary(prec);
      lhs = Expr::Binary(ToBinary(op.kind), std::move(lhs), std::move(rhs),
                         op.loc);
    }
  }

  Expr ParseUnary() {
    SourceLoc loc = Peek().loc;
    if (Accept(Tok::kMinus)) {
      // Fold "-<int>" so that INT64_MIN has a spelling; the printer emits
      // negative literals the same way.
      if (At(Tok::kInt)) {
        Token t = Take();
        return Expr::Int(ParseIntText(t, true), loc);
      }
      return Expr::Unary(UnaryOp::kNeg, ParseUnary(), loc);
    }
    if (Accept(Tok::kBang)) return Expr::Unary(UnaryOp::kNot, ParseUnary(), loc);
    return ParsePrimary();
  }

  Expr ParsePrimary() {
    SourceLoc loc = Peek().loc;
    if (At(Tok::kInt)) return Expr::Int(ParseIntText(Take(), false), loc);
    if (Accept(Tok::kTrue)) return Expr::Bool(true, loc);
    if (Accept(Tok::kFalse)) return Expr::Bool(false, loc);
    if (Accept(Tok::kLParen)) {
      Expr e = ParseExpr();
      Expect(Tok::kRParen);
      return e;
    }
    if (At(Tok::kIdent)) {
      std::string name = Take().text;
      if (Accept(Tok::kLParen)) {
        Expr call;
        call.kind = ExprKind::kCall;
        call.name = std::move(name);
        call.loc = loc;
        if (!At(Tok::kRParen)) {
          call.operands.push_back(ParseExpr());
          while (Accept(Tok::kComma)) call.operands.push_back(ParseExpr());
        }
        Expect(Tok::kRParen);
        return call;
      }
      if (Accept(Tok::kLBracket)) {
        Expr read;
        read.kind = ExprKind::kArrayRead;
        read.name = std::move(name);
        read.loc = loc;
        read.operands.push_back(ParseExpr());
        Expect(Tok::kRBracket);
        return read;
      }
      return Expr::Var(std::move(name), loc);
    }
    Fail("expected an expression");
  }

  StatementId NextId() { return StatementId{++statement_counter_}; }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int statement_counter_ = 0;
  int assertion_counter_ = 0;
};

}  // namespace

std::string Diagnostic::ToString() const {
  std::ostringstream os;
  os << loc.line << ":" << loc.column << ": "
     << (kind == Kind::kSyntax ? "syntax error: " : "error: ") << message;
  return os.str();
}

std::string ParseResult::DiagnosticText() const {
  std::string out;
  for (const auto& d : diagnostics) {
    out += d.ToString();
    out += "\n";
  }
  return out;
}

ParseResult ParseSyntax(std::string_view source) {
  ParseResult result;
  try {
    Parser parser(Lexer(source).Run());
    result.program = parser.ParseProgram();
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back({Diagnostic::Kind::kSyntax, e.loc, e.message});
  }
  return result;
}

ParseResult Parse(std::string_view source) {
  ParseResult result = ParseSyntax(source);
  if (!result.program) return result;
  result.diagnostics = CheckProgram(*result.program);
  if (!result.diagnostics.empty()) result.program.reset();
  return result;
}

Program ParseOrThrow(std::string_view source, std::string_view origin) {
  ParseResult result = Parse(source);
  if (!result.ok()) {
    std::string msg;
    for (const auto& d : result.diagnostics) {
      msg += std::string(origin) + ":" + d.ToString() + "\n";
    }
    if (!msg.empty()) msg.pop_back();
    throw Error(msg);
  }
  return std::move(*result.program);
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Program LoadProgramFile(const std::filesystem::path& path) {
  return ParseOrThrow(ReadTextFile(path), path.string());
}

}  // namespace hccov
