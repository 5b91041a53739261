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

#include "hccov/interpreter.h"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "hccov/error.h"

namespace hccov {
namespace {

struct TrapSignal {
  TrapKind kind;
  StatementId stmt;
};
struct AssertionFailure {
  AssertionId site;
};
struct TimeoutSignal {};

struct Frame {
  int activation = 0;
  std::int64_t call_event = -1;  // binding event of this activation
  std::unordered_map<std::string, Value> locals;
};

// Where the statement currently being executed sits.
struct Context {
  StatementId stmt;
  std::optional<std::int64_t> ctrl_parent;
  std::optional<std::int64_t> call_parent;
};

struct ExecResult {
  bool returned = false;
  std::optional<Value> value;
};

void Normalize(std::vector<Location>& locs) {
  std::sort(locs.begin(), locs.end());
  locs.erase(std::unique(locs.begin(), locs.end()), locs.end());
}

std::int64_t Wrap(unsigned long long v) { return static_cast<std::int64_t>(v); }

class Machine {
 public:
  Machine(const Program& program, const ExecConfig& config, const Probe* probe,
          Trace& trace)
      : program_(program), config_(config), probe_(probe), trace_(trace) {
    for (const auto& g : program.globals) {
      if (g.is_array) {
        arrays_[g.name] = g.init;
      } else {
        scalars_[g.name] = Value::Int(g.init[0]);
      }
    }
  }

  void RunTestBody(const TestCase& test) {
    Frame frame;
    frame.activation = next_activation_++;
    for (const Statement& s : test.body) {
      Exec(s, frame, std::nullopt, std::nullopt);
      if (probe_ != nullptr && s.id == probe_->after && !probe_value_) {
        probe_value_ = EvalQuiet(probe_->expr, frame);
      }
    }
  }

  std::int64_t steps() const { return steps_; }
  const std::optional<Value>& probe_value() const { return probe_value_; }

 private:
  std::int64_t Emit(TraceEvent event) {
    if (steps_ >= config_.step_limit) throw TimeoutSignal{};
    event.idx = steps_++;
    Normalize(event.defs);
    Normalize(event.uses);
    if (config_.record_trace) trace_.events.push_back(std::move(event));
    return steps_ - 1;
  }

  [[noreturn]] void Trap(TrapKind kind, const Context& ctx) const {
    throw TrapSignal{kind, ctx.stmt};
  }

  std::int64_t AsInt(const Value& v, const Context& ctx) const {
    if (v.is_bool) Trap(TrapKind::kTypeError, ctx);
    return v.number;
  }

  bool AsBool(const Value& v, const Context& ctx) const {
    if (!v.is_bool) Trap(TrapKind::kTypeError, ctx);
    return v.number != 0;
  }

  Location Resolve(const std::string& name, const Frame& frame) const {
    if (frame.locals.count(name)) return Location::Local(frame.activation, name);
    return Location::Global(name);
  }

  std::int64_t CheckedIndex(const std::string& array, std::int64_t index,
                            const Context& ctx) const {
    const auto& values = arrays_.at(array);
    if (index < 0 || index >= static_cast<std::int64_t>(values.size())) {
      Trap(TrapKind::kIndexOutOfBounds, ctx);
    }
    return index;
  }

  Value Eval(const Expr& e, Frame& frame, std::vector<Location>& uses,
             const Context& ctx) {
    switch (e.kind) {
      case ExprKind::kIntLiteral:
        return Value::Int(e.int_value);
      case ExprKind::kBoolLiteral:
        return Value::Bool(e.bool_value);
      case ExprKind::kVarRead: {
        auto it = frame.locals.find(e.name);
        if (it != frame.locals.end()) {
          uses.push_back(Location::Local(frame.activation, e.name));
          return it->second;
        }
        uses.push_back(Location::Global(e.name));
        return scalars_.at(e.name);
      }
      case ExprKind::kArrayRead: {
        std::int64_t index = AsInt(Eval(e.operands[0], frame, uses, ctx), ctx);
        CheckedIndex(e.name, index, ctx);
        uses.push_back(Location::GlobalElement(e.name, index));
        return Value::Int(arrays_.at(e.name)[static_cast<std::size_t>(index)]);
      }
      case ExprKind::kUnary: {
        Value v = Eval(e.operands[0], frame, uses, ctx);
        if (e.unary_op == UnaryOp::kNot) return Value::Bool(!AsBool(v, ctx));
        return Value::Int(Wrap(0ULL - static_cast<unsigned long long>(AsInt(v, ctx))));
      }
      case ExprKind::kBinary:
        return EvalBinary(e, frame, uses, ctx);
      case ExprKind::kCall: {
        std::optional<Value> result = EvalCall(e, frame, uses, ctx);
        if (!result) Trap(TrapKind::kMissingReturnValue, ctx);
        return *result;
      }
    }
    Trap(TrapKind::kTypeError, ctx);
  }

  Value EvalBinary(const Expr& e, Frame& frame, std::vector<Location>& uses,
                   const Context& ctx) {
    Value lhs = Eval(e.operands[0], frame, uses, ctx);
    if (e.binary_op == BinaryOp::kAnd || e.binary_op == BinaryOp::kOr) {
      bool l = AsBool(lhs, ctx);
      if (e.binary_op == BinaryOp::kAnd && !l) return Value::Bool(false);
      if (e.binary_op == BinaryOp::kOr && l) return Value::Bool(true);
      return Value::Bool(AsBool(Eval(e.operands[1], frame, uses, ctx), ctx));
    }
    Value rhs = Eval(e.operands[1], frame, uses, ctx);
    if (e.binary_op == BinaryOp::kEq || e.binary_op == BinaryOp::kNe) {
      if (lhs.is_bool != rhs.is_bool) Trap(TrapKind::kTypeError, ctx);
      bool eq = lhs.number == rhs.number;
      return Value::Bool(e.binary_op == BinaryOp::kEq ? eq : !eq);
    }
    std::int64_t a = AsInt(lhs, ctx);
    std::int64_t b = AsInt(rhs, ctx);
    auto ua = static_cast<unsigned long long>(a);
    auto ub = static_cast<unsigned long long>(b);
    constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    switch (e.binary_op) {
      case BinaryOp::kAdd: return Value::Int(Wrap(ua + ub));
      case BinaryOp::kSub: return Value::Int(Wrap(ua - ub));
      case BinaryOp::kMul: return Value::Int(Wrap(ua * ub));
      case BinaryOp::kDiv:
        if (b == 0) Trap(TrapKind::kDivByZero, ctx);
        if (a == kMin && b == -1) return Value::Int(kMin);
        return Value::Int(a / b);
      case BinaryOp::kMod:
        if (b == 0) Trap(TrapKind::kDivByZero, ctx);
        if (a == kMin && b == -1) return Value::Int(0);
        return Value::Int(a % b);
      case BinaryOp::kLt: return Value::Bool(a < b);
      case BinaryOp::kLe: return Value::Bool(a <= b);
      case BinaryOp::kGt: return Value::Bool(a > b);
      case BinaryOp::kGe: return Value::Bool(a >= b);
      default: break;
    }
    Trap(TrapKind::kTypeError, ctx);
  }

  // Emits the binding event, runs the callee and records a use of its
  // call-result location in `uses`.
  std::optional<Value> EvalCall(const Expr& e, Frame& frame,
                                std::vector<Location>& uses, const Context& ctx) {
    const Function* callee = program_.FindFunction(e.name);
    std::vector<Location> arg_uses;
    std::vector<Value> args;
    args.reserve(e.operands.size());
    for (const Expr& arg : e.operands) {
      args.push_back(Eval(arg, frame, arg_uses, ctx));
    }
    if (depth_ >= config_.max_call_depth) Trap(TrapKind::kStackOverflow, ctx);

    Frame callee_frame;
    callee_frame.activation = next_activation_++;
    TraceEvent binding;
    binding.kind = EventKind::kCallBinding;
    binding.stmt = ctx.stmt;
    binding.uses = std::move(arg_uses);
    binding.ctrl_parent = ctx.ctrl_parent;
    binding.call_parent = ctx.call_parent;
    for (std::size_t i = 0; i < callee->params.size(); ++i) {
      binding.defs.push_back(
          Location::Local(callee_frame.activation, callee->params[i]));
      callee_frame.locals[callee->params[i]] = args[i];
    }
    std::int64_t call_idx = Emit(std::move(binding));
    callee_frame.call_event = call_idx;

    ++depth_;
    std::optional<Value> result;
    for (const Statement& s : callee->body) {
      ExecResult r = Exec(s, callee_frame, std::nullopt, call_idx);
      if (r.returned) {
        result = r.value;
        break;
      }
    }
    --depth_;
    uses.push_back(Location::CallResult(call_idx));
    return result;
  }

  // Evaluation without def/use bookkeeping, for probes.
  std::optional<Value> EvalQuiet(const Expr& e, Frame& frame) {
    std::vector<Location> ignored;
    Context ctx;
    try {
      return Eval(e, frame, ignored, ctx);
    } catch (const TrapSignal&) {
      return std::nullopt;
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
  }

  ExecResult ExecBlock(const std::vector<Statement>& block, Frame& frame,
                       std::optional<std::int64_t> ctrl,
                       std::optional<std::int64_t> call) {
    for (const Statement& s : block) {
      ExecResult r = Exec(s, frame, ctrl, call);
      if (r.returned) return r;
    }
    return {};
  }

  ExecResult Exec(const Statement& s, Frame& frame,
                  std::optional<std::int64_t> ctrl,
                  std::optional<std::int64_t> call) {
    Context ctx{s.id, ctrl, call};
    TraceEvent event;
    event.stmt = s.id;
    event.ctrl_parent = ctrl;
    event.call_parent = call;
    switch (s.kind) {
      case StmtKind::kAssign: {
        Value v = Eval(s.value, frame, event.uses, ctx);
        Location target;
        if (frame.locals.count(s.target) || !scalars_.count(s.target)) {
          target = Location::Local(frame.activation, s.target);
          frame.locals[s.target] = v;
        } else {
          target = Location::Global(s.target);
          scalars_[s.target] = v;
        }
        event.defs.push_back(std::move(target));
        Emit(std::move(event));
        return {};
      }
      case StmtKind::kArrayAssign: {
        std::int64_t index = AsInt(Eval(s.index, frame, event.uses, ctx), ctx);
        Value v = Eval(s.value, frame, event.uses, ctx);
        std::int64_t stored = AsInt(v, ctx);
        CheckedIndex(s.target, index, ctx);
        arrays_[s.target][static_cast<std::size_t>(index)] = stored;
        event.defs.push_back(Location::GlobalElement(s.target, index));
        Emit(std::move(event));
        return {};
      }
      case StmtKind::kIf: {
        bool taken = AsBool(Eval(s.value, frame, event.uses, ctx), ctx);
        event.kind = EventKind::kPredicate;
        event.outcome = taken;
        std::int64_t pred = Emit(std::move(event));
        return ExecBlock(taken ? s.body : s.else_body, frame, pred, call);
      }
      case StmtKind::kWhile: {
        for (;;) {
          TraceEvent check;
          check.stmt = s.id;
          check.kind = EventKind::kPredicate;
          check.ctrl_parent = ctrl;
          check.call_parent = call;
          bool taken = AsBool(Eval(s.value, frame, check.uses, ctx), ctx);
          check.outcome = taken;
          std::int64_t pred = Emit(std::move(check));
          if (!taken) return {};
          ExecResult r = ExecBlock(s.body, frame, pred, call);
          if (r.returned) return r;
        }
      }
      case StmtKind::kCall: {
        std::vector<Location> discarded;
        EvalCall(s.value, frame, discarded, ctx);
        return {};
      }
      case StmtKind::kReturn: {
        ExecResult r;
        r.returned = true;
        if (s.has_value) {
          r.value = Eval(s.value, frame, event.uses, ctx);
          event.defs.push_back(Location::CallResult(frame.call_event));
        }
        Emit(std::move(event));
        return r;
      }
      case StmtKind::kAssert: {
        if (!s.enabled) return {};
        Context assert_ctx{StatementId{}, ctrl, call};
        event.kind = EventKind::kAssertion;
        event.stmt = StatementId{};
        event.assertion = s.assertion;
        bool ok = AsBool(Eval(s.value, frame, event.uses, assert_ctx), assert_ctx);
        Emit(std::move(event));
        if (!ok) throw AssertionFailure{s.assertion};
        return {};
      }
    }
    return {};
  }

  const Program& program_;
  const ExecConfig& config_;
  const Probe* probe_;
  Trace& trace_;
  std::unordered_map<std::string, Value> scalars_;
  std::unordered_map<std::string, std::vector<std::int64_t>> arrays_;
  std::int64_t steps_ = 0;
  int next_activation_ = 0;
  int depth_ = 0;
  std::optional<Value> probe_value_;
};

}  // namespace

Expr Value::ToExpr() const {
  return is_bool ? Expr::Bool(number != 0) : Expr::Int(number);
}

std::string Value::ToString() const {
  if (is_bool) return number ? "true" : "false";
  return std::to_string(number);
}

TestRun RunTest(const Program& program, const std::string& test,
                const ExecConfig& config, const Probe* probe) {
  const TestCase* tc = program.FindTest(test);
  if (tc == nullptr) throw Error("no such test: " + test);
  if (config.step_limit <= 0) throw Error("step limit must be positive");

  TestRun run;
  run.trace.test = test;
  run.outcome.test = test;
  Machine machine(program, config, probe, run.trace);
  try {
    machine.RunTestBody(*tc);
    run.outcome.status = TestOutcome::Status::kPass;
  } catch (const AssertionFailure& f) {
    run.outcome.status = TestOutcome::Status::kAssertionFailure;
    run.outcome.failed_assertion = f.site;
  } catch (const TrapSignal& t) {
    run.outcome.status = TestOutcome::Status::kTrap;
    run.outcome.trap = t.kind;
    run.outcome.trap_stmt = t.stmt;
  } catch (const TimeoutSignal&) {
    run.outcome.status = TestOutcome::Status::kTimeout;
  }
  run.outcome.steps = machine.steps();
  run.probe_value = machine.probe_value();
  return run;
}

SuiteRun RunSuite(const Program& program, const ExecConfig& config) {
  SuiteRun suite;
  for (const auto& t : program.tests) {
    suite.emplace(t.name, RunTest(program, t.name, config));
  }
  return suite;
}

std::int64_t TotalSteps(const SuiteRun& run) {
  std::int64_t total = 0;
  for (const auto& [name, r] : run) total += r.outcome.steps;
  return total;
}

std::vector<SlicingCriterion> GenerateCriteria(const SuiteRun& run) {
  std::vector<SlicingCriterion> out;
  for (const auto& [name, r] : run) {
    for (const TraceEvent& e : r.trace.events) {
      if (e.kind != EventKind::kAssertion) continue;
      out.push_back({name, e.idx, e.uses});
    }
  }
  return out;
}

}  // namespace hccov
