// Copyright 2026 The scforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scforge/actions.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "scforge/errors.h"

namespace scforge {

bool IsIdent(std::string_view text) {
  if (text.empty()) return false;
  auto head = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  auto tail = [&](char c) {
    return head(c) || std::isdigit(static_cast<unsigned char>(c));
  };
  if (!head(text[0])) return false;
  return std::all_of(text.begin() + 1, text.end(), tail);
}

bool IsInputParamName(std::string_view text) {
  if (text.size() < 4 || text.substr(0, 3) != "inp") return false;
  return std::all_of(text.begin() + 3, text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

std::string InputParamName(int index) { return "inp" + std::to_string(index); }

std::int64_t Value::as_int() const {
  if (!is_int()) throw TypeMismatch("expected integer, got " + ToString(*this));
  return std::get<std::int64_t>(data);
}

bool Value::as_bool() const {
  if (!is_bool()) throw TypeMismatch("expected boolean, got " + ToString(*this));
  return std::get<bool>(data);
}

const List& Value::as_list() const {
  if (!is_list()) throw TypeMismatch("expected list, got " + ToString(*this));
  return std::get<List>(data);
}

// ----------------------------------------------------------------------------
// Ordering. Written out by hand: defaulted comparisons on these recursive
// types trip constraint recursion in GCC 11.

namespace {

template <typename T>
std::strong_ordering CompareSeq(const std::vector<T>& a,
                                const std::vector<T>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

}  // namespace

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = a.data.index() <=> b.data.index(); c != 0) return c;
  switch (a.data.index()) {
    case 0:
      return std::get<std::int64_t>(a.data) <=> std::get<std::int64_t>(b.data);
    case 1:
      return std::get<bool>(a.data) <=> std::get<bool>(b.data);
    default:
      return CompareSeq(std::get<List>(a.data), std::get<List>(b.data));
  }
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.var <=> b.var; c != 0) return c;
  if (auto c = a.lit <=> b.lit; c != 0) return c;
  if (auto c = a.offset <=> b.offset; c != 0) return c;
  return CompareSeq(a.parts, b.parts);
}

bool operator==(const Pattern& a, const Pattern& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.ival <=> b.ival; c != 0) return c;
  if (auto c = a.bval <=> b.bval; c != 0) return c;
  if (auto c = a.var <=> b.var; c != 0) return c;
  return CompareSeq(a.args, b.args);
}

bool operator==(const Expr& a, const Expr& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Cond& a, const Cond& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.var <=> b.var; c != 0) return c;
  if (auto c = CompareSeq(a.operands, b.operands); c != 0) return c;
  if (auto c = CompareSeq(a.kids, b.kids); c != 0) return c;
  return CompareSeq(a.pattern, b.pattern);
}

bool operator==(const Cond& a, const Cond& b) { return (a <=> b) == 0; }

// ----------------------------------------------------------------------------
// Constructors.

Pattern Pattern::Var(std::string name) {
  Pattern p;
  p.kind = Kind::kVar;
  p.var = std::move(name);
  return p;
}

Pattern Pattern::Lit(Value v) {
  Pattern p;
  p.kind = Kind::kLit;
  p.lit = std::move(v);
  return p;
}

Pattern Pattern::Nil() {
  Pattern p;
  p.kind = Kind::kNil;
  return p;
}

Pattern Pattern::Cons(Pattern head, Pattern tail) {
  Pattern p;
  p.kind = Kind::kCons;
  p.parts = {std::move(head), std::move(tail)};
  return p;
}

Pattern Pattern::Plus(std::string name, std::int64_t offset) {
  Pattern p;
  p.kind = Kind::kPlus;
  p.var = std::move(name);
  p.offset = offset;
  return p;
}

Expr Expr::Int(std::int64_t v) {
  Expr e;
  e.kind = Kind::kInt;
  e.ival = v;
  return e;
}

Expr Expr::Bool(bool b) {
  Expr e;
  e.kind = Kind::kBool;
  e.bval = b;
  return e;
}

Expr Expr::Var(std::string name) {
  Expr e;
  e.kind = Kind::kVar;
  e.var = std::move(name);
  return e;
}

Expr Expr::Nil() {
  Expr e;
  e.kind = Kind::kNil;
  return e;
}

Expr Expr::ListOf(std::vector<Expr> elems) {
  Expr e;
  e.kind = Kind::kList;
  e.args = std::move(elems);
  return e;
}

Expr Expr::Cons(Expr head, Expr tail) {
  Expr e;
  e.kind = Kind::kCons;
  e.args = {std::move(head), std::move(tail)};
  return e;
}

Expr Expr::Add(Expr a, Expr b) {
  Expr e;
  e.kind = Kind::kAdd;
  e.args = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::Sub(Expr a, Expr b) {
  Expr e;
  e.kind = Kind::kSub;
  e.args = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::Neg(Expr a) {
  Expr e;
  e.kind = Kind::kNeg;
  e.args = {std::move(a)};
  return e;
}

Cond Cond::True() { return Cond{}; }

Cond Cond::False() {
  Cond c;
  c.kind = Kind::kFalse;
  return c;
}

Cond Cond::Var(std::string name) {
  Cond c;
  c.kind = Kind::kVar;
  c.var = std::move(name);
  return c;
}

Cond Cond::Compare(Kind op, Expr lhs, Expr rhs) {
  Cond c;
  c.kind = op;
  c.operands = {std::move(lhs), std::move(rhs)};
  return c;
}

Cond Cond::Not(Cond inner) {
  Cond c;
  c.kind = Kind::kNot;
  c.kids = {std::move(inner)};
  return c;
}

Cond Cond::And(Cond a, Cond b) {
  Cond c;
  c.kind = Kind::kAnd;
  c.kids = {std::move(a), std::move(b)};
  return c;
}

Cond Cond::Or(Cond a, Cond b) {
  Cond c;
  c.kind = Kind::kOr;
  c.kids = {std::move(a), std::move(b)};
  return c;
}

Cond Cond::Match(std::string var, Pattern p) {
  Cond c;
  c.kind = Kind::kMatch;
  c.var = std::move(var);
  c.pattern = {std::move(p)};
  return c;
}

Cond ConjoinAll(const std::vector<Cond>& conds) {
  if (conds.empty()) return Cond::True();
  Cond acc = conds.front();
  for (size_t i = 1; i < conds.size(); ++i) acc = Cond::And(acc, conds[i]);
  return acc;
}

Prim Prim::Assign(std::string var, Expr rhs) {
  Prim p;
  p.kind = Kind::kAssign;
  p.name = std::move(var);
  p.args = {std::move(rhs)};
  return p;
}

Prim Prim::Send(std::string name, std::vector<Expr> args, bool exception) {
  Prim p;
  p.kind = Kind::kSend;
  p.name = std::move(name);
  p.args = std::move(args);
  p.exception = exception;
  return p;
}

Prim Prim::SetTimer() {
  Prim p;
  p.kind = Kind::kSetTimer;
  return p;
}

Prim Prim::StopTimer() {
  Prim p;
  p.kind = Kind::kStopTimer;
  return p;
}

Prim Prim::Check(Cond c) {
  Prim p;
  p.kind = Kind::kCheck;
  p.check = {std::move(c)};
  return p;
}

Stmt operator&(const Stmt& a, const Stmt& b) {
  Stmt out = a;
  out.prims.insert(out.prims.end(), b.prims.begin(), b.prims.end());
  return out;
}

// ----------------------------------------------------------------------------
// Matching.

namespace {

bool Bind(const std::string& name, const Value& value, Valuation& env) {
  auto [it, inserted] = env.emplace(name, value);
  return inserted || it->second == value;
}

}  // namespace

bool MatchPattern(const Pattern& pattern, const Value& value, Valuation& env) {
  switch (pattern.kind) {
    case Pattern::Kind::kVar:
      return Bind(pattern.var, value, env);
    case Pattern::Kind::kLit:
      return pattern.lit == value;
    case Pattern::Kind::kNil:
      return value.is_list() && value.as_list().empty();
    case Pattern::Kind::kCons: {
      if (!value.is_list() || value.as_list().empty()) return false;
      const List& l = value.as_list();
      List rest(l.begin() + 1, l.end());
      return MatchPattern(pattern.parts[0], l.front(), env) &&
             MatchPattern(pattern.parts[1], Value(std::move(rest)), env);
    }
    case Pattern::Kind::kPlus:
      if (!value.is_int()) return false;
      return Bind(pattern.var, Value(value.as_int() - pattern.offset), env);
  }
  return false;
}

std::optional<Valuation> MatchCall(const Call& call, const Message& message) {
  if (call.name != message.name || call.args.size() != message.args.size()) {
    return std::nullopt;
  }
  Valuation env;
  for (size_t i = 0; i < call.args.size(); ++i) {
    if (!MatchPattern(call.args[i], message.args[i], env)) return std::nullopt;
  }
  return env;
}

Value EvalPattern(const Pattern& pattern, const Valuation& env) {
  switch (pattern.kind) {
    case Pattern::Kind::kVar: {
      auto it = env.find(pattern.var);
      if (it == env.end()) throw UnboundVariable(pattern.var);
      return it->second;
    }
    case Pattern::Kind::kLit:
      return pattern.lit;
    case Pattern::Kind::kNil:
      return Value(List{});
    case Pattern::Kind::kCons: {
      Value head = EvalPattern(pattern.parts[0], env);
      Value tail = EvalPattern(pattern.parts[1], env);
      List out{head};
      const List& t = tail.as_list();
      out.insert(out.end(), t.begin(), t.end());
      return Value(std::move(out));
    }
    case Pattern::Kind::kPlus: {
      auto it = env.find(pattern.var);
      if (it == env.end()) throw UnboundVariable(pattern.var);
      return Value(it->second.as_int() + pattern.offset);
    }
  }
  return Value();
}

Call CallExprOf(const Call& call) {
  Call out;
  out.name = call.name;
  out.exception = call.exception;
  for (size_t i = 0; i < call.args.size(); ++i) {
    out.args.push_back(Pattern::Var(InputParamName(static_cast<int>(i) + 1)));
  }
  return out;
}

Cond MatchCondOf(const Call& call) {
  std::vector<Cond> conjuncts;
  for (size_t i = 0; i < call.args.size(); ++i) {
    const Pattern& p = call.args[i];
    if (p.kind == Pattern::Kind::kVar) {
      conjuncts.push_back(Cond::True());
    } else {
      conjuncts.push_back(
          Cond::Match(InputParamName(static_cast<int>(i) + 1), p));
    }
  }
  return ConjoinAll(conjuncts);
}

Cond BindingCondOf(const Call& call) {
  std::vector<Cond> conjuncts;
  for (size_t i = 0; i < call.args.size(); ++i) {
    conjuncts.push_back(
        Cond::Match(InputParamName(static_cast<int>(i) + 1), call.args[i]));
  }
  return ConjoinAll(conjuncts);
}

namespace {

void CollectPatternVars(const Pattern& p, std::vector<std::string>& out) {
  switch (p.kind) {
    case Pattern::Kind::kVar:
    case Pattern::Kind::kPlus:
      out.push_back(p.var);
      break;
    case Pattern::Kind::kCons:
      CollectPatternVars(p.parts[0], out);
      CollectPatternVars(p.parts[1], out);
      break;
    default:
      break;
  }
}

void AddUnique(std::vector<std::string>& out, const std::string& name) {
  if (std::find(out.begin(), out.end(), name) == out.end()) {
    out.push_back(name);
  }
}

}  // namespace

std::vector<std::string> PatternVars(const Pattern& pattern) {
  std::vector<std::string> out;
  CollectPatternVars(pattern, out);
  return out;
}

std::vector<std::string> CallVars(const Call& call) {
  std::vector<std::string> out;
  for (const auto& p : call.args) CollectPatternVars(p, out);
  return out;
}

// ----------------------------------------------------------------------------
// Evaluation.

Valuation Merge(const Valuation& store, const Valuation& v) {
  Valuation out = store;
  for (const auto& [name, value] : v) {
    auto [it, inserted] = out.emplace(name, value);
    if (!inserted && it->second != value) {
      throw ConflictingValuation(name + " bound to " + ToString(it->second) +
                                 " and " + ToString(value));
    }
  }
  return out;
}

namespace {

const Value& Lookup(const std::string& name, const Valuation& a,
                    const Valuation* b = nullptr) {
  auto it = a.find(name);
  if (it != a.end()) return it->second;
  if (b != nullptr) {
    auto jt = b->find(name);
    if (jt != b->end()) return jt->second;
  }
  throw UnboundVariable(name);
}

Value EvalExprIn(const Expr& e, const Valuation& a, const Valuation* b) {
  switch (e.kind) {
    case Expr::Kind::kInt:
      return Value(e.ival);
    case Expr::Kind::kBool:
      return Value(e.bval);
    case Expr::Kind::kVar:
      return Lookup(e.var, a, b);
    case Expr::Kind::kNil:
      return Value(List{});
    case Expr::Kind::kList: {
      List out;
      for (const auto& x : e.args) out.push_back(EvalExprIn(x, a, b));
      return Value(std::move(out));
    }
    case Expr::Kind::kCons: {
      Value head = EvalExprIn(e.args[0], a, b);
      Value tail = EvalExprIn(e.args[1], a, b);
      List out{head};
      const List& t = tail.as_list();
      out.insert(out.end(), t.begin(), t.end());
      return Value(std::move(out));
    }
    case Expr::Kind::kAdd:
      return Value(EvalExprIn(e.args[0], a, b).as_int() +
                   EvalExprIn(e.args[1], a, b).as_int());
    case Expr::Kind::kSub:
      return Value(EvalExprIn(e.args[0], a, b).as_int() -
                   EvalExprIn(e.args[1], a, b).as_int());
    case Expr::Kind::kNeg:
      return Value(-EvalExprIn(e.args[0], a, b).as_int());
  }
  return Value();
}

}  // namespace

Value EvalExpr(const Expr& expr, const Valuation& env) {
  return EvalExprIn(expr, env, nullptr);
}

std::optional<Valuation> EvalCondBinding(const Cond& cond,
                                         const Valuation& env) {
  using K = Cond::Kind;
  auto verdict = [&](bool b) -> std::optional<Valuation> {
    if (b) return env;
    return std::nullopt;
  };
  switch (cond.kind) {
    case K::kTrue:
      return env;
    case K::kFalse:
      return std::nullopt;
    case K::kVar:
      return verdict(Lookup(cond.var, env).as_bool());
    case K::kEq:
      return verdict(EvalExpr(cond.operands[0], env) ==
                     EvalExpr(cond.operands[1], env));
    case K::kNe:
      return verdict(EvalExpr(cond.operands[0], env) !=
                     EvalExpr(cond.operands[1], env));
    case K::kLt:
    case K::kLe:
    case K::kGt:
    case K::kGe: {
      std::int64_t l = EvalExpr(cond.operands[0], env).as_int();
      std::int64_t r = EvalExpr(cond.operands[1], env).as_int();
      bool b = cond.kind == K::kLt   ? l < r
               : cond.kind == K::kLe ? l <= r
               : cond.kind == K::kGt ? l > r
                                     : l >= r;
      return verdict(b);
    }
    case K::kNot:
      return verdict(!EvalCondBinding(cond.kids[0], env).has_value());
    case K::kAnd: {
      auto left = EvalCondBinding(cond.kids[0], env);
      if (!left) return std::nullopt;
      return EvalCondBinding(cond.kids[1], *left);
    }
    case K::kOr: {
      auto left = EvalCondBinding(cond.kids[0], env);
      if (left) return left;
      return EvalCondBinding(cond.kids[1], env);
    }
    case K::kMatch: {
      Valuation out = env;
      if (MatchPattern(cond.pattern[0], Lookup(cond.var, env), out)) {
        return out;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool EvalCond(const Cond& cond, const Valuation& store, const Valuation& v) {
  return EvalCondBinding(cond, Merge(store, v)).has_value();
}

ExecResult ExecStmt(const Stmt& stmt, const Valuation& store,
                    const Valuation& v) {
  ExecResult result{store, {}};
  for (const Prim& p : stmt.prims) {
    switch (p.kind) {
      case Prim::Kind::kAssign:
        result.store[p.name] = EvalExprIn(p.args[0], result.store, &v);
        break;
      case Prim::Kind::kSend: {
        Message m{p.name, {}, p.exception};
        for (const auto& a : p.args) {
          m.args.push_back(EvalExprIn(a, result.store, &v));
        }
        result.sent.push_back(std::move(m));
        break;
      }
      case Prim::Kind::kSetTimer:
        result.store[std::string(kTimerFlag)] = Value(true);
        break;
      case Prim::Kind::kStopTimer:
        result.store[std::string(kTimerFlag)] = Value(false);
        break;
      case Prim::Kind::kCheck:
        if (!EvalCond(p.check[0], result.store, v)) {
          throw ActionConditionViolated("check [" + ToString(p.check[0]) +
                                        "] failed");
        }
        break;
    }
  }
  return result;
}

Action SeqActions(const Action& a1, const Action& a2) {
  Action out;
  out.stmt = a1.stmt & Stmt{{Prim::Check(a1.post_or_true())}} & a2.stmt;
  out.post = a2.post_or_true();
  return out;
}

std::vector<std::string> AssignedVars(const Stmt& stmt) {
  std::vector<std::string> out;
  for (const auto& p : stmt.prims) {
    if (p.kind == Prim::Kind::kAssign) AddUnique(out, p.name);
  }
  return out;
}

namespace {

void CollectExprVars(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::kVar) AddUnique(out, e.var);
  for (const auto& a : e.args) CollectExprVars(a, out);
}

void CollectCondVars(const Cond& c, std::vector<std::string>& out) {
  if (c.kind == Cond::Kind::kVar || c.kind == Cond::Kind::kMatch) {
    AddUnique(out, c.var);
  }
  for (const auto& e : c.operands) CollectExprVars(e, out);
  for (const auto& k : c.kids) CollectCondVars(k, out);
}

}  // namespace

std::vector<std::string> FreeVars(const Expr& expr) {
  std::vector<std::string> out;
  CollectExprVars(expr, out);
  return out;
}

std::vector<std::string> FreeVars(const Cond& cond) {
  std::vector<std::string> out;
  CollectCondVars(cond, out);
  return out;
}

std::vector<std::string> FreeVars(const Stmt& stmt) {
  std::vector<std::string> out;
  for (const auto& p : stmt.prims) {
    for (const auto& a : p.args) CollectExprVars(a, out);
    for (const auto& c : p.check) CollectCondVars(c, out);
  }
  return out;
}

// ----------------------------------------------------------------------------
// Rendering.

std::string ToString(const Value& v) {
  if (v.is_int()) return std::to_string(v.as_int());
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  std::string out = "[";
  const List& l = v.as_list();
  for (size_t i = 0; i < l.size(); ++i) {
    if (i) out += ", ";
    out += ToString(l[i]);
  }
  return out + "]";
}

std::string ToString(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::kVar:
      return p.var;
    case Pattern::Kind::kLit:
      return ToString(p.lit);
    case Pattern::Kind::kNil:
      return "[]";
    case Pattern::Kind::kCons: {
      std::string head = ToString(p.parts[0]);
      if (p.parts[0].kind == Pattern::Kind::kCons) head = "(" + head + ")";
      return head + ":" + ToString(p.parts[1]);
    }
    case Pattern::Kind::kPlus:
      if (p.offset >= 0) return p.var + "+" + std::to_string(p.offset);
      return p.var + "-" + std::to_string(-p.offset);
  }
  return "";
}

namespace {

// Expression precedence: 0 cons, 1 additive, 2 unary, 3 atom.
int ExprLevel(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kCons:
      return 0;
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return 1;
    case Expr::Kind::kNeg:
      return 2;
    case Expr::Kind::kInt:
      return e.ival < 0 ? 2 : 3;
    default:
      return 3;
  }
}

std::string ExprAt(const Expr& e, int min_level) {
  std::string s = ToString(e);
  if (ExprLevel(e) < min_level) return "(" + s + ")";
  return s;
}

}  // namespace

std::string ToString(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kInt:
      return std::to_string(e.ival);
    case Expr::Kind::kBool:
      return e.bval ? "true" : "false";
    case Expr::Kind::kVar:
      return e.var;
    case Expr::Kind::kNil:
      return "[]";
    case Expr::Kind::kList: {
      std::string out = "[";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += ToString(e.args[i]);
      }
      return out + "]";
    }
    case Expr::Kind::kCons:
      return ExprAt(e.args[0], 1) + ":" + ExprAt(e.args[1], 0);
    case Expr::Kind::kAdd:
      return ExprAt(e.args[0], 1) + " + " + ExprAt(e.args[1], 2);
    case Expr::Kind::kSub:
      return ExprAt(e.args[0], 1) + " - " + ExprAt(e.args[1], 2);
    case Expr::Kind::kNeg:
      return "-" + ExprAt(e.args[0], 3);
  }
  return "";
}

namespace {

// Condition precedence: 0 or, 1 and, 2 not, 3 atom.
int CondLevel(const Cond& c) {
  switch (c.kind) {
    case Cond::Kind::kOr:
      return 0;
    case Cond::Kind::kAnd:
      return 1;
    case Cond::Kind::kNot:
      return 2;
    default:
      return 3;
  }
}

std::string CondAt(const Cond& c, int min_level) {
  std::string s = ToString(c);
  if (CondLevel(c) < min_level) return "(" + s + ")";
  return s;
}

const char* CompareOp(Cond::Kind k) {
  switch (k) {
    case Cond::Kind::kEq:
      return " == ";
    case Cond::Kind::kNe:
      return " != ";
    case Cond::Kind::kLt:
      return " < ";
    case Cond::Kind::kLe:
      return " <= ";
    case Cond::Kind::kGt:
      return " > ";
    case Cond::Kind::kGe:
      return " >= ";
    default:
      return " ? ";
  }
}

}  // namespace

std::string ToString(const Cond& c) {
  switch (c.kind) {
    case Cond::Kind::kTrue:
      return "true";
    case Cond::Kind::kFalse:
      return "false";
    case Cond::Kind::kVar:
      return c.var;
    case Cond::Kind::kNot:
      return "!" + CondAt(c.kids[0], 3);
    case Cond::Kind::kAnd:
      return CondAt(c.kids[0], 1) + " && " + CondAt(c.kids[1], 2);
    case Cond::Kind::kOr:
      return CondAt(c.kids[0], 0) + " || " + CondAt(c.kids[1], 1);
    case Cond::Kind::kMatch:
      return "matchPattern(" + c.var + ", " + ToString(c.pattern[0]) + ")";
    default:
      return ToString(c.operands[0]) + CompareOp(c.kind) +
             ToString(c.operands[1]);
  }
}

std::string ToString(const Call& c) {
  std::string out = c.exception ? "exception " : "";
  out += c.name + "(";
  for (size_t i = 0; i < c.args.size(); ++i) {
    if (i) out += ", ";
    out += ToString(c.args[i]);
  }
  return out + ")";
}

std::string ToString(const Message& m) {
  std::string out = m.exception ? "exception " : "";
  out += m.name + "(";
  for (size_t i = 0; i < m.args.size(); ++i) {
    if (i) out += ", ";
    out += ToString(m.args[i]);
  }
  return out + ")";
}

std::string ToString(const std::vector<Message>& ms) {
  std::string out = "<";
  for (size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ", ";
    out += ToString(ms[i]);
  }
  return out + ">";
}

std::string ToString(const Prim& p) {
  switch (p.kind) {
    case Prim::Kind::kAssign:
      return p.name + " = " + ToString(p.args[0]);
    case Prim::Kind::kSend: {
      std::string out = p.exception ? "exception " : "";
      out += p.name + "(";
      for (size_t i = 0; i < p.args.size(); ++i) {
        if (i) out += ", ";
        out += ToString(p.args[i]);
      }
      return out + ")";
    }
    case Prim::Kind::kSetTimer:
      return "setTimer";
    case Prim::Kind::kStopTimer:
      return "stopTimer";
    case Prim::Kind::kCheck:
      return "check [" + ToString(p.check[0]) + "]";
  }
  return "";
}

std::string ToString(const Stmt& s) {
  if (s.prims.empty()) return "skip";
  std::string out;
  for (size_t i = 0; i < s.prims.size(); ++i) {
    if (i) out += " & ";
    out += ToString(s.prims[i]);
  }
  return out;
}

std::string ToString(const Action& a) {
  std::string out = "/ " + ToString(a.stmt);
  if (a.post) out += " [" + ToString(*a.post) + "]";
  return out;
}

std::string ToString(const Valuation& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, val] : v) {
    if (!first) out += ", ";
    first = false;
    out += k + "=" + ToString(val);
  }
  return out + "}";
}

}  // namespace scforge
