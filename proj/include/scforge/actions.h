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

#ifndef SCFORGE_ACTIONS_H_
#define SCFORGE_ACTIONS_H_

// Closed action language used for guards, triggers and statements: ground
// values, call patterns, conditions, statements and actions, together with
// the evaluation functions that realize condition evaluation, call matching
// and statement execution.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace scforge {

// Store flag toggled by setTimer/stopTimer.
inline constexpr std::string_view kTimerFlag = "$timer";
// Trigger name injected by the environment while the timer flag is set.
inline constexpr std::string_view kTimeoutName = "timeout";

// True for identifiers matching the IDENT lexeme: [A-Za-z_$][A-Za-z0-9_$]*.
bool IsIdent(std::string_view text);

// True for `inp<digits>`, the names generated by CallExprOf.
bool IsInputParamName(std::string_view text);

// Name of the i-th (1-based) generated input parameter.
std::string InputParamName(int index);

struct Value;
using List = std::vector<Value>;

struct Value {
  std::variant<std::int64_t, bool, List> data;

  Value() : data(std::int64_t{0}) {}
  Value(std::int64_t i) : data(i) {}  // NOLINT(runtime/explicit)
  Value(int i) : data(std::int64_t{i}) {}  // NOLINT(runtime/explicit)
  Value(bool b) : data(b) {}  // NOLINT(runtime/explicit)
  Value(List l) : data(std::move(l)) {}  // NOLINT(runtime/explicit)

  bool is_int() const { return data.index() == 0; }
  bool is_bool() const { return data.index() == 1; }
  bool is_list() const { return data.index() == 2; }
  std::int64_t as_int() const;
  bool as_bool() const;
  const List& as_list() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
};

using Valuation = std::map<std::string, Value>;

struct Pattern {
  enum class Kind { kVar, kLit, kNil, kCons, kPlus };

  Kind kind = Kind::kVar;
  std::string var;         // kVar, kPlus
  Value lit;               // kLit
  std::int64_t offset = 0;  // kPlus: matches var + offset
  std::vector<Pattern> parts;  // kCons: {head, tail}

  static Pattern Var(std::string name);
  static Pattern Lit(Value v);
  static Pattern Nil();
  static Pattern Cons(Pattern head, Pattern tail);
  static Pattern Plus(std::string name, std::int64_t offset);

  friend bool operator==(const Pattern& a, const Pattern& b);
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);
};

// Arithmetic and list expressions appearing in comparisons, assignments and
// send arguments.
struct Expr {
  enum class Kind { kInt, kBool, kVar, kNil, kList, kCons, kAdd, kSub, kNeg };

  Kind kind = Kind::kInt;
  std::int64_t ival = 0;
  bool bval = false;
  std::string var;
  std::vector<Expr> args;

  static Expr Int(std::int64_t v);
  static Expr Bool(bool b);
  static Expr Var(std::string name);
  static Expr Nil();
  static Expr ListOf(std::vector<Expr> elems);
  static Expr Cons(Expr head, Expr tail);
  static Expr Add(Expr a, Expr b);
  static Expr Sub(Expr a, Expr b);
  static Expr Neg(Expr a);

  friend bool operator==(const Expr& a, const Expr& b);
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);
};

struct Cond {
  enum class Kind {
    kTrue,
    kFalse,
    kVar,
    kEq,
    kNe,
    kLt,
    kLe,
    kGt,
    kGe,
    kNot,
    kAnd,
    kOr,
    kMatch
  };

  Kind kind = Kind::kTrue;
  std::string var;              // kVar, kMatch
  std::vector<Expr> operands;   // comparisons
  std::vector<Cond> kids;       // kNot (1), kAnd/kOr (2)
  std::vector<Pattern> pattern;  // kMatch (1)

  static Cond True();
  static Cond False();
  static Cond Var(std::string name);
  static Cond Compare(Kind op, Expr lhs, Expr rhs);
  static Cond Not(Cond c);
  static Cond And(Cond a, Cond b);
  static Cond Or(Cond a, Cond b);
  static Cond Match(std::string var, Pattern p);

  bool is_true() const { return kind == Kind::kTrue; }

  friend bool operator==(const Cond& a, const Cond& b);
  friend std::strong_ordering operator<=>(const Cond& a, const Cond& b);
};

// Left-nested conjunction; empty input yields `true`.
Cond ConjoinAll(const std::vector<Cond>& conds);

struct Call {
  std::string name;
  std::vector<Pattern> args;
  bool exception = false;

  friend bool operator==(const Call&, const Call&) = default;
  friend std::strong_ordering operator<=>(const Call&, const Call&) = default;
};

struct Message {
  std::string name;
  std::vector<Value> args;
  bool exception = false;

  friend bool operator==(const Message&, const Message&) = default;
  friend std::strong_ordering operator<=>(const Message&,
                                          const Message&) = default;
};

struct Prim {
  enum class Kind { kAssign, kSend, kSetTimer, kStopTimer, kCheck };

  Kind kind = Kind::kSetTimer;
  std::string name;       // assignment target or sent operation
  std::vector<Expr> args;  // kAssign: {rhs}; kSend: arguments
  bool exception = false;  // kSend
  std::vector<Cond> check;  // kCheck (1)

  static Prim Assign(std::string var, Expr rhs);
  static Prim Send(std::string name, std::vector<Expr> args,
                   bool exception = false);
  static Prim SetTimer();
  static Prim StopTimer();
  static Prim Check(Cond c);

  friend bool operator==(const Prim&, const Prim&) = default;
  friend std::strong_ordering operator<=>(const Prim&, const Prim&) = default;
};

// A statement sequence. The empty sequence is `skip`.
struct Stmt {
  std::vector<Prim> prims;

  bool is_skip() const { return prims.empty(); }

  friend bool operator==(const Stmt&, const Stmt&) = default;
  friend std::strong_ordering operator<=>(const Stmt&, const Stmt&) = default;
};

// Statement concatenation `&`.
Stmt operator&(const Stmt& a, const Stmt& b);

struct Action {
  Stmt stmt;
  std::optional<Cond> post;  // absent means `true`

  Cond post_or_true() const { return post.value_or(Cond::True()); }

  friend bool operator==(const Action&, const Action&) = default;
  friend std::strong_ordering operator<=>(const Action&,
                                          const Action&) = default;
};

// ----------------------------------------------------------------------------
// Call matching.

// Matches `pattern` against `value`, extending `env`. A variable that is
// already bound must be bound to an equal value. On failure `env` may hold
// partial bindings; callers pass a copy.
bool MatchPattern(const Pattern& pattern, const Value& value, Valuation& env);

// Binds all pattern variables of `call` against the arguments of `message`,
// or returns nullopt when names, arities or any pattern disagree.
std::optional<Valuation> MatchCall(const Call& call, const Message& message);

// Reconstructs the value a pattern denotes under a valuation.
Value EvalPattern(const Pattern& pattern, const Valuation& env);

// f(p1, ..., pk) -> f(inp1, ..., inpk).
Call CallExprOf(const Call& call);

// Conjunction over positions of matchPattern(inp<i>, p_i); a variable pattern
// contributes `true`.
Cond MatchCondOf(const Call& call);

// Like MatchCondOf but also emits matchPattern(inp<i>, x) for variable
// patterns, so every pattern variable of `call` is bound on success.
Cond BindingCondOf(const Call& call);

inline const std::string& NameOf(const Call& call) { return call.name; }
inline bool IsException(const Call& call) { return call.exception; }

std::vector<std::string> PatternVars(const Pattern& pattern);
std::vector<std::string> CallVars(const Call& call);

// ----------------------------------------------------------------------------
// Evaluation.

// Union of two valuations; throws ConflictingValuation on a clash.
Valuation Merge(const Valuation& store, const Valuation& v);

Value EvalExpr(const Expr& expr, const Valuation& env);

// Evaluates `cond` under merge(store, v). Throws UnboundVariable,
// ConflictingValuation or TypeMismatch.
bool EvalCond(const Cond& cond, const Valuation& store, const Valuation& v);

// Evaluates `cond` under `env`. When true, returns `env` extended with the
// bindings introduced by matchPattern conjuncts along the satisfied path.
// Bindings made under `!` do not escape.
std::optional<Valuation> EvalCondBinding(const Cond& cond,
                                         const Valuation& env);

struct ExecResult {
  Valuation store;
  std::vector<Message> sent;

  friend bool operator==(const ExecResult&, const ExecResult&) = default;
};

// Executes `stmt` left to right. Reads consult `store` first, then `v`;
// assignments write to the store. A failing `check` throws
// ActionConditionViolated.
ExecResult ExecStmt(const Stmt& stmt, const Valuation& store,
                    const Valuation& v);

// The `+` operator: a1.stmt & check(a1.post) & a2.stmt with post a2.post.
Action SeqActions(const Action& a1, const Action& a2);

// Variables written by assignments in `stmt`.
std::vector<std::string> AssignedVars(const Stmt& stmt);

// Free variable references, in first-occurrence order.
std::vector<std::string> FreeVars(const Expr& expr);
std::vector<std::string> FreeVars(const Cond& cond);
std::vector<std::string> FreeVars(const Stmt& stmt);

// ----------------------------------------------------------------------------
// Text rendering in the concrete syntax accepted by the parser.

std::string ToString(const Value& v);
std::string ToString(const Pattern& p);
std::string ToString(const Expr& e);
std::string ToString(const Cond& c);
std::string ToString(const Call& c);
std::string ToString(const Message& m);
std::string ToString(const Prim& p);
std::string ToString(const Stmt& s);
std::string ToString(const Valuation& v);
// "/ stmt [post]" form used after a trigger or an entry/exit/do keyword.
std::string ToString(const Action& a);

std::string ToString(const std::vector<Message>& ms);

}  // namespace scforge

#endif  // SCFORGE_ACTIONS_H_
