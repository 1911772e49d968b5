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

#include <gtest/gtest.h>

#include <functional>

#include "action_enum.h"
#include "scforge/errors.h"

namespace scforge {
namespace {

using testing::RefMatch;
using testing::SmallPatterns;
using testing::SmallValues;

Call MakeCall(std::string name, std::vector<Pattern> args) {
  return Call{std::move(name), std::move(args), false};
}

TEST(MatchCallTest, ConsBindsHeadAndTail) {
  Call c = MakeCall("f", {Pattern::Cons(Pattern::Var("a"), Pattern::Var("as"))});
  auto v = MatchCall(c, Message{"f", {Value(List{Value(1), Value(2)})}});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->at("a"), Value(1));
  EXPECT_EQ(v->at("as"), Value(List{Value(2)}));
}

TEST(MatchCallTest, VariableBindsAnything) {
  auto v = MatchCall(MakeCall("f", {Pattern::Var("x")}), Message{"f", {7}});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->at("x"), Value(7));
}

TEST(MatchCallTest, NilRejectsNonEmpty) {
  EXPECT_FALSE(MatchCall(MakeCall("f", {Pattern::Nil()}),
                         Message{"f", {Value(List{Value(1)})}}));
}

TEST(MatchCallTest, PlusLitInverts) {
  Call c = MakeCall("f", {Pattern::Plus("i", 1)});
  auto v = MatchCall(c, Message{"f", {5}});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->at("i"), Value(4));
  EXPECT_EQ(EvalPattern(c.args[0], *v), Value(5));
}

TEST(MatchCallTest, NameAndArityMustAgree) {
  EXPECT_FALSE(MatchCall(MakeCall("f", {Pattern::Var("x")}), Message{"g", {1}}));
  EXPECT_FALSE(MatchCall(MakeCall("f", {}), Message{"f", {1}}));
}

TEST(CallExprTest, NamesInputsByPosition) {
  Call c = MakeCall("f", {Pattern::Nil(),
                          Pattern::Cons(Pattern::Var("x"), Pattern::Nil())});
  EXPECT_EQ(ToString(CallExprOf(c)), "f(inp1, inp2)");
  EXPECT_EQ(ToString(CallExprOf(MakeCall("g", {}))), "g()");
}

TEST(MatchCondTest, Examples) {
  EXPECT_EQ(ToString(MatchCondOf(MakeCall(
                "f", {Pattern::Cons(Pattern::Var("a"), Pattern::Nil())}))),
            "matchPattern(inp1, a:[])");
  EXPECT_TRUE(MatchCondOf(MakeCall("g", {})).is_true());
  EXPECT_EQ(ToString(MatchCondOf(MakeCall(
                "f", {Pattern::Var("x"), Pattern::Lit(Value(3))}))),
            "true && matchPattern(inp2, 3)");
}

TEST(EvalCondTest, Basics) {
  Cond c = Cond::And(Cond::Not(Cond::False()), Cond::True());
  EXPECT_TRUE(EvalCond(c, {}, {}));
  Cond eq = Cond::Compare(Cond::Kind::kEq, Expr::Var("x"), Expr::Int(3));
  EXPECT_TRUE(EvalCond(eq, {{"x", 3}}, {}));
  EXPECT_FALSE(EvalCond(eq, {{"x", 4}}, {}));
  EXPECT_THROW(EvalCond(eq, {}, {}), UnboundVariable);
  EXPECT_THROW(EvalCond(eq, {{"x", 3}}, {{"x", 4}}), ConflictingValuation);
}

TEST(EvalCondTest, MatchBindingsThreadThroughAnd) {
  Cond c = Cond::And(
      Cond::Match("inp1", Pattern::Cons(Pattern::Var("a"), Pattern::Var("as"))),
      Cond::Compare(Cond::Kind::kEq, Expr::Var("a"), Expr::Int(1)));
  EXPECT_TRUE(EvalCond(c, {}, {{"inp1", Value(List{Value(1), Value(2)})}}));
  EXPECT_FALSE(EvalCond(c, {}, {{"inp1", Value(List{Value(2)})}}));
}

TEST(EvalCondTest, NegationScopesBindings) {
  Cond c = Cond::And(Cond::Not(Cond::Match("inp1", Pattern::Nil())),
                     Cond::True());
  auto env = EvalCondBinding(c, {{"inp1", Value(1)}});
  ASSERT_TRUE(env);
  EXPECT_EQ(env->size(), 1u);
}

TEST(ExecStmtTest, Examples) {
  EXPECT_EQ(ExecStmt(Stmt{}, {{"x", 1}}, {}).store, (Valuation{{"x", 1}}));
  auto r = ExecStmt(
      Stmt{{Prim::Assign("x", Expr::Add(Expr::Int(1), Expr::Int(1)))}}, {}, {});
  EXPECT_EQ(r.store, (Valuation{{"x", 2}}));
  EXPECT_TRUE(r.sent.empty());
  auto s = ExecStmt(Stmt{{Prim::Send("send", {Expr::Var("v")})}}, {{"v", 3}}, {});
  EXPECT_EQ(s.store, (Valuation{{"v", 3}}));
  EXPECT_EQ(ToString(s.sent), "<send(3)>");
}

TEST(ExecStmtTest, TimerFlag) {
  auto r = ExecStmt(Stmt{{Prim::SetTimer()}}, {}, {});
  EXPECT_EQ(r.store.at(std::string(kTimerFlag)), Value(true));
  r = ExecStmt(Stmt{{Prim::StopTimer()}}, r.store, {});
  EXPECT_EQ(r.store.at(std::string(kTimerFlag)), Value(false));
}

TEST(ExecStmtTest, ReadsStoreThenValuation) {
  auto r = ExecStmt(Stmt{{Prim::Assign("y", Expr::Var("i")),
                          Prim::Assign("i", Expr::Int(9)),
                          Prim::Assign("z", Expr::Var("i"))}},
                    {}, {{"i", 4}});
  EXPECT_EQ(r.store.at("y"), Value(4));
  EXPECT_EQ(r.store.at("z"), Value(9));
}

TEST(SeqActionsTest, ChecksIntermediateCondition) {
  Action a1{Stmt{{Prim::Assign("x", Expr::Int(1))}},
            Cond::Compare(Cond::Kind::kEq, Expr::Var("x"), Expr::Int(1))};
  Action a2{Stmt{{Prim::Assign("x", Expr::Int(2))}},
            Cond::Compare(Cond::Kind::kEq, Expr::Var("x"), Expr::Int(2))};
  Action s = SeqActions(a1, a2);
  EXPECT_EQ(ToString(s.stmt), "x = 1 & check [x == 1] & x = 2");
  EXPECT_EQ(ExecStmt(s.stmt, {}, {}).store.at("x"), Value(2));
  Action bad{Stmt{{Prim::Assign("x", Expr::Int(5))}},
             Cond::Compare(Cond::Kind::kEq, Expr::Var("x"), Expr::Int(1))};
  EXPECT_THROW(ExecStmt(SeqActions(bad, a2).stmt, {}, {}),
               ActionConditionViolated);
  EXPECT_EQ(SeqActions(a1, Action{}).post_or_true(), Cond::True());
  EXPECT_EQ(ToString(SeqActions(Action{}, Action{}).stmt), "check [true]");
}

TEST(StmtTest, ConcatenationAssociativeWithSkipIdentity) {
  std::vector<Stmt> pieces = {
      Stmt{},
      Stmt{{Prim::Assign("x", Expr::Add(Expr::Var("x"), Expr::Int(1)))}},
      Stmt{{Prim::Send("out", {Expr::Var("x")})}},
      Stmt{{Prim::Assign("x", Expr::Int(0)), Prim::Send("o", {})}}};
  Valuation store{{"x", 5}};
  for (const auto& a : pieces) {
    EXPECT_EQ(ExecStmt(a & Stmt{}, store, {}), ExecStmt(a, store, {}));
    EXPECT_EQ(ExecStmt(Stmt{} & a, store, {}), ExecStmt(a, store, {}));
    for (const auto& b : pieces) {
      auto ab = ExecStmt(a & b, store, {});
      auto ra = ExecStmt(a, store, {});
      auto rb = ExecStmt(b, ra.store, {});
      EXPECT_EQ(ab.store, rb.store);
      std::vector<Message> sent = ra.sent;
      sent.insert(sent.end(), rb.sent.begin(), rb.sent.end());
      EXPECT_EQ(ab.sent, sent);
      for (const auto& c : pieces) {
        EXPECT_EQ(ExecStmt((a & b) & c, store, {}),
                  ExecStmt(a & (b & c), store, {}));
      }
    }
  }
}

// Exhaustive: every pattern against every value, single and paired calls.
TEST(MatchCallExhaustiveTest, AgreesWithReferenceAndRoundTrips) {
  auto patterns = SmallPatterns();
  auto values = SmallValues();
  int checked = 0;
  for (const auto& p : patterns) {
    for (const auto& v : values) {
      Call c = MakeCall("f", {p});
      auto got = MatchCall(c, Message{"f", {v}});
      std::vector<std::pair<std::string, Value>> ref;
      bool ok = RefMatch(p, v, ref);
      ASSERT_EQ(got.has_value(), ok) << ToString(p) << " vs " << ToString(v);
      if (!ok) continue;
      for (const auto& [name, val] : ref) EXPECT_EQ(got->at(name), val);
      EXPECT_EQ(EvalPattern(p, *got), v);
      Valuation inputs{{"inp1", v}};
      EXPECT_TRUE(EvalCond(MatchCondOf(c), {}, inputs));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(MatchCondExhaustiveTest, AgreesWithMatchCallOnPairs) {
  auto patterns = SmallPatterns();
  auto values = SmallValues();
  auto rename = [](Pattern p, const std::string& suffix) {
    std::function<void(Pattern&)> go = [&](Pattern& q) {
      if (!q.var.empty()) q.var += suffix;
      for (auto& part : q.parts) go(part);
    };
    go(p);
    return p;
  };
  for (size_t i = 0; i < patterns.size(); i += 3) {
    for (size_t j = 0; j < patterns.size(); j += 5) {
      Call c = MakeCall("f", {patterns[i], rename(patterns[j], "2")});
      for (const auto& v1 : values) {
        for (const auto& v2 : values) {
          bool expected = MatchCall(c, Message{"f", {v1, v2}}).has_value();
          Valuation inputs{{"inp1", v1}, {"inp2", v2}};
          ASSERT_EQ(EvalCond(MatchCondOf(c), {}, inputs), expected);
          ASSERT_EQ(EvalCond(BindingCondOf(c), {}, inputs), expected);
        }
      }
    }
  }
}

TEST(ActionsTest, Projections) {
  Call c = MakeCall("f", {Pattern::Cons(Pattern::Var("a"), Pattern::Var("as"))});
  EXPECT_EQ(NameOf(c), "f");
  EXPECT_FALSE(IsException(c));
  Call e{"overflow", {}, true};
  EXPECT_TRUE(IsException(e));
}

TEST(ActionsTest, Identifiers) {
  EXPECT_TRUE(IsIdent("a_1"));
  EXPECT_TRUE(IsIdent("$x"));
  EXPECT_FALSE(IsIdent("1a"));
  EXPECT_FALSE(IsIdent(""));
  EXPECT_TRUE(IsInputParamName("inp12"));
  EXPECT_FALSE(IsInputParamName("inp"));
  EXPECT_FALSE(IsInputParamName("input"));
}

}  // namespace
}  // namespace scforge
