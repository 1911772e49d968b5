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

#include "scforge/transform.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "scforge/errors.h"
#include "scforge/gen.h"
#include "scforge/wellformedness.h"

namespace scforge {
namespace {

std::string Fixture(const std::string& name) {
  std::ifstream in(std::string(SCFORGE_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SCFull P(const std::string& text) { return Parse(text, ParseOptions{true}); }

using Names = std::vector<std::string>;

Binding Only(int rule, const SCFull& sc) {
  std::vector<Binding> bs = FindBindings(rule, sc);
  EXPECT_EQ(bs.size(), 1u) << RuleName(rule);
  return bs.at(0);
}

// Expected charts are written out by hand, then compared structurally.
void ExpectApplies(int rule, const std::string& before,
                   const std::string& after) {
  SCFull sc = P(before);
  SCFull got = ApplyRule(sc, Only(rule, sc));
  SCFull want = P(after);
  EXPECT_EQ(got, want) << "got:\n" << Print(got) << "\nwant:\n" << Print(want);
}

// ---------------------------------------------------------------------------

TEST(QueriesTest, SubstatesAndSuperstates) {
  SCFull sc = P("statechart D { state A { state X; } }");
  EXPECT_EQ(Substates(sc, "A"), Names{"X"});
  EXPECT_EQ(Superstates(sc, "X"), Names{"A"});
  EXPECT_TRUE(Superstates(sc, "A").empty());
  EXPECT_FALSE(TopInitial(sc));
  EXPECT_TRUE(SimpleState(sc, "X"));
  EXPECT_FALSE(SimpleState(sc, "A"));
}

TEST(QueriesTest, DoActionIsNotSimple) {
  SCFull sc = P("statechart D { state A { do / out(1); } }");
  EXPECT_FALSE(SimpleState(sc, "A"));
}

TEST(QueriesTest, SuperstateListsAndLcs) {
  SCFull sc = P(
      "statechart D { state A { state B { state X; } state Y; } state Q; }");
  EXPECT_EQ(ListOfAllSuperstates(sc, "X"), (Names{"B", "A"}));
  EXPECT_EQ(ListOfSuperstates(sc, "X", std::string("A")), Names{"B"});
  EXPECT_EQ(ListOfSuperstates(sc, "X", std::nullopt), (Names{"B", "A"}));
  EXPECT_EQ(Lcs(sc, "X", "Y"), std::optional<std::string>("A"));
  EXPECT_EQ(Lcs(sc, "B", "Y"), std::optional<std::string>("A"));
  EXPECT_EQ(Lcs(sc, "X", "X"), std::optional<std::string>("B"));
  EXPECT_EQ(Lcs(sc, "A", "Q"), std::nullopt);
  EXPECT_EQ(CommonSuperstates(sc, "X", "B"), Names{"A"});
}

TEST(QueriesTest, SameCallAndPrios) {
  SCFull sc = P(
      "statechart D { state A; state B;"
      " A -> B : f(); <<prio = 2>> A -> A : f(); A -> B : g(); }");
  std::vector<std::vector<Trans>> gs = CallGroups(sc, "A");
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0].size(), 2u);
  EXPECT_TRUE(SameCall(sc, "A", gs[0]));
  EXPECT_FALSE(SameCall(sc, "A", {gs[0][0]}));  // not maximal
  EXPECT_FALSE(NoPrios(gs[0]));
  EXPECT_TRUE(NoPrios(gs[1]));
}

TEST(QueriesTest, InitialIrrelevance) {
  // Z's initial marker serves nothing: B has no ingoing transition and is
  // not below a top-level initial state.
  SCFull sc = P(
      "statechart D { state B { initial state Z; }"
      " initial state A { initial state X; state Y; } B -> A : f(); }");
  EXPECT_TRUE(InitialIrrelevant(sc, "Z"));
  EXPECT_FALSE(InitialIrrelevant(sc, "X"));
  EXPECT_FALSE(InitialIrrelevant(sc, "A"));
  SCFull none = P("statechart D { state B { initial state Z; } }");
  EXPECT_FALSE(InitialIrrelevant(none, "Z"));
}

TEST(QueriesTest, FinalIrrelevance) {
  SCFull sc = P(
      "statechart D { state B { final state Z; }"
      " final state A { final state X; } A -> B : f(); }");
  EXPECT_TRUE(FinalIrrelevant(sc, "Z"));
  EXPECT_FALSE(FinalIrrelevant(sc, "X"));
}

TEST(QueriesTest, FlatAndSimplified) {
  EXPECT_TRUE(FlatAndSimplified(P(Fixture("buffer.sc"))));
  EXPECT_FALSE(FlatAndSimplified(P("statechart D { state A { do / out(1); } }")));
  EXPECT_FALSE(FlatAndSimplified(
      P("statechart D { state A { state X; } state B; B -> A : f(); }")));
  EXPECT_TRUE(FlatAndSimplified(P("statechart D { state A { state X; } }")));
}

// ---------------------------------------------------------------------------

TEST(RuleNamesTest, Bijection) {
  std::set<std::string> seen;
  for (int r = 1; r <= kRuleCount; ++r) {
    EXPECT_EQ(RuleNumber(RuleName(r)), r);
    seen.insert(RuleName(r));
  }
  EXPECT_EQ(seen.size(), 26u);
  EXPECT_STREQ(RuleName(1), "elimDo");
  EXPECT_STREQ(RuleName(14), "elimPrio");
  EXPECT_STREQ(RuleName(26), "completionException");
  EXPECT_EQ(RuleNumber("nosuchrule"), 0);
}

TEST(FindBindingsTest, Examples) {
  EXPECT_EQ(FindBindings(1, P("statechart D { state A { do / out(1); } state B; }")).size(),
            1u);
  EXPECT_TRUE(FindBindings(4, P("statechart D { initial state A; state B; }")).empty());
  EXPECT_TRUE(FindBindings(
                  10, P("<<prio:inner>> statechart D { state A { final state X; }"
                        " state B; A -> B : f(); }"))
                  .empty());
  EXPECT_EQ(FindBindings(
                10, P("statechart D { state A { final state X; } state B; A -> B : f(); }"))
                .size(),
            1u);
}

TEST(ApplyRuleTest, StaleBinding) {
  SCFull sc = P("statechart D { state A { do / out(1); } }");
  Binding b = Only(1, sc);
  SCFull next = ApplyRule(sc, b);
  EXPECT_THROW(ApplyRule(next, b), BindingStale);
}

TEST(RuleOracleTest, ElimDo) {
  ExpectApplies(1,
                "statechart D { state A { entry / out(0) [x > 0];"
                " exit / out(2); do / out(1) [x < 5]; } }",
                "statechart D { state A { entry / out(0) & setTimer [x > 0];"
                " exit / out(2) & stopTimer;"
                " -> : [true] timeout() / out(1) & setTimer [x < 5]; } }");
  // Absent entry and exit become pure timer statements.
  ExpectApplies(1, "statechart D { state A { do / out(1); } }",
                "statechart D { state A { entry / setTimer; exit / stopTimer;"
                " -> : [true] timeout() / out(1) & setTimer; } }");
}

TEST(RuleOracleTest, ElimInternalT1) {
  ExpectApplies(2,
                "statechart D { state A { -> : [x > 0] f(y) / out(y);"
                " state X; state Y; } }",
                "statechart D { state A { state X; state Y; }"
                " X -> X : [x > 0] f(y) / out(y); Y -> Y : [x > 0] f(y) / out(y); }");
}

TEST(RuleOracleTest, ElimInternalT2FreshName) {
  ExpectApplies(3,
                "statechart D { state A { -> : f(); } state A$inner1; }",
                "statechart D { state A { initial final state A$inner2; }"
                " state A$inner1; A$inner2 -> A$inner2 : f(); }");
}

TEST(RuleOracleTest, AddInitTop) {
  ExpectApplies(4, "statechart D { state A; state B { state X; } }",
                "statechart D { initial state A; initial state B { state X; } }");
}

TEST(RuleOracleTest, AddInitSubNeedsUse) {
  SCFull sc = P("statechart D { initial state Q; state A { state X; state Y; } }");
  EXPECT_TRUE(FindBindings(5, sc).empty());
  ExpectApplies(5,
                "statechart D { initial state Q; state A { state X; state Y; }"
                " Q -> A : f(); }",
                "statechart D { initial state Q;"
                " state A { initial state X; initial state Y; } Q -> A : f(); }");
}

TEST(RuleOracleTest, ForwardToSub) {
  ExpectApplies(6,
                "statechart D { initial state Q;"
                " state A { initial state S1; initial state S2; state S3; }"
                " Q -> A : f(y) / out(y); }",
                "statechart D { initial state Q;"
                " state A { initial state S1; initial state S2; state S3; }"
                " Q -> S1 : f(y) / out(y); Q -> S2 : f(y) / out(y); }");
}

TEST(RuleOracleTest, DeleteInitSub) {
  ExpectApplies(7,
                "statechart D { state B { initial state Z; } initial state A; }",
                "statechart D { state B { state Z; } initial state A; }");
}

TEST(RuleOracleTest, BackwardToSub) {
  ExpectApplies(10,
                "statechart D { state A { final state X; final state Y; state Z; }"
                " state B; A -> B : f(); }",
                "statechart D { state A { final state X; final state Y; state Z; }"
                " state B; X -> B : f(); Y -> B : f(); }");
}

constexpr char kPrioChart[] =
    " statechart D { state A { initial final state X; } initial state Q;"
    " state R; state T; Q -> A : g(); A -> R : f(y) / out(y);"
    " X -> T : [y > 0] f(y); }";

TEST(RuleOracleTest, BackwardToSubPrioInner) {
  // The outer transition yields to every inner one on the same trigger.
  ExpectApplies(11, std::string("<<prio:inner>>") + kPrioChart,
                "<<prio:inner>> statechart D { state A { initial final state X; }"
                " initial state Q; state R; state T; Q -> A : g();"
                " X -> R : [!(matchPattern(inp1, y) && y > 0) && matchPattern(inp1, y)]"
                " f(inp1) / out(y);"
                " X -> T : [y > 0] f(y); }");
}

TEST(RuleOracleTest, BackwardToSubPrioOuter) {
  // The inner transition yields to the outer one.
  ExpectApplies(12, std::string("<<prio:outer>>") + kPrioChart,
                "<<prio:outer>> statechart D { state A { initial final state X; }"
                " initial state Q; state R; state T; Q -> A : g();"
                " X -> R : f(y) / out(y);"
                " X -> T : [!matchPattern(inp1, y) && (matchPattern(inp1, y) && y > 0)]"
                " f(inp1); }");
}

TEST(RuleOracleTest, BackwardToSubPrioKeepsStereotype) {
  ExpectApplies(13,
                "<<prio:inner>> statechart D { state A { final state X; } state B;"
                " <<prio = 3>> A -> B : f(); }",
                "<<prio:inner>> statechart D { state A { final state X; } state B;"
                " <<prio = 3>> X -> B : f(); }");
}

TEST(RuleOracleTest, ElimPrio) {
  ExpectApplies(14,
                "statechart D { initial state A; state B; state C;"
                " <<prio = 2>> A -> B : f(y); A -> C : [y > 0] f(y); }",
                "statechart D { initial state A; state B; state C;"
                " A -> B : [matchPattern(inp1, y)] f(inp1);"
                " A -> C : [!matchPattern(inp1, y) && (matchPattern(inp1, y) && y > 0)]"
                " f(inp1); }");
}

TEST(RuleOracleTest, ElimPrioEqualPrioritiesStayUnordered) {
  ExpectApplies(14,
                "statechart D { state A; state B;"
                " <<prio = 1>> A -> B : f(); <<prio = 1>> A -> A : f(); }",
                "statechart D { state A; state B; A -> B : f(); A -> A : f(); }");
}

TEST(RuleOracleTest, MoveExitActions) {
  ExpectApplies(16,
                "statechart D { state A { exit / out(1);"
                " state X { exit / out(2) [x > 0]; } final state Y; }"
                " state Q; X -> Q : f() / out(3); }",
                "statechart D { state A { exit / out(1); state X; final state Y; }"
                " state Q; X -> Q : f() / out(2) & out(1) & out(3) [x > 0]; }");
}

TEST(RuleOracleTest, MoveExitActionsStopsAtLcs) {
  ExpectApplies(16,
                "statechart D { state A { exit / out(1);"
                " state X { exit / out(2); } final state Y; }"
                " X -> Y : f(); }",
                "statechart D { state A { exit / out(1); state X; final state Y; }"
                " X -> Y : f() / out(2); }");
}

TEST(RuleOracleTest, MoveExitActionsSeq) {
  ExpectApplies(17,
                "<<action conditions:sequential>> statechart D {"
                " state A { exit / out(1); state X { exit / out(2) [x > 0]; }"
                " final state Y; } state Q; X -> Q : f() / out(3) [x < 9]; }",
                "<<action conditions:sequential>> statechart D {"
                " state A { exit / out(1); state X; final state Y; } state Q;"
                " X -> Q : f() / out(2) & check[x > 0] & out(1) & check[true]"
                " & out(3) [x < 9]; }");
}

TEST(RuleOracleTest, RemoveExitAction) {
  ExpectApplies(18, "statechart D { state A { exit / out(1); } }",
                "statechart D { state A; }");
}

TEST(RuleOracleTest, MoveEntryActions) {
  ExpectApplies(19,
                "statechart D { initial state Q; state A { entry / out(1);"
                " initial state Y; state X { entry / out(2) [x > 0]; } }"
                " Q -> X : f() / out(0); }",
                "statechart D { initial state Q; state A { entry / out(1);"
                " initial state Y; state X; }"
                " Q -> X : f() / out(0) & out(1) & out(2) [x > 0]; }");
}

TEST(RuleOracleTest, MoveEntryActionsSeq) {
  ExpectApplies(20,
                "<<action conditions:sequential>> statechart D { initial state Q;"
                " state X { entry / out(2) [x > 0]; }"
                " Q -> X : f() / out(0) [x < 9]; }",
                "<<action conditions:sequential>> statechart D { initial state Q;"
                " state X; Q -> X : f() / out(0) & check[x < 9] & out(2)"
                " [x < 9 && x > 0]; }");
}

TEST(RuleOracleTest, RemoveEntryAction) {
  ExpectApplies(21, "statechart D { initial state A { entry / out(1); } }",
                "statechart D { initial state A; }");
}

TEST(RuleOracleTest, MoveInvariant) {
  ExpectApplies(22, "statechart D { state A { [x > 0]; state X { [x < 5]; } state Y; } }",
                "statechart D { state A { state X { [x > 0 && x < 5]; }"
                " state Y { [x > 0]; } } }");
}

TEST(RuleOracleTest, RemoveHierarchy) {
  ExpectApplies(23, "statechart D { state A { initial final state X; } }",
                "statechart D { initial final state X; }");
}

TEST(RuleOracleTest, CompletionIgnore) {
  ExpectApplies(24,
                "<<completion:ignore>> statechart D { initial state A; state B;"
                " A -> B : [y > 0] f(y); B -> A : g(); }",
                "<<completion:ignore>> statechart D { initial state A; state B;"
                " A -> B : [y > 0] f(y); B -> A : g();"
                " A -> A : [!(matchPattern(inp1, y) && y > 0)] f(inp1);"
                " A -> A : g();"
                " B -> B : f(inp1);"
                " B -> B : [!true] g(); }");
}

TEST(RuleOracleTest, CompletionIsIdempotent) {
  SCFull sc = P(
      "<<completion:ignore>> statechart D { initial state A; state B;"
      " A -> B : [y > 0] f(y); B -> A : g(); }");
  SCFull once = ApplyRule(sc, Only(24, sc));
  EXPECT_TRUE(FindBindings(24, once).empty());
}

TEST(RuleOracleTest, CompletionError) {
  ExpectApplies(25,
                "<<completion:error>> statechart D { initial state A; <<error>> state E;"
                " A -> A : f(); }",
                "<<completion:error>> statechart D { initial state A; <<error>> state E;"
                " A -> A : f(); A -> E : [!true] f(); E -> E : f(); }");
}

TEST(RuleOracleTest, CompletionException) {
  ExpectApplies(26,
                "statechart D { initial state A; <<exception>> state X;"
                " A -> A : exception e(y); A -> X : g(); }",
                "statechart D { initial state A; <<exception>> state X;"
                " A -> A : exception e(y); A -> X : g();"
                " A -> X : [!matchPattern(inp1, y)] exception e(inp1);"
                " X -> X : exception e(inp1); }");
}

// ---------------------------------------------------------------------------

TEST(FixpointTest, FlatChartIsIdentity) {
  SCFull sc = P("statechart D { initial final state A; state B; A -> B : f(); }");
  TransformResult r = TransformFixpoint(sc);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.chart, sc);
}

TEST(FixpointTest, SingleHierarchicalState) {
  SCFull sc = P(
      "statechart D { initial final state Q; state A { initial final state X; }"
      " Q -> A : f(); A -> Q : g(); }");
  TransformResult r = TransformFixpoint(sc);
  std::set<std::string> used;
  for (const TraceEntry& e : r.trace) used.insert(RuleName(e.rule));
  EXPECT_TRUE(used.count("forwardToSub"));
  EXPECT_TRUE(used.count("backwardToSub"));
  EXPECT_TRUE(used.count("removeHierarchy"));
  EXPECT_EQ(r.chart, P("statechart D { initial final state Q; initial final state X;"
                       " Q -> X : f(); X -> Q : g(); }"));
}

TEST(FixpointTest, RetiresChaosStereotype) {
  SCFull sc = P("<<completion:chaos>> statechart D { initial final state A; }");
  TransformResult r = TransformFixpoint(sc);
  EXPECT_TRUE(r.chart.stereos.empty());
  EXPECT_EQ(r.retired, std::vector<std::string>{"completion:chaos"});
}

TEST(FixpointTest, StepBound) {
  SCFull sc = P(
      "statechart D { initial final state Q; state A { initial final state X; }"
      " Q -> A : f(); A -> Q : g(); }");
  TransformOptions o;
  o.max_steps = 1;
  EXPECT_THROW(TransformFixpoint(sc, o), NonTermination);
}

TEST(FixpointTest, RejectsIllFormedInput) {
  EXPECT_THROW(TransformFixpoint(P("statechart D { state A; state A; }")),
               IllFormedInput);
}

TEST(FixpointTest, StrategyParsing) {
  EXPECT_EQ(RuleOrder::Parse("paper").kind, RuleOrder::Kind::kPaper);
  RuleOrder r = RuleOrder::Parse("random:42");
  EXPECT_EQ(r.kind, RuleOrder::Kind::kRandom);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_THROW(RuleOrder::Parse("random:"), FormatError);
  EXPECT_THROW(RuleOrder::Parse("random:4x"), FormatError);
  EXPECT_THROW(RuleOrder::Parse("lex"), FormatError);
}

TEST(FixpointTest, TraceReplays) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SCFull sc = Generate({.seed = seed});
    SCFull cur = sc;
    TransformOptions o;
    std::vector<SCFull> snaps;
    o.on_step = [&](int, const SCFull& c) { snaps.push_back(c); };
    TransformResult r = TransformFixpoint(sc, o);
    ASSERT_EQ(snaps.size(), r.trace.size());
    cur.Normalize();
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      const TraceEntry& e = r.trace[i];
      ASSERT_EQ(ChartHash(cur), e.before);
      std::vector<Binding> bs = FindBindings(e.rule, cur);
      auto it = std::find_if(bs.begin(), bs.end(), [&](const Binding& b) {
        return b.Summary() == e.binding;
      });
      ASSERT_NE(it, bs.end()) << e.binding;
      cur = ApplyRule(cur, *it);
      ASSERT_EQ(ChartHash(cur), e.after);
      ASSERT_EQ(cur, snaps[i]);
    }
  }
}

TEST(FixpointTest, TraceJson) {
  TraceEntry e{3, 6, "forwardToSub states={A}", "00", "11"};
  nlohmann::json j = ToJson(e);
  EXPECT_EQ(j["name"], "forwardToSub");
  EXPECT_EQ(j["step"], 3);
  EXPECT_EQ(j["before"], "00");
}

// ---------------------------------------------------------------------------
// Corpus properties.

constexpr int kCorpus = 200;

TEST(CorpusTest, GeneratedChartsAreWellFormed) {
  for (int seed = 0; seed < kCorpus; ++seed) {
    SCFull sc = Generate({.seed = static_cast<std::uint64_t>(seed)});
    CheckResult r = CheckAll(sc, GenSignature(sc));
    EXPECT_TRUE(r.ok()) << "seed " << seed << "\n" << Print(sc);
    EXPECT_LE(sc.states.size(), 8u);
  }
}

void ExpectFinalResult(const SCFull& out, int seed) {
  EXPECT_TRUE(FlatAndSimplified(out)) << "seed " << seed;
  EXPECT_TRUE(out.sub.empty());
  EXPECT_TRUE(out.stereos.empty());
  for (const FullState& st : out.states) {
    EXPECT_FALSE(st.entry || st.exit || st.do_) << "seed " << seed;
    EXPECT_TRUE(st.internT.empty());
    EXPECT_TRUE(st.stereos.empty());
  }
  for (const Trans& t : out.trans) EXPECT_FALSE(t.prio);
  EXPECT_NO_THROW(ToSimplified(out)) << "seed " << seed;
}

TEST(CorpusTest, FixpointReachesFlatSimplifiedForm) {
  for (int seed = 0; seed < kCorpus; ++seed) {
    SCFull sc = Generate({.seed = static_cast<std::uint64_t>(seed)});
    TransformResult r = TransformFixpoint(sc);
    ExpectFinalResult(r.chart, seed);
  }
}

TEST(CorpusTest, RandomOrderAlsoTerminatesFlat) {
  for (int seed = 0; seed < 60; ++seed) {
    SCFull sc = Generate({.seed = static_cast<std::uint64_t>(seed)});
    TransformOptions o;
    o.order = RuleOrder::Parse("random:" + std::to_string(seed));
    ExpectFinalResult(TransformFixpoint(sc, o).chart, seed);
  }
}

TEST(CorpusTest, DeltaDisciplineAndWellFormedness) {
  std::vector<int> hits(kRuleCount + 1, 0);
  for (int seed = 0; seed < kCorpus; ++seed) {
    SCFull sc = Generate({.seed = static_cast<std::uint64_t>(seed)});
    SignatureContext ctx = GenSignature(sc);
    std::vector<SCFull> path{sc};
    TransformOptions o;
    o.on_step = [&](int, const SCFull& c) { path.push_back(c); };
    TransformFixpoint(sc, o);
    for (const SCFull& cur : path) {
      bool wf = CheckAll(cur, ctx).ok();
      for (int r = 1; r <= kRuleCount; ++r) {
        for (const Binding& b : FindBindings(r, cur)) {
          ++hits[r];
          SCFull next = ApplyRule(cur, b);
          std::set<std::string> diff = StructuralDiff(cur, next);
          std::set<std::string> allowed = RuleDelta(r);
          for (const std::string& tag : diff) {
            EXPECT_TRUE(allowed.count(tag))
                << RuleName(r) << " touched " << tag << " (seed " << seed << ")";
          }
          if (wf) {
            CheckResult c = CheckAll(next, ctx);
            EXPECT_TRUE(c.ok()) << RuleName(r) << " seed " << seed << ": "
                                << (c.violations.empty() ? "" : c.violations[0].message);
          }
        }
      }
    }
  }
  for (int r = 1; r <= kRuleCount; ++r) EXPECT_GT(hits[r], 0) << RuleName(r);
}

// Removing an irrelevant modifier never re-enables forwarding or leading
// back at the state it was removed from.
TEST(CorpusTest, IrrelevantModifierRemovalIsSound) {
  int checked = 0;
  for (int seed = 0; seed < kCorpus; ++seed) {
    SCFull sc = Generate({.seed = static_cast<std::uint64_t>(seed)});
    std::vector<SCFull> path{sc};
    TransformOptions o;
    o.on_step = [&](int, const SCFull& c) { path.push_back(c); };
    TransformFixpoint(sc, o);
    for (const SCFull& cur : path) {
      for (auto [del, fwd] : {std::pair{7, 6}, std::pair{15, 10}}) {
        for (const Binding& b : FindBindings(del, cur)) {
          SCFull next = ApplyRule(cur, b);
          for (const Binding& f : FindBindings(fwd, next)) {
            EXPECT_NE(f.states, b.states) << RuleName(del) << " seed " << seed;
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

// ---------------------------------------------------------------------------

TEST(ToSimplifiedTest, BufferFixture) {
  SCSimp s = ToSimplified(P(Fixture("buffer.sc")));
  EXPECT_EQ(s.states.size(), 2u);
  EXPECT_EQ(s.transitions.size(), 4u);
  EXPECT_TRUE(s.inv.is_true());
}

TEST(ToSimplifiedTest, ResidualConstructs) {
  EXPECT_THROW(ToSimplified(P("statechart D { state A { do / out(1); } }")),
               NotSimplifiable);
  EXPECT_THROW(ToSimplified(P("<<completion:ignore>> statechart D { state A; state B;"
                              " A -> B : f(); }")),
               NotSimplifiable);
  EXPECT_THROW(ToSimplified(P("statechart D { state A; <<prio = 1>> A -> A : f(); }")),
               NotSimplifiable);
}

}  // namespace
}  // namespace scforge
