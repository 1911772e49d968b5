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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "action_enum.h"
#include "preservation.h"
#include "json.hpp"
#include "scforge/actions.h"
#include "scforge/conform.h"
#include "scforge/errors.h"
#include "scforge/flatinterp.h"
#include "scforge/gen.h"
#include "scforge/syntax.h"
#include "scforge/transform.h"
#include "scforge/vdb.h"
#include "scforge/wellformedness.h"

namespace scforge {
namespace {

struct Result {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void Expect(bool cond, const std::string& why) {
    if (!cond) Fail(why);
  }
};

std::string Fixture(const std::string& name) {
  std::ifstream in(std::string(SCFORGE_FIXTURE_DIR) + "/" + name);
  if (!in) throw FormatError("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json JsonFixture(const std::string& name) {
  return nlohmann::json::parse(Fixture(name));
}

SCSimp Flatten(const SCFull& sc) {
  return ToSimplified(TransformFixpoint(sc).chart);
}

// ---------------------------------------------------------------------------
// 1. Buffer Kripke run.

std::vector<Value> BufferDomain() {
  std::vector<Value> d;
  for (int v = -1; v <= 5; ++v) d.push_back(Value(v));
  return d;
}

VdbTransition Tr(std::string name, int i, const std::string& e, int j,
                 std::vector<ActionSym> alpha = {}) {
  VdbTransition t;
  t.name = std::move(name);
  t.i = i;
  t.j = j;
  t.e = ParseCall(e);
  t.alpha = std::move(alpha);
  return t;
}

// The buffer term written out by hand: Empty at index 1, one NonEmpty-v
// per domain value.
Term HandBuffer(int active) {
  auto dom = BufferDomain();
  auto idx = [&](const Value& v) {
    return 2 + static_cast<int>(std::find(dom.begin(), dom.end(), v) - dom.begin());
  };
  std::vector<Term> subs{Term::Basic("Empty")};
  for (const auto& v : dom) subs.push_back(Term::Basic("NonEmpty-" + ToString(v)));
  auto send = [](std::int64_t x) {
    return std::vector<ActionSym>{ActionSym{"send", {Expr::Int(x)}, false}};
  };
  std::vector<VdbTransition> ts;
  ts.push_back(Tr("t1", 1, "get()", 1, send(-1)));
  for (const auto& v : dom) {
    ts.push_back(Tr("t2_" + ToString(v), 1, "put(" + ToString(v) + ")", idx(v)));
  }
  for (const auto& v : dom) {
    ts.push_back(Tr("t3_" + ToString(v), idx(v), "get()", 1, send(v.as_int())));
  }
  for (const auto& v : dom) {
    for (const auto& w : dom) {
      ts.push_back(Tr("t4_" + ToString(v) + "_" + ToString(w), idx(v),
                      "put(" + ToString(w) + ")", idx(w)));
    }
  }
  return Term::Or("Buffer", std::move(subs), active, std::move(ts));
}

Result BufferKripkeRun() {
  Result r;
  const int kNonEmpty3 = 2 + 4;  // -1, 0, 1, 2, 3
  Term encoded = EncodeGuardFree(Parse(Fixture("buffer.sc")), BufferDomain());
  r.Expect(encoded == HandBuffer(1), "encoding differs from the hand-built term");
  std::vector<Message> in{ParseMessage("put(3)"), ParseMessage("get()")};
  KripkeNode n0{HandBuffer(1), in};
  KripkeNode n1{HandBuffer(kNonEmpty3), {ParseMessage("get()")}};
  KripkeNode n2{HandBuffer(1), {ParseMessage("send(3)")}};
  auto runs = RunBounded(KripkeNode{encoded, in}, 2);
  if (runs.size() != 1) {
    r.Fail(std::to_string(runs.size()) + " runs, expected 1");
    return r;
  }
  const VdbRun& run = runs[0];
  r.Expect(run.nodes.size() == 3, "run length");
  if (run.nodes.size() == 3) {
    r.Expect(run.nodes[0] == n0, "start node");
    r.Expect(run.nodes[1] == n1, "intermediate node");
    r.Expect(run.nodes[2] == n2, "final node");
    r.Expect(run.edges[0].consumed == in[0] && run.edges[0].alpha.empty() &&
                 run.edges[0].f,
             "first step label");
    r.Expect(run.edges[1].consumed == in[1] &&
                 run.edges[1].alpha == std::vector<Message>{ParseMessage("send(3)")} &&
                 run.edges[1].f,
             "second step label");
  }
  if (r.pass) r.detail = "(Empty,<put(3),get()>) => (NonEmpty-3,<get()>) => (Empty,<send(3)>)";
  return r;
}

// ---------------------------------------------------------------------------
// 2. Flat interpreter on the buffer.

Result FlatBuffer() {
  Result r;
  for (const char* file : {"buffer.sc", "buffer_hier.sc"}) {
    SCSimp flat = Flatten(Parse(Fixture(file)));
    auto inits = InitialStates(flat);
    if (inits.size() != 1 || inits[0] != "Empty") {
      r.Fail(std::string(file) + ": initial state is not Empty");
      continue;
    }
    auto check = [&](const std::vector<Message>& in, const Message& out) {
      std::set<Trace> traces = Explore(flat, "Empty", in);
      Trace want{{out}, "Empty", Outcome::Kind::kQuiescent};
      r.Expect(traces == std::set<Trace>{want},
               std::string(file) + ": " + ToString(in) + " does not give " +
                   ToString(std::vector<Message>{out}) + " ending in Empty");
    };
    check({ParseMessage("put(3)"), ParseMessage("get()")}, ParseMessage("send(3)"));
    check({ParseMessage("get()")}, ParseMessage("send(-1)"));
  }
  if (r.pass) r.detail = "<put(3),get()> -> <send(3)>, <get()> -> <send(-1)>, all schedules";
  return r;
}

// ---------------------------------------------------------------------------
// 3. Conformance fixtures.

Result ConformanceFixtures() {
  Result r;
  SCSimp buffer = ParseSimp(Fixture("buffer.sc"));
  ProjectionMap pi = ProjectionFromJson(JsonFixture("buffer_projection.json"));
  SystemFragment good = FragmentFromJson(JsonFixture("single_send_fragment.json"));
  SystemFragment bad = FragmentFromJson(JsonFixture("double_send_fragment.json"));

  ConformReport g = CheckSystemConformance(buffer, good, pi);
  r.Expect(g.ok(), "single-send fragment does not conform");
  ConformReport b = CheckSystemConformance(buffer, bad, pi);
  for (int c = 1; c <= 4; ++c) {
    r.Expect(b.at(c).pass, "double-send fragment fails condition " + std::to_string(c));
  }
  r.Expect(!b.at(5).pass, "double-send fragment passes condition 5");
  r.Expect(b.at(5).witnesses.size() == 1 &&
               b.at(5).witnesses[0].find("<send(-1)> on s3->s4") != std::string::npos,
           "condition-5 witness does not name the second emission");

  Term t = EncodeGuardFree(Parse(Fixture("buffer.sc")), BufferDomain());
  Term from = t;
  Term to = t;
  for (std::size_t k = 0; k < t.subs.size(); ++k) {
    if (t.subs[k].name == "NonEmpty-3") from.active = static_cast<int>(k) + 1;
  }
  MacroStep step{from, to, ParseMessage("get()"), {ParseMessage("send(3)")}};
  ProjectionMap tpi = ProjectionFromJson(JsonFixture("buffer_term_projection.json"));
  std::vector<std::string> ids{"s1", "s2", "s3", "s4", "s5", "s6"};
  RunSatisfaction ok = CheckRunSatisfaction(step, RunFromPath(good, ids), tpi, good.main);
  r.Expect(ok.ok, "run satisfaction on the single-send run: " + ok.reason);
  RunSatisfaction no = CheckRunSatisfaction(step, RunFromPath(bad, ids), tpi, bad.main);
  r.Expect(!no.ok, "run satisfaction accepts the double-send run");
  if (r.pass) r.detail = "single-send conforms; double-send fails condition 5: " + b.at(5).witnesses[0];
  return r;
}

// ---------------------------------------------------------------------------
// 4. Transformation completeness.

constexpr int kCorpus = 200;

GenOptions CorpusOptions(int seed) {
  GenOptions o;
  o.seed = static_cast<std::uint64_t>(seed);
  o.max_states = 8;
  o.max_depth = 3;
  return o;
}

std::string Residual(const SCFull& out) {
  if (!FlatAndSimplified(out)) return "not flat and simplified";
  if (!out.sub.empty()) return "hierarchy";
  if (!out.stereos.empty()) return "chart stereotype";
  for (const FullState& st : out.states) {
    if (st.do_) return "do action in " + st.name;
    if (st.entry) return "entry action in " + st.name;
    if (st.exit) return "exit action in " + st.name;
    if (!st.internT.empty()) return "internal transition in " + st.name;
    if (!st.stereos.empty()) return "state stereotype on " + st.name;
  }
  for (const Trans& t : out.trans) {
    if (t.prio) return "priority on " + ToString(t);
  }
  return "";
}

Result Completeness() {
  Result r;
  std::size_t longest = 0;
  int hierarchical = 0;
  for (int seed = 0; seed < kCorpus; ++seed) {
    SCFull sc = Generate(CorpusOptions(seed));
    std::string tag = "seed " + std::to_string(seed) + ": ";
    if (sc.states.size() > 8) r.Fail(tag + "more than 8 states");
    if (!CheckAll(sc, GenSignature(sc)).ok()) r.Fail(tag + "ill-formed input");
    if (!sc.sub.empty()) ++hierarchical;
    TransformOptions o;
    o.max_steps = 10000;
    try {
      TransformResult res = TransformFixpoint(sc, o);
      longest = std::max(longest, res.trace.size());
      std::string why = Residual(res.chart);
      if (!why.empty()) r.Fail(tag + why);
      ToSimplified(res.chart);
    } catch (const Error& e) {
      r.Fail(tag + e.what());
    }
  }
  if (r.pass) {
    r.detail = std::to_string(kCorpus) + " charts (" + std::to_string(hierarchical) +
               " hierarchical), longest trace " + std::to_string(longest) + " steps";
  }
  return r;
}

// ---------------------------------------------------------------------------
// 5. Per-rule delta discipline and well-formedness preservation.

Result PerRule() {
  Result r;
  std::vector<long> hits(kRuleCount + 1, 0);
  for (int seed = 0; seed < kCorpus; ++seed) {
    SCFull sc = Generate(CorpusOptions(seed));
    SignatureContext ctx = GenSignature(sc);
    std::vector<SCFull> path{sc};
    TransformOptions o;
    o.on_step = [&](int, const SCFull& c) { path.push_back(c); };
    TransformFixpoint(sc, o);
    for (const SCFull& cur : path) {
      bool wf = CheckAll(cur, ctx).ok();
      for (int rule = 1; rule <= kRuleCount; ++rule) {
        for (const Binding& b : FindBindings(rule, cur)) {
          ++hits[rule];
          SCFull next = ApplyRule(cur, b);
          std::set<std::string> allowed = RuleDelta(rule);
          for (const std::string& part : StructuralDiff(cur, next)) {
            if (!allowed.count(part)) {
              r.Fail(std::string(RuleName(rule)) + " changed " + part + " (seed " +
                     std::to_string(seed) + ")");
            }
          }
          if (wf && !CheckAll(next, ctx).ok()) {
            r.Fail(std::string(RuleName(rule)) + " broke well-formedness (seed " +
                   std::to_string(seed) + ")");
          }
        }
      }
    }
  }
  long total = 0;
  for (int rule = 1; rule <= kRuleCount; ++rule) {
    total += hits[rule];
    if (hits[rule] == 0) r.Fail(std::string(RuleName(rule)) + " never applicable on the corpus");
  }
  if (r.pass) {
    r.detail = std::to_string(total) + " bindings over rules 1-" + std::to_string(kRuleCount);
  }
  return r;
}

// ---------------------------------------------------------------------------
// 6. Semantic preservation.

Result Preservation() {
  Result r;
  testing::PreservationReport rep = testing::SweepPreservation(kCorpus, 4);
  r.Expect(rep.max_states <= 6, "chart with more than 6 states");
  if (!rep.mismatches.empty()) r.Fail(rep.mismatches.front());
  if (r.pass) {
    r.detail = std::to_string(rep.charts) + " charts, " + std::to_string(rep.words) +
               " input words, 0 mismatches";
  }
  return r;
}

// ---------------------------------------------------------------------------
// 7. Priority schemes.

constexpr char kPrioBody[] =
    " statechart P for K { initial state A { initial final state X; }"
    " state R; state T; A -> R : f(); X -> T : f(); }";

std::string FinalAfterF(const SCSimp& flat) {
  auto inits = InitialStates(flat);
  if (inits.size() != 1) return "<no unique initial>";
  Scheduler lex;
  RunResult run = Run(flat, inits[0], {ParseMessage("f()")}, lex);
  return run.trajectory.back().current;
}

Result PrioritySchemes() {
  Result r;
  for (auto [scheme, rule, other, want] :
       {std::tuple{"prio:inner", 11, 12, "T"}, std::tuple{"prio:outer", 12, 11, "R"}}) {
    SCFull sc = Parse(std::string("<<") + scheme + ">>" + kPrioBody);
    std::string tag = std::string(scheme) + ": ";
    std::string got = FinalAfterF(Flatten(sc));
    r.Expect(got == want, tag + "fixpoint routes f() to " + got);
    r.Expect(FindBindings(other, sc).empty(),
             tag + RuleName(other) + " applicable");
    std::vector<Binding> bs = FindBindings(rule, sc);
    if (bs.empty()) {
      r.Fail(tag + RuleName(rule) + " not applicable");
      continue;
    }
    SCFull manual = sc;
    while (!(bs = FindBindings(rule, manual)).empty()) manual = ApplyRule(manual, bs.front());
    std::string via = FinalAfterF(Flatten(manual));
    r.Expect(via == want, tag + "manual " + RuleName(rule) + " routes f() to " + via);
  }
  if (r.pass) r.detail = "inner -> T, outer -> R (fixpoint and manual rules 11/12)";
  return r;
}

// ---------------------------------------------------------------------------
// 8. Completion.

Result Completion() {
  Result r;
  SCFull sc = Parse(
      "<<completion:ignore>> statechart C for K { initial state A; state B;"
      " A -> B : f(); B -> A : g(); }");
  SCSimp done = Flatten(sc);
  std::vector<Message> alphabet{ParseMessage("f()"), ParseMessage("g()")};
  long words = 0;
  testing::ForEachWord(alphabet, 3, [&](const std::vector<Message>& w) {
    ++words;
    for (const Trace& t : Explore(done, "A", w)) {
      if (t.end == Outcome::Kind::kChaos) r.Fail("chaos after completion on " + ToString(w));
    }
  });
  SCSimp raw = NormalizeFlat(sc);
  std::vector<Message> unhandled{ParseMessage("g()")};
  int chaos = 0;
  std::set<Trace> traces = Explore(raw, "A", unhandled);
  for (const Trace& t : traces) chaos += t.end == Outcome::Kind::kChaos;
  r.Expect(traces.size() == 1 && chaos == 1,
           "untransformed chart: " + std::to_string(chaos) + " chaos outcomes over " +
               std::to_string(traces.size()) + " runs");
  Scheduler lex;
  RunResult run = Run(raw, "A", unhandled, lex);
  int steps_chaos = 0;
  for (const Outcome& o : run.outcomes) steps_chaos += o.kind == Outcome::Kind::kChaos;
  r.Expect(steps_chaos == 1, "untransformed run reports " + std::to_string(steps_chaos) +
                                 " chaos outcomes");
  if (r.pass) {
    r.detail = std::to_string(words) + " words without chaos; one chaos on <g()> untransformed";
  }
  return r;
}

// ---------------------------------------------------------------------------
// 9. Action language.

Result ActionOracles() {
  Result r;
  auto patterns = testing::SmallPatterns();
  auto values = testing::SmallValues();
  long single = 0;
  for (const auto& p : patterns) {
    for (const auto& v : values) {
      Pattern pattern = p;
      Call c{"f", {pattern}, false};
      auto got = MatchCall(c, Message{"f", {v}});
      std::vector<std::pair<std::string, Value>> ref;
      bool ok = testing::RefMatch(p, v, ref);
      std::string tag = ToString(p) + " / " + ToString(v) + ": ";
      ++single;
      if (got.has_value() != ok) {
        r.Fail(tag + "matchCall disagrees with the reference matcher");
        continue;
      }
      Valuation inputs{{"inp1", v}};
      if (EvalCond(MatchCondOf(c), {}, inputs) != ok) r.Fail(tag + "matchCondOf disagrees");
      if (!ok) continue;
      for (const auto& [name, val] : ref) {
        if (got->at(name) != val) r.Fail(tag + "binding of " + name);
      }
      if (EvalPattern(p, *got) != v) r.Fail(tag + "round trip");
    }
  }
  long pairs = 0;
  for (const auto& p1 : patterns) {
    for (std::size_t j = 0; j < patterns.size(); j += 7) {
      Pattern p2 = patterns[j];
      std::function<void(Pattern&)> rename = [&](Pattern& q) {
        if (!q.var.empty()) q.var += "2";
        for (auto& part : q.parts) rename(part);
      };
      rename(p2);
      Call c{"g", {p1, p2}, false};
      Cond mc = MatchCondOf(c);
      for (const auto& v1 : values) {
        for (const auto& v2 : values) {
          ++pairs;
          bool expected = MatchCall(c, Message{"g", {v1, v2}}).has_value();
          Valuation inputs{{"inp1", v1}, {"inp2", v2}};
          if (EvalCond(mc, {}, inputs) != expected) {
            r.Fail("pair " + ToString(c) + " on " + ToString(v1) + ", " + ToString(v2));
          }
        }
      }
    }
  }
  if (r.pass) {
    r.detail = std::to_string(single) + " single and " + std::to_string(pairs) +
               " paired (pattern, value) cases";
  }
  return r;
}

struct Criterion {
  const char* name;
  std::function<Result()> run;
  double limit_s;  // 0: no runtime limit
};

}  // namespace
}  // namespace scforge

int main() {
  using namespace scforge;
  const std::vector<Criterion> criteria = {
      {"buffer-kripke-run", BufferKripkeRun, 1.0},
      {"flat-interpreter-buffer", FlatBuffer, 0},
      {"conformance-fixtures", ConformanceFixtures, 0},
      {"transformation-completeness", Completeness, 60.0},
      {"per-rule-delta-and-wellformedness", PerRule, 0},
      {"semantic-preservation", Preservation, 600.0},
      {"priority-schemes", PrioritySchemes, 0},
      {"completion", Completion, 0},
      {"action-language-oracles", ActionOracles, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.Fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      r.Fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    }
    failures += !r.pass;
    std::printf("%s %s (%.2f s): %s\n", r.pass ? "PASS" : "FAIL", c.name, secs,
                r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
