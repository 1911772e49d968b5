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

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "scforge/errors.h"
#include "scforge/transform.h"
#include "transform_internal.h"

namespace scforge {
namespace {

using internal::CallKey;
using internal::Conj;
using internal::Guard;
using internal::HasIngoingAbove;
using internal::HasOutgoingAbove;
using internal::KeyOf;
using internal::NoneEnabled;
using internal::OptConj;

FullState& St(SCFull& sc, const std::string& name) {
  FullState* st = sc.Find(name);
  if (!st) throw Error("no state named " + name);
  return *st;
}

const FullState& St(const SCFull& sc, const std::string& name) {
  const FullState* st = sc.Find(name);
  if (!st) throw Error("no state named " + name);
  return *st;
}

std::optional<Action> MaybeAct(Stmt stmt, std::optional<Cond> post) {
  if (stmt.is_skip() && !post) return std::nullopt;
  return Action{std::move(stmt), std::move(post)};
}

Stmt StmtOf(const std::optional<Action>& a) {
  return a ? a->stmt : Stmt{};
}

std::optional<Cond> PostOf(const std::optional<Action>& a) {
  return a ? a->post : std::nullopt;
}

std::vector<std::string> WithModifier(const SCFull& sc,
                                      const std::vector<std::string>& names,
                                      Modifier m) {
  std::vector<std::string> out;
  for (const std::string& n : names) {
    if (St(sc, n).has(m)) out.push_back(n);
  }
  return out;
}

void Replace(SCFull& sc, const std::vector<Trans>& old,
             const std::vector<Trans>& fresh) {
  for (const Trans& t : old) sc.trans.erase(t);
  for (const Trans& t : fresh) sc.trans.insert(t);
}

Trans Moved(Trans t, std::string src, std::string trg) {
  t.src = std::move(src);
  t.trg = std::move(trg);
  return t;
}

// Rewritten copy of `t` reading its arguments through inp_i, enabled only
// when `blockers` (transitions taking precedence) are all disabled.
Trans Guarded(const Trans& t, const std::string& src,
              const std::vector<Trans>& blockers, std::optional<int> prio) {
  Trans out;
  out.src = src;
  out.trg = t.trg;
  out.prio = prio;
  // The negated part first: bindings made inside a negation stay local, so
  // the transition's own pattern variables cannot capture them.
  Cond pre = Conj({NoneEnabled(blockers, KeyOf(t.call)), Guard(t)});
  if (!pre.is_true()) out.pre = pre;
  out.call = CallExprOf(t.call);
  out.act = t.act;
  return out;
}

std::vector<Trans> SameNameNoPrio(const SCFull& sc, const std::string& s,
                                  const std::string& name) {
  std::vector<Trans> out;
  for (const Trans& t : OutgoingT(sc, s)) {
    if (t.call.name == name && NoPrio(t)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> TopStates(const SCFull& sc) {
  std::vector<std::string> out;
  for (const FullState& st : sc.states) {
    if (!internal::ParentOf(sc, st.name)) out.push_back(st.name);
  }
  return out;
}

Binding B(int rule, std::vector<std::string> states,
          std::vector<Trans> ts = {},
          std::optional<InternT> inner = std::nullopt) {
  return Binding{rule, std::move(states), std::move(ts), std::move(inner)};
}

// ---------------------------------------------------------------------------
// 1-3: do actions and internal transitions.

std::vector<Binding> Find1(const SCFull& sc) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    if (st.do_) out.push_back(B(1, {st.name}));
  }
  return out;
}

SCFull Apply1(SCFull sc, const Binding& b) {
  FullState& st = St(sc, b.states[0]);
  const Stmt set_timer{{Prim::SetTimer()}};
  const Stmt stop_timer{{Prim::StopTimer()}};
  st.internT.insert(InternT{Cond::True(), Call{std::string(kTimeoutName), {}, false},
                            Action{st.do_->stmt & set_timer, st.do_->post}});
  st.entry = Action{StmtOf(st.entry) & set_timer, PostOf(st.entry)};
  st.exit = Action{StmtOf(st.exit) & stop_timer, PostOf(st.exit)};
  st.do_.reset();
  return sc;
}

std::vector<Binding> FindInternal(const SCFull& sc, int rule, bool nested) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    if (Substates(sc, st.name).empty() == nested) continue;
    for (const InternT& it : st.internT) out.push_back(B(rule, {st.name}, {}, it));
  }
  return out;
}

std::vector<Binding> Find2(const SCFull& sc) { return FindInternal(sc, 2, true); }

SCFull Apply2(SCFull sc, const Binding& b) {
  const InternT& it = *b.internal;
  St(sc, b.states[0]).internT.erase(it);
  for (const std::string& sub : Substates(sc, b.states[0])) {
    sc.trans.insert(Trans{sub, sub, std::nullopt, it.pre, it.call, it.act, {}});
  }
  return sc;
}

std::vector<Binding> Find3(const SCFull& sc) { return FindInternal(sc, 3, false); }

SCFull Apply3(SCFull sc, const Binding& b) {
  const std::string& parent = b.states[0];
  const InternT& it = *b.internal;
  St(sc, parent).internT.erase(it);
  std::string fresh;
  for (int k = 1;; ++k) {
    fresh = parent + "$inner" + std::to_string(k);
    if (!sc.Find(fresh)) break;
  }
  FullState st;
  st.name = fresh;
  st.modifiers = {Modifier::kInitial, Modifier::kFinal};
  sc.states.push_back(st);
  sc.sub.insert({fresh, parent});
  sc.trans.insert(Trans{fresh, fresh, std::nullopt, it.pre, it.call, it.act, {}});
  sc.Normalize();
  return sc;
}

// ---------------------------------------------------------------------------
// 4-10, 13, 15: modifiers and forwarding.

std::vector<Binding> FindAddTop(const SCFull& sc, int rule, Modifier m) {
  std::vector<std::string> tops = TopStates(sc);
  if (tops.empty() || !WithModifier(sc, tops, m).empty()) return {};
  return {B(rule, tops)};
}

SCFull ApplyAdd(SCFull sc, const Binding& b, Modifier m) {
  for (const std::string& n : b.states) St(sc, n).modifiers.insert(m);
  return sc;
}

std::vector<Binding> FindAddSub(const SCFull& sc, int rule, Modifier m) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    std::vector<std::string> subs = Substates(sc, st.name);
    if (subs.empty() || !WithModifier(sc, subs, m).empty()) continue;
    bool used = st.has(m) || !(m == Modifier::kInitial
                                   ? IngoingT(sc, st.name)
                                   : OutgoingT(sc, st.name))
                                   .empty();
    if (used) out.push_back(B(rule, subs));
  }
  return out;
}

std::vector<Binding> Find6(const SCFull& sc) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    if (WithModifier(sc, Substates(sc, st.name), Modifier::kInitial).empty()) {
      continue;
    }
    for (const Trans& t : IngoingT(sc, st.name)) out.push_back(B(6, {st.name}, {t}));
  }
  return out;
}

SCFull Apply6(SCFull sc, const Binding& b) {
  const Trans& t = b.transitions[0];
  std::vector<Trans> fresh;
  for (const std::string& sub :
       WithModifier(sc, Substates(sc, b.states[0]), Modifier::kInitial)) {
    fresh.push_back(Moved(t, t.src, sub));
  }
  Replace(sc, {t}, fresh);
  return sc;
}

std::vector<Binding> FindIrrelevant(const SCFull& sc, int rule, Modifier m) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    if (!st.has(m)) continue;
    bool irrelevant = m == Modifier::kInitial ? InitialIrrelevant(sc, st.name)
                                              : FinalIrrelevant(sc, st.name);
    if (irrelevant) out.push_back(B(rule, {st.name}));
  }
  return out;
}

SCFull ApplyRemove(SCFull sc, const Binding& b, Modifier m) {
  St(sc, b.states[0]).modifiers.erase(m);
  return sc;
}

std::vector<std::string> FinalSubs(const SCFull& sc, const std::string& s) {
  return WithModifier(sc, Substates(sc, s), Modifier::kFinal);
}

// Rules 10 and 13 lead single transitions back unchanged.
std::vector<Binding> FindBackward(const SCFull& sc, int rule) {
  std::vector<Binding> out;
  if (rule == 10 && (sc.has(ChartStereo::kPrioInner) ||
                     sc.has(ChartStereo::kPrioOuter))) {
    return out;
  }
  for (const FullState& st : sc.states) {
    if (FinalSubs(sc, st.name).empty()) continue;
    for (const Trans& t : OutgoingT(sc, st.name)) {
      if (rule == 13 && NoPrio(t)) continue;
      out.push_back(B(rule, {st.name}, {t}));
    }
  }
  return out;
}

SCFull ApplyBackward(SCFull sc, const Binding& b) {
  const Trans& t = b.transitions[0];
  std::vector<Trans> fresh;
  for (const std::string& sub : FinalSubs(sc, b.states[0])) {
    fresh.push_back(Moved(t, sub, t.trg));
  }
  Replace(sc, {t}, fresh);
  return sc;
}

// ---------------------------------------------------------------------------
// 11, 12, 14: priorities.

std::vector<Binding> FindPrioGroups(const SCFull& sc, int rule,
                                    ChartStereo scheme) {
  std::vector<Binding> out;
  if (!sc.has(scheme)) return out;
  for (const FullState& st : sc.states) {
    if (FinalSubs(sc, st.name).empty()) continue;
    for (auto& g : CallGroups(sc, st.name)) {
      if (NoPrios(g)) out.push_back(B(rule, {st.name}, g));
    }
  }
  return out;
}

SCFull Apply11(SCFull sc, const Binding& b) {
  const std::vector<Trans>& ts = b.transitions;
  const std::string& name = ts.front().call.name;
  std::vector<Trans> fresh;
  for (const std::string& sub : FinalSubs(sc, b.states[0])) {
    std::vector<Trans> inner = SameNameNoPrio(sc, sub, name);
    for (const Trans& t : ts) fresh.push_back(Guarded(t, sub, inner, std::nullopt));
  }
  Replace(sc, ts, fresh);
  return sc;
}

SCFull Apply12(SCFull sc, const Binding& b) {
  const std::vector<Trans>& ts = b.transitions;
  const std::string& name = ts.front().call.name;
  std::vector<Trans> old = ts;
  std::vector<Trans> fresh;
  for (const std::string& sub : FinalSubs(sc, b.states[0])) {
    for (const Trans& t : ts) fresh.push_back(Moved(t, sub, t.trg));
    for (const Trans& c : SameNameNoPrio(sc, sub, name)) {
      old.push_back(c);
      fresh.push_back(Guarded(c, sub, ts, c.prio));
    }
  }
  Replace(sc, old, fresh);
  return sc;
}

std::vector<Binding> Find14(const SCFull& sc) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    if (!SimpleState(sc, st.name) || HasOutgoingAbove(sc, st.name)) continue;
    for (auto& g : CallGroups(sc, st.name)) {
      if (!NoPrios(g)) out.push_back(B(14, {st.name}, g));
    }
  }
  return out;
}

SCFull Apply14(SCFull sc, const Binding& b) {
  const std::vector<Trans>& ts = b.transitions;
  std::vector<Trans> fresh;
  for (const Trans& ti : ts) {
    std::vector<Trans> higher;
    for (const Trans& t : ts) {
      if (t.prio.value_or(0) > ti.prio.value_or(0)) higher.push_back(t);
    }
    fresh.push_back(Guarded(ti, ti.src, higher, std::nullopt));
  }
  Replace(sc, ts, fresh);
  return sc;
}

// ---------------------------------------------------------------------------
// 16-21: entry and exit actions.

std::vector<Binding> FindMoveExit(const SCFull& sc, int rule) {
  std::vector<Binding> out;
  bool seq = sc.has(ChartStereo::kActionConditionsSequential);
  if (seq != (rule == 17)) return out;
  for (const FullState& st : sc.states) {
    if (st.exit && !st.has(Modifier::kFinal) && SimpleState(sc, st.name) &&
        !HasOutgoingAbove(sc, st.name)) {
      out.push_back(B(rule, {st.name}));
    }
  }
  return out;
}

std::vector<const FullState*> ExitChain(const SCFull& sc, const std::string& s,
                                        const std::string& other,
                                        bool entry) {
  std::vector<const FullState*> out;
  for (const std::string& sup : ListOfSuperstates(sc, s, Lcs(sc, s, other))) {
    const FullState& st = St(sc, sup);
    if (entry ? st.entry.has_value() : st.exit.has_value()) out.push_back(&st);
  }
  return out;
}

SCFull ApplyMoveExit(SCFull sc, const Binding& b) {
  const std::string& s = b.states[0];
  const Action exit = *St(sc, s).exit;
  bool seq = b.rule == 17;
  std::vector<Trans> old = OutgoingT(sc, s);
  std::vector<Trans> fresh;
  for (const Trans& t : old) {
    std::vector<const FullState*> chain = ExitChain(sc, s, t.trg, false);
    Trans n = t;
    if (seq) {
      Action cur = exit;
      for (const FullState* sup : chain) cur = SeqActions(cur, *sup->exit);
      cur = SeqActions(cur, t.act.value_or(Action{}));
      n.act = Action{cur.stmt, PostOf(t.act)};
    } else {
      Stmt stmt = exit.stmt;
      std::vector<std::optional<Cond>> posts{exit.post};
      for (const FullState* sup : chain) {
        stmt = stmt & sup->exit->stmt;
        posts.push_back(sup->exit->post);
      }
      stmt = stmt & StmtOf(t.act);
      posts.push_back(PostOf(t.act));
      n.act = MaybeAct(stmt, OptConj(posts));
    }
    fresh.push_back(n);
  }
  Replace(sc, old, fresh);
  St(sc, s).exit.reset();
  return sc;
}

std::vector<Binding> Find18(const SCFull& sc) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    if (st.exit && OutgoingT(sc, st.name).empty() &&
        !HasOutgoingAbove(sc, st.name)) {
      out.push_back(B(18, {st.name}));
    }
  }
  return out;
}

SCFull Apply18(SCFull sc, const Binding& b) {
  St(sc, b.states[0]).exit.reset();
  return sc;
}

std::vector<Binding> FindMoveEntry(const SCFull& sc, int rule) {
  std::vector<Binding> out;
  bool seq = sc.has(ChartStereo::kActionConditionsSequential);
  if (seq != (rule == 20)) return out;
  for (const FullState& st : sc.states) {
    if (st.entry && !st.has(Modifier::kInitial) && SimpleState(sc, st.name) &&
        !HasIngoingAbove(sc, st.name)) {
      out.push_back(B(rule, {st.name}));
    }
  }
  return out;
}

SCFull ApplyMoveEntry(SCFull sc, const Binding& b) {
  const std::string& s = b.states[0];
  const Action entry = *St(sc, s).entry;
  bool seq = b.rule == 20;
  std::vector<Trans> old = IngoingT(sc, s);
  std::vector<Trans> fresh;
  for (const Trans& t : old) {
    std::vector<const FullState*> chain = ExitChain(sc, s, t.src, true);
    std::reverse(chain.begin(), chain.end());  // outermost first
    Trans n = t;
    if (seq) {
      Action cur = t.act.value_or(Action{});
      for (const FullState* sup : chain) cur = SeqActions(cur, *sup->entry);
      cur = SeqActions(cur, entry);
      n.act = Action{cur.stmt, OptConj({PostOf(t.act), entry.post})};
    } else {
      Stmt stmt = StmtOf(t.act);
      std::vector<std::optional<Cond>> posts{PostOf(t.act)};
      for (const FullState* sup : chain) {
        stmt = stmt & sup->entry->stmt;
        posts.push_back(sup->entry->post);
      }
      stmt = stmt & entry.stmt;
      posts.push_back(entry.post);
      n.act = MaybeAct(stmt, OptConj(posts));
    }
    fresh.push_back(n);
  }
  Replace(sc, old, fresh);
  St(sc, s).entry.reset();
  return sc;
}

std::vector<Binding> Find21(const SCFull& sc) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    if (st.entry && IngoingT(sc, st.name).empty() &&
        !HasIngoingAbove(sc, st.name)) {
      out.push_back(B(21, {st.name}));
    }
  }
  return out;
}

SCFull Apply21(SCFull sc, const Binding& b) {
  St(sc, b.states[0]).entry.reset();
  return sc;
}

// ---------------------------------------------------------------------------
// 22, 23: invariants and hierarchy.

std::vector<Binding> Find22(const SCFull& sc) {
  std::vector<Binding> out;
  for (const FullState& st : sc.states) {
    if (st.inv && !Substates(sc, st.name).empty() && !st.do_ &&
        st.internT.empty()) {
      out.push_back(B(22, {st.name}));
    }
  }
  return out;
}

SCFull Apply22(SCFull sc, const Binding& b) {
  const std::string& s = b.states[0];
  const Cond inv = *St(sc, s).inv;
  for (const std::string& sub : Substates(sc, s)) {
    FullState& st = St(sc, sub);
    st.inv = OptConj({inv, st.inv}).value_or(inv);
  }
  St(sc, s).inv.reset();
  return sc;
}

std::vector<Binding> Find23(const SCFull& sc) {
  if (sc.sub.empty() || !FlatAndSimplified(sc)) return {};
  std::set<std::string> parents;
  for (const auto& [child, parent] : sc.sub) parents.insert(parent);
  return {B(23, {parents.begin(), parents.end()})};
}

SCFull Apply23(SCFull sc, const Binding& b) {
  std::set<std::string> gone(b.states.begin(), b.states.end());
  std::erase_if(sc.states,
                [&](const FullState& st) { return gone.count(st.name) > 0; });
  sc.sub.clear();
  return sc;
}

// ---------------------------------------------------------------------------
// 24-26: completion.

// Transitions that make every call of the given kind enabled in `s`,
// targeting `target`. Empty when `s` is already complete.
std::vector<Trans> CompletionFor(const SCFull& sc, const std::string& s,
                                 const std::string& target, bool exceptions) {
  std::map<CallKey, Call> all;
  for (const Trans& t : sc.trans) {
    if (t.call.exception == exceptions) all.emplace(KeyOf(t.call), t.call);
  }
  std::map<CallKey, std::vector<Trans>> groups;
  for (const Trans& t : OutgoingT(sc, s)) {
    if (t.call.exception == exceptions) groups[KeyOf(t.call)].push_back(t);
  }
  std::vector<Trans> out;
  for (const auto& [key, call] : all) {
    auto g = groups.find(key);
    if (g == groups.end()) {
      out.push_back(Trans{s, target, std::nullopt, std::nullopt,
                          CallExprOf(call), std::nullopt, {}});
      continue;
    }
    const std::vector<Trans>& ts = g->second;
    bool complete = false;
    for (std::size_t i = 0; i < ts.size() && !complete; ++i) {
      const Trans& c = ts[i];
      if (c.call != CallExprOf(c.call) || c.act || c.trg != target) continue;
      std::vector<Trans> rest = ts;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      complete = c.pre.value_or(Cond::True()) == NoneEnabled(rest, key);
    }
    if (!complete) {
      Cond pre = NoneEnabled(ts, key);
      out.push_back(Trans{s, target, std::nullopt,
                          pre.is_true() ? std::nullopt : std::optional(pre),
                          CallExprOf(call), std::nullopt, {}});
    }
  }
  return out;
}

std::vector<Trans> CompletionAll(const SCFull& sc, const Binding& b) {
  std::vector<Trans> out;
  for (const FullState& st : sc.states) {
    std::string target = b.rule == 24 ? st.name : b.states[0];
    for (Trans& t : CompletionFor(sc, st.name, target, b.rule == 26)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Binding> FindCompletion(const SCFull& sc, int rule) {
  std::vector<Binding> out;
  if (!sc.sub.empty() || !FlatAndSimplified(sc)) return out;
  std::vector<Binding> cands;
  if (rule == 24) {
    if (sc.has(ChartStereo::kCompletionIgnore)) cands.push_back(B(24, {}));
  } else {
    if (rule == 25 && !sc.has(ChartStereo::kCompletionError)) return out;
    StateStereo want =
        rule == 25 ? StateStereo::kError : StateStereo::kException;
    for (const FullState& st : sc.states) {
      if (st.has(want)) cands.push_back(B(rule, {st.name}));
    }
  }
  for (Binding& b : cands) {
    if (!CompletionAll(sc, b).empty()) out.push_back(std::move(b));
  }
  return out;
}

SCFull ApplyCompletion(SCFull sc, const Binding& b) {
  for (const Trans& t : CompletionAll(sc, b)) sc.trans.insert(t);
  return sc;
}

// ---------------------------------------------------------------------------

struct RuleDef {
  const char* name;
  std::vector<Binding> (*find)(const SCFull&);
  SCFull (*apply)(SCFull, const Binding&);
  std::set<std::string> delta;
};

const std::array<RuleDef, kRuleCount>& Rules() {
  static const std::array<RuleDef, kRuleCount> kRules = {{
      {"elimDo", Find1, Apply1,
       {"state.entry", "state.exit", "state.do", "state.internT"}},
      {"elimInternalT1", Find2, Apply2, {"state.internT", "trans"}},
      {"elimInternalT2", Find3, Apply3,
       {"state.internT", "trans", "states", "sub"}},
      {"addInitTop",
       [](const SCFull& sc) { return FindAddTop(sc, 4, Modifier::kInitial); },
       [](SCFull sc, const Binding& b) {
         return ApplyAdd(std::move(sc), b, Modifier::kInitial);
       },
       {"state.modifiers"}},
      {"addInitSub",
       [](const SCFull& sc) { return FindAddSub(sc, 5, Modifier::kInitial); },
       [](SCFull sc, const Binding& b) {
         return ApplyAdd(std::move(sc), b, Modifier::kInitial);
       },
       {"state.modifiers"}},
      {"forwardToSub", Find6, Apply6, {"trans"}},
      {"deleteInitSub",
       [](const SCFull& sc) {
         return FindIrrelevant(sc, 7, Modifier::kInitial);
       },
       [](SCFull sc, const Binding& b) {
         return ApplyRemove(std::move(sc), b, Modifier::kInitial);
       },
       {"state.modifiers"}},
      {"addFinalTop",
       [](const SCFull& sc) { return FindAddTop(sc, 8, Modifier::kFinal); },
       [](SCFull sc, const Binding& b) {
         return ApplyAdd(std::move(sc), b, Modifier::kFinal);
       },
       {"state.modifiers"}},
      {"addFinalSub",
       [](const SCFull& sc) { return FindAddSub(sc, 9, Modifier::kFinal); },
       [](SCFull sc, const Binding& b) {
         return ApplyAdd(std::move(sc), b, Modifier::kFinal);
       },
       {"state.modifiers"}},
      {"backwardToSub", [](const SCFull& sc) { return FindBackward(sc, 10); },
       ApplyBackward, {"trans"}},
      {"backwardToSubPrioInner",
       [](const SCFull& sc) {
         return FindPrioGroups(sc, 11, ChartStereo::kPrioInner);
       },
       Apply11, {"trans"}},
      {"backwardToSubPrioOuter",
       [](const SCFull& sc) {
         return FindPrioGroups(sc, 12, ChartStereo::kPrioOuter);
       },
       Apply12, {"trans"}},
      {"backwardToSubPrio",
       [](const SCFull& sc) { return FindBackward(sc, 13); }, ApplyBackward,
       {"trans"}},
      {"elimPrio", Find14, Apply14, {"trans"}},
      {"deleteFinalSub",
       [](const SCFull& sc) {
         return FindIrrelevant(sc, 15, Modifier::kFinal);
       },
       [](SCFull sc, const Binding& b) {
         return ApplyRemove(std::move(sc), b, Modifier::kFinal);
       },
       {"state.modifiers"}},
      {"moveExitActions",
       [](const SCFull& sc) { return FindMoveExit(sc, 16); }, ApplyMoveExit,
       {"state.exit", "trans"}},
      {"moveExitActionsSeq",
       [](const SCFull& sc) { return FindMoveExit(sc, 17); }, ApplyMoveExit,
       {"state.exit", "trans"}},
      {"removeExitAction", Find18, Apply18, {"state.exit"}},
      {"moveEntryActions",
       [](const SCFull& sc) { return FindMoveEntry(sc, 19); }, ApplyMoveEntry,
       {"state.entry", "trans"}},
      {"moveEntryActionsSeq",
       [](const SCFull& sc) { return FindMoveEntry(sc, 20); }, ApplyMoveEntry,
       {"state.entry", "trans"}},
      {"removeEntryAction", Find21, Apply21, {"state.entry"}},
      {"moveInvariant", Find22, Apply22, {"state.inv"}},
      {"removeHierarchy", Find23, Apply23, {"states", "sub"}},
      {"completionIgnore",
       [](const SCFull& sc) { return FindCompletion(sc, 24); },
       ApplyCompletion, {"trans"}},
      {"completionError",
       [](const SCFull& sc) { return FindCompletion(sc, 25); },
       ApplyCompletion, {"trans"}},
      {"completionException",
       [](const SCFull& sc) { return FindCompletion(sc, 26); },
       ApplyCompletion, {"trans"}},
  }};
  return kRules;
}

const RuleDef& Def(int rule) {
  if (rule < 1 || rule > kRuleCount) {
    throw Error("rule number out of range: " + std::to_string(rule));
  }
  return Rules()[static_cast<std::size_t>(rule - 1)];
}

}  // namespace

const char* RuleName(int rule) { return Def(rule).name; }

int RuleNumber(const std::string& name) {
  for (int r = 1; r <= kRuleCount; ++r) {
    if (name == Def(r).name) return r;
  }
  return 0;
}

std::string Binding::Summary() const {
  std::ostringstream os;
  os << RuleName(rule) << " states={";
  for (std::size_t i = 0; i < states.size(); ++i) {
    os << (i ? "," : "") << states[i];
  }
  os << "}";
  if (!transitions.empty()) {
    os << " trans={";
    for (std::size_t i = 0; i < transitions.size(); ++i) {
      os << (i ? "; " : "") << ToString(transitions[i]);
    }
    os << "}";
  }
  if (internal) os << " internT={" << ToString(*internal) << "}";
  return os.str();
}

std::vector<Binding> FindBindings(int rule, const SCFull& sc) {
  return Def(rule).find(sc);
}

SCFull ApplyRule(const SCFull& sc, const Binding& b) {
  const RuleDef& def = Def(b.rule);
  std::vector<Binding> live = def.find(sc);
  if (std::find(live.begin(), live.end(), b) == live.end()) {
    throw BindingStale("binding no longer applicable: " + b.Summary());
  }
  SCFull out = def.apply(sc, b);
  out.Normalize();
  return out;
}

std::set<std::string> RuleDelta(int rule) { return Def(rule).delta; }

std::set<std::string> StructuralDiff(const SCFull& a, const SCFull& b) {
  std::set<std::string> out;
  if (a.stereos != b.stereos) out.insert("chart.stereos");
  if (a.inv != b.inv) out.insert("chart.inv");
  if (a.diagram_name != b.diagram_name || a.class_name != b.class_name) {
    out.insert("chart.names");
  }
  if (a.sub != b.sub) out.insert("sub");
  if (a.trans != b.trans) out.insert("trans");
  std::map<std::string, const FullState*> bs;
  for (const FullState& st : b.states) bs[st.name] = &st;
  std::set<std::string> an;
  for (const FullState& sa : a.states) {
    an.insert(sa.name);
    auto it = bs.find(sa.name);
    if (it == bs.end()) {
      out.insert("states");
      continue;
    }
    const FullState& sb = *it->second;
    if (sa.stereos != sb.stereos) out.insert("state.stereos");
    if (sa.modifiers != sb.modifiers) out.insert("state.modifiers");
    if (sa.inv != sb.inv) out.insert("state.inv");
    if (sa.entry != sb.entry) out.insert("state.entry");
    if (sa.exit != sb.exit) out.insert("state.exit");
    if (sa.do_ != sb.do_) out.insert("state.do");
    if (sa.internT != sb.internT) out.insert("state.internT");
  }
  for (const auto& [name, st] : bs) {
    if (!an.count(name)) out.insert("states");
  }
  return out;
}

}  // namespace scforge
