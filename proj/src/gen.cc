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

#include "scforge/gen.h"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace scforge {
namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed * 0x9E3779B97F4A7C15ull + 1) {}
  // Uniform in [0, n).
  int Below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
  bool Chance(int percent) { return Below(100) < percent; }

 private:
  std::mt19937_64 eng_;
};

struct Trigger {
  std::string name;
  int arity;
  bool exception;
};

Stmt SendOut(Expr arg) {
  return Stmt{{Prim::Send("out", {std::move(arg)})}};
}

class Generator {
 public:
  explicit Generator(const GenOptions& o) : o_(o), rng_(o.seed) {}

  SCFull Run() {
    sc_.diagram_name = "G" + std::to_string(o_.seed);
    sc_.class_name = "C";
    int cap = std::max(2, o_.guard_free ? std::min(o_.max_states, 6)
                                        : o_.max_states);
    int n = 2 + rng_.Below(cap - 1);
    BuildTree(n);
    PickTriggers();
    MarkModifiers();
    PickStereos();
    AddTransitions(n);
    Decorate();
    sc_.Normalize();
    return sc_;
  }

 private:
  std::string Name(int i) const { return std::string(1, static_cast<char>('A' + i)); }

  void BuildTree(int n) {
    parent_.assign(static_cast<std::size_t>(n), -1);
    depth_.assign(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
      FullState st;
      st.name = Name(i);
      sc_.states.push_back(st);
      if (i == 0 || !rng_.Chance(45)) continue;
      std::vector<int> cands;
      for (int p = 0; p < i; ++p) {
        if (depth_[p] < o_.max_depth) cands.push_back(p);
      }
      if (cands.empty()) continue;
      int p = cands[rng_.Below(static_cast<int>(cands.size()))];
      parent_[i] = p;
      depth_[i] = depth_[p] + 1;
      sc_.sub.insert({Name(i), Name(p)});
    }
  }

  std::vector<int> Children(int p) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (parent_[i] == p) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  bool IsLeaf(int i) const { return Children(i).empty(); }

  FullState& S(int i) { return sc_.states[static_cast<std::size_t>(i)]; }

  void PickTriggers() {
    std::vector<Trigger> pool = {{"a", 0, false}, {"b", 1, false}, {"c", 1, false}};
    int k = 1 + rng_.Below(3);
    for (int i = 0; i < k; ++i) {
      std::size_t j = static_cast<std::size_t>(rng_.Below(static_cast<int>(pool.size())));
      triggers_.push_back(pool[j]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
    if (!o_.guard_free && rng_.Chance(15)) {
      triggers_.push_back({"err", 0, true});
    }
  }

  void MarkModifiers() {
    // One initial and one final per sibling group, top level included. A
    // group occasionally stays unmarked; the rules then mark every member,
    // so such states are treated as initial/final when decorating.
    for (int p = -1; p < static_cast<int>(parent_.size()); ++p) {
      std::vector<int> kids = Children(p);
      if (kids.empty()) continue;
      for (Modifier m : {Modifier::kInitial, Modifier::kFinal}) {
        // Guard-free charts keep a single default entry per group.
        if (rng_.Chance(10) && !(o_.guard_free && m == Modifier::kInitial)) {
          for (int k : kids) implied_[{k, m}] = true;
          continue;
        }
        int pick = kids[rng_.Below(static_cast<int>(kids.size()))];
        S(pick).modifiers.insert(m);
        implied_[{pick, m}] = true;
      }
    }
  }

  bool Marked(int i, Modifier m) const { return implied_.count({i, m}) > 0; }

  std::vector<int> TopLeaves() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (parent_[i] == -1 && IsLeaf(static_cast<int>(i))) {
        out.push_back(static_cast<int>(i));
      }
    }
    return out;
  }

  void PickStereos() {
    bool hier = !sc_.sub.empty();
    if (o_.guard_free) {
      if (hier) sc_.stereos.insert(ChartStereo::kPrioInner);
      int c = rng_.Below(3);
      if (c == 1) sc_.stereos.insert(ChartStereo::kCompletionIgnore);
      if (c == 2) sc_.stereos.insert(ChartStereo::kCompletionChaos);
      return;
    }
    int p = rng_.Below(3);
    if (p == 1) sc_.stereos.insert(ChartStereo::kPrioInner);
    if (p == 2) sc_.stereos.insert(ChartStereo::kPrioOuter);
    std::vector<int> leaves = TopLeaves();
    int c = rng_.Below(4);
    if (c == 1) sc_.stereos.insert(ChartStereo::kCompletionIgnore);
    if (c == 2) sc_.stereos.insert(ChartStereo::kCompletionChaos);
    if (c == 3 && !leaves.empty()) {
      sc_.stereos.insert(ChartStereo::kCompletionError);
      S(leaves[rng_.Below(static_cast<int>(leaves.size()))])
          .stereos.insert(StateStereo::kError);
    }
    if (rng_.Chance(20)) {
      sc_.stereos.insert(ChartStereo::kActionConditionsSequential);
    }
    bool has_exc = std::any_of(triggers_.begin(), triggers_.end(),
                               [](const Trigger& t) { return t.exception; });
    if (has_exc) {
      if (leaves.empty()) {
        std::erase_if(triggers_, [](const Trigger& t) { return t.exception; });
      } else {
        S(leaves[rng_.Below(static_cast<int>(leaves.size()))])
            .stereos.insert(StateStereo::kException);
      }
    }
  }

  Call MakeCall(const Trigger& tr, bool* bound_y) {
    Call c{tr.name, {}, tr.exception};
    *bound_y = false;
    if (tr.arity == 1) {
      if (o_.guard_free || rng_.Chance(70)) {
        c.args.push_back(Pattern::Var("y"));
        *bound_y = true;
      } else {
        c.args.push_back(Pattern::Lit(Value(std::int64_t{rng_.Below(2)})));
      }
    }
    return c;
  }

  std::optional<Action> MakeAction(bool bound_y) {
    int k = rng_.Below(o_.guard_free ? 3 : 5);
    Expr arg = bound_y && rng_.Chance(50) ? Expr::Var("y")
                                          : Expr::Int(rng_.Below(2));
    Stmt s;
    switch (k) {
      case 0: return std::nullopt;
      case 1: s = SendOut(arg); break;
      case 2: s = SendOut(arg) & SendOut(Expr::Int(rng_.Below(2))); break;
      case 3: s = Stmt{{Prim::Assign("x", arg)}}; break;
      default: s = Stmt{{Prim::Assign("x", arg)}} & SendOut(Expr::Var("x"));
    }
    std::optional<Cond> post;
    if (!o_.guard_free && rng_.Chance(15)) {
      post = Cond::Compare(Cond::Kind::kLe, Expr::Int(0), Expr::Int(1));
    }
    return Action{s, post};
  }

  std::optional<Cond> MakePre(bool bound_y) {
    if (o_.guard_free || rng_.Chance(60)) return std::nullopt;
    if (bound_y && rng_.Chance(50)) {
      return Cond::Compare(Cond::Kind::kGt, Expr::Var("y"), Expr::Int(0));
    }
    return Cond::Compare(Cond::Kind::kEq, Expr::Var("x"), Expr::Int(0));
  }

  void AddTransitions(int n) {
    int count = n + rng_.Below(n + 1);
    for (int k = 0; k < count; ++k) {
      int src = rng_.Below(n);
      int trg;
      if (o_.guard_free) {
        std::vector<int> sibs = Children(parent_[src]);
        trg = sibs[rng_.Below(static_cast<int>(sibs.size()))];
      } else {
        trg = rng_.Below(n);
      }
      const Trigger& tr = triggers_[rng_.Below(static_cast<int>(triggers_.size()))];
      Trans t;
      t.src = Name(src);
      t.trg = Name(trg);
      bool bound_y = false;
      t.call = MakeCall(tr, &bound_y);
      t.pre = MakePre(bound_y);
      t.act = MakeAction(bound_y);
      if (!o_.guard_free && rng_.Chance(15)) t.prio = 1 + rng_.Below(2);
      sc_.trans.insert(t);
    }
  }

  void Decorate() {
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      FullState& st = S(i);
      bool leaf = IsLeaf(i);
      if (!o_.guard_free && rng_.Chance(15)) {
        st.inv = Cond::Compare(Cond::Kind::kLe, Expr::Int(0), Expr::Int(1));
      }
      if (!leaf) continue;
      bool acts = false;
      if (!Marked(i, Modifier::kInitial) && rng_.Chance(30)) {
        st.entry = Action{SendOut(Expr::Int(rng_.Below(2))), std::nullopt};
        acts = true;
      }
      if (!Marked(i, Modifier::kFinal) && rng_.Chance(30)) {
        st.exit = Action{SendOut(Expr::Int(rng_.Below(2))), std::nullopt};
        acts = true;
      }
      if (acts || o_.guard_free || !st.stereos.empty()) continue;
      if (rng_.Chance(15)) {
        st.do_ = Action{SendOut(Expr::Int(1)), std::nullopt};
      }
      if (rng_.Chance(15)) {
        const Trigger& tr = triggers_[rng_.Below(static_cast<int>(triggers_.size()))];
        bool bound_y = false;
        InternT it;
        it.call = MakeCall(tr, &bound_y);
        it.pre = MakePre(bound_y);
        it.act = MakeAction(bound_y);
        st.internT.insert(it);
      }
    }
  }

  GenOptions o_;
  Rng rng_;
  SCFull sc_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<Trigger> triggers_;
  std::map<std::pair<int, Modifier>, bool> implied_;
};

}  // namespace

SCFull Generate(const GenOptions& opts) { return Generator(opts).Run(); }

SignatureContext GenSignature(const SCFull& sc) {
  SignatureContext ctx;
  ctx.class_name = sc.class_name;
  ctx.attributes = {"x"};
  ctx.methods = {{"a", 0}, {"b", 1}, {"c", 1}, {"err", 0}, {"out", 1}};
  return ctx;
}

}  // namespace scforge
