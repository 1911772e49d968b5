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

// Statechart -> term encoder. Data-carrying states are expanded by a
// liveness analysis: a state is split over the values of the store
// variables that may be read before being overwritten on some path from it.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scforge/errors.h"
#include "scforge/vdb.h"

namespace scforge {
namespace {

bool IsTrue(const std::optional<Cond>& c) { return !c || c->is_true(); }

Expr ValueExpr(const Value& v) {
  if (v.is_int()) return Expr::Int(v.as_int());
  if (v.is_bool()) return Expr::Bool(v.as_bool());
  std::vector<Expr> elems;
  for (const auto& e : v.as_list()) elems.push_back(ValueExpr(e));
  return Expr::ListOf(std::move(elems));
}

Expr Subst(const Expr& e, const std::map<std::string, Expr>& sym) {
  if (e.kind == Expr::Kind::kVar) {
    auto it = sym.find(e.var);
    return it == sym.end() ? e : it->second;
  }
  Expr out = e;
  for (auto& a : out.args) a = Subst(a, sym);
  return out;
}

// Constant subexpressions are folded so that ground sends print as values.
Expr Fold(const Expr& e) {
  if (FreeVars(e).empty()) return ValueExpr(EvalExpr(e, {}));
  return e;
}

std::string ValueSuffix(const Value& v) { return ToString(v); }

struct TransInfo {
  std::set<std::string> uses;    // store reads before any write
  std::set<std::string> writes;
};

class Encoder {
 public:
  Encoder(const SCFull& sc, const std::vector<Value>& domain)
      : sc_(sc), domain_(domain) {}

  Term Run() {
    for (const auto& [c, p] : sc_.sub) {
      parent_[c] = p;
      children_[p].push_back(c);
    }
    for (const auto& st : sc_.states) {
      if (!parent_.count(st.name)) top_.push_back(st.name);
    }
    CheckShape();
    std::set<std::string> store;
    for (const auto& t : sc_.trans) {
      if (!t.act) continue;
      for (const auto& v : AssignedVars(t.act->stmt)) store.insert(v);
    }
    if (!store.empty()) {
      if (!sc_.sub.empty()) {
        offending_.push_back("assignments in a hierarchical chart");
      } else {
        CheckReads(store);
      }
    } else {
      CheckReads({});
    }
    if (!offending_.empty()) {
      std::string msg;
      for (const auto& o : offending_) msg += (msg.empty() ? "" : "; ") + o;
      throw NotGuardFree(msg);
    }
    if (!store.empty()) return EncodeFlatData(store);
    return EncodeTree();
  }

 private:
  // ---- pre-condition checks --------------------------------------------

  void CheckShape() {
    if (sc_.has(ChartStereo::kPrioOuter)) offending_.push_back("prio:outer");
    if (sc_.has(ChartStereo::kCompletionError)) {
      offending_.push_back("completion:error");
    }
    for (const auto& s : sc_.states) {
      if (s.do_) offending_.push_back("do action in " + s.name);
      if (!s.internT.empty()) {
        offending_.push_back("internal transition in " + s.name);
      }
      CheckStateAction(s.entry, "entry", s.name);
      CheckStateAction(s.exit, "exit", s.name);
    }
    for (const auto& t : sc_.trans) {
      std::string where = t.src + " -> " + t.trg;
      if (t.prio) offending_.push_back("prio on " + where);
      if (!IsTrue(t.pre)) offending_.push_back("guard on " + where);
      if (t.act && !t.act->post_or_true().is_true()) {
        offending_.push_back("postcondition on " + where);
      }
      for (const auto& p : t.call.args) {
        if (p.kind != Pattern::Kind::kVar && p.kind != Pattern::Kind::kLit) {
          offending_.push_back("structured pattern in " + where);
        }
      }
      if (!t.act) continue;
      for (const auto& p : t.act->stmt.prims) {
        if (p.kind != Prim::Kind::kSend && p.kind != Prim::Kind::kAssign) {
          offending_.push_back("non-send statement on " + where);
        }
      }
    }
  }

  void CheckStateAction(const std::optional<Action>& a, const char* kind,
                        const std::string& state) {
    if (!a) return;
    if (!a->post_or_true().is_true()) {
      offending_.push_back(std::string("postcondition on ") + kind + " of " +
                           state);
    }
    for (const auto& p : a->stmt.prims) {
      if (p.kind != Prim::Kind::kSend) {
        offending_.push_back(std::string("non-send ") + kind + " of " + state);
      }
    }
    if (!FreeVars(a->stmt).empty()) {
      offending_.push_back(std::string(kind) + " of " + state +
                           " reads variables");
    }
  }

  TransInfo Info(const Trans& t) const {
    TransInfo info;
    if (!t.act) return info;
    auto call_vars = CallVars(t.call);
    std::set<std::string> bound(call_vars.begin(), call_vars.end());
    for (const auto& p : t.act->stmt.prims) {
      for (const auto& e : p.args) {
        for (const auto& v : FreeVars(e)) {
          if (!bound.count(v) && !info.writes.count(v)) info.uses.insert(v);
        }
      }
      if (p.kind == Prim::Kind::kAssign) info.writes.insert(p.name);
    }
    return info;
  }

  void CheckReads(const std::set<std::string>& store) {
    for (const auto& t : sc_.trans) {
      for (const auto& v : Info(t).uses) {
        if (!store.count(v)) {
          offending_.push_back("read of unassigned variable '" + v +
                               "' on " + t.src + " -> " + t.trg);
        }
      }
    }
  }

  // ---- ordering ------------------------------------------------------

  // Initial member first, the rest by name.
  std::vector<std::string> Ordered(std::vector<std::string> group) const {
    std::sort(group.begin(), group.end());
    auto it = std::find_if(group.begin(), group.end(), [&](const auto& n) {
      return sc_.Find(n)->has(Modifier::kInitial);
    });
    if (it != group.end()) std::rotate(group.begin(), it, it + 1);
    return group;
  }

  std::vector<ActionSym> Syms(const std::optional<Action>& a) const {
    std::vector<ActionSym> out;
    if (!a) return out;
    for (const auto& p : a->stmt.prims) {
      std::vector<Expr> args;
      for (const auto& e : p.args) args.push_back(Fold(e));
      out.push_back(ActionSym{p.name, std::move(args), p.exception});
    }
    return out;
  }

  // ---- flat charts with data -----------------------------------------

  Term EncodeFlatData(const std::set<std::string>& store) {
    std::map<std::string, std::set<std::string>> live;
    std::vector<std::pair<const Trans*, TransInfo>> ts;
    for (const auto& t : sc_.trans) ts.push_back({&t, Info(t)});
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [t, info] : ts) {
        auto& l = live[t->src];
        std::size_t before = l.size();
        l.insert(info.uses.begin(), info.uses.end());
        for (const auto& v : live[t->trg]) {
          if (!info.writes.count(v)) l.insert(v);
        }
        changed = changed || l.size() != before;
      }
    }
    bool any_live = false;
    for (const auto& [s, l] : live) any_live = any_live || !l.empty();
    if (any_live && domain_.empty()) {
      throw UnboundedValueDomain("data-carrying states need a value domain");
    }
    for (const auto& st : sc_.states) {
      if (st.has(Modifier::kInitial) && !live[st.name].empty()) {
        throw UnboundedValueDomain("variable '" + *live[st.name].begin() +
                                   "' is read before any assignment from " +
                                   st.name);
      }
    }
    (void)store;

    // Expanded state index: (state, valuation) -> 1-based position.
    std::vector<Term> subs;
    std::map<std::pair<std::string, Valuation>, int> index;
    std::map<std::string, std::vector<Valuation>> vals;
    for (const auto& name : Ordered(top_)) {
      const FullState* st = sc_.Find(name);
      for (const auto& sigma : Valuations(live[name])) {
        std::string ename = name;
        for (const auto& [v, x] : sigma) ename += "-" + ValueSuffix(x);
        subs.push_back(Term::Basic(ename, Syms(st->entry), Syms(st->exit)));
        index[{name, sigma}] = static_cast<int>(subs.size());
        vals[name].push_back(sigma);
      }
    }
    std::vector<VdbTransition> trans;
    int k = 0;
    for (const auto& [t, info] : ts) {
      ++k;
      const auto& ltrg = live[t->trg];
      bool expand = std::any_of(info.writes.begin(), info.writes.end(),
                                [&](const auto& v) { return ltrg.count(v); });
      auto cvars = CallVars(t->call);
      std::set<std::string> cvar_set(cvars.begin(), cvars.end());
      for (const auto& sigma : vals[t->src]) {
        std::vector<Valuation> groundings{Valuation{}};
        if (expand) groundings = Valuations(cvar_set);
        for (const auto& g : groundings) {
          std::map<std::string, Expr> sym;
          for (const auto& [v, x] : sigma) sym[v] = ValueExpr(x);
          for (const auto& [v, x] : g) sym[v] = ValueExpr(x);
          VdbTransition tr;
          tr.name = "t" + std::to_string(k);
          for (const auto& [v, x] : sigma) tr.name += "_" + ValueSuffix(x);
          for (const auto& [v, x] : g) tr.name += "_" + ValueSuffix(x);
          tr.i = index.at({t->src, sigma});
          tr.e = t->call;
          for (auto& p : tr.e.args) {
            if (p.kind == Pattern::Kind::kVar && g.count(p.var)) {
              p = Pattern::Lit(g.at(p.var));
            }
          }
          if (t->act) {
            for (const auto& p : t->act->stmt.prims) {
              if (p.kind == Prim::Kind::kAssign) {
                sym[p.name] = Subst(p.args[0], sym);
                continue;
              }
              std::vector<Expr> args;
              for (const auto& e : p.args) args.push_back(Fold(Subst(e, sym)));
              tr.alpha.push_back(ActionSym{p.name, std::move(args),
                                           p.exception});
            }
          }
          Valuation target;
          for (const auto& v : ltrg) {
            Expr e = sym.at(v);
            if (!FreeVars(e).empty()) {
              throw UnboundedValueDomain("value of '" + v + "' after " +
                                         tr.name + " is not ground");
            }
            Value x = EvalExpr(e, {});
            if (std::find(domain_.begin(), domain_.end(), x) ==
                domain_.end()) {
              throw UnboundedValueDomain("value " + ToString(x) + " of '" +
                                         v + "' after " + tr.name +
                                         " is outside the domain");
            }
            target[v] = x;
          }
          tr.j = index.at({t->trg, target});
          trans.push_back(std::move(tr));
        }
      }
    }
    return Term::Or(sc_.diagram_name, std::move(subs), 1, std::move(trans));
  }

  std::vector<Valuation> Valuations(const std::set<std::string>& vars) const {
    std::vector<Valuation> out{Valuation{}};
    for (const auto& v : vars) {
      std::vector<Valuation> next;
      for (const auto& partial : out) {
        for (const auto& x : domain_) {
          Valuation ext = partial;
          ext[v] = x;
          next.push_back(std::move(ext));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // ---- hierarchical charts without data ------------------------------

  std::vector<std::string> Ancestry(const std::string& s) const {
    std::vector<std::string> out{s};
    for (auto it = parent_.find(s); it != parent_.end();
         it = parent_.find(it->second)) {
      out.push_back(it->second);
    }
    return out;
  }

  // Sets of names that make a final configuration below `s`.
  std::vector<std::set<std::string>> FinalDescents(const std::string& s) const {
    auto it = children_.find(s);
    if (it == children_.end()) return {{}};
    std::vector<std::string> finals;
    for (const auto& c : it->second) {
      if (sc_.Find(c)->has(Modifier::kFinal)) finals.push_back(c);
    }
    if (finals.empty()) finals = it->second;
    std::sort(finals.begin(), finals.end());
    std::vector<std::set<std::string>> out;
    for (const auto& f : finals) {
      for (auto d : FinalDescents(f)) {
        d.insert(f);
        out.push_back(std::move(d));
      }
    }
    return out;
  }

  Term Build(const std::string& name, const std::vector<std::string>& group,
             const FullState* self) {
    std::vector<Term> subs;
    for (const auto& c : Ordered(group)) {
      position_[c] = static_cast<int>(subs.size()) + 1;
      const FullState* st = sc_.Find(c);
      auto kids = children_.find(c);
      if (kids == children_.end()) {
        subs.push_back(Term::Basic(c, Syms(st->entry), Syms(st->exit)));
      } else {
        subs.push_back(Build(c, kids->second, st));
      }
    }
    std::vector<ActionSym> en, ex;
    if (self) {
      en = Syms(self->entry);
      ex = Syms(self->exit);
    }
    return Term::Or(name, std::move(subs), 1, {}, std::move(en),
                    std::move(ex));
  }

  Term* FindOr(Term& t, const std::string& name) {
    if (t.name == name) return &t;
    for (auto& s : t.subs) {
      if (Term* hit = FindOr(s, name)) return hit;
    }
    return nullptr;
  }

  Term EncodeTree() {
    Term root = Build(sc_.diagram_name, top_, nullptr);
    int k = 0;
    for (const auto& t : sc_.trans) {
      ++k;
      auto as = Ancestry(t.src);
      auto at = Ancestry(t.trg);
      std::set<std::string> strict_t(at.begin() + 1, at.end());
      std::string owner;  // empty: root
      for (std::size_t n = 1; n < as.size(); ++n) {
        if (strict_t.count(as[n])) {
          owner = as[n];
          break;
        }
      }
      auto child_of = [&](const std::vector<std::string>& anc,
                          std::set<std::string>& below) {
        for (const auto& a : anc) {
          auto p = parent_.find(a);
          bool top = p == parent_.end();
          if ((owner.empty() && top) || (!top && p->second == owner)) {
            return a;
          }
          below.insert(a);
        }
        return anc.back();
      };
      std::set<std::string> ns_base, nt;
      std::string si = child_of(as, ns_base);
      std::string sj = child_of(at, nt);
      auto descents = FinalDescents(t.src);
      int m = 0;
      for (const auto& d : descents) {
        ++m;
        VdbTransition tr;
        tr.name = "t" + std::to_string(k);
        if (descents.size() > 1) tr.name += "_f" + std::to_string(m);
        tr.i = position_.at(si);
        tr.j = position_.at(sj);
        tr.ns = ns_base;
        tr.ns.insert(d.begin(), d.end());
        tr.nt = nt;
        tr.e = t.call;
        if (t.act) {
          for (const auto& p : t.act->stmt.prims) {
            std::vector<Expr> args;
            for (const auto& e : p.args) args.push_back(Fold(e));
            tr.alpha.push_back(ActionSym{p.name, std::move(args),
                                         p.exception});
          }
        }
        Term* o = owner.empty() ? &root : FindOr(root, owner);
        o->trans.push_back(std::move(tr));
      }
    }
    return root;
  }

  const SCFull& sc_;
  const std::vector<Value>& domain_;
  std::map<std::string, std::string> parent_;
  std::map<std::string, std::vector<std::string>> children_;
  std::vector<std::string> top_;
  std::map<std::string, int> position_;
  std::vector<std::string> offending_;
};

}  // namespace

Term EncodeGuardFree(const SCFull& sc, const std::vector<Value>& domain) {
  Term t = Encoder(sc, domain).Run();
  ValidateTerm(t);
  return t;
}

Term EncodeGuardFree(const SCSimp& sc, const std::vector<Value>& domain) {
  return EncodeGuardFree(ToFull(sc), domain);
}

}  // namespace scforge
