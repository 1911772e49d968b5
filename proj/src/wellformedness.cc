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

#include "scforge/wellformedness.h"

#include <algorithm>
#include <map>

#include "scforge/errors.h"

namespace scforge {

using nlohmann::json;

bool CheckResult::Has(int code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

namespace {

std::string StateSubject(const std::string& name) { return "state:" + name; }

std::string TransSubject(const Trans& t) {
  return "trans:" + t.src + "->" + t.trg + ":" + ToString(t.call);
}

std::string InternSubject(const FullState& s, const InternT& it) {
  return "internT:" + s.name + ":" + ToString(it.call);
}

// Every action of the chart with the call whose arguments are in scope.
struct ActionSite {
  std::string subject;
  const Action* action;
  const Call* call;  // null for entry/exit/do
  const Cond* pre = nullptr;  // its matchPattern conjuncts bind variables
};

std::vector<ActionSite> ActionSites(const SCFull& sc) {
  std::vector<ActionSite> out;
  for (const auto& s : sc.states) {
    if (s.entry) out.push_back({StateSubject(s.name) + ":entry", &*s.entry, nullptr});
    if (s.exit) out.push_back({StateSubject(s.name) + ":exit", &*s.exit, nullptr});
    if (s.do_) out.push_back({StateSubject(s.name) + ":do", &*s.do_, nullptr});
    for (const auto& it : s.internT) {
      if (it.act) {
        out.push_back({InternSubject(s, it), &*it.act, &it.call,
                       it.pre ? &*it.pre : nullptr});
      }
    }
  }
  for (const auto& t : sc.trans) {
    if (t.act) {
      out.push_back({TransSubject(t), &*t.act, &t.call, t.pre ? &*t.pre : nullptr});
    }
  }
  return out;
}

// Variables a condition's matchPattern conjuncts may bind.
void MatchBound(const Cond& c, std::set<std::string>& out) {
  if (c.kind == Cond::Kind::kMatch) {
    for (const auto& v : PatternVars(c.pattern[0])) out.insert(v);
  }
  for (const auto& k : c.kids) MatchBound(k, out);
}

void CheckCallLinear(const Call& call, const std::string& subject,
                     std::vector<Violation>& out) {
  std::vector<std::string> vars = CallVars(call);
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v).second) {
      out.push_back({7, subject,
                     "formal parameters must be pairwise different; '" + v +
                         "' repeats in " + ToString(call)});
      return;
    }
  }
}

void CheckNames(const std::vector<std::string>& names,
                std::vector<Violation>& out) {
  std::map<std::string, int> count;
  for (const auto& n : names) ++count[n];
  for (const auto& [n, c] : count) {
    if (c > 1) {
      out.push_back({12, StateSubject(n),
                     "state name declared " + std::to_string(c) + " times"});
    }
  }
}

class Checker {
 public:
  Checker(const SCFull& sc, const std::optional<SignatureContext>& ctx)
      : sc_(sc), ctx_(ctx) {
    for (const auto& s : sc.states) names_.insert(s.name);
    for (const auto& [c, p] : sc.sub) parents_[c].insert(p);
  }

  CheckResult Run() {
    Cc1();
    Cc2();
    Cc3();
    Cc4();
    Cc7();
    Cc10();
    std::vector<std::string> all;
    for (const auto& s : sc_.states) all.push_back(s.name);
    CheckNames(all, out_);
    Cc13();
    Cc14();
    CheckResult r;
    if (ctx_) {
      Cc5();
      Cc6();
      Cc8();
      Cc9();
      Cc11();
    } else {
      r.skipped = {5, 6, 8, 9, 11};
    }
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    r.violations = std::move(out_);
    return r;
  }

 private:
  void Cc1() {
    for (const auto& [c, ps] : parents_) {
      if (ps.size() > 1) {
        out_.push_back({1, StateSubject(c),
                        "state has " + std::to_string(ps.size()) +
                            " parents; the substate relation must be a forest"});
      }
    }
    // Reflexive pairs in the transitive closure.
    std::set<std::string> nodes;
    for (const auto& [c, p] : sc_.sub) {
      nodes.insert(c);
      nodes.insert(p);
    }
    for (const auto& start : nodes) {
      std::set<std::string> seen;
      std::vector<std::string> stack = {start};
      bool cyclic = false;
      while (!stack.empty() && !cyclic) {
        std::string n = stack.back();
        stack.pop_back();
        auto it = parents_.find(n);
        if (it == parents_.end()) continue;
        for (const auto& p : it->second) {
          if (p == start) cyclic = true;
          if (seen.insert(p).second) stack.push_back(p);
        }
      }
      if (cyclic) {
        out_.push_back({1, StateSubject(start), "state is a substate of itself"});
      }
    }
  }

  bool AnyExceptionTrigger() const {
    for (const auto& t : sc_.trans) {
      if (t.call.exception) return true;
    }
    for (const auto& s : sc_.states) {
      for (const auto& it : s.internT) {
        if (it.call.exception) return true;
      }
    }
    return false;
  }

  void Cc2() {
    if (!AnyExceptionTrigger()) return;
    bool has = std::any_of(sc_.states.begin(), sc_.states.end(),
                           [](const FullState& s) { return s.has(StateStereo::kException); });
    if (!has) {
      out_.push_back({2, "chart",
                      "an exception trigger is used but no state carries the "
                      "exception stereotype"});
    }
  }

  void Cc3() {
    int prio = sc_.has(ChartStereo::kPrioInner) + sc_.has(ChartStereo::kPrioOuter);
    int completion = sc_.has(ChartStereo::kCompletionIgnore) +
                     sc_.has(ChartStereo::kCompletionChaos) +
                     sc_.has(ChartStereo::kCompletionError);
    if (prio > 1) out_.push_back({3, "chart", "At most one priority stereotype"});
    if (completion > 1) {
      out_.push_back({3, "chart", "At most one completion stereotype"});
    }
    bool has_error = std::any_of(sc_.states.begin(), sc_.states.end(),
                                 [](const FullState& s) { return s.has(StateStereo::kError); });
    if (has_error && (sc_.has(ChartStereo::kCompletionIgnore) ||
                      sc_.has(ChartStereo::kCompletionChaos))) {
      out_.push_back({3, "chart",
                      "an error state is not allowed together with ignore or "
                      "chaos completion"});
    }
    if (!has_error && sc_.has(ChartStereo::kCompletionError)) {
      out_.push_back({3, "chart", "completion:error requires an error state"});
    }
  }

  void Cc4() {
    for (const auto& t : sc_.trans) {
      if (!names_.count(t.src)) {
        out_.push_back({4, TransSubject(t), "undeclared source state " + t.src});
      }
      if (!names_.count(t.trg)) {
        out_.push_back({4, TransSubject(t), "undeclared target state " + t.trg});
      }
    }
    for (const auto& [c, p] : sc_.sub) {
      for (const auto& n : {c, p}) {
        if (!names_.count(n)) {
          out_.push_back({4, "sub:" + c + "<" + p,
                          "substate relation names undeclared state " + n});
        }
      }
    }
  }

  void Cc7() {
    for (const auto& t : sc_.trans) CheckCallLinear(t.call, TransSubject(t), out_);
    for (const auto& s : sc_.states) {
      for (const auto& it : s.internT) {
        CheckCallLinear(it.call, InternSubject(s, it), out_);
      }
    }
  }

  std::set<std::string> TriggerNames() const {
    std::set<std::string> out;
    for (const auto& t : sc_.trans) out.insert(t.call.name);
    for (const auto& s : sc_.states) {
      for (const auto& it : s.internT) out.insert(it.call.name);
    }
    return out;
  }

  void Cc10() {
    std::set<std::string> triggers = TriggerNames();
    for (const auto& site : ActionSites(sc_)) {
      for (const auto& p : site.action->stmt.prims) {
        if (p.kind == Prim::Kind::kSend && triggers.count(p.name)) {
          out_.push_back({10, site.subject,
                          "statement sends '" + p.name +
                              "', a trigger of this chart (direct check only)"});
        }
      }
    }
  }

  void Cc13() {
    for (const auto& s : sc_.states) {
      if (!s.has(Modifier::kInitial)) continue;
      bool ctor = false;
      bool ingoing = false;
      for (const auto& t : sc_.trans) {
        if (t.src == s.name && t.call.name == sc_.class_name) ctor = true;
        if (t.trg == s.name) ingoing = true;
      }
      if (ctor && ingoing) {
        out_.push_back({13, StateSubject(s.name),
                        "initial state with a constructor-call outgoing "
                        "transition has ingoing transitions"});
      }
    }
  }

  void Cc14() {
    for (const auto& s : sc_.states) {
      if (!s.has(Modifier::kFinal)) continue;
      bool fin = false;
      bool outgoing = false;
      for (const auto& t : sc_.trans) {
        if (t.trg == s.name && t.call.name == "finalize") fin = true;
        if (t.src == s.name) outgoing = true;
      }
      if (fin && outgoing) {
        out_.push_back({14, StateSubject(s.name),
                        "final state with an ingoing finalize call has "
                        "outgoing transitions"});
      }
    }
  }

  void Cc5() {
    if (sc_.class_name != ctx_->class_name) {
      out_.push_back({5, "chart",
                      "class " + sc_.class_name + " is not declared (context declares " +
                          ctx_->class_name + ")"});
    }
  }

  bool Declared(const std::string& name, size_t arity) const {
    return ctx_->methods.count({name, static_cast<int>(arity)}) > 0;
  }

  void Cc6() {
    auto check = [&](const Call& c, const std::string& subject) {
      if (c.name == kTimeoutName) return;
      if (!Declared(c.name, c.args.size())) {
        out_.push_back({6, subject,
                        "trigger " + c.name + "/" + std::to_string(c.args.size()) +
                            " is not declared"});
      }
    };
    for (const auto& t : sc_.trans) check(t.call, TransSubject(t));
    for (const auto& s : sc_.states) {
      for (const auto& it : s.internT) check(it.call, InternSubject(s, it));
    }
  }

  void CondScope(int code, const Cond& c, const std::set<std::string>& extra,
                 const std::string& subject) {
    std::set<std::string> allowed = ctx_->attributes;
    allowed.insert(extra.begin(), extra.end());
    MatchBound(c, allowed);
    allowed.insert(std::string(kTimerFlag));
    for (const auto& v : FreeVars(c)) {
      if (!allowed.count(v)) {
        out_.push_back({code, subject,
                        "'" + v + "' is neither an attribute nor in scope "
                        "(name-declaration approximation)"});
      }
    }
  }

  void Cc8() {
    if (sc_.inv) CondScope(8, *sc_.inv, {}, "chart");
    for (const auto& s : sc_.states) {
      if (s.inv) CondScope(8, *s.inv, {}, StateSubject(s.name));
    }
  }

  static std::set<std::string> ArgScope(const Call* call,
                                        const Cond* pre = nullptr) {
    std::set<std::string> out;
    if (pre) MatchBound(*pre, out);
    if (call == nullptr) return out;
    for (const auto& v : CallVars(*call)) out.insert(v);
    for (size_t i = 0; i < call->args.size(); ++i) {
      out.insert(InputParamName(static_cast<int>(i) + 1));
    }
    return out;
  }

  void Cc9() {
    for (const auto& t : sc_.trans) {
      if (t.pre) CondScope(9, *t.pre, ArgScope(&t.call), TransSubject(t));
    }
    for (const auto& s : sc_.states) {
      for (const auto& it : s.internT) {
        if (it.pre) CondScope(9, *it.pre, ArgScope(&it.call), InternSubject(s, it));
      }
    }
    for (const auto& site : ActionSites(sc_)) {
      if (site.action->post) {
        CondScope(9, *site.action->post, ArgScope(site.call, site.pre),
                  site.subject);
      }
    }
  }

  void Cc11() {
    for (const auto& site : ActionSites(sc_)) {
      std::set<std::string> scope = ctx_->attributes;
      for (const auto& v : ArgScope(site.call, site.pre)) scope.insert(v);
      scope.insert(std::string(kTimerFlag));
      for (const auto& p : site.action->stmt.prims) {
        if (p.kind == Prim::Kind::kAssign && !ctx_->attributes.count(p.name)) {
          out_.push_back({11, site.subject,
                          "assignment to undeclared attribute '" + p.name + "'"});
        }
        if (p.kind == Prim::Kind::kSend && !Declared(p.name, p.args.size())) {
          out_.push_back({11, site.subject,
                          "call of undeclared method " + p.name + "/" +
                              std::to_string(p.args.size())});
        }
        if (p.kind == Prim::Kind::kCheck) continue;
        for (const auto& a : p.args) {
          for (const auto& v : FreeVars(a)) {
            if (!scope.count(v)) {
              out_.push_back({11, site.subject,
                              "'" + v + "' is neither an attribute nor an argument"});
            }
          }
        }
      }
    }
  }

  const SCFull& sc_;
  const std::optional<SignatureContext>& ctx_;
  std::set<std::string> names_;
  std::map<std::string, std::set<std::string>> parents_;
  std::vector<Violation> out_;
};

}  // namespace

CheckResult CheckAll(const SCFull& sc, const std::optional<SignatureContext>& ctx) {
  return Checker(sc, ctx).Run();
}

std::vector<Violation> CheckSimp(const SCSimp& sc) {
  std::vector<Violation> out;
  std::set<std::string> names;
  std::vector<std::string> all;
  for (const auto& s : sc.states) {
    names.insert(s.name);
    all.push_back(s.name);
  }
  for (const auto& t : sc.transitions) {
    std::string subject = "trans:" + t.src + "->" + t.trg + ":" + ToString(t.call);
    if (!names.count(t.src)) out.push_back({4, subject, "undeclared source state " + t.src});
    if (!names.count(t.trg)) out.push_back({4, subject, "undeclared target state " + t.trg});
    CheckCallLinear(t.call, subject, out);
  }
  CheckNames(all, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SignatureContext SignatureFromJson(const json& j) {
  try {
    SignatureContext ctx;
    ctx.class_name = j.at("className").get<std::string>();
    for (const auto& m : j.value("methods", json::array())) {
      if (m.is_string()) {
        std::string s = m.get<std::string>();
        size_t slash = s.rfind('/');
        if (slash == std::string::npos) throw FormatError("method entry needs name/arity: " + s);
        ctx.methods.insert({s.substr(0, slash), std::stoi(s.substr(slash + 1))});
      } else {
        ctx.methods.insert({m.at("name").get<std::string>(), m.at("arity").get<int>()});
      }
    }
    for (const auto& a : j.value("attributes", json::array())) {
      ctx.attributes.insert(a.get<std::string>());
    }
    return ctx;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed signature context: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw FormatError("malformed arity in signature context");
  }
}

json ToJson(const Violation& v) {
  return {{"code", v.code_name()}, {"subject", v.subject}, {"message", v.message}};
}

json ToJson(const CheckResult& r) {
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back(ToJson(v));
  json skipped = json::array();
  for (int c : r.skipped) skipped.push_back("CC" + std::to_string(c));
  return {{"violations", vs}, {"skipped", skipped}};
}

}  // namespace scforge
