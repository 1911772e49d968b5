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

#include "scforge/vdb.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "scforge/errors.h"

namespace scforge {

std::string ToString(History h) {
  switch (h) {
    case History::kNone: return "none";
    case History::kDeep: return "deep";
    case History::kShallow: return "shallow";
  }
  return "none";
}

Term Term::Basic(std::string name, std::vector<ActionSym> en,
                 std::vector<ActionSym> ex) {
  Term t;
  t.kind = Kind::kBasic;
  t.name = std::move(name);
  t.en = std::move(en);
  t.ex = std::move(ex);
  return t;
}

Term Term::And(std::string name, std::vector<Term> subs,
               std::vector<ActionSym> en, std::vector<ActionSym> ex) {
  Term t = Basic(std::move(name), std::move(en), std::move(ex));
  t.kind = Kind::kAnd;
  t.subs = std::move(subs);
  return t;
}

Term Term::Or(std::string name, std::vector<Term> subs, int active,
              std::vector<VdbTransition> trans, std::vector<ActionSym> en,
              std::vector<ActionSym> ex) {
  Term t = Basic(std::move(name), std::move(en), std::move(ex));
  t.kind = Kind::kOr;
  t.subs = std::move(subs);
  t.active = active;
  t.trans = std::move(trans);
  return t;
}

const Term* Term::Find(const std::string& n) const {
  if (name == n) return this;
  for (const auto& s : subs) {
    if (const Term* hit = s.Find(n)) return hit;
  }
  return nullptr;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.active != b.active ||
      a.en != b.en || a.ex != b.ex || a.trans != b.trans ||
      a.subs.size() != b.subs.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.subs.size(); ++k) {
    if (!(a.subs[k] == b.subs[k])) return false;
  }
  return true;
}

namespace {

Message EvalSym(const ActionSym& a, const Valuation& env) {
  Message m;
  m.name = a.name;
  m.exception = a.exception;
  for (const auto& e : a.args) m.args.push_back(EvalExpr(e, env));
  return m;
}

ActionSeq EvalSeq(const std::vector<ActionSym>& seq, const Valuation& env) {
  ActionSeq out;
  for (const auto& a : seq) out.push_back(EvalSym(a, env));
  return out;
}

ActionSeq Concat(const ActionSeq& a, const ActionSeq& b) {
  ActionSeq out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// All concatenations of one choice per child, in every child order.
std::set<ActionSeq> PermutedProducts(
    const std::vector<std::set<ActionSeq>>& per_child) {
  std::set<ActionSeq> out;
  std::vector<ActionSeq> pick(per_child.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == per_child.size()) {
      std::vector<std::size_t> perm(pick.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        ActionSeq s;
        for (std::size_t p : perm) s = Concat(s, pick[p]);
        out.insert(std::move(s));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (const auto& c : per_child[k]) {
      pick[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

// Compact key over the mutable part of a term (the active indices).
void StateKey(const Term& t, std::string& out) {
  if (t.kind == Term::Kind::kBasic) return;
  out += '(';
  if (t.kind == Term::Kind::kOr) {
    out += std::to_string(t.active);
    out += ':';
  }
  for (const auto& s : t.subs) StateKey(s, out);
  out += ')';
}

std::string NodeKey(const KripkeNode& n) {
  std::string key;
  StateKey(n.term, key);
  key += '|';
  key += ToString(n.queue);
  return key;
}

void ResetIndices(Term& t) {
  if (t.kind == Term::Kind::kOr) t.active = 1;
  for (auto& s : t.subs) ResetIndices(s);
}

void ForceActive(Term& t, const std::string& name) {
  if (t.name == name) return;
  for (std::size_t k = 0; k < t.subs.size(); ++k) {
    if (t.subs[k].Find(name) != nullptr) {
      if (t.kind == Term::Kind::kOr) t.active = static_cast<int>(k) + 1;
      ForceActive(t.subs[k], name);
      return;
    }
  }
  throw UnknownTargetName("'" + name + "' does not occur in " + t.name);
}

}  // namespace

std::set<std::string> ConfOf(const Term& t) {
  std::set<std::string> out{t.name};
  if (t.kind == Term::Kind::kAnd) {
    for (const auto& s : t.subs) {
      auto c = ConfOf(s);
      out.insert(c.begin(), c.end());
    }
  } else if (t.kind == Term::Kind::kOr) {
    auto c = ConfOf(t.subs.at(t.active - 1));
    out.insert(c.begin(), c.end());
  }
  return out;
}

std::set<ActionSeq> EntrySeqs(const Term& t) {
  ActionSeq own = EvalSeq(t.en, {});
  if (t.kind == Term::Kind::kBasic) return {own};
  std::set<ActionSeq> inner;
  if (t.kind == Term::Kind::kOr) {
    inner = EntrySeqs(t.subs.at(t.active - 1));
  } else {
    std::vector<std::set<ActionSeq>> per;
    for (const auto& s : t.subs) per.push_back(EntrySeqs(s));
    inner = PermutedProducts(per);
  }
  std::set<ActionSeq> out;
  for (const auto& b : inner) out.insert(Concat(own, b));
  return out;
}

std::set<ActionSeq> ExitSeqs(const Term& t) {
  ActionSeq own = EvalSeq(t.ex, {});
  if (t.kind == Term::Kind::kBasic) return {own};
  std::set<ActionSeq> inner;
  if (t.kind == Term::Kind::kOr) {
    inner = ExitSeqs(t.subs.at(t.active - 1));
  } else {
    std::vector<std::set<ActionSeq>> per;
    for (const auto& s : t.subs) per.push_back(ExitSeqs(s));
    inner = PermutedProducts(per);
  }
  std::set<ActionSeq> out;
  for (const auto& b : inner) out.insert(Concat(b, own));
  return out;
}

Term NextState(History ht, const std::set<std::string>& nt, const Term& s) {
  Term out = s;
  switch (ht) {
    case History::kDeep:
      break;
    case History::kShallow:
      for (auto& sub : out.subs) ResetIndices(sub);
      break;
    case History::kNone:
      ResetIndices(out);
      break;
  }
  for (const auto& n : nt) {
    if (out.Find(n) == nullptr) {
      throw UnknownTargetName("'" + n + "' does not occur in " + s.name);
    }
    ForceActive(out, n);
  }
  return out;
}

namespace {

void AddUnique(std::vector<AuxResult>& out, std::set<std::string>& seen,
               AuxResult r) {
  std::string key = r.f ? "1" : "0";
  StateKey(r.next, key);
  key += ToString(r.alpha);
  if (seen.insert(key).second) out.push_back(std::move(r));
}

std::vector<AuxResult> OrStep(const Term& t, const EventSym& e) {
  std::vector<AuxResult> out;
  std::set<std::string> seen;
  const Term& cur = t.subs.at(t.active - 1);
  auto inner = AuxStep(cur, e);
  bool inner_fires = std::any_of(inner.begin(), inner.end(),
                                 [](const AuxResult& r) { return r.f; });
  for (auto& r : inner) {
    if (!r.f) continue;
    AuxResult lifted;
    lifted.alpha = r.alpha;
    lifted.f = true;
    lifted.next = t;
    lifted.next.subs[t.active - 1] = std::move(r.next);
    lifted.fired = r.fired;
    AddUnique(out, seen, std::move(lifted));
  }
  if (!inner_fires) {
    std::set<std::string> conf = ConfOf(cur);
    for (const auto& tr : t.trans) {
      if (tr.i != t.active) continue;
      if (!std::includes(conf.begin(), conf.end(), tr.ns.begin(),
                         tr.ns.end())) {
        continue;
      }
      auto v = MatchCall(tr.e, e);
      if (!v) continue;
      ActionSeq mid = EvalSeq(tr.alpha, *v);
      Term target = NextState(tr.ht, tr.nt, t.subs.at(tr.j - 1));
      for (const auto& e1 : ExitSeqs(cur)) {
        for (const auto& e2 : EntrySeqs(target)) {
          AuxResult r;
          r.alpha = Concat(Concat(e1, mid), e2);
          r.f = true;
          r.next = t;
          r.next.subs[tr.j - 1] = target;
          r.next.active = tr.j;
          r.fired = {tr.name};
          AddUnique(out, seen, std::move(r));
        }
      }
    }
  }
  if (out.empty()) out.push_back(AuxResult{{}, false, t, {}});
  return out;
}

std::vector<AuxResult> AndStep(const Term& t, const EventSym& e) {
  std::vector<std::vector<AuxResult>> per;
  for (const auto& s : t.subs) per.push_back(AuxStep(s, e));
  std::vector<AuxResult> out;
  std::set<std::string> seen;
  std::vector<const AuxResult*> pick(per.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == per.size()) {
      AuxResult base;
      base.next = t;
      std::vector<std::set<ActionSeq>> alphas;
      for (std::size_t c = 0; c < pick.size(); ++c) {
        base.f = base.f || pick[c]->f;
        base.next.subs[c] = pick[c]->next;
        base.fired.insert(base.fired.end(), pick[c]->fired.begin(),
                          pick[c]->fired.end());
        alphas.push_back({pick[c]->alpha});
      }
      for (const auto& a : PermutedProducts(alphas)) {
        AuxResult r = base;
        r.alpha = a;
        AddUnique(out, seen, std::move(r));
      }
      return;
    }
    for (const auto& r : per[k]) {
      pick[k] = &r;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<AuxResult> AuxStep(const Term& t, const EventSym& e) {
  switch (t.kind) {
    case Term::Kind::kBasic:
      return {AuxResult{{}, false, t, {}}};
    case Term::Kind::kOr:
      return OrStep(t, e);
    case Term::Kind::kAnd:
      return AndStep(t, e);
  }
  return {};
}

void ValidateTerm(const Term& root) {
  std::set<std::string> names;
  std::function<void(const Term&)> rec = [&](const Term& t) {
    if (!names.insert(t.name).second) {
      throw FormatError("duplicate name '" + t.name + "' in term");
    }
    if (t.kind != Term::Kind::kBasic && t.subs.empty()) {
      throw FormatError("'" + t.name + "' has no subterms");
    }
    if (t.kind == Term::Kind::kOr) {
      int k = static_cast<int>(t.subs.size());
      if (t.active < 1 || t.active > k) {
        throw FormatError("active index of '" + t.name + "' out of range");
      }
      for (const auto& tr : t.trans) {
        if (!names.insert(tr.name).second) {
          throw FormatError("duplicate name '" + tr.name + "' in term");
        }
        if (tr.i < 1 || tr.i > k || tr.j < 1 || tr.j > k) {
          throw FormatError("transition '" + tr.name +
                            "' index out of range");
        }
        for (const auto& n : tr.ns) {
          if (t.subs[tr.i - 1].Find(n) == nullptr) {
            throw FormatError("transition '" + tr.name + "': '" + n +
                              "' not below its source");
          }
        }
        for (const auto& n : tr.nt) {
          if (t.subs[tr.j - 1].Find(n) == nullptr) {
            throw FormatError("transition '" + tr.name + "': '" + n +
                              "' not below its target");
          }
        }
      }
    } else if (!t.trans.empty()) {
      throw FormatError("only Or terms carry transitions");
    }
    for (const auto& s : t.subs) rec(s);
  };
  rec(root);
}

// ----------------------------------------------------------------------------
// Kripke structure.

std::vector<KripkeEdge> ConsumeInput(const KripkeNode& node,
                                     const KripkeOptions& opts) {
  std::vector<KripkeEdge> out;
  if (node.queue.empty()) return out;
  const EventSym& head = node.queue.front();
  std::vector<EventSym> rest(node.queue.begin() + 1, node.queue.end());
  for (auto& r : AuxStep(node.term, head)) {
    KripkeEdge edge;
    edge.consumed = head;
    edge.alpha = r.alpha;
    edge.f = r.f;
    edge.to.term = std::move(r.next);
    edge.to.queue = rest;
    for (const auto& m : r.alpha) {
      if (opts.join == JoinMode::kDrop && !opts.events.empty() &&
          opts.events.count(m.name) == 0) {
        continue;
      }
      edge.to.queue.push_back(m);
    }
    out.push_back(std::move(edge));
  }
  return out;
}

namespace {

class Expander {
 public:
  explicit Expander(const KripkeOptions& opts) : opts_(opts) {}

  const std::vector<KripkeEdge>& Successors(const KripkeNode& n) {
    std::string key = NodeKey(n);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (memo_.size() >= opts_.max_nodes) {
      throw StateSpaceBound("more than " + std::to_string(opts_.max_nodes) +
                            " Kripke nodes expanded");
    }
    return memo_.emplace(key, ConsumeInput(n, opts_)).first->second;
  }

 private:
  const KripkeOptions& opts_;
  std::unordered_map<std::string, std::vector<KripkeEdge>> memo_;
};

}  // namespace

std::vector<VdbRun> RunBounded(const KripkeNode& start, int max_steps,
                               const KripkeOptions& opts) {
  if (max_steps < 0) throw FormatError("maxSteps must be non-negative");
  Expander ex(opts);
  std::vector<VdbRun> out;
  std::set<std::string> seen;
  VdbRun cur;
  cur.nodes.push_back(start);
  std::string path_key = NodeKey(start);
  std::function<void(int)> rec = [&](int depth) {
    const auto& succ =
        depth < max_steps ? ex.Successors(cur.nodes.back())
                          : std::vector<KripkeEdge>{};
    if (succ.empty()) {
      if (seen.insert(path_key).second) out.push_back(cur);
      return;
    }
    for (const auto& e : succ) {
      std::string saved = path_key;
      path_key += " => " + NodeKey(e.to);
      cur.edges.push_back(e);
      cur.nodes.push_back(e.to);
      rec(depth + 1);
      cur.nodes.pop_back();
      cur.edges.pop_back();
      path_key = std::move(saved);
    }
  };
  rec(0);
  return out;
}

std::set<ActionSeq> EmissionSets(const Term& start,
                                 const std::vector<EventSym>& inputs,
                                 const KripkeOptions& opts) {
  std::set<ActionSeq> out;
  std::set<std::pair<std::string, ActionSeq>> visited;
  Expander ex(opts);
  std::function<void(const KripkeNode&, const ActionSeq&)> rec =
      [&](const KripkeNode& n, const ActionSeq& emitted) {
        if (!visited.insert({NodeKey(n), emitted}).second) return;
        if (visited.size() > opts.max_nodes) {
          throw StateSpaceBound("emission exploration exceeded " +
                                std::to_string(opts.max_nodes) + " nodes");
        }
        if (n.queue.empty()) {
          out.insert(emitted);
          return;
        }
        for (const auto& e : ex.Successors(n)) {
          rec(e.to, Concat(emitted, e.alpha));
        }
      };
  rec(KripkeNode{start, inputs}, {});
  return out;
}

// ----------------------------------------------------------------------------
// Text and JSON.

namespace {

std::string PatternList(const std::vector<Pattern>& ps) {
  std::string out;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) out += ", ";
    out += ToString(ps[k]);
  }
  return out;
}

std::string CallToken(const Call& c) {
  return (c.exception ? "!" : "") + c.name + "(" + PatternList(c.args) + ")";
}

std::string SeqToken(const std::vector<ActionSym>& seq) {
  std::string out = "(";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) out += ' ';
    out += ToString(seq[k]);
  }
  return out + ")";
}

std::string NameSet(const std::set<std::string>& names) {
  std::string out = "(";
  bool first = true;
  for (const auto& n : names) {
    if (!first) out += ' ';
    first = false;
    out += n;
  }
  return out + ")";
}

}  // namespace

std::string ToString(const ActionSym& a) {
  std::string out = (a.exception ? "!" : "") + a.name + "(";
  for (std::size_t k = 0; k < a.args.size(); ++k) {
    if (k) out += ", ";
    out += ToString(a.args[k]);
  }
  return out + ")";
}

std::string ToString(const VdbTransition& t) {
  return "(" + t.name + " " + std::to_string(t.i) + " " + NameSet(t.ns) +
         " " + CallToken(t.e) + " " + SeqToken(t.alpha) + " " +
         NameSet(t.nt) + " " + std::to_string(t.j) + " " + ToString(t.ht) +
         ")";
}

std::string ToString(const Term& t) {
  std::string out;
  switch (t.kind) {
    case Term::Kind::kBasic:
      return "(basic " + t.name + " " + SeqToken(t.en) + " " +
             SeqToken(t.ex) + ")";
    case Term::Kind::kAnd:
      out = "(and " + t.name + " (";
      break;
    case Term::Kind::kOr:
      out = "(or " + t.name + " (";
      break;
  }
  for (std::size_t k = 0; k < t.subs.size(); ++k) {
    if (k) out += ' ';
    out += ToString(t.subs[k]);
  }
  out += ")";
  if (t.kind == Term::Kind::kOr) {
    out += " " + std::to_string(t.active) + " (trans";
    for (const auto& tr : t.trans) out += " " + ToString(tr);
    out += ")";
  }
  return out + " " + SeqToken(t.en) + " " + SeqToken(t.ex) + ")";
}

namespace {

// Tokens: "(", ")", atoms, and call atoms `name(...)` with balanced parens.
class TermReader {
 public:
  explicit TermReader(const std::string& text) : s_(text) {}

  Term ReadTerm() {
    Expect("(");
    std::string kind = Atom();
    Term t;
    t.name = Atom();
    if (kind == "basic") {
      t.kind = Term::Kind::kBasic;
    } else if (kind == "and" || kind == "or") {
      t.kind = kind == "and" ? Term::Kind::kAnd : Term::Kind::kOr;
      Expect("(");
      while (Peek() != ")") t.subs.push_back(ReadTerm());
      Expect(")");
      if (t.kind == Term::Kind::kOr) {
        t.active = Int();
        Expect("(");
        if (Atom() != "trans") Fail("expected 'trans'");
        while (Peek() != ")") t.trans.push_back(ReadTrans());
        Expect(")");
      }
    } else {
      Fail("unknown term kind '" + kind + "'");
    }
    t.en = ReadSeq();
    t.ex = ReadSeq();
    Expect(")");
    return t;
  }

  void End() {
    if (!Peek().empty()) Fail("trailing input");
  }

 private:
  VdbTransition ReadTrans() {
    VdbTransition tr;
    Expect("(");
    tr.name = Atom();
    tr.i = Int();
    tr.ns = ReadNames();
    std::string call = Next();
    bool exc = StripBang(call);
    tr.e = ParseCall(call, ParseOptions{true});
    tr.e.exception = exc;
    tr.alpha = ReadSeq();
    tr.nt = ReadNames();
    tr.j = Int();
    std::string ht = Atom();
    if (ht == "none") {
      tr.ht = History::kNone;
    } else if (ht == "deep") {
      tr.ht = History::kDeep;
    } else if (ht == "shallow") {
      tr.ht = History::kShallow;
    } else {
      Fail("unknown history '" + ht + "'");
    }
    Expect(")");
    return tr;
  }

  std::vector<ActionSym> ReadSeq() {
    std::vector<ActionSym> out;
    Expect("(");
    while (Peek() != ")") {
      std::string tok = Next();
      bool exc = StripBang(tok);
      Stmt st = ParseStmt(tok, ParseOptions{true});
      if (st.prims.size() != 1 || st.prims[0].kind != Prim::Kind::kSend) {
        Fail("expected an action symbol, got '" + tok + "'");
      }
      out.push_back(ActionSym{st.prims[0].name, st.prims[0].args, exc});
    }
    Expect(")");
    return out;
  }

  std::set<std::string> ReadNames() {
    std::set<std::string> out;
    Expect("(");
    while (Peek() != ")") out.insert(Atom());
    Expect(")");
    return out;
  }

  static bool StripBang(std::string& tok) {
    if (!tok.empty() && tok[0] == '!') {
      tok.erase(0, 1);
      return true;
    }
    return false;
  }

  int Int() {
    std::string a = Atom();
    try {
      std::size_t used = 0;
      int v = std::stoi(a, &used);
      if (used == a.size()) return v;
    } catch (const std::exception&) {
    }
    Fail("expected an integer, got '" + a + "'");
    return 0;
  }

  std::string Atom() {
    std::string tok = Next();
    if (tok == "(" || tok == ")" || tok.find('(') != std::string::npos) {
      Fail("expected a name, got '" + tok + "'");
    }
    return tok;
  }

  void Expect(const std::string& want) {
    std::string tok = Next();
    if (tok != want) Fail("expected '" + want + "', got '" + tok + "'");
  }

  std::string Peek() {
    std::size_t save = pos_;
    std::string tok = Next();
    pos_ = save;
    return tok;
  }

  std::string Next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= s_.size()) return "";
    char c = s_[pos_];
    if (c == '(' || c == ')') {
      ++pos_;
      return std::string(1, c);
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')') {
      ++pos_;
    }
    if (pos_ < s_.size() && s_[pos_] == '(' && pos_ > start) {
      int depth = 0;
      do {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      } while (pos_ < s_.size() && depth > 0);
      if (depth != 0) Fail("unbalanced parentheses");
    }
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void Fail(const std::string& msg) {
    throw FormatError("term text, offset " + std::to_string(pos_) + ": " +
                      msg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Term ParseTerm(const std::string& text) {
  TermReader r(text);
  Term t = r.ReadTerm();
  r.End();
  ValidateTerm(t);
  return t;
}

nlohmann::json ToJson(const KripkeNode& n) {
  nlohmann::json conf = nlohmann::json::array();
  for (const auto& c : ConfOf(n.term)) conf.push_back(c);
  nlohmann::json queue = nlohmann::json::array();
  for (const auto& m : n.queue) queue.push_back(ToString(m));
  return {{"conf", conf}, {"queue", queue}};
}

nlohmann::json ToJson(const VdbRun& r) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : r.nodes) nodes.push_back(ToJson(n));
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& e : r.edges) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : e.alpha) out.push_back(ToString(m));
    steps.push_back(
        {{"consumed", ToString(e.consumed)}, {"output", out}, {"f", e.f}});
  }
  return {{"nodes", nodes}, {"steps", steps}};
}

}  // namespace scforge
