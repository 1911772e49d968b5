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

// AST helpers and the text, JSON and DOT printers.

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "scforge/errors.h"
#include "scforge/syntax.h"

namespace scforge {

using nlohmann::json;

std::string ToString(ChartStereo s) {
  switch (s) {
    case ChartStereo::kPrioInner:
      return "prio:inner";
    case ChartStereo::kPrioOuter:
      return "prio:outer";
    case ChartStereo::kCompletionIgnore:
      return "completion:ignore";
    case ChartStereo::kCompletionChaos:
      return "completion:chaos";
    case ChartStereo::kCompletionError:
      return "completion:error";
    case ChartStereo::kActionConditionsSequential:
      return "action conditions:sequential";
  }
  return "";
}

std::string ToString(StateStereo s) {
  return s == StateStereo::kError ? "error" : "exception";
}

std::string ToString(Modifier m) {
  return m == Modifier::kInitial ? "initial" : "final";
}

const FullState* SCFull::Find(const std::string& name) const {
  for (const auto& s : states) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

FullState* SCFull::Find(const std::string& name) {
  for (auto& s : states) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void SCFull::Normalize() {
  std::stable_sort(states.begin(), states.end(),
                   [](const FullState& a, const FullState& b) {
                     return a.name < b.name;
                   });
}

const SimpState* SCSimp::Find(const std::string& name) const {
  for (const auto& s : states) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

// ----------------------------------------------------------------------------
// Text.

namespace {

std::string TransTail(const std::optional<Cond>& pre, const Call& call,
                      const std::optional<Action>& act) {
  std::string out;
  if (pre) out += "[" + ToString(*pre) + "] ";
  out += ToString(call);
  if (act) out += " " + ToString(*act);
  return out;
}

template <typename Set>
std::string StereoPrefix(const Set& set) {
  if (set.empty()) return "";
  std::string out = "<<";
  bool first = true;
  for (const auto& s : set) {
    if (!first) out += ", ";
    first = false;
    out += ToString(s);
  }
  return out + ">> ";
}

class ChartPrinter {
 public:
  explicit ChartPrinter(const SCFull& sc) : sc_(sc) {
    for (const auto& [child, parent] : sc.sub) {
      if (sc.Find(parent) == nullptr || sc.Find(child) == nullptr) continue;
      if (parent_of_.count(child)) continue;
      parent_of_[child] = parent;
      children_[parent].push_back(child);
    }
  }

  std::string Run() {
    std::string header =
        StereoPrefix(sc_.stereos) + "statechart " + sc_.diagram_name + " for " +
        sc_.class_name + " {";
    std::string body;
    if (sc_.inv) body += "  [" + ToString(*sc_.inv) + "];\n";
    std::vector<bool> printed(sc_.states.size(), false);
    for (size_t i = 0; i < sc_.states.size(); ++i) {
      if (!parent_of_.count(sc_.states[i].name)) State(i, 1, printed, body);
    }
    // States caught in a sub cycle have no root; emit them flat.
    for (size_t i = 0; i < sc_.states.size(); ++i) {
      if (!printed[i]) State(i, 1, printed, body);
    }
    for (const auto& t : sc_.trans) body += "  " + ToString(t) + ";\n";
    if (body.empty()) return header + " }";
    return header + "\n" + body + "}";
  }

 private:
  void State(size_t index, int depth, std::vector<bool>& printed,
             std::string& out) {
    if (printed[index]) return;
    printed[index] = true;
    const FullState& s = sc_.states[index];
    std::string ind(2 * depth, ' ');
    out += ind + StereoPrefix(s.stereos);
    for (Modifier m : s.modifiers) out += ToString(m) + " ";
    out += "state " + s.name;
    auto kids = children_.find(s.name);
    bool has_body = s.inv || s.entry || s.exit || s.do_ || !s.internT.empty() ||
                    kids != children_.end();
    if (!has_body) {
      out += ";\n";
      return;
    }
    out += " {\n";
    std::string in2(2 * depth + 2, ' ');
    if (s.inv) out += in2 + "[" + ToString(*s.inv) + "];\n";
    if (s.entry) out += in2 + "entry " + ToString(*s.entry) + ";\n";
    if (s.exit) out += in2 + "exit " + ToString(*s.exit) + ";\n";
    if (s.do_) out += in2 + "do " + ToString(*s.do_) + ";\n";
    for (const auto& it : s.internT) out += in2 + ToString(it) + ";\n";
    if (kids != children_.end()) {
      std::vector<std::string> names = kids->second;
      std::sort(names.begin(), names.end());
      for (const auto& n : names) {
        for (size_t j = 0; j < sc_.states.size(); ++j) {
          if (sc_.states[j].name == n) State(j, depth + 1, printed, out);
        }
      }
    }
    out += ind + "}\n";
  }

  const SCFull& sc_;
  std::map<std::string, std::string> parent_of_;
  std::map<std::string, std::vector<std::string>> children_;
};

SCFull SimpAsFull(const SCSimp& sc) {
  SCFull out;
  out.diagram_name = sc.diagram_name;
  out.class_name = sc.class_name;
  if (!sc.inv.is_true()) out.inv = sc.inv;
  for (const auto& s : sc.states) {
    FullState f;
    f.name = s.name;
    f.modifiers = s.modifiers;
    if (!s.inv.is_true()) f.inv = s.inv;
    out.states.push_back(std::move(f));
  }
  for (const auto& t : sc.transitions) {
    Trans f;
    f.src = t.src;
    f.trg = t.trg;
    if (!t.pre.is_true()) f.pre = t.pre;
    f.call = t.call;
    if (!t.act.stmt.is_skip() || !t.act.post_or_true().is_true()) {
      f.act = t.act;
      if (t.act.post_or_true().is_true()) f.act->post.reset();
    }
    out.trans.insert(std::move(f));
  }
  return out;
}

}  // namespace

std::string ToString(const Trans& t) {
  std::string out;
  if (t.prio) out += "<<prio = " + std::to_string(*t.prio) + ">> ";
  return out + t.src + " -> " + t.trg + " : " + TransTail(t.pre, t.call, t.act);
}

std::string ToString(const SimpTrans& t) {
  return t.src + " -> " + t.trg + " : [" + ToString(t.pre) + "] " +
         ToString(t.call) + " " + ToString(t.act);
}

std::string ToString(const InternT& t) {
  return "-> : " + TransTail(t.pre, t.call, t.act);
}

std::string Print(const SCFull& sc) { return ChartPrinter(sc).Run(); }

std::string PrintSimp(const SCSimp& sc) { return Print(SimpAsFull(sc)); }

SCFull ToFull(const SCSimp& sc) { return SimpAsFull(sc); }

SCSimp NormalizeFlat(const SCFull& sc) {
  std::vector<std::string> residual;
  if (!sc.sub.empty()) residual.push_back("substate relation");
  for (const auto& s : sc.states) {
    if (s.entry) residual.push_back("entry action in " + s.name);
    if (s.exit) residual.push_back("exit action in " + s.name);
    if (s.do_) residual.push_back("do action in " + s.name);
    if (!s.internT.empty()) residual.push_back("internal transitions in " + s.name);
  }
  if (!residual.empty()) {
    std::string msg = "residual constructs:";
    for (const auto& r : residual) msg += " " + r + ";";
    throw NotSimplifiable(msg);
  }
  SCSimp out;
  out.diagram_name = sc.diagram_name;
  out.class_name = sc.class_name;
  out.inv = sc.inv.value_or(Cond::True());
  for (const auto& s : sc.states) {
    out.states.push_back({s.name, s.modifiers, s.inv.value_or(Cond::True())});
  }
  std::sort(out.states.begin(), out.states.end());
  for (const auto& t : sc.trans) {
    Action act = t.act.value_or(Action{});
    act.post = act.post_or_true();
    out.transitions.push_back(
        {t.src, t.trg, t.pre.value_or(Cond::True()), t.call, std::move(act)});
  }
  std::sort(out.transitions.begin(), out.transitions.end());
  out.transitions.erase(
      std::unique(out.transitions.begin(), out.transitions.end()),
      out.transitions.end());
  return out;
}

// ----------------------------------------------------------------------------
// JSON.

namespace {

json OptCond(const std::optional<Cond>& c) {
  return c ? json(ToString(*c)) : json(nullptr);
}

json ActionJson(const Action& a) {
  return json{{"stmt", ToString(a.stmt)}, {"post", OptCond(a.post)}};
}

json OptAction(const std::optional<Action>& a) {
  return a ? ActionJson(*a) : json(nullptr);
}

template <typename Set>
json NameArray(const Set& set) {
  std::vector<std::string> names;
  for (const auto& x : set) names.push_back(ToString(x));
  std::sort(names.begin(), names.end());
  return names;
}

const ParseOptions kLenient{true};

std::optional<Cond> CondFrom(const json& j) {
  if (j.is_null()) return std::nullopt;
  return ParseCond(j.get<std::string>(), kLenient);
}

std::optional<Action> ActionFrom(const json& j) {
  if (j.is_null()) return std::nullopt;
  Action a;
  a.stmt = ParseStmt(j.at("stmt").get<std::string>(), kLenient);
  a.post = CondFrom(j.value("post", json(nullptr)));
  return a;
}

json Field(const json& j, const char* key) {
  return j.contains(key) ? j.at(key) : json(nullptr);
}

}  // namespace

json ToJson(const SCFull& sc) {
  json states = json::array();
  for (const auto& s : sc.states) {
    json internT = json::array();
    for (const auto& it : s.internT) {
      internT.push_back({{"pre", OptCond(it.pre)},
                         {"call", ToString(it.call)},
                         {"act", OptAction(it.act)}});
    }
    states.push_back({{"name", s.name},
                      {"stereos", NameArray(s.stereos)},
                      {"modifiers", NameArray(s.modifiers)},
                      {"inv", OptCond(s.inv)},
                      {"entry", OptAction(s.entry)},
                      {"exit", OptAction(s.exit)},
                      {"do", OptAction(s.do_)},
                      {"internT", internT}});
  }
  json trans = json::array();
  for (const auto& t : sc.trans) {
    trans.push_back({{"prio", t.prio ? json(*t.prio) : json(nullptr)},
                     {"src", t.src},
                     {"pre", OptCond(t.pre)},
                     {"call", ToString(t.call)},
                     {"act", OptAction(t.act)},
                     {"trg", t.trg}});
  }
  json sub = json::array();
  for (const auto& [c, p] : sc.sub) sub.push_back({c, p});
  return {{"stereos", NameArray(sc.stereos)},
          {"diagramName", sc.diagram_name},
          {"className", sc.class_name},
          {"inv", OptCond(sc.inv)},
          {"states", states},
          {"trans", trans},
          {"sub", sub}};
}

json ToJson(const SCSimp& sc) {
  json states = json::array();
  for (const auto& s : sc.states) {
    states.push_back({{"name", s.name},
                      {"modifiers", NameArray(s.modifiers)},
                      {"inv", ToString(s.inv)}});
  }
  json trans = json::array();
  for (const auto& t : sc.transitions) {
    trans.push_back({{"src", t.src},
                     {"pre", ToString(t.pre)},
                     {"call", ToString(t.call)},
                     {"act", ActionJson(t.act)},
                     {"trg", t.trg}});
  }
  return {{"diagramName", sc.diagram_name},
          {"className", sc.class_name},
          {"inv", ToString(sc.inv)},
          {"states", states},
          {"transitions", trans}};
}

SCFull FullFromJson(const json& j) {
  try {
    SCFull sc;
    for (const auto& s : j.value("stereos", json::array())) {
      std::string name = s.get<std::string>();
      bool found = false;
      for (auto cs : {ChartStereo::kPrioInner, ChartStereo::kPrioOuter,
                      ChartStereo::kCompletionIgnore, ChartStereo::kCompletionChaos,
                      ChartStereo::kCompletionError,
                      ChartStereo::kActionConditionsSequential}) {
        if (ToString(cs) == name) {
          sc.stereos.insert(cs);
          found = true;
        }
      }
      if (!found) throw FormatError("unknown chart stereotype " + name);
    }
    sc.diagram_name = j.at("diagramName").get<std::string>();
    sc.class_name = j.value("className", sc.diagram_name);
    sc.inv = CondFrom(Field(j, "inv"));
    for (const auto& js : j.value("states", json::array())) {
      FullState s;
      s.name = js.at("name").get<std::string>();
      for (const auto& x : js.value("stereos", json::array())) {
        std::string v = x.get<std::string>();
        if (v == "error") {
          s.stereos.insert(StateStereo::kError);
        } else if (v == "exception") {
          s.stereos.insert(StateStereo::kException);
        } else {
          throw FormatError("unknown state stereotype " + v);
        }
      }
      for (const auto& x : js.value("modifiers", json::array())) {
        std::string v = x.get<std::string>();
        if (v == "initial") {
          s.modifiers.insert(Modifier::kInitial);
        } else if (v == "final") {
          s.modifiers.insert(Modifier::kFinal);
        } else {
          throw FormatError("unknown modifier " + v);
        }
      }
      s.inv = CondFrom(Field(js, "inv"));
      s.entry = ActionFrom(Field(js, "entry"));
      s.exit = ActionFrom(Field(js, "exit"));
      s.do_ = ActionFrom(Field(js, "do"));
      for (const auto& it : js.value("internT", json::array())) {
        s.internT.insert({CondFrom(Field(it, "pre")),
                          ParseCall(it.at("call").get<std::string>(), kLenient),
                          ActionFrom(Field(it, "act"))});
      }
      sc.states.push_back(std::move(s));
    }
    for (const auto& jt : j.value("trans", json::array())) {
      Trans t;
      if (jt.contains("prio") && !jt.at("prio").is_null()) {
        t.prio = jt.at("prio").get<int>();
      }
      t.src = jt.at("src").get<std::string>();
      t.trg = jt.at("trg").get<std::string>();
      t.pre = CondFrom(Field(jt, "pre"));
      t.call = ParseCall(jt.at("call").get<std::string>(), kLenient);
      t.act = ActionFrom(Field(jt, "act"));
      sc.trans.insert(std::move(t));
    }
    for (const auto& p : j.value("sub", json::array())) {
      sc.sub.insert({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
    }
    sc.Normalize();
    return sc;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed chart JSON: ") + e.what());
  }
}

json ToJson(const Message& m) { return ToString(m); }

json ToJson(const Value& v) {
  if (v.is_int()) return v.as_int();
  if (v.is_bool()) return v.as_bool();
  json arr = json::array();
  for (const auto& x : v.as_list()) arr.push_back(ToJson(x));
  return arr;
}

json ToJson(const Valuation& v) {
  json out = json::object();
  for (const auto& [k, val] : v) out[k] = ToJson(val);
  return out;
}

Value ValueFromJson(const json& j) {
  if (j.is_boolean()) return Value(j.get<bool>());
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  if (j.is_array()) {
    List l;
    for (const auto& x : j) l.push_back(ValueFromJson(x));
    return Value(std::move(l));
  }
  if (j.is_string()) return ParseValue(j.get<std::string>());
  throw FormatError("not a value: " + j.dump());
}

// ----------------------------------------------------------------------------
// DOT.

namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string NodeAttrs(const std::set<Modifier>& mods) {
  std::string style = mods.count(Modifier::kInitial) ? "rounded,bold" : "rounded";
  std::string out = "[shape=box, style=\"" + style + "\"";
  if (mods.count(Modifier::kFinal)) out += ", peripheries=2";
  return out + "]";
}

}  // namespace

std::string ToDot(const SCFull& sc) {
  std::map<std::string, std::vector<std::string>> children;
  std::set<std::string> has_parent;
  for (const auto& [c, p] : sc.sub) {
    if (has_parent.count(c) || sc.Find(c) == nullptr || sc.Find(p) == nullptr) continue;
    has_parent.insert(c);
    children[p].push_back(c);
  }
  std::ostringstream out;
  out << "digraph " << Quote(sc.diagram_name) << " {\n  compound=true;\n";
  std::set<std::string> seen;
  std::function<void(const std::string&, int)> emit = [&](const std::string& n,
                                                           int depth) {
    if (!seen.insert(n).second) return;
    std::string ind(2 * depth, ' ');
    const FullState* s = sc.Find(n);
    auto kids = children.find(n);
    if (kids == children.end()) {
      out << ind << Quote(n) << " " << NodeAttrs(s->modifiers) << ";\n";
      return;
    }
    out << ind << "subgraph " << Quote("cluster_" + n) << " {\n";
    out << ind << "  label=" << Quote(n) << ";\n";
    out << ind << "  " << Quote(n) << " [shape=point, style=invis];\n";
    std::vector<std::string> names = kids->second;
    std::sort(names.begin(), names.end());
    for (const auto& c : names) emit(c, depth + 1);
    out << ind << "}\n";
  };
  for (const auto& s : sc.states) {
    if (!has_parent.count(s.name)) emit(s.name, 1);
  }
  for (const auto& s : sc.states) emit(s.name, 1);
  for (const auto& t : sc.trans) {
    out << "  " << Quote(t.src) << " -> " << Quote(t.trg) << " [label="
        << Quote(TransTail(t.pre, t.call, t.act));
    if (children.count(t.src)) out << ", ltail=" << Quote("cluster_" + t.src);
    if (children.count(t.trg)) out << ", lhead=" << Quote("cluster_" + t.trg);
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ToDot(const SCSimp& sc) { return ToDot(SimpAsFull(sc)); }

}  // namespace scforge
