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
#include <map>
#include <set>

#include "scforge/transform.h"
#include "transform_internal.h"

namespace scforge {
namespace internal {

Cond Conj(const std::vector<Cond>& cs) {
  std::vector<Cond> kept;
  for (const Cond& c : cs) {
    if (!c.is_true()) kept.push_back(c);
  }
  return ConjoinAll(kept);
}

std::optional<Cond> OptConj(const std::vector<std::optional<Cond>>& cs) {
  std::vector<Cond> kept;
  for (const auto& c : cs) {
    if (c && !c->is_true()) kept.push_back(*c);
  }
  if (kept.empty()) return std::nullopt;
  return ConjoinAll(kept);
}

Cond Guard(const Trans& t) {
  std::vector<Cond> parts;
  for (std::size_t i = 0; i < t.call.args.size(); ++i) {
    const std::string inp = InputParamName(static_cast<int>(i) + 1);
    const Pattern& p = t.call.args[i];
    // Already in callExpr position; the match is trivially true.
    if (p.kind == Pattern::Kind::kVar && p.var == inp) continue;
    parts.push_back(Cond::Match(inp, p));
  }
  parts.push_back(t.pre.value_or(Cond::True()));
  return Conj(parts);
}

Cond NoneEnabled(const std::vector<Trans>& ts, const CallKey& key) {
  std::vector<Cond> parts;
  for (const Trans& t : ts) {
    if (KeyOf(t.call) == key) parts.push_back(Cond::Not(Guard(t)));
  }
  return Conj(parts);
}

std::optional<std::string> ParentOf(const SCFull& sc, const std::string& s) {
  for (const auto& [child, parent] : sc.sub) {
    if (child == s) return parent;
  }
  return std::nullopt;
}

bool HasOutgoingAbove(const SCFull& sc, const std::string& s) {
  for (const std::string& sup : Superstates(sc, s)) {
    if (!OutgoingT(sc, sup).empty()) return true;
  }
  return false;
}

bool HasIngoingAbove(const SCFull& sc, const std::string& s) {
  for (const std::string& sup : Superstates(sc, s)) {
    if (!IngoingT(sc, sup).empty()) return true;
  }
  return false;
}

}  // namespace internal

using internal::ParentOf;

std::vector<std::string> Substates(const SCFull& sc, const std::string& s) {
  std::vector<std::string> out;
  for (const auto& [child, parent] : sc.sub) {
    if (parent == s) out.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> ListOfAllSuperstates(const SCFull& sc,
                                              const std::string& s) {
  std::vector<std::string> out;
  std::set<std::string> seen{s};
  std::optional<std::string> p = ParentOf(sc, s);
  while (p && seen.insert(*p).second) {
    out.push_back(*p);
    p = ParentOf(sc, *p);
  }
  return out;
}

std::vector<std::string> Superstates(const SCFull& sc, const std::string& s) {
  std::vector<std::string> out = ListOfAllSuperstates(sc, s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Trans> IngoingT(const SCFull& sc, const std::string& s) {
  std::vector<Trans> out;
  for (const Trans& t : sc.trans) {
    if (t.trg == s) out.push_back(t);
  }
  return out;
}

std::vector<Trans> OutgoingT(const SCFull& sc, const std::string& s) {
  std::vector<Trans> out;
  for (const Trans& t : sc.trans) {
    if (t.src == s) out.push_back(t);
  }
  return out;
}

namespace {

std::vector<std::string> TopWith(const SCFull& sc, Modifier m) {
  std::vector<std::string> out;
  for (const FullState& st : sc.states) {
    if (st.has(m) && !ParentOf(sc, st.name)) out.push_back(st.name);
  }
  return out;
}

}  // namespace

std::vector<std::string> TopInitials(const SCFull& sc) {
  return TopWith(sc, Modifier::kInitial);
}
bool TopInitial(const SCFull& sc) { return !TopInitials(sc).empty(); }
std::vector<std::string> TopFinals(const SCFull& sc) {
  return TopWith(sc, Modifier::kFinal);
}
bool TopFinal(const SCFull& sc) { return !TopFinals(sc).empty(); }

bool SimpleState(const SCFull& sc, const std::string& s) {
  const FullState* st = sc.Find(s);
  return Substates(sc, s).empty() && !(st && st->do_);
}

bool SameCall(const SCFull& sc, const std::string& s,
              const std::vector<Trans>& ts) {
  if (ts.empty()) return false;
  const std::string& name = ts.front().call.name;
  for (const Trans& t : ts) {
    if (t.call.name != name || t.src != s) return false;
  }
  for (const Trans& t : OutgoingT(sc, s)) {
    if (t.call.name == name &&
        std::find(ts.begin(), ts.end(), t) == ts.end()) {
      return false;
    }
  }
  return true;
}

bool NoPrio(const Trans& t) { return !t.prio.has_value(); }

bool NoPrios(const std::vector<Trans>& ts) {
  return std::all_of(ts.begin(), ts.end(), NoPrio);
}

std::vector<std::string> ListOfSuperstates(
    const SCFull& sc, const std::string& s,
    const std::optional<std::string>& upto) {
  std::vector<std::string> out;
  for (const std::string& sup : ListOfAllSuperstates(sc, s)) {
    if (upto && sup == *upto) break;
    out.push_back(sup);
  }
  return out;
}

std::vector<std::string> CommonSuperstates(const SCFull& sc,
                                           const std::string& s1,
                                           const std::string& s2) {
  std::vector<std::string> a = Superstates(sc, s1);
  std::vector<std::string> b = Superstates(sc, s2);
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::optional<std::string> Lcs(const SCFull& sc, const std::string& s1,
                               const std::string& s2) {
  std::vector<std::string> cs = CommonSuperstates(sc, s1, s2);
  if (cs.empty()) return std::nullopt;
  // The deepest common superstate is the first one met walking up from s1.
  for (const std::string& sup : ListOfAllSuperstates(sc, s1)) {
    if (std::binary_search(cs.begin(), cs.end(), sup)) return sup;
  }
  return std::nullopt;
}

bool InitialIrrelevant(const SCFull& sc, const std::string& s) {
  std::vector<std::string> tops = TopInitials(sc);
  if (tops.empty()) return false;
  if (std::find(tops.begin(), tops.end(), s) != tops.end()) return false;
  if (!IngoingT(sc, s).empty() || internal::HasIngoingAbove(sc, s)) {
    return false;
  }
  for (const std::string& sup : Superstates(sc, s)) {
    if (std::find(tops.begin(), tops.end(), sup) != tops.end()) return false;
  }
  return true;
}

bool FinalIrrelevant(const SCFull& sc, const std::string& s) {
  std::vector<std::string> tops = TopFinals(sc);
  if (tops.empty()) return false;
  if (std::find(tops.begin(), tops.end(), s) != tops.end()) return false;
  if (!OutgoingT(sc, s).empty() || internal::HasOutgoingAbove(sc, s)) {
    return false;
  }
  for (const std::string& sup : Superstates(sc, s)) {
    if (std::find(tops.begin(), tops.end(), sup) != tops.end()) return false;
  }
  return true;
}

bool FlatAndSimplified(const SCFull& sc) {
  for (const FullState& st : sc.states) {
    if (st.do_ || st.entry || st.exit || !st.internT.empty()) return false;
    if (!SimpleState(sc, st.name) &&
        (!IngoingT(sc, st.name).empty() || !OutgoingT(sc, st.name).empty() ||
         st.inv)) {
      return false;
    }
    if (st.has(Modifier::kInitial) && InitialIrrelevant(sc, st.name)) {
      return false;
    }
    if (st.has(Modifier::kFinal) && FinalIrrelevant(sc, st.name)) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Trans>> CallGroups(const SCFull& sc,
                                           const std::string& s) {
  std::map<std::string, std::vector<Trans>> by_name;
  for (const Trans& t : OutgoingT(sc, s)) by_name[t.call.name].push_back(t);
  std::vector<std::vector<Trans>> out;
  for (auto& [name, ts] : by_name) out.push_back(std::move(ts));
  return out;
}

}  // namespace scforge
