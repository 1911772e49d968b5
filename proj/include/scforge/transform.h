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

#ifndef SCFORGE_TRANSFORM_H_
#define SCFORGE_TRANSFORM_H_

// Structural queries over SCFull, the 26 flattening rules, the fixpoint
// driver and the conversion to SCSimp.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "scforge/syntax.h"

namespace scforge {

// ----------------------------------------------------------------------------
// Structural queries. States are identified by name.

std::vector<std::string> Substates(const SCFull& sc, const std::string& s);
// Strict superstates (closure of sub).
std::vector<std::string> Superstates(const SCFull& sc, const std::string& s);
std::vector<Trans> IngoingT(const SCFull& sc, const std::string& s);
std::vector<Trans> OutgoingT(const SCFull& sc, const std::string& s);
std::vector<std::string> TopInitials(const SCFull& sc);
bool TopInitial(const SCFull& sc);
std::vector<std::string> TopFinals(const SCFull& sc);
bool TopFinal(const SCFull& sc);
// No substates and no do action.
bool SimpleState(const SCFull& sc, const std::string& s);
// All calls in `ts` share a name and no other outgoing transition of `s`
// carries it.
bool SameCall(const SCFull& sc, const std::string& s,
              const std::vector<Trans>& ts);
bool NoPrio(const Trans& t);
bool NoPrios(const std::vector<Trans>& ts);
// [parent, grandparent, ...].
std::vector<std::string> ListOfAllSuperstates(const SCFull& sc,
                                              const std::string& s);
// Superstates of `s` from its parent up to, excluding, `upto`. Absent `upto`
// means all superstates.
std::vector<std::string> ListOfSuperstates(const SCFull& sc,
                                           const std::string& s,
                                           const std::optional<std::string>& upto);
std::vector<std::string> CommonSuperstates(const SCFull& sc,
                                           const std::string& s1,
                                           const std::string& s2);
std::optional<std::string> Lcs(const SCFull& sc, const std::string& s1,
                               const std::string& s2);
bool InitialIrrelevant(const SCFull& sc, const std::string& s);
bool FinalIrrelevant(const SCFull& sc, const std::string& s);
bool FlatAndSimplified(const SCFull& sc);

// Maximal same-name groups among the outgoing transitions of `s`, ordered by
// name.
std::vector<std::vector<Trans>> CallGroups(const SCFull& sc,
                                           const std::string& s);

// ----------------------------------------------------------------------------
// Rules.

inline constexpr int kRuleCount = 26;

// Canonical name of rule 1..26.
const char* RuleName(int rule);
// Inverse of RuleName; 0 when unknown.
int RuleNumber(const std::string& name);

struct Binding {
  int rule = 0;
  std::vector<std::string> states;
  std::vector<Trans> transitions;
  std::optional<InternT> internal;

  std::string Summary() const;

  friend bool operator==(const Binding&, const Binding&) = default;
};

// All bindings satisfying the bind and pre compartments, in deterministic
// order.
std::vector<Binding> FindBindings(int rule, const SCFull& sc);

// Applies the trafo compartment. Throws BindingStale unless `b` is among
// FindBindings(b.rule, sc).
SCFull ApplyRule(const SCFull& sc, const Binding& b);

// Components a rule may touch. Tags: chart.stereos, chart.inv, states, sub,
// trans, state.stereos, state.modifiers, state.inv, state.entry, state.exit,
// state.do, state.internT.
std::set<std::string> RuleDelta(int rule);
std::set<std::string> StructuralDiff(const SCFull& a, const SCFull& b);

// ----------------------------------------------------------------------------
// Fixpoint.

struct RuleOrder {
  enum class Kind { kPaper, kRandom };
  Kind kind = Kind::kPaper;
  std::uint64_t seed = 0;

  // "paper" or "random:<seed>"; throws FormatError.
  static RuleOrder Parse(const std::string& text);
};

struct TraceEntry {
  int step = 0;
  int rule = 0;
  std::string binding;
  std::string before;  // FNV-1a 64 of the printed chart, hex
  std::string after;
};

struct TransformResult {
  SCFull chart;
  std::vector<TraceEntry> trace;
  // Stereotypes without a rewrite (e.g. completion:chaos) dropped after the
  // rules ran out.
  std::vector<std::string> retired;
};

struct TransformOptions {
  RuleOrder order;
  int max_steps = 10000;
  bool check_input = true;
  // Called with (step, chart) after every rule application.
  std::function<void(int, const SCFull&)> on_step;
};

// Throws IllFormedInput (input violates a context condition) and
// NonTermination (more than max_steps applications).
TransformResult TransformFixpoint(const SCFull& sc,
                                  const TransformOptions& opts = {});

std::string ChartHash(const SCFull& sc);
nlohmann::json ToJson(const TraceEntry& e);

// Requires a flat and simplified chart with no residual constructs. Throws
// NotSimplifiable listing what remains.
SCSimp ToSimplified(const SCFull& sc);

}  // namespace scforge

#endif  // SCFORGE_TRANSFORM_H_
