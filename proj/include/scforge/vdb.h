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

#ifndef SCFORGE_VDB_H_
#define SCFORGE_VDB_H_

// Statemachine terms (Basic / And / Or), their auxiliary step relation,
// Kripke steps over (term, queue) nodes, bounded run exploration and the
// encoder from guard-free statecharts.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "scforge/actions.h"
#include "scforge/syntax.h"

namespace scforge {

// Output symbol. Arguments may reference variables bound by the trigger
// pattern of the owning transition; entry/exit symbols are ground.
struct ActionSym {
  std::string name;
  std::vector<Expr> args;
  bool exception = false;

  friend bool operator==(const ActionSym&, const ActionSym&) = default;
  friend std::strong_ordering operator<=>(const ActionSym&,
                                          const ActionSym&) = default;
};

using EventSym = Message;

enum class History { kNone, kDeep, kShallow };

std::string ToString(History h);

struct VdbTransition {
  std::string name;
  int i = 1;  // source index, 1-based
  std::set<std::string> ns;  // source restriction
  Call e;
  std::vector<ActionSym> alpha;
  std::set<std::string> nt;  // target determinator
  int j = 1;  // target index, 1-based
  History ht = History::kNone;

  friend bool operator==(const VdbTransition&,
                         const VdbTransition&) = default;
};

struct Term {
  enum class Kind { kBasic, kAnd, kOr };

  Kind kind = Kind::kBasic;
  std::string name;
  std::vector<Term> subs;
  int active = 1;  // kOr, 1-based
  std::vector<VdbTransition> trans;  // kOr
  std::vector<ActionSym> en;
  std::vector<ActionSym> ex;

  static Term Basic(std::string name, std::vector<ActionSym> en = {},
                    std::vector<ActionSym> ex = {});
  static Term And(std::string name, std::vector<Term> subs,
                  std::vector<ActionSym> en = {},
                  std::vector<ActionSym> ex = {});
  static Term Or(std::string name, std::vector<Term> subs, int active,
                 std::vector<VdbTransition> trans,
                 std::vector<ActionSym> en = {},
                 std::vector<ActionSym> ex = {});

  // Active leaf-to-root path names are reachable through confOf; this finds
  // a direct or nested subterm by name.
  const Term* Find(const std::string& name) const;
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

using ActionSeq = std::vector<Message>;

std::set<std::string> ConfOf(const Term& t);
std::set<ActionSeq> EntrySeqs(const Term& t);
std::set<ActionSeq> ExitSeqs(const Term& t);
// Throws UnknownTargetName when a name in `nt` does not occur in `s`.
Term NextState(History ht, const std::set<std::string>& nt, const Term& s);

struct AuxResult {
  ActionSeq alpha;
  bool f = false;
  Term next;
  // Names of the or1 transitions fired, innermost first; diagnostics only.
  std::vector<std::string> fired;
};

std::vector<AuxResult> AuxStep(const Term& t, const EventSym& e);

// Structural checks: distinct names, index ranges, Ns/Nt names present in
// the addressed subterms. Throws FormatError.
void ValidateTerm(const Term& t);

// ----------------------------------------------------------------------------
// Kripke structure.

struct KripkeNode {
  Term term;
  std::vector<EventSym> queue;

  friend bool operator==(const KripkeNode& a, const KripkeNode& b) {
    return a.term == b.term && a.queue == b.queue;
  }
};

enum class JoinMode { kAppend, kDrop };

struct KripkeOptions {
  JoinMode join = JoinMode::kAppend;
  // Event alphabet consulted by kDrop; messages whose name is outside it are
  // not appended. Empty means every name is an event.
  std::set<std::string> events;
  std::size_t max_nodes = 1000000;
};

struct KripkeEdge {
  EventSym consumed;
  ActionSeq alpha;
  bool f = false;
  KripkeNode to;
};

std::vector<KripkeEdge> ConsumeInput(const KripkeNode& node,
                                     const KripkeOptions& opts = {});

struct VdbRun {
  std::vector<KripkeNode> nodes;
  std::vector<KripkeEdge> edges;  // edges[k] leads from nodes[k]
};

// All maximal paths of at most `max_steps` steps. Throws StateSpaceBound
// when more than opts.max_nodes distinct nodes are expanded.
std::vector<VdbRun> RunBounded(const KripkeNode& start, int max_steps,
                               const KripkeOptions& opts = {});

// Concatenated outputs of every maximal run that consumes the whole input.
std::set<ActionSeq> EmissionSets(const Term& start,
                                 const std::vector<EventSym>& inputs,
                                 const KripkeOptions& opts = {});

// ----------------------------------------------------------------------------
// Encoding.

// `domain` is the finite value set over which data-carrying states and
// data-assigning triggers are expanded.
Term EncodeGuardFree(const SCFull& sc, const std::vector<Value>& domain = {});
Term EncodeGuardFree(const SCSimp& sc, const std::vector<Value>& domain = {});

// ----------------------------------------------------------------------------
// Text and JSON.

std::string ToString(const ActionSym& a);
std::string ToString(const VdbTransition& t);
// s-expression form; see README for the grammar.
std::string ToString(const Term& t);
Term ParseTerm(const std::string& text);

nlohmann::json ToJson(const KripkeNode& n);
nlohmann::json ToJson(const VdbRun& r);

}  // namespace scforge

#endif  // SCFORGE_VDB_H_
