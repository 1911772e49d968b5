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

#ifndef SCFORGE_CONFORM_H_
#define SCFORGE_CONFORM_H_

// Conformance of finite object-group fragments: per-node object states with
// thread stacks and event buffers, labelled delta edges, and checks of a
// simplified chart or of term macrosteps against them.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "scforge/actions.h"
#include "scforge/syntax.h"
#include "scforge/vdb.h"

namespace scforge {

struct ObjectState {
  Valuation vars;
  // Thread id -> stack of frames, bottom first. A frame is the message it
  // processes.
  std::map<std::string, std::vector<Message>> threads;
  std::vector<Message> buffer;
};

struct OGSNode {
  std::string id;
  std::map<std::string, ObjectState> objects;
};

struct FragEdge {
  std::string from;
  std::string to;
  std::vector<Message> m;  // messages sent by the main object
};

struct SystemFragment {
  std::vector<OGSNode> nodes;
  std::vector<FragEdge> edges;
  std::set<std::string> init;
  std::string main;

  const OGSNode* Find(const std::string& id) const;
  // Throws UnknownObject when the node has no main object.
  const ObjectState& Main(const OGSNode& n) const;
};

// State name (or term identifier) -> node ids.
using ProjectionMap = std::map<std::string, std::set<std::string>>;

// Throws FormatError on malformed input or dangling node ids.
SystemFragment FragmentFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const SystemFragment& f);
ProjectionMap ProjectionFromJson(const nlohmann::json& j);

// Nodes reachable from `from` in at most n edges.
std::set<std::string> ReachableN(const SystemFragment& frag,
                                 const std::string& from, int n);

// True iff `m` is the top frame of some thread of object `o`.
bool ProcCheck(const OGSNode& node, const std::string& o, const Message& m);

struct ConditionResult {
  int condition = 0;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct ConformReport {
  std::vector<ConditionResult> conditions;

  bool ok() const;
  const ConditionResult& at(int condition) const;
};

nlohmann::json ToJson(const ConformReport& r);

struct ConformOptions {
  // Step bound for the transition search; absent means the node count.
  std::optional<int> bound;
};

// Throws IncompleteProjection when a chart state has no image.
ConformReport CheckSystemConformance(const SCSimp& sc,
                                     const SystemFragment& frag,
                                     const ProjectionMap& pi,
                                     const ConformOptions& opts = {});

// ----------------------------------------------------------------------------
// Term macrosteps.

// Image of a term: Basic by name, Or through its active subterm, And as the
// intersection of its parts. Throws IncompleteProjection.
std::set<std::string> ProjectTerm(const ProjectionMap& pi, const Term& t);

struct MacroStep {
  Term from;
  Term to;
  EventSym e;
  ActionSeq alpha;
};

struct RunEntry {
  OGSNode node;
  std::vector<Message> m;  // label of the step into this node; empty at 0
};

// Follows `ids` through the fragment, taking edge labels along the way.
// Throws FormatError when consecutive ids are not connected.
std::vector<RunEntry> RunFromPath(const SystemFragment& frag,
                                  const std::vector<std::string>& ids);

struct RunSatisfaction {
  bool ok = false;
  std::optional<int> k, r, s;
  std::string reason;
};

RunSatisfaction CheckRunSatisfaction(const MacroStep& step,
                                     const std::vector<RunEntry>& run,
                                     const ProjectionMap& pi,
                                     const std::string& main);

struct KripkeEdgeRef {
  KripkeNode from;
  KripkeNode to;
};

struct RefinementOptions {
  std::optional<int> bound;
  // When set, a Kripke node is projected onto the nodes of its term image
  // whose main-object buffer equals its queue restricted to these names.
  std::optional<std::set<std::string>> match_events;
};

struct RefinementFailure {
  std::size_t edge = 0;
  std::string from_node;
};

std::vector<RefinementFailure> CheckMacroMicroRefinement(
    const std::vector<KripkeEdgeRef>& edges, const SystemFragment& frag,
    const ProjectionMap& pi, const RefinementOptions& opts = {});

}  // namespace scforge

#endif  // SCFORGE_CONFORM_H_
