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

#ifndef SCFORGE_SYNTAX_H_
#define SCFORGE_SYNTAX_H_

// Abstract syntax of full and simplified statecharts, the `.sc` parser, and
// text/JSON/DOT printers.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "scforge/actions.h"

namespace scforge {

// Position in the source text. Never takes part in structural equality.
struct SourcePos {
  int line = 0;
  int col = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
  friend std::strong_ordering operator<=>(const SourcePos&, const SourcePos&) {
    return std::strong_ordering::equal;
  }
};

enum class ChartStereo {
  kPrioInner,
  kPrioOuter,
  kCompletionIgnore,
  kCompletionChaos,
  kCompletionError,
  kActionConditionsSequential,
};

enum class StateStereo { kError, kException };
enum class Modifier { kInitial, kFinal };

std::string ToString(ChartStereo s);
std::string ToString(StateStereo s);
std::string ToString(Modifier m);

struct InternT {
  std::optional<Cond> pre;
  Call call;
  std::optional<Action> act;

  friend bool operator==(const InternT&, const InternT&) = default;
  friend std::strong_ordering operator<=>(const InternT&,
                                          const InternT&) = default;
};

struct FullState {
  std::string name;
  std::set<StateStereo> stereos;
  std::set<Modifier> modifiers;
  std::optional<Cond> inv;
  std::optional<Action> entry;
  std::optional<Action> exit;
  std::optional<Action> do_;
  std::set<InternT> internT;
  SourcePos pos;

  bool has(Modifier m) const { return modifiers.count(m) > 0; }
  bool has(StateStereo s) const { return stereos.count(s) > 0; }

  friend bool operator==(const FullState&, const FullState&) = default;
  friend std::strong_ordering operator<=>(const FullState&,
                                          const FullState&) = default;
};

struct Trans {
  std::string src;
  std::string trg;
  std::optional<int> prio;  // `prio = n` stereotype
  std::optional<Cond> pre;
  Call call;
  std::optional<Action> act;
  SourcePos pos;

  friend bool operator==(const Trans&, const Trans&) = default;
  friend std::strong_ordering operator<=>(const Trans&,
                                          const Trans&) = default;
};

// (child, parent)
using SubPair = std::pair<std::string, std::string>;

struct SCFull {
  std::set<ChartStereo> stereos;
  std::string diagram_name;
  std::string class_name;
  std::optional<Cond> inv;
  // Kept sorted by name (stable); duplicates are representable so that CC12
  // can report them.
  std::vector<FullState> states;
  std::set<Trans> trans;
  std::set<SubPair> sub;

  bool has(ChartStereo s) const { return stereos.count(s) > 0; }
  const FullState* Find(const std::string& name) const;
  FullState* Find(const std::string& name);
  // Re-sorts `states` by name.
  void Normalize();

  friend bool operator==(const SCFull&, const SCFull&) = default;
};

struct SimpState {
  std::string name;
  std::set<Modifier> modifiers;
  Cond inv;

  bool has(Modifier m) const { return modifiers.count(m) > 0; }

  friend bool operator==(const SimpState&, const SimpState&) = default;
  friend std::strong_ordering operator<=>(const SimpState&,
                                          const SimpState&) = default;
};

struct SimpTrans {
  std::string src;
  std::string trg;
  Cond pre;
  Call call;
  Action act;  // post always present

  friend bool operator==(const SimpTrans&, const SimpTrans&) = default;
  friend std::strong_ordering operator<=>(const SimpTrans&,
                                          const SimpTrans&) = default;
};

struct SCSimp {
  std::string diagram_name;
  std::string class_name;
  Cond inv;
  std::vector<SimpState> states;  // sorted by name
  std::vector<SimpTrans> transitions;  // sorted, no duplicates

  const SimpState* Find(const std::string& name) const;

  friend bool operator==(const SCSimp&, const SCSimp&) = default;
};

// ----------------------------------------------------------------------------
// Parsing.

struct ParseOptions {
  // Accept `$` in identifiers, `inp<k>` variables and `timeout` triggers.
  // Needed to re-read transformation output.
  bool allow_reserved = false;
};

SCFull Parse(const std::string& text, const ParseOptions& opts = {});
// Parses a chart and normalizes it into the simplified form via NormalizeFlat.
SCSimp ParseSimp(const std::string& text);

// Field-wise copy of a flat chart into SCSimp with absent conditions set to
// `true` and absent actions to (skip, true). Chart and state stereotypes are
// dropped. Throws NotSimplifiable when hierarchy, state actions or internal
// transitions remain.
SCSimp NormalizeFlat(const SCFull& sc);
// Inverse direction: trivial conditions and actions become absent.
SCFull ToFull(const SCSimp& sc);

Cond ParseCond(const std::string& text, const ParseOptions& opts = {});
Expr ParseExpr(const std::string& text, const ParseOptions& opts = {});
Stmt ParseStmt(const std::string& text, const ParseOptions& opts = {});
Call ParseCall(const std::string& text, const ParseOptions& opts = {});
Pattern ParsePattern(const std::string& text, const ParseOptions& opts = {});
Value ParseValue(const std::string& text);
Message ParseMessage(const std::string& text);
// One message per non-blank line; `//` starts a comment.
std::vector<Message> ParseMessages(const std::string& text);

// ----------------------------------------------------------------------------
// Printing.

std::string Print(const SCFull& sc);
std::string PrintSimp(const SCSimp& sc);
std::string ToString(const Trans& t);
std::string ToString(const SimpTrans& t);
std::string ToString(const InternT& t);

nlohmann::json ToJson(const SCFull& sc);
nlohmann::json ToJson(const SCSimp& sc);
SCFull FullFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const Message& m);
nlohmann::json ToJson(const Valuation& v);
nlohmann::json ToJson(const Value& v);
Value ValueFromJson(const nlohmann::json& j);

std::string ToDot(const SCFull& sc);
std::string ToDot(const SCSimp& sc);

}  // namespace scforge

#endif  // SCFORGE_SYNTAX_H_
