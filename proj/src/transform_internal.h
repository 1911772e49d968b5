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

#ifndef SCFORGE_SRC_TRANSFORM_INTERNAL_H_
#define SCFORGE_SRC_TRANSFORM_INTERNAL_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scforge/actions.h"
#include "scforge/syntax.h"

namespace scforge::internal {

using CallKey = std::pair<std::string, std::size_t>;

inline CallKey KeyOf(const Call& c) { return {c.name, c.args.size()}; }

// Conjunction without literal `true` operands.
Cond Conj(const std::vector<Cond>& cs);
// Conjunction of the present conditions; absent when none is left.
std::optional<Cond> OptConj(const std::vector<std::optional<Cond>>& cs);

// matchPattern(inp_i, p_i) && pre.
Cond Guard(const Trans& t);
// Conjunction of !Guard(t) over the transitions sharing `key`.
Cond NoneEnabled(const std::vector<Trans>& ts, const CallKey& key);

std::optional<std::string> ParentOf(const SCFull& sc, const std::string& s);
bool HasOutgoingAbove(const SCFull& sc, const std::string& s);
bool HasIngoingAbove(const SCFull& sc, const std::string& s);

}  // namespace scforge::internal

#endif  // SCFORGE_SRC_TRANSFORM_INTERNAL_H_
