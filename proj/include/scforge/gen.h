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

#ifndef SCFORGE_GEN_H_
#define SCFORGE_GEN_H_

// Seeded generator of well-formed hierarchical charts.

#include <cstdint>

#include "scforge/syntax.h"
#include "scforge/wellformedness.h"

namespace scforge {

struct GenOptions {
  std::uint64_t seed = 0;
  int max_states = 8;  // total, composites included
  int max_depth = 3;   // top-level states have depth 1
  // Restrict to charts the term encoder accepts: no guards, postconditions,
  // assignments, do actions, internal transitions, invariants or priority
  // stereotypes; transitions only between siblings; prio:inner when
  // hierarchical.
  bool guard_free = false;
};

SCFull Generate(const GenOptions& opts);

// Declarations matching what Generate emits.
SignatureContext GenSignature(const SCFull& sc);

}  // namespace scforge

#endif  // SCFORGE_GEN_H_
