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

#ifndef SCFORGE_WELLFORMEDNESS_H_
#define SCFORGE_WELLFORMEDNESS_H_

// Context conditions CC1..CC14 over SCFull and the hierarchy-free subset over
// SCSimp.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "scforge/syntax.h"

namespace scforge {

struct Violation {
  int code = 0;  // 1..14
  std::string subject;
  std::string message;

  std::string code_name() const { return "CC" + std::to_string(code); }

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

// Stand-in for the class diagram the chart is written against.
struct SignatureContext {
  std::string class_name;
  std::set<std::pair<std::string, int>> methods;  // (name, arity)
  std::set<std::string> attributes;
};

struct CheckResult {
  std::vector<Violation> violations;  // ordered by code, then subject
  std::vector<int> skipped;           // codes not checked for lack of context

  bool ok() const { return violations.empty(); }
  bool Has(int code) const;
};

CheckResult CheckAll(const SCFull& sc,
                     const std::optional<SignatureContext>& ctx = std::nullopt);

// CC4, CC7 and CC12 on a flat chart.
std::vector<Violation> CheckSimp(const SCSimp& sc);

// {"className": C, "methods": [{"name": f, "arity": n}] | ["f/1"],
//  "attributes": [..]}
SignatureContext SignatureFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const Violation& v);
nlohmann::json ToJson(const CheckResult& r);

}  // namespace scforge

#endif  // SCFORGE_WELLFORMEDNESS_H_
