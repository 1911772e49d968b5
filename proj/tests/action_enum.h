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

#ifndef SCFORGE_TESTS_ACTION_ENUM_H_
#define SCFORGE_TESTS_ACTION_ENUM_H_

// Enumerators and an independent reference matcher shared by the unit and
// acceptance suites.

#include <optional>
#include <string>
#include <vector>

#include "scforge/actions.h"

namespace scforge::testing {

// Ints {0,1,2}, booleans, and int lists of length <= 3 over {0,1}, plus
// nested singletons up to one level.
inline std::vector<Value> SmallValues() {
  std::vector<Value> out = {Value(0), Value(1), Value(2), Value(true),
                            Value(false)};
  std::vector<List> lists = {{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<List> next;
    for (const auto& l : lists) {
      if (static_cast<int>(l.size()) != len - 1) continue;
      for (int x = 0; x <= 1; ++x) {
        List m = l;
        m.push_back(Value(x));
        next.push_back(m);
      }
    }
    lists.insert(lists.end(), next.begin(), next.end());
  }
  for (const auto& l : lists) out.push_back(Value(l));
  out.push_back(Value(List{Value(List{})}));
  out.push_back(Value(List{Value(List{Value(1)})}));
  return out;
}

// Patterns of depth <= 2 over fresh variable names. Variables are renamed
// per pattern so each pattern is linear.
inline std::vector<Pattern> SmallPatterns() {
  std::vector<Pattern> leaves = {
      Pattern::Var("a"), Pattern::Lit(Value(0)), Pattern::Lit(Value(1)),
      Pattern::Lit(Value(true)), Pattern::Nil(), Pattern::Plus("a", 1),
      Pattern::Plus("a", -1), Pattern::Lit(Value(List{Value(1)}))};
  std::vector<Pattern> out = leaves;
  auto rename = [](Pattern p, const std::string& name) {
    if (p.kind == Pattern::Kind::kVar || p.kind == Pattern::Kind::kPlus) {
      p.var = name;
    }
    return p;
  };
  for (const auto& h : leaves) {
    for (const auto& t : leaves) {
      out.push_back(Pattern::Cons(rename(h, "h"), rename(t, "t")));
    }
  }
  return out;
}

// Reference matcher: returns bindings as a list of (name, value) pairs in
// pattern order, independent from the library's recursion.
inline bool RefMatch(const Pattern& p, const Value& v,
                     std::vector<std::pair<std::string, Value>>& out) {
  if (p.kind == Pattern::Kind::kVar) {
    out.emplace_back(p.var, v);
    return true;
  }
  if (p.kind == Pattern::Kind::kLit) return v == p.lit;
  if (p.kind == Pattern::Kind::kPlus) {
    if (v.data.index() != 0) return false;
    out.emplace_back(p.var, Value(std::get<std::int64_t>(v.data) - p.offset));
    return true;
  }
  if (v.data.index() != 2) return false;
  const List& l = std::get<List>(v.data);
  if (p.kind == Pattern::Kind::kNil) return l.empty();
  if (l.empty()) return false;
  return RefMatch(p.parts[0], l[0], out) &&
         RefMatch(p.parts[1], Value(List(l.begin() + 1, l.end())), out);
}

}  // namespace scforge::testing

#endif  // SCFORGE_TESTS_ACTION_ENUM_H_
