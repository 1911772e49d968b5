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

#include "scforge/wellformedness.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace scforge {
namespace {

std::string Fixture(const std::string& name) {
  std::ifstream in(std::string(SCFORGE_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> Codes(const CheckResult& r) {
  std::vector<int> out;
  for (const auto& v : r.violations) out.push_back(v.code);
  return out;
}

TEST(CheckAllTest, ReflexiveSub) {
  SCFull sc = Parse("statechart D { state A; }");
  sc.sub.insert({"A", "A"});
  EXPECT_EQ(Codes(CheckAll(sc)), std::vector<int>{1});
}

TEST(CheckAllTest, LongerCycleAndMultipleParents) {
  SCFull sc = Parse("statechart D { state A; state B; state C; }");
  sc.sub = {{"A", "B"}, {"B", "A"}, {"C", "A"}, {"C", "B"}};
  CheckResult r = CheckAll(sc);
  EXPECT_TRUE(r.Has(1));
  std::vector<int> codes = Codes(r);
  int c1 = static_cast<int>(std::count(codes.begin(), codes.end(), 1));
  EXPECT_EQ(c1, 3);  // A and B cyclic, C has two parents
}

TEST(CheckAllTest, DuplicateNames) {
  CheckResult r = CheckAll(Parse("statechart D { state A; state A; }"));
  EXPECT_EQ(Codes(r), std::vector<int>{12});
}

TEST(CheckAllTest, TwoPriorityStereotypes) {
  CheckResult r = CheckAll(Parse("<<prio:inner, prio:outer>> statechart D { state A; }"));
  ASSERT_EQ(Codes(r), std::vector<int>{3});
  EXPECT_EQ(r.violations[0].message, "At most one priority stereotype");
}

TEST(CheckAllTest, CompletionAndErrorStates) {
  EXPECT_TRUE(CheckAll(Parse("<<completion:ignore>> statechart D { <<error>> state E; }")).Has(3));
  EXPECT_TRUE(CheckAll(Parse("<<completion:error>> statechart D { state A; }")).Has(3));
  EXPECT_TRUE(CheckAll(Parse("<<completion:error>> statechart D { <<error>> state E; }")).ok());
  EXPECT_TRUE(CheckAll(Parse("<<completion:ignore, completion:chaos>> statechart D { }")).Has(3));
}

TEST(CheckAllTest, ExceptionTriggerNeedsExceptionState) {
  const char* text = "statechart D { state A; A -> A : exception boom(); }";
  EXPECT_EQ(Codes(CheckAll(Parse(text))), std::vector<int>{2});
  EXPECT_TRUE(CheckAll(Parse(
      "statechart D { state A; <<exception>> state X; A -> X : exception boom(); }")).ok());
}

TEST(CheckAllTest, DanglingEndpoints) {
  CheckResult r = CheckAll(Parse("statechart D { state A; A -> B : f(); }"));
  EXPECT_EQ(Codes(r), std::vector<int>{4});
}

TEST(CheckAllTest, RepeatedParameters) {
  EXPECT_EQ(Codes(CheckAll(Parse("statechart D { state A; A -> A : f(a, a); }"))),
            std::vector<int>{7});
  EXPECT_EQ(Codes(CheckAll(Parse("statechart D { state A; A -> A : f(a:a); }"))),
            std::vector<int>{7});
}

TEST(CheckAllTest, SendOfTrigger) {
  EXPECT_EQ(Codes(CheckAll(Parse("statechart D { state A; A -> A : f() / f(); }"))),
            std::vector<int>{10});
}

TEST(CheckAllTest, ConstructorInitialWithIngoing) {
  const char* text = R"(statechart D for C {
    initial state A; state B;
    A -> B : C();
    B -> A : g();
  })";
  EXPECT_EQ(Codes(CheckAll(Parse(text))), std::vector<int>{13});
}

TEST(CheckAllTest, FinalizeFinalWithOutgoing) {
  const char* text = R"(statechart D for C {
    state A; final state B;
    A -> B : finalize();
    B -> A : g();
  })";
  EXPECT_EQ(Codes(CheckAll(Parse(text))), std::vector<int>{14});
}

TEST(CheckAllTest, ContextConditions) {
  SCFull sc = Parse(Fixture("buffer.sc"));
  CheckResult bare = CheckAll(sc);
  EXPECT_TRUE(bare.ok());
  EXPECT_EQ(bare.skipped, (std::vector<int>{5, 6, 8, 9, 11}));
  SignatureContext ctx = SignatureFromJson(nlohmann::json::parse(R"({
    "className": "BufferClass",
    "methods": ["get/0", "put/1", {"name": "send", "arity": 1}],
    "attributes": ["data"]})"));
  CheckResult full = CheckAll(sc, ctx);
  EXPECT_TRUE(full.ok()) << ToJson(full).dump();
  EXPECT_TRUE(full.skipped.empty());
  ctx.class_name = "Other";
  ctx.methods.erase({"put", 1});
  ctx.attributes.clear();
  std::vector<int> codes = Codes(CheckAll(sc, ctx));
  EXPECT_EQ(codes, (std::vector<int>{5, 6, 6, 11, 11, 11}));
}

TEST(CheckAllTest, BufferIsClean) {
  EXPECT_TRUE(CheckAll(Parse(Fixture("buffer.sc"))).ok());
}

TEST(CheckSimpTest, Subset) {
  EXPECT_TRUE(CheckSimp(ParseSimp(Fixture("buffer.sc"))).empty());
  SCSimp dangling = ParseSimp("statechart D { state A; A -> B : f(); }");
  ASSERT_EQ(CheckSimp(dangling).size(), 1u);
  EXPECT_EQ(CheckSimp(dangling)[0].code, 4);
  SCSimp dup = ParseSimp("statechart D { state A; A -> A : f(a, a); }");
  ASSERT_EQ(CheckSimp(dup).size(), 1u);
  EXPECT_EQ(CheckSimp(dup)[0].code, 7);
}

TEST(CheckAllTest, MonotoneUnderRemoval) {
  SCFull sc = Parse(R"(<<prio:inner, prio:outer>> statechart D {
    state A; state A; state B { state X; }
    A -> B : f(a, a); X -> A : g();
  })");
  sc.sub.insert({"B", "B"});
  CheckResult base = CheckAll(sc);
  auto subset = [](const CheckResult& r) {
    std::set<int> out;
    for (const auto& v : r.violations) {
      if (v.code == 1 || v.code == 3 || v.code == 7 || v.code == 12) out.insert(v.code);
    }
    return out;
  };
  std::set<int> before = subset(base);
  for (size_t i = 0; i < sc.states.size(); ++i) {
    SCFull smaller = sc;
    smaller.states.erase(smaller.states.begin() + static_cast<long>(i));
    for (int c : subset(CheckAll(smaller))) EXPECT_TRUE(before.count(c)) << c;
  }
  for (const auto& t : sc.trans) {
    SCFull smaller = sc;
    smaller.trans.erase(t);
    for (int c : subset(CheckAll(smaller))) EXPECT_TRUE(before.count(c)) << c;
  }
}

}  // namespace
}  // namespace scforge
