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

#include <cinttypes>
#include <cstdio>
#include <random>

#include "scforge/errors.h"
#include "scforge/transform.h"
#include "scforge/wellformedness.h"

namespace scforge {

RuleOrder RuleOrder::Parse(const std::string& text) {
  RuleOrder o;
  if (text == "paper") return o;
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size()) {
        o.kind = Kind::kRandom;
        return o;
      }
    } catch (const std::exception&) {
    }
  }
  throw FormatError("strategy must be 'paper' or 'random:<seed>', got '" +
                    text + "'");
}

std::string ChartHash(const SCFull& sc) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : Print(sc)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

nlohmann::json ToJson(const TraceEntry& e) {
  return {{"step", e.step},     {"rule", e.rule},
          {"name", RuleName(e.rule)}, {"binding", e.binding},
          {"before", e.before}, {"after", e.after}};
}

namespace {

void Retire(SCFull& sc, std::vector<std::string>& retired) {
  for (ChartStereo s : sc.stereos) retired.push_back(ToString(s));
  sc.stereos.clear();
  for (FullState& st : sc.states) {
    for (StateStereo s : st.stereos) {
      retired.push_back(st.name + ":" + ToString(s));
    }
    st.stereos.clear();
  }
  std::set<Trans> trans;
  for (Trans t : sc.trans) {
    if (t.prio) retired.push_back("prio=" + std::to_string(*t.prio));
    t.prio.reset();
    trans.insert(std::move(t));
  }
  sc.trans = std::move(trans);
}

}  // namespace

TransformResult TransformFixpoint(const SCFull& input,
                                  const TransformOptions& opts) {
  if (opts.check_input) {
    CheckResult r = CheckAll(input);
    if (!r.ok()) {
      std::string msg = "input violates context conditions:";
      for (const Violation& v : r.violations) {
        msg += " " + v.code_name() + " " + v.subject + ";";
      }
      throw IllFormedInput(msg);
    }
  }
  TransformResult res;
  res.chart = input;
  res.chart.Normalize();
  std::mt19937_64 rng(opts.order.seed);
  for (int step = 1;; ++step) {
    std::optional<Binding> pick;
    if (opts.order.kind == RuleOrder::Kind::kPaper) {
      for (int r = 1; r <= kRuleCount && !pick; ++r) {
        std::vector<Binding> bs = FindBindings(r, res.chart);
        if (!bs.empty()) pick = bs.front();
      }
    } else {
      std::vector<std::vector<Binding>> live;
      for (int r = 1; r <= kRuleCount; ++r) {
        std::vector<Binding> bs = FindBindings(r, res.chart);
        if (!bs.empty()) live.push_back(std::move(bs));
      }
      if (!live.empty()) {
        const auto& bs = live[rng() % live.size()];
        pick = bs[rng() % bs.size()];
      }
    }
    if (!pick) break;
    if (step > opts.max_steps) {
      throw NonTermination("no fixpoint after " +
                           std::to_string(opts.max_steps) + " rule applications");
    }
    TraceEntry e;
    e.step = step;
    e.rule = pick->rule;
    e.binding = pick->Summary();
    e.before = ChartHash(res.chart);
    res.chart = ApplyRule(res.chart, *pick);
    e.after = ChartHash(res.chart);
    res.trace.push_back(std::move(e));
    if (opts.on_step) opts.on_step(step, res.chart);
  }
  Retire(res.chart, res.retired);
  return res;
}

SCSimp ToSimplified(const SCFull& sc) {
  std::vector<std::string> residual;
  for (int r : {24, 25}) {
    if (!FindBindings(r, sc).empty()) {
      residual.push_back(std::string("pending ") + RuleName(r));
    }
  }
  for (const Trans& t : sc.trans) {
    if (t.prio) residual.push_back("priority on " + ToString(t));
  }
  if (sc.sub.empty() && !FlatAndSimplified(sc)) {
    for (const FullState& st : sc.states) {
      if (st.has(Modifier::kInitial) && InitialIrrelevant(sc, st.name)) {
        residual.push_back("irrelevant initial on " + st.name);
      }
      if (st.has(Modifier::kFinal) && FinalIrrelevant(sc, st.name)) {
        residual.push_back("irrelevant final on " + st.name);
      }
    }
  }
  if (!residual.empty()) {
    std::string msg = "residual constructs:";
    for (const auto& r : residual) msg += " " + r + ";";
    throw NotSimplifiable(msg);
  }
  return NormalizeFlat(sc);  // reports hierarchy and actions
}

}  // namespace scforge
