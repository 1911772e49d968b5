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

#include "scforge/flatinterp.h"

#include <algorithm>

#include "scforge/errors.h"

namespace scforge {
namespace {

bool TimerSet(const Valuation& store) {
  auto it = store.find(std::string(kTimerFlag));
  return it != store.end() && it->second == Value(true);
}

bool IsTimeout(const Message& m) {
  return m.name == kTimeoutName && m.args.empty() && !m.exception;
}

// Guard bindings that are not store variables.
Valuation Local(const Valuation& env, const Valuation& store) {
  Valuation out;
  for (const auto& [k, val] : env) {
    if (!store.count(k)) out.emplace(k, val);
  }
  return out;
}

}  // namespace

std::string ToString(Outcome::Kind k) {
  switch (k) {
    case Outcome::Kind::kStep: return "step";
    case Outcome::Kind::kQuiescent: return "quiescent";
    case Outcome::Kind::kChaos: return "chaos";
    case Outcome::Kind::kPostconditionViolated: return "postcondition-violated";
    case Outcome::Kind::kInvariantViolated: return "invariant-violated";
    case Outcome::Kind::kActionConditionViolated: return "action-condition-violated";
    case Outcome::Kind::kEvalError: return "eval-error";
  }
  return "?";
}

std::vector<Choice> Enabled(const Configuration& conf, const SCSimp& sc,
                            MatchMode mode) {
  std::vector<Choice> out;
  for (std::size_t ti = 0; ti < sc.transitions.size(); ++ti) {
    const SimpTrans& t = sc.transitions[ti];
    if (t.src != conf.current) continue;
    std::size_t limit = mode == MatchMode::kFifo
                            ? std::min<std::size_t>(1, conf.buffer.size())
                            : conf.buffer.size();
    for (std::size_t mi = 0; mi < limit; ++mi) {
      std::optional<Valuation> v = MatchCall(t.call, conf.buffer[mi]);
      if (!v) continue;
      std::optional<Valuation> env;
      try {
        env = EvalCondBinding(t.pre, Merge(conf.store, *v));
      } catch (const Error&) {
        env.reset();  // an unevaluable guard does not enable
      }
      if (!env) continue;
      out.push_back({ti, mi, Local(*env, conf.store)});
      break;  // head-most message only
    }
  }
  return out;
}

Outcome Fire(const Configuration& conf, const Choice& choice, const SCSimp& sc) {
  const SimpTrans& t = sc.transitions.at(choice.transition);
  Outcome o;
  o.transition = t;
  o.consumed = conf.buffer.at(choice.message);
  Configuration next = conf;
  next.buffer.erase(next.buffer.begin() +
                    static_cast<std::ptrdiff_t>(choice.message));
  try {
    ExecResult r = ExecStmt(t.act.stmt, conf.store, choice.v);
    next.store = std::move(r.store);
    next.emitted.insert(next.emitted.end(), r.sent.begin(), r.sent.end());
    next.current = t.trg;
    o.next = next;
    if (!EvalCond(t.act.post_or_true(), next.store, choice.v)) {
      o.kind = Outcome::Kind::kPostconditionViolated;
      o.reason = "postcondition " + ToString(t.act.post_or_true());
      return o;
    }
    if (!EvalCond(sc.inv, next.store, {})) {
      o.kind = Outcome::Kind::kInvariantViolated;
      o.reason = "chart invariant " + ToString(sc.inv);
      return o;
    }
    const SimpState* trg = sc.Find(t.trg);
    if (trg && !EvalCond(trg->inv, next.store, {})) {
      o.kind = Outcome::Kind::kInvariantViolated;
      o.state = t.trg;
      o.reason = "invariant of " + t.trg;
      return o;
    }
  } catch (const ActionConditionViolated& e) {
    o.kind = Outcome::Kind::kActionConditionViolated;
    o.next = next;
    o.reason = e.what();
    return o;
  } catch (const Error& e) {
    o.kind = Outcome::Kind::kEvalError;
    o.next = next;
    o.reason = e.what();
    return o;
  }
  o.kind = Outcome::Kind::kStep;
  return o;
}

Scheduler Scheduler::Parse(const std::string& text) {
  if (text == "lex") return Scheduler();
  const std::string prefix = "rand:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    try {
      std::size_t used = 0;
      std::uint64_t seed = std::stoull(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size()) return Scheduler(seed);
    } catch (const std::exception&) {
    }
  }
  throw FormatError("scheduler must be 'lex' or 'rand:<seed>', got '" + text + "'");
}

std::size_t Scheduler::Pick(const std::vector<Choice>& choices) {
  if (!random_) return 0;  // Enabled() already yields lexicographic order
  return static_cast<std::size_t>(rng_() % choices.size());
}

namespace {

// A step without scheduling: either a forced outcome or the enabled set.
std::optional<Outcome> Forced(const Configuration& conf, const SCSimp& sc,
                              const StepOptions& opts,
                              std::vector<Choice>& enabled) {
  Outcome o;
  o.next = conf;
  if (conf.buffer.empty()) {
    o.kind = Outcome::Kind::kQuiescent;
    return o;
  }
  const Message& head = conf.buffer.front();
  if (IsTimeout(head) && !TimerSet(conf.store)) {
    // Not admitted while the timer is off.
    o.next.buffer.erase(o.next.buffer.begin());
    o.consumed = head;
    o.reason = "timeout discarded, timer not set";
    return o;
  }
  enabled = Enabled(conf, sc, opts.match);
  if (!enabled.empty()) return std::nullopt;
  o.consumed = head;
  o.next.buffer.erase(o.next.buffer.begin());
  if (opts.chaos_stutter) {
    o.reason = "unhandled, consumed";
    return o;
  }
  o.kind = Outcome::Kind::kChaos;
  o.reason = "no transition of " + conf.current + " accepts " + ToString(head);
  return o;
}

}  // namespace

Outcome Step(const Configuration& conf, const SCSimp& sc, Scheduler& sched,
             const StepOptions& opts) {
  std::vector<Choice> enabled;
  if (std::optional<Outcome> f = Forced(conf, sc, opts, enabled)) return *f;
  return Fire(conf, enabled[sched.Pick(enabled)], sc);
}

std::vector<std::string> InitialStates(const SCSimp& sc) {
  std::vector<std::string> out;
  for (const SimpState& s : sc.states) {
    if (s.has(Modifier::kInitial)) out.push_back(s.name);
  }
  return out;
}

std::set<std::pair<std::string, std::size_t>> Triggers(const SCSimp& sc) {
  std::set<std::pair<std::string, std::size_t>> out;
  for (const SimpTrans& t : sc.transitions) {
    if (t.call.name != kTimeoutName) out.insert({t.call.name, t.call.args.size()});
  }
  return out;
}

namespace {

Configuration Start(const SCSimp& sc, const std::string& init,
                    const std::vector<Message>& inputs, const Valuation& store) {
  const SimpState* s = sc.Find(init);
  if (!s || !s->has(Modifier::kInitial)) {
    throw BadInitialState("'" + init + "' is not an initial state");
  }
  return Configuration{init, store, inputs, {}};
}

}  // namespace

RunResult Run(const SCSimp& sc, const std::string& init,
              const std::vector<Message>& inputs, Scheduler& sched,
              const StepOptions& opts, const Valuation& store) {
  RunResult r;
  Configuration conf = Start(sc, init, inputs, store);
  r.trajectory.push_back(conf);
  for (;;) {
    Outcome o = Step(conf, sc, sched, opts);
    if (o.kind == Outcome::Kind::kQuiescent) {
      r.final = o;
      break;
    }
    r.outcomes.push_back(o);
    conf = o.next;
    r.trajectory.push_back(conf);
    if (o.kind != Outcome::Kind::kStep) {
      r.final = o;
      break;
    }
  }
  r.emitted = conf.emitted;
  return r;
}

namespace {

struct Explorer {
  const SCSimp& sc;
  const ExploreOptions& opts;
  std::set<Trace>& out;
  std::size_t nodes = 0;

  void Visit(const Configuration& conf) {
    if (++nodes > opts.max_nodes) {
      throw StateSpaceBound("more than " + std::to_string(opts.max_nodes) +
                            " configurations");
    }
    std::vector<Choice> enabled;
    std::optional<Outcome> f = Forced(conf, sc, opts.step, enabled);
    if (f) {
      Record(*f);
      return;
    }
    for (const Choice& c : enabled) Record(Fire(conf, c, sc));
  }

  void Record(const Outcome& o) {
    if (o.kind == Outcome::Kind::kStep) {
      Visit(o.next);
      return;
    }
    out.insert(Trace{o.next.emitted, o.next.current, o.kind});
  }
};

}  // namespace

std::set<Trace> Explore(const SCSimp& sc, const std::string& init,
                        const std::vector<Message>& inputs,
                        const ExploreOptions& opts, const Valuation& store) {
  std::set<Trace> out;
  Explorer e{sc, opts, out};
  e.Visit(Start(sc, init, inputs, store));
  return out;
}

nlohmann::json RunLogLine(int step, const Configuration& before,
                          const Outcome& o) {
  nlohmann::json diff = nlohmann::json::object();
  for (const auto& [k, val] : o.next.store) {
    auto it = before.store.find(k);
    if (it == before.store.end() || it->second != val) diff[k] = ToString(val);
  }
  for (const auto& [k, val] : before.store) {
    if (!o.next.store.count(k)) diff[k] = nullptr;
  }
  nlohmann::json sent = nlohmann::json::array();
  for (std::size_t i = before.emitted.size(); i < o.next.emitted.size(); ++i) {
    sent.push_back(ToString(o.next.emitted[i]));
  }
  nlohmann::json j = {{"step", step},
                      {"state", o.next.current},
                      {"consumed", o.consumed ? nlohmann::json(ToString(*o.consumed))
                                              : nlohmann::json(nullptr)},
                      {"emitted", sent},
                      {"storeDiff", diff}};
  if (o.kind != Outcome::Kind::kStep) j["outcome"] = ToString(o.kind);
  return j;
}

}  // namespace scforge
