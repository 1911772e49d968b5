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

#ifndef SCFORGE_FLATINTERP_H_
#define SCFORGE_FLATINTERP_H_

// Run-to-completion interpreter for flat charts with a FIFO event buffer.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "scforge/actions.h"
#include "scforge/syntax.h"

namespace scforge {

struct Configuration {
  std::string current;
  Valuation store;
  std::vector<Message> buffer;   // front is the head
  std::vector<Message> emitted;  // everything sent so far, in order

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

enum class MatchMode {
  kFifo,      // only the head message is considered
  kAnywhere,  // the head-most message matching each transition
};

struct Choice {
  std::size_t transition = 0;  // index into sc.transitions
  std::size_t message = 0;     // index into the buffer
  Valuation v;                 // call bindings plus those made by the guard

  friend bool operator==(const Choice&, const Choice&) = default;
};

struct Outcome {
  enum class Kind {
    kStep,
    kQuiescent,
    kChaos,
    kPostconditionViolated,
    kInvariantViolated,
    kActionConditionViolated,
    kEvalError,  // guard, action or invariant could not be evaluated
  };
  Kind kind = Kind::kStep;
  Configuration next;  // for kChaos: the head message is dropped
  std::optional<SimpTrans> transition;
  std::optional<Message> consumed;
  std::string state;   // kInvariantViolated
  std::string reason;

  bool ok() const { return kind == Kind::kStep || kind == Kind::kQuiescent; }
};

std::string ToString(Outcome::Kind k);

std::vector<Choice> Enabled(const Configuration& conf, const SCSimp& sc,
                            MatchMode mode = MatchMode::kFifo);

// `choice` must come from Enabled(conf, sc, ...).
Outcome Fire(const Configuration& conf, const Choice& choice, const SCSimp& sc);

class Scheduler {
 public:
  // Lexicographic by (transition, message) when no seed is given.
  Scheduler() = default;
  explicit Scheduler(std::uint64_t seed) : random_(true), rng_(seed) {}

  // "lex" or "rand:<seed>"; throws FormatError.
  static Scheduler Parse(const std::string& text);

  std::size_t Pick(const std::vector<Choice>& choices);

 private:
  bool random_ = false;
  std::mt19937_64 rng_;
};

struct StepOptions {
  MatchMode match = MatchMode::kFifo;
  // Unhandled head messages are consumed silently (kStep) instead of
  // reported as kChaos.
  bool chaos_stutter = false;
};

Outcome Step(const Configuration& conf, const SCSimp& sc, Scheduler& sched,
             const StepOptions& opts = {});

struct RunResult {
  std::vector<Configuration> trajectory;  // starts with the initial one
  std::vector<Outcome> outcomes;          // one per step taken
  std::vector<Message> emitted;
  Outcome final;
};

// Steps until quiescence or a non-step outcome. Throws BadInitialState.
RunResult Run(const SCSimp& sc, const std::string& init,
              const std::vector<Message>& inputs, Scheduler& sched,
              const StepOptions& opts = {}, const Valuation& store = {});

std::vector<std::string> InitialStates(const SCSimp& sc);
// Names of all (non-timeout) call triggers, with arity.
std::set<std::pair<std::string, std::size_t>> Triggers(const SCSimp& sc);

// One maximal run of the exhaustive exploration.
struct Trace {
  std::vector<Message> emitted;
  std::string final_state;
  Outcome::Kind end = Outcome::Kind::kQuiescent;

  friend auto operator<=>(const Trace&, const Trace&) = default;
};

struct ExploreOptions {
  StepOptions step;
  std::size_t max_nodes = 1'000'000;  // StateSpaceBound past this
};

// Every run under every scheduler choice. Chaos ends a run unless
// step.chaos_stutter is set.
std::set<Trace> Explore(const SCSimp& sc, const std::string& init,
                        const std::vector<Message>& inputs,
                        const ExploreOptions& opts = {},
                        const Valuation& store = {});

// {step, state, consumed, emitted, storeDiff}
nlohmann::json RunLogLine(int step, const Configuration& before,
                          const Outcome& o);

}  // namespace scforge

#endif  // SCFORGE_FLATINTERP_H_
