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

// scforge command-line front end. Exit codes: 0 ok, 1 violations or failed
// checks, 2 usage or input error, 3 internal bound exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scforge/conform.h"
#include "scforge/errors.h"
#include "scforge/flatinterp.h"
#include "scforge/gen.h"
#include "scforge/syntax.h"
#include "scforge/transform.h"
#include "scforge/vdb.h"
#include "scforge/wellformedness.h"

namespace {

using nlohmann::json;
using namespace scforge;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;
constexpr int kBound = 3;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json ReadJson(const std::string& path) {
  try {
    return json::parse(ReadFile(path));
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::optional<std::size_t> MaxNodesFromEnv() {
  const char* env = std::getenv("SCFORGE_MAX_NODES");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long n = std::strtoull(env, &end, 10);
  if (*end != '\0' || n == 0) {
    throw FormatError("SCFORGE_MAX_NODES must be a positive integer");
  }
  return static_cast<std::size_t>(n);
}

// Flat simplified form of a chart; hierarchical input goes through the
// transformation first.
SCSimp Simplified(const SCFull& sc) {
  if (FlatAndSimplified(sc)) return ToSimplified(sc);
  return ToSimplified(TransformFixpoint(sc).chart);
}

SCFull ParseChartFile(const std::string& path, bool allow_reserved) {
  return Parse(ReadFile(path), ParseOptions{allow_reserved});
}

std::vector<Message> Inputs(const std::string& events_file,
                            const std::vector<std::string>& inline_msgs) {
  std::vector<Message> out;
  if (!events_file.empty()) out = ParseMessages(ReadFile(events_file));
  for (const auto& m : inline_msgs) out.push_back(ParseMessage(m));
  return out;
}

// "lo..hi" or a comma-separated list of values.
std::vector<Value> ParseDomain(const std::string& text) {
  std::vector<Value> out;
  if (text.empty()) return out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    try {
      long lo = std::stol(text.substr(0, dots));
      long hi = std::stol(text.substr(dots + 2));
      if (hi < lo || hi - lo > 4096) throw FormatError("bad domain " + text);
      for (long v = lo; v <= hi; ++v) out.push_back(Value(v));
    } catch (const std::logic_error&) {
      throw FormatError("bad domain " + text);
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseValue(item));
  return out;
}

std::string WithNewline(std::string s) {
  if (!s.empty() && s.back() != '\n') s += '\n';
  return s;
}

// ----------------------------------------------------------------------------
// Display of Kripke runs: (Or@active, <queue>) with And parts in braces.

std::string Display(const Term& t) {
  switch (t.kind) {
    case Term::Kind::kBasic:
      return t.name;
    case Term::Kind::kOr:
      return t.name + "@" + Display(t.subs[t.active - 1]);
    case Term::Kind::kAnd: {
      std::string s = t.name + "{";
      for (std::size_t i = 0; i < t.subs.size(); ++i) {
        if (i) s += " | ";
        s += Display(t.subs[i]);
      }
      return s + "}";
    }
  }
  return t.name;
}

std::string Display(const KripkeNode& n) {
  std::string q = "<";
  for (std::size_t i = 0; i < n.queue.size(); ++i) {
    if (i) q += ", ";
    q += ToString(n.queue[i]);
  }
  return "(" + Display(n.term) + ", " + q + ">)";
}

// ----------------------------------------------------------------------------
// Commands.

struct Common {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

int CmdParse(const Common& c, const std::string& path, bool reserved) {
  SCFull sc = ParseChartFile(path, reserved);
  if (c.json()) {
    std::cout << ToJson(sc).dump(2) << "\n";
  } else {
    std::cout << WithNewline(Print(sc));
  }
  return kOk;
}

int CmdCheck(const Common& c, const std::string& path, bool reserved,
             const std::string& ctx_path) {
  SCFull sc = ParseChartFile(path, reserved);
  std::optional<SignatureContext> ctx;
  if (!ctx_path.empty()) ctx = SignatureFromJson(ReadJson(ctx_path));
  CheckResult r = CheckAll(sc, ctx);
  if (c.json()) {
    std::cout << ToJson(r).dump(2) << "\n";
  } else {
    for (const auto& v : r.violations) {
      std::cout << v.code_name() << " " << v.subject << ": " << v.message
                << "\n";
    }
    if (!r.skipped.empty()) {
      std::cout << "skipped:";
      for (int k : r.skipped) std::cout << " CC" << k;
      std::cout << "\n";
    }
    std::cout << r.violations.size() << " violation(s)\n";
  }
  return r.ok() ? kOk : kViolations;
}

int CmdTransform(const Common& c, const std::string& path, bool reserved,
                 const std::string& strategy, int max_steps,
                 const std::string& emit_dir, const std::string& trace_path) {
  SCFull sc = ParseChartFile(path, reserved);
  TransformOptions o;
  o.order = RuleOrder::Parse(strategy);
  o.max_steps = max_steps;
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    auto write = [&](int step, const SCFull& chart) {
      std::ostringstream name;
      name << "step-" << std::setw(5) << std::setfill('0') << step << ".sc";
      std::ofstream out(std::filesystem::path(emit_dir) / name.str());
      out << Print(chart);
    };
    write(0, sc);
    o.on_step = write;
  }
  TransformResult r = TransformFixpoint(sc, o);
  json trace = json::array();
  for (const auto& e : r.trace) trace.push_back(ToJson(e));
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw FormatError("cannot write " + trace_path);
    for (const auto& e : trace) out << e.dump() << "\n";
  }
  if (c.json()) {
    json j = {{"chart", ToJson(r.chart)},
              {"trace", trace},
              {"retired", r.retired},
              {"flatAndSimplified", FlatAndSimplified(r.chart)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << WithNewline(Print(r.chart));
    std::cerr << r.trace.size() << " rule application(s)\n";
  }
  return kOk;
}

int CmdSimplify(const Common& c, const std::string& path) {
  SCSimp s = Simplified(ParseChartFile(path, true));
  if (c.format == "text") {
    std::cout << WithNewline(PrintSimp(s));
  } else {
    std::cout << ToJson(s).dump(2) << "\n";
  }
  return kOk;
}

int CmdRun(const Common& c, const std::string& path, std::string init,
           const std::string& events, const std::vector<std::string>& input,
           const std::string& scheduler, const std::string& match,
           bool chaos_stutter) {
  SCSimp sc = Simplified(ParseChartFile(path, true));
  if (init.empty()) {
    auto inits = InitialStates(sc);
    if (inits.empty()) throw BadInitialState("chart has no initial state");
    init = inits.front();
  }
  StepOptions so;
  if (match == "anywhere") {
    so.match = MatchMode::kAnywhere;
  } else if (match != "fifo") {
    throw FormatError("--match must be fifo or anywhere");
  }
  so.chaos_stutter = chaos_stutter;
  Scheduler sched = Scheduler::Parse(scheduler);
  RunResult r = Run(sc, init, Inputs(events, input), sched, so);
  std::vector<json> lines;
  for (std::size_t k = 0; k < r.outcomes.size(); ++k) {
    lines.push_back(RunLogLine(static_cast<int>(k + 1), r.trajectory[k],
                               r.outcomes[k]));
  }
  const Configuration& last = r.trajectory.back();
  json summary = {{"final", last.current},
                  {"outcome", ToString(r.final.kind)},
                  {"emitted", json::array()}};
  for (const auto& m : r.emitted) summary["emitted"].push_back(ToString(m));
  if (!r.final.reason.empty()) summary["reason"] = r.final.reason;
  if (c.json()) {
    for (const auto& l : lines) std::cout << l.dump() << "\n";
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "scheduler " << scheduler << ", init " << init << "\n";
    for (std::size_t k = 0; k < r.outcomes.size(); ++k) {
      const Outcome& o = r.outcomes[k];
      std::cout << (k + 1) << ": " << r.trajectory[k].current << " -> "
                << o.next.current;
      if (o.consumed) std::cout << " on " << ToString(*o.consumed);
      std::vector<Message> sent(
          o.next.emitted.begin() +
              static_cast<long>(r.trajectory[k].emitted.size()),
          o.next.emitted.end());
      if (!sent.empty()) std::cout << " sends " << ToString(sent);
      if (o.kind != Outcome::Kind::kStep) std::cout << " [" << ToString(o.kind) << "]";
      std::cout << "\n";
    }
    std::cout << "final " << last.current << " (" << ToString(r.final.kind)
              << "), emitted " << ToString(r.emitted) << "\n";
  }
  return r.final.ok() ? kOk : kViolations;
}

bool LooksLikeTerm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    if (line.compare(p, 2, "//") == 0) continue;
    return line[p] == '(';
  }
  return false;
}

int CmdVdbRun(const Common& c, const std::string& path,
              const std::string& events, const std::vector<std::string>& input,
              std::optional<int> max_steps, const std::string& domain,
              const std::string& join) {
  std::string text = ReadFile(path);
  Term term = LooksLikeTerm(text)
                  ? ParseTerm(text)
                  : EncodeGuardFree(Parse(text, ParseOptions{true}),
                                    ParseDomain(domain));
  KripkeOptions ko;
  if (join == "drop") {
    ko.join = JoinMode::kDrop;
  } else if (join != "append") {
    throw FormatError("--join must be append or drop");
  }
  if (auto n = MaxNodesFromEnv()) ko.max_nodes = *n;
  KripkeNode start{term, Inputs(events, input)};
  int steps = max_steps.value_or(static_cast<int>(start.queue.size()));
  std::vector<VdbRun> runs = RunBounded(start, steps, ko);
  if (c.json()) {
    json j = json::array();
    for (const auto& r : runs) j.push_back(ToJson(r));
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < runs.size(); ++k) {
      if (runs.size() > 1) std::cout << "// run " << (k + 1) << "\n";
      const VdbRun& r = runs[k];
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        std::cout << Display(r.nodes[i]);
        if (i < r.edges.size()) std::cout << " =>";
        std::cout << "\n";
      }
    }
  }
  return kOk;
}

int CmdConform(const Common& c, const std::string& chart,
               const std::string& fragment, const std::string& projection,
               std::optional<int> bound) {
  SCSimp sc = Simplified(ParseChartFile(chart, true));
  SystemFragment frag = FragmentFromJson(ReadJson(fragment));
  ProjectionMap pi = ProjectionFromJson(ReadJson(projection));
  ConformOptions o;
  o.bound = bound;
  ConformReport r = CheckSystemConformance(sc, frag, pi, o);
  if (c.json()) {
    std::cout << ToJson(r).dump(2) << "\n";
  } else {
    for (const auto& cond : r.conditions) {
      std::cout << "condition " << cond.condition << ": "
                << (cond.pass ? "pass" : "FAIL");
      for (const auto& w : cond.witnesses) std::cout << "\n  " << w;
      std::cout << "\n";
    }
    std::cout << (r.ok() ? "conforms" : "does not conform") << "\n";
  }
  return r.ok() ? kOk : kViolations;
}

int CmdGen(const Common& c, std::uint64_t seed, int states, int depth,
           bool guard_free) {
  GenOptions o;
  o.seed = seed;
  o.max_states = states;
  o.max_depth = depth;
  o.guard_free = guard_free;
  SCFull sc = Generate(o);
  if (c.json()) {
    json j = ToJson(sc);
    j["seed"] = seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "// scforge gen --seed " << seed << " --states " << states
              << " --depth " << depth << (guard_free ? " --guard-free" : "")
              << "\n"
              << WithNewline(Print(sc));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scforge: statechart parsing, transformation and analysis"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  std::string path;
  bool reserved = false;

  auto* parse = app.add_subcommand("parse", "Parse a chart and dump it");
  parse->add_option("chart", path, "Chart file")->required();
  parse->add_flag("--allow-reserved", reserved, "Accept generated names");
  add_format(parse);

  std::string ctx;
  auto* check = app.add_subcommand("check", "Report well-formedness violations");
  check->add_option("chart", path)->required();
  check->add_option("--ctx", ctx, "Signature context JSON");
  check->add_flag("--allow-reserved", reserved);
  add_format(check);

  std::string strategy = "paper";
  int max_steps_t = 10000;
  std::string emit_dir;
  std::string trace_path;
  auto* transform = app.add_subcommand("transform", "Flatten a chart");
  transform->add_option("chart", path)->required();
  transform->add_option("--strategy", strategy, "paper | random:<seed>");
  transform->add_option("--max-steps", max_steps_t);
  transform->add_option("--emit-each-step", emit_dir,
                        "Write every intermediate chart into this directory");
  transform->add_option("--trace", trace_path, "Write the trace as JSON lines");
  transform->add_flag("--allow-reserved", reserved);
  add_format(transform);

  auto* simplify = app.add_subcommand("simplify", "Emit the simplified form");
  simplify->add_option("chart", path)->required();
  add_format(simplify);

  std::string init;
  std::string events;
  std::vector<std::string> input;
  std::string scheduler = "lex";
  std::string match = "fifo";
  bool chaos_stutter = false;
  auto* run = app.add_subcommand("run", "Run the flat interpreter");
  run->add_option("chart", path)->required();
  run->add_option("--init", init, "Initial state");
  run->add_option("--events", events, "Input messages, one per line");
  run->add_option("--input", input, "Input message; repeatable");
  run->add_option("--scheduler", scheduler, "lex | rand:<seed>");
  run->add_option("--match", match)->check(CLI::IsMember({"fifo", "anywhere"}));
  run->add_flag("--chaos-stutter", chaos_stutter,
                "Drop unhandled messages instead of stopping");
  add_format(run);

  std::optional<int> max_steps_v;
  std::string domain;
  std::string join = "append";
  auto* vdb = app.add_subcommand("vdb-run", "Bounded Kripke runs of a term");
  vdb->add_option("source", path, "Term file or guard-free chart")->required();
  vdb->add_option("--events", events);
  vdb->add_option("--input", input);
  vdb->add_option("--max-steps", max_steps_v,
                  "Step bound; defaults to the input length");
  vdb->add_option("--domain", domain, "Value domain: lo..hi or v1,v2,...");
  vdb->add_option("--join", join)->check(CLI::IsMember({"append", "drop"}));
  add_format(vdb);

  std::string fragment;
  std::string projection;
  std::optional<int> bound;
  auto* conform = app.add_subcommand("conform", "Check a system fragment");
  conform->add_option("chart", path)->required();
  conform->add_option("fragment", fragment, "Fragment JSON")->required();
  conform->add_option("projection", projection, "Projection JSON")->required();
  conform->add_option("--bound", bound, "Step bound for transition search");
  add_format(conform);

  std::uint64_t seed = 0;
  int states = 8;
  int depth = 3;
  bool guard_free = false;
  auto* gen = app.add_subcommand("gen", "Generate a well-formed chart");
  gen->add_option("--seed", seed);
  gen->add_option("--states", states)->check(CLI::Range(1, 64));
  gen->add_option("--depth", depth)->check(CLI::Range(1, 8));
  gen->add_flag("--guard-free", guard_free);
  add_format(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  // simplify defaults to JSON.
  if (simplify->parsed() && simplify->count("--format") == 0) {
    common.format = "json";
  }

  try {
    if (parse->parsed()) return CmdParse(common, path, reserved);
    if (check->parsed()) return CmdCheck(common, path, reserved, ctx);
    if (transform->parsed()) {
      return CmdTransform(common, path, reserved, strategy, max_steps_t,
                          emit_dir, trace_path);
    }
    if (simplify->parsed()) return CmdSimplify(common, path);
    if (run->parsed()) {
      return CmdRun(common, path, init, events, input, scheduler, match,
                    chaos_stutter);
    }
    if (vdb->parsed()) {
      return CmdVdbRun(common, path, events, input, max_steps_v, domain, join);
    }
    if (conform->parsed()) {
      return CmdConform(common, path, fragment, projection, bound);
    }
    if (gen->parsed()) return CmdGen(common, seed, states, depth, guard_free);
  } catch (const StateSpaceBound& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const NonTermination& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
