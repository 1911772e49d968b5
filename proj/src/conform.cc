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

#include "scforge/conform.h"

#include <algorithm>
#include <deque>
#include <tuple>
#include <utility>

#include "scforge/errors.h"

namespace scforge {

const OGSNode* SystemFragment::Find(const std::string& id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

const ObjectState& SystemFragment::Main(const OGSNode& n) const {
  auto it = n.objects.find(main);
  if (it == n.objects.end()) {
    throw UnknownObject("node " + n.id + " has no object '" + main + "'");
  }
  return it->second;
}

namespace {

std::vector<Message> MessagesFromJson(const nlohmann::json& j,
                                      const std::string& what) {
  if (!j.is_array()) throw FormatError(what + " must be an array");
  std::vector<Message> out;
  for (const auto& m : j) {
    if (!m.is_string()) throw FormatError(what + " entries must be strings");
    out.push_back(ParseMessage(m.get<std::string>()));
  }
  return out;
}

nlohmann::json MessagesToJson(const std::vector<Message>& ms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : ms) out.push_back(ToString(m));
  return out;
}

}  // namespace

SystemFragment FragmentFromJson(const nlohmann::json& j) {
  try {
    SystemFragment f;
    f.main = j.at("main").get<std::string>();
    for (const auto& n : j.at("nodes")) {
      OGSNode node;
      node.id = n.at("id").get<std::string>();
      for (const auto& [oid, o] : n.at("objects").items()) {
        ObjectState st;
        if (o.contains("vars")) {
          for (const auto& [k, v] : o.at("vars").items()) {
            st.vars[k] = ValueFromJson(v);
          }
        }
        if (o.contains("threads")) {
          for (const auto& [th, stack] : o.at("threads").items()) {
            st.threads[th] = MessagesFromJson(stack, "thread stack");
          }
        }
        if (o.contains("buffer")) {
          st.buffer = MessagesFromJson(o.at("buffer"), "buffer");
        }
        node.objects[oid] = std::move(st);
      }
      if (f.Find(node.id)) throw FormatError("duplicate node id " + node.id);
      f.nodes.push_back(std::move(node));
    }
    for (const auto& e : j.at("edges")) {
      FragEdge edge;
      edge.from = e.at("from").get<std::string>();
      edge.to = e.at("to").get<std::string>();
      if (e.contains("M")) edge.m = MessagesFromJson(e.at("M"), "M");
      if (!f.Find(edge.from) || !f.Find(edge.to)) {
        throw FormatError("edge " + edge.from + " -> " + edge.to +
                          " has an unknown endpoint");
      }
      f.edges.push_back(std::move(edge));
    }
    if (j.contains("init")) {
      for (const auto& id : j.at("init")) {
        std::string s = id.get<std::string>();
        if (!f.Find(s)) throw FormatError("unknown init node " + s);
        f.init.insert(s);
      }
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("fragment: ") + e.what());
  }
}

nlohmann::json ToJson(const SystemFragment& f) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : f.nodes) {
    nlohmann::json objs = nlohmann::json::object();
    for (const auto& [oid, o] : n.objects) {
      nlohmann::json threads = nlohmann::json::object();
      for (const auto& [th, st] : o.threads) threads[th] = MessagesToJson(st);
      objs[oid] = {{"vars", ToJson(o.vars)},
                   {"threads", threads},
                   {"buffer", MessagesToJson(o.buffer)}};
    }
    nodes.push_back({{"id", n.id}, {"objects", objs}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : f.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"M", MessagesToJson(e.m)}});
  }
  return {{"nodes", nodes},
          {"edges", edges},
          {"init", f.init},
          {"main", f.main}};
}

ProjectionMap ProjectionFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("projection must be a JSON object");
  ProjectionMap pi;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_array()) throw FormatError("projection image must be an array");
    for (const auto& id : v) {
      if (!id.is_string()) throw FormatError("node ids must be strings");
      pi[k].insert(id.get<std::string>());
    }
  }
  return pi;
}

std::set<std::string> ReachableN(const SystemFragment& frag,
                                 const std::string& from, int n) {
  std::set<std::string> seen{from};
  std::vector<std::string> layer{from};
  for (int step = 0; step < n && !layer.empty(); ++step) {
    std::vector<std::string> next;
    for (const auto& id : layer) {
      for (const auto& e : frag.edges) {
        if (e.from == id && seen.insert(e.to).second) next.push_back(e.to);
      }
    }
    layer = std::move(next);
  }
  return seen;
}

bool ProcCheck(const OGSNode& node, const std::string& o, const Message& m) {
  auto it = node.objects.find(o);
  if (it == node.objects.end()) {
    throw UnknownObject("node " + node.id + " has no object '" + o + "'");
  }
  for (const auto& [th, stack] : it->second.threads) {
    if (!stack.empty() && stack.back() == m) return true;
  }
  return false;
}

bool ConformReport::ok() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionResult& c) { return c.pass; });
}

const ConditionResult& ConformReport::at(int condition) const {
  for (const auto& c : conditions) {
    if (c.condition == condition) return c;
  }
  throw FormatError("no condition " + std::to_string(condition));
}

nlohmann::json ToJson(const ConformReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r.conditions) {
    out.push_back({{"condition", c.condition},
                   {"pass", c.pass},
                   {"witnesses", c.witnesses}});
  }
  return out;
}

namespace {

bool Holds(const Cond& c, const Valuation& store, const Valuation& v) {
  try {
    return EvalCond(c, store, v);
  } catch (const Error&) {
    return false;
  }
}

long Count(const std::vector<Message>& buf, const Message& m) {
  return std::count(buf.begin(), buf.end(), m);
}

// Statement-window search for one enabled (transition, node, message).
class WindowSearch {
 public:
  WindowSearch(const SystemFragment& frag, const SimpTrans& t,
               const std::set<std::string>& targets, int bound)
      : frag_(frag), t_(t), targets_(targets), bound_(bound) {
    for (std::size_t k = 0; k < frag.nodes.size(); ++k) {
      index_[frag.nodes[k].id] = static_cast<int>(k);
    }
    out_.resize(frag.nodes.size());
    for (const auto& e : frag.edges) {
      out_[index_.at(e.from)].push_back(&e);
    }
  }

  bool Run(const OGSNode& start, const Message& m, const Valuation& v) {
    m_ = &m;
    v_ = &v;
    start_count_ = Count(frag_.Main(start).buffer, m);
    expected_.clear();
    unmatched_.clear();
    // (node, phase, os1, matched) -> visited; phase 0 before the statement
    // window, 1 inside, 2 after.
    std::set<std::tuple<int, int, int, std::size_t>> seen;
    std::deque<std::pair<std::tuple<int, int, int, std::size_t>, int>> q;
    // 0-1 BFS: phase changes cost no step and go to the front.
    auto push = [&](std::tuple<int, int, int, std::size_t> s, int steps,
                    bool free = false) {
      if (!seen.insert(s).second) return;
      if (free) {
        q.push_front({s, steps});
      } else {
        q.push_back({s, steps});
      }
    };
    push({index_.at(start.id), 0, -1, 0}, 0);
    while (!q.empty()) {
      auto [s, steps] = q.front();
      q.pop_front();
      auto [node, phase, os1, k] = s;
      const OGSNode& n = frag_.nodes[node];
      if (phase == 0) {
        if (Expected(node)) push({node, 1, node, 0}, steps, true);
      } else if (phase == 1) {
        const ExecResult& ex = *Expected(os1);
        if (k == ex.sent.size() && frag_.Main(n).vars == ex.store) {
          push({node, 2, os1, k}, steps, true);
        }
      } else if (Accepts(n)) {
        return true;
      }
      if (steps >= bound_) continue;
      for (const FragEdge* e : out_[node]) {
        int to = index_.at(e->to);
        if (phase != 1) {
          if (e->m.empty()) {
            push({to, phase, os1, k}, steps + 1);
          } else if (phase == 2) {
            Unmatched(*e);
          }
          continue;
        }
        const auto& sent = Expected(os1)->sent;
        if (k + e->m.size() <= sent.size() &&
            std::equal(e->m.begin(), e->m.end(), sent.begin() + static_cast<long>(k))) {
          push({to, 1, os1, k + e->m.size()}, steps + 1);
        } else {
          Unmatched(*e);
        }
      }
    }
    return false;
  }

  // Emissions seen on edges the search could not take, e.g. a second send.
  const std::set<std::string>& unmatched() const { return unmatched_; }

 private:
  void Unmatched(const FragEdge& e) {
    unmatched_.insert(ToString(e.m) + " on " + e.from + "->" + e.to);
  }

  const std::optional<ExecResult>& Expected(int os1) {
    auto it = expected_.find(os1);
    if (it != expected_.end()) return it->second;
    std::optional<ExecResult> r;
    try {
      r = ExecStmt(t_.act.stmt, frag_.Main(frag_.nodes[os1]).vars, *v_);
      r->store.erase(std::string(kTimerFlag));
    } catch (const Error&) {
      r.reset();
    }
    return expected_.emplace(os1, std::move(r)).first->second;
  }

  bool Accepts(const OGSNode& n) const {
    if (!targets_.count(n.id)) return false;
    if (Count(frag_.Main(n).buffer, *m_) >= start_count_) return false;
    return Holds(t_.act.post_or_true(), frag_.Main(n).vars, *v_);
  }

  const SystemFragment& frag_;
  const SimpTrans& t_;
  const std::set<std::string>& targets_;
  int bound_;
  std::map<std::string, int> index_;
  std::vector<std::vector<const FragEdge*>> out_;
  std::map<int, std::optional<ExecResult>> expected_;
  const Message* m_ = nullptr;
  const Valuation* v_ = nullptr;
  long start_count_ = 0;
  std::set<std::string> unmatched_;
};

}  // namespace

ConformReport CheckSystemConformance(const SCSimp& sc,
                                     const SystemFragment& frag,
                                     const ProjectionMap& pi,
                                     const ConformOptions& opts) {
  for (const auto& s : sc.states) {
    if (!pi.count(s.name)) {
      throw IncompleteProjection("no image for state " + s.name);
    }
  }
  for (const auto& [name, ids] : pi) {
    for (const auto& id : ids) {
      if (!frag.Find(id)) {
        throw FormatError("projection of " + name + " names unknown node " + id);
      }
    }
  }
  int bound = opts.bound.value_or(static_cast<int>(frag.nodes.size()));
  ConformReport rep;
  ConditionResult c1{1, true, {}}, c2{2, true, {}}, c3{3, true, {}},
      c4{4, true, {}}, c5{5, true, {}};

  std::set<std::string> range;
  for (const auto& s : sc.states) range.insert(pi.at(s.name).begin(), pi.at(s.name).end());
  for (const auto& id : range) {
    if (!Holds(sc.inv, frag.Main(*frag.Find(id)).vars, {})) {
      c1.pass = false;
      c1.witnesses.push_back(id);
    }
  }
  for (const auto& s : sc.states) {
    const auto& img = pi.at(s.name);
    if (s.has(Modifier::kInitial)) {
      for (const auto& id : img) {
        if (!frag.init.count(id)) {
          c2.pass = false;
          c2.witnesses.push_back(s.name + ": " + id + " is not initial");
        }
      }
    }
    for (const auto& id : img) {
      if (!Holds(s.inv, frag.Main(*frag.Find(id)).vars, {})) {
        c3.pass = false;
        c3.witnesses.push_back(s.name + ": " + id);
      }
    }
  }
  std::set<std::string> triggers;
  for (const auto& t : sc.transitions) triggers.insert(t.call.name);
  for (const auto& n : frag.nodes) {
    std::set<Message> tops;
    for (const auto& [th, stack] : frag.Main(n).threads) {
      if (!stack.empty() && triggers.count(stack.back().name)) {
        tops.insert(stack.back());
      }
    }
    if (tops.size() > 1) {
      c4.pass = false;
      std::string w = n.id + ":";
      for (const auto& m : tops) w += " " + ToString(m);
      c4.witnesses.push_back(w);
    }
  }
  for (const auto& t : sc.transitions) {
    WindowSearch search(frag, t, pi.at(t.trg), bound);
    for (const auto& id : pi.at(t.src)) {
      const OGSNode& n = *frag.Find(id);
      const ObjectState& o = frag.Main(n);
      std::set<Message> tried;
      for (const auto& m : o.buffer) {
        if (!tried.insert(m).second) continue;
        auto v = MatchCall(t.call, m);
        if (!v || !Holds(t.pre, o.vars, *v)) continue;
        if (!search.Run(n, m, *v)) {
          c5.pass = false;
          std::string w = ToString(t) + " at " + id + " on " + ToString(m);
          for (const auto& u : search.unmatched()) w += "; unmatched " + u;
          c5.witnesses.push_back(w);
        }
      }
    }
  }
  rep.conditions = {c1, c2, c3, c4, c5};
  return rep;
}

// ----------------------------------------------------------------------------
// Term macrosteps.

std::set<std::string> ProjectTerm(const ProjectionMap& pi, const Term& t) {
  switch (t.kind) {
    case Term::Kind::kBasic: {
      auto it = pi.find(t.name);
      if (it == pi.end()) throw IncompleteProjection("no image for " + t.name);
      return it->second;
    }
    case Term::Kind::kOr:
      return ProjectTerm(pi, t.subs.at(t.active - 1));
    case Term::Kind::kAnd: {
      std::set<std::string> acc = ProjectTerm(pi, t.subs.at(0));
      for (std::size_t k = 1; k < t.subs.size(); ++k) {
        auto part = ProjectTerm(pi, t.subs[k]);
        std::set<std::string> keep;
        std::set_intersection(acc.begin(), acc.end(), part.begin(), part.end(),
                              std::inserter(keep, keep.end()));
        acc = std::move(keep);
      }
      return acc;
    }
  }
  return {};
}

std::vector<RunEntry> RunFromPath(const SystemFragment& frag,
                                  const std::vector<std::string>& ids) {
  std::vector<RunEntry> out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const OGSNode* n = frag.Find(ids[k]);
    if (!n) throw FormatError("unknown node " + ids[k]);
    RunEntry e{*n, {}};
    if (k > 0) {
      auto it = std::find_if(frag.edges.begin(), frag.edges.end(),
                             [&](const FragEdge& fe) {
                               return fe.from == ids[k - 1] && fe.to == ids[k];
                             });
      if (it == frag.edges.end()) {
        throw FormatError("no edge " + ids[k - 1] + " -> " + ids[k]);
      }
      e.m = it->m;
    }
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

const ObjectState& MainOf(const RunEntry& e, const std::string& main) {
  auto it = e.node.objects.find(main);
  if (it == e.node.objects.end()) {
    throw UnknownObject("node " + e.node.id + " has no object '" + main + "'");
  }
  return it->second;
}

}  // namespace

RunSatisfaction CheckRunSatisfaction(const MacroStep& step,
                                     const std::vector<RunEntry>& run,
                                     const ProjectionMap& pi,
                                     const std::string& main) {
  RunSatisfaction res;
  if (run.empty()) {
    res.reason = "empty run";
    return res;
  }
  if (!ProjectTerm(pi, step.from).count(run[0].node.id)) {
    res.reason = "run does not start in the image of the source term";
    return res;
  }
  auto target = ProjectTerm(pi, step.to);
  int n = static_cast<int>(run.size());
  for (int j = 0; j < n && !res.k; ++j) {
    if (target.count(run[j].node.id)) res.k = j;
  }
  if (!res.k) {
    res.reason = "no index reaches the image of the target term";
    return res;
  }
  int k = *res.k;
  auto has_e = [&](int j) {
    const auto& buf = MainOf(run[j], main).buffer;
    return std::find(buf.begin(), buf.end(), step.e) != buf.end();
  };
  std::vector<int> rs;
  for (int j = 0; j <= k; ++j) {
    if (j + 1 < n && has_e(j) && !has_e(j + 1)) rs.push_back(j);
  }
  if (rs.size() != 1) {
    res.reason = rs.empty() ? "the input event is never consumed"
                            : "the input event is consumed more than once";
    return res;
  }
  res.r = rs[0];
  if (step.alpha.empty()) {
    res.s = res.r;
    res.ok = true;
    return res;
  }
  const std::string& first = step.alpha.front().name;
  std::vector<int> ss;
  for (int j = 1; j <= k; ++j) {
    if (std::any_of(run[j].m.begin(), run[j].m.end(),
                    [&](const Message& m) { return m.name == first; })) {
      ss.push_back(j);
    }
  }
  if (ss.size() != 1) {
    res.reason = ss.empty() ? "the output is never emitted"
                            : "the output is emitted at several indices";
    return res;
  }
  int s = ss[0];
  if (s < *res.r) {
    res.reason = "the output precedes consumption of the input";
    return res;
  }
  res.s = s;
  // alpha must appear in order, its first element inside M_s.
  std::vector<Message> tail;
  for (int j = s; j <= k; ++j) tail.insert(tail.end(), run[j].m.begin(), run[j].m.end());
  std::size_t want = 0;
  for (std::size_t p = 0; p < run[s].m.size() && want < step.alpha.size(); ++p) {
    if (tail[p] != step.alpha[0]) continue;
    want = 1;
    for (std::size_t q = p + 1; q < tail.size() && want < step.alpha.size(); ++q) {
      if (tail[q] == step.alpha[want]) ++want;
    }
    if (want < step.alpha.size()) want = 0;
  }
  if (want != step.alpha.size()) {
    res.reason = "emitted messages differ from the macrostep output";
    return res;
  }
  res.ok = true;
  return res;
}

std::vector<RefinementFailure> CheckMacroMicroRefinement(
    const std::vector<KripkeEdgeRef>& edges, const SystemFragment& frag,
    const ProjectionMap& pi, const RefinementOptions& opts) {
  int bound = opts.bound.value_or(static_cast<int>(frag.nodes.size()));
  auto image = [&](const KripkeNode& kn) {
    std::set<std::string> ids = ProjectTerm(pi, kn.term);
    if (!opts.match_events) return ids;
    std::vector<Message> want;
    for (const auto& m : kn.queue) {
      if (opts.match_events->count(m.name)) want.push_back(m);
    }
    std::set<std::string> out;
    for (const auto& id : ids) {
      const OGSNode* n = frag.Find(id);
      if (n && frag.Main(*n).buffer == want) out.insert(id);
    }
    return out;
  };
  std::vector<RefinementFailure> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto targets = image(edges[k].to);
    for (const auto& st : image(edges[k].from)) {
      auto reach = ReachableN(frag, st, bound);
      bool hit = std::any_of(reach.begin(), reach.end(),
                             [&](const auto& id) { return targets.count(id); });
      if (!hit) out.push_back({k, st});
    }
  }
  return out;
}

}  // namespace scforge
