// Copyright 2026 The nmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmg/dynamics.hpp"

#include <numeric>
#include <random>
#include <unordered_map>

#include <json.hpp>

#include "nmg/constructions.hpp"

namespace nmg {

namespace {

struct Candidate {
  Move move;
  Rational delta;
};

std::optional<Candidate> improving_move(const StrategyProfile& p, const GameConfig& cfg,
                                        NodeId agent, Policy policy, const SolverOptions& solver) {
  switch (policy) {
    case Policy::FirstImprovingGreedy: {
      auto r = first_improving_greedy(p, cfg, agent);
      if (!r.move) return std::nullopt;
      return Candidate{std::move(*r.move), r.delta};
    }
    case Policy::BestGreedy: {
      auto r = best_greedy_response(p, cfg, agent);
      if (!r.move) return std::nullopt;
      return Candidate{std::move(*r.move), r.delta};
    }
    case Policy::BestResponse: {
      const Rational current = agent_cost(p, cfg, agent);
      auto br = best_response_exact(p, cfg, agent, solver);
      if (!(br.cost < current)) return std::nullopt;
      return Candidate{Move::replace(agent, std::move(br.strategy)), br.cost - current};
    }
  }
  return std::nullopt;
}

// Uniform draw in [0, bound) by rejection, so traces do not depend on the
// standard library's distribution implementation.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Remembers every visited profile; exact comparison on the canonical text.
class StateLog {
 public:
  /// Returns the index of an earlier identical state, if any.
  std::optional<std::size_t> visit(const StrategyProfile& p) {
    auto [it, inserted] = seen_.try_emplace(p.canonical(), count_);
    ++count_;
    if (inserted) return std::nullopt;
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::size_t> seen_;
  std::size_t count_ = 0;
};

Trace start_trace(const StrategyProfile& start) {
  return Trace{start, start.hash(), {}, Outcome::StepCap, start, std::nullopt, 0, 0, {}};
}

}  // namespace

std::string to_string(Policy p) {
  switch (p) {
    case Policy::FirstImprovingGreedy: return "first_improving_greedy";
    case Policy::BestGreedy: return "best_greedy";
    case Policy::BestResponse: return "best_response";
  }
  return "?";
}

std::optional<Policy> parse_policy(std::string_view text) {
  for (Policy p : {Policy::FirstImprovingGreedy, Policy::BestGreedy, Policy::BestResponse}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

std::string to_string(const Scheduler& s) {
  if (s.kind == Scheduler::Kind::RoundRobin) return "round_robin";
  return "seeded_random(" + std::to_string(s.seed) + ")";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Fixpoint: return "fixpoint";
    case Outcome::Cycle: return "cycle";
    case Outcome::StepCap: return "step_cap";
    case Outcome::Rejected: return "rejected";
  }
  return "?";
}

Trace run(const StrategyProfile& start, const GameConfig& cfg, const Scheduler& scheduler,
          Policy policy, std::size_t max_steps, const SolverOptions& solver) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  check_compatible(start, cfg);
  const std::size_t n = start.size();
  Trace trace = start_trace(start);
  StateLog states;
  states.visit(start);
  std::mt19937_64 rng(scheduler.seed);
  std::size_t next_agent = 0;
  std::vector<NodeId> order(n);

  StrategyProfile current = start;
  while (trace.steps.size() < max_steps) {
    if (scheduler.kind == Scheduler::Kind::RoundRobin) {
      for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>((next_agent + i) % n);
    } else {
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t i = n; i > 1; --i) {
        std::swap(order[i - 1], order[draw_below(rng, i)]);
      }
    }
    std::optional<Candidate> chosen;
    for (NodeId agent : order) {
      chosen = improving_move(current, cfg, agent, policy, solver);
      if (chosen) break;
    }
    if (!chosen) {
      trace.outcome = Outcome::Fixpoint;
      trace.fixpoint_concept = policy == Policy::BestResponse ? Concept::Nash : Concept::Greedy;
      break;
    }
    next_agent = static_cast<std::size_t>(chosen->move.agent) + 1;
    current = apply_move(current, chosen->move);
    trace.steps.push_back({chosen->move, chosen->delta, current.hash()});
    if (const auto earlier = states.visit(current)) {
      trace.outcome = Outcome::Cycle;
      trace.cycle_start = *earlier;
      trace.cycle_length = trace.steps.size() - *earlier;
      break;
    }
  }
  trace.final_profile = current;
  return trace;
}

Trace run_prescribed(const StrategyProfile& start, const GameConfig& cfg,
                     const std::vector<Move>& moves, std::size_t max_steps) {
  if (moves.empty()) throw std::invalid_argument("prescribed move list is empty");
  check_compatible(start, cfg);
  Trace trace = start_trace(start);
  StateLog states;
  states.visit(start);
  StrategyProfile current = start;
  while (trace.steps.size() < max_steps) {
    const Move& m = moves[trace.steps.size() % moves.size()];
    Rational delta;
    try {
      delta = cost_delta(current, cfg, m);
    } catch (const IllegalMove& e) {
      trace.outcome = Outcome::Rejected;
      trace.message = "step " + std::to_string(trace.steps.size() + 1) + ": " + e.what();
      break;
    }
    if (!(delta < 0)) {
      trace.outcome = Outcome::Rejected;
      trace.message = "step " + std::to_string(trace.steps.size() + 1) + ": " + m.to_string() +
                      " changes cost by " + to_string(delta) + ", not an improvement";
      break;
    }
    current = apply_move(current, m);
    trace.steps.push_back({m, delta, current.hash()});
    if (const auto earlier = states.visit(current)) {
      trace.outcome = Outcome::Cycle;
      trace.cycle_start = *earlier;
      trace.cycle_length = trace.steps.size() - *earlier;
      break;
    }
  }
  trace.final_profile = current;
  return trace;
}

IrcReport replay_irc(const Rational& alpha) {
  const IrcInstance irc = build_irc();
  const GameConfig cfg(irc.start.profile.size(), alpha);
  IrcReport report;
  report.all_legal = true;
  report.all_unit_improvements = true;
  StrategyProfile current = irc.start.profile;
  for (std::size_t i = 0; i < irc.moves.size(); ++i) {
    const Move& m = irc.moves[i];
    const std::string step = "step " + std::to_string(i + 1) + " (" + m.to_string() + ")";
    IrcStepReport s{m, false, Rational(0)};
    try {
      const StrategyProfile next = apply_move(current, m);
      s.legal = true;
      s.delta = agent_cost(next, cfg, m.agent) - agent_cost(current, cfg, m.agent);
      current = next;
    } catch (const IllegalMove& e) {
      report.all_legal = false;
      report.all_unit_improvements = false;
      if (!report.failure) report.failure = step + ": illegal: " + e.what();
      report.steps.push_back(s);
      break;
    }
    if (s.delta != -1) {
      report.all_unit_improvements = false;
      if (!report.failure) report.failure = step + ": cost change " + to_string(s.delta) + ", expected -1";
    }
    report.steps.push_back(s);
  }
  report.returns_to_start = report.all_legal && current == irc.start.profile;
  if (!report.returns_to_start && !report.failure) {
    report.failure = "final state differs from the starting profile";
  }
  return report;
}

std::string trace_to_json(const Trace& trace, const GameConfig& cfg, Policy policy,
                          const Scheduler& scheduler) {
  using json = nlohmann::ordered_json;
  json out;
  out["n"] = cfg.n();
  out["alpha"] = to_string(cfg.alpha());
  out["policy"] = to_string(policy);
  out["scheduler"] = to_string(scheduler);
  out["initial"] = trace.initial.canonical();
  out["initial_hash"] = trace.initial_hash;
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"agent", s.move.agent},
                     {"move", s.move.to_string()},
                     {"delta", to_string(s.delta)},
                     {"state_hash", s.state_hash}});
  }
  out["steps"] = std::move(steps);
  out["outcome"] = to_string(trace.outcome);
  if (trace.fixpoint_concept) out["fixpoint_concept"] = to_string(*trace.fixpoint_concept);
  if (trace.outcome == Outcome::Cycle) {
    out["cycle_start"] = trace.cycle_start;
    out["cycle_length"] = trace.cycle_length;
  }
  if (!trace.message.empty()) out["message"] = trace.message;
  out["final"] = trace.final_profile.canonical();
  return out.dump(2) + "\n";
}

}  // namespace nmg
