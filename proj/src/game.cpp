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

#include "nmg/game.hpp"

#include <algorithm>

namespace nmg {

namespace {

std::string join(const Strategy& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational missing_count(const Graph& g, NodeId u) {
  return Rational(g.size() - two_neighborhood(g, u).size());
}

}  // namespace

GameConfig::GameConfig(std::size_t n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {
  if (n_ == 0) throw ValidationError("game needs at least one agent");
  if (alpha_ <= 0) throw ValidationError("edge price alpha must be positive");
}

std::string Move::to_string() const {
  const std::string who = "agent " + std::to_string(agent) + ": ";
  return who + std::visit(overloaded{
                              [](const Add& a) { return "Add(" + std::to_string(a.target) + ")"; },
                              [](const Delete& d) {
                                return "Delete(" + std::to_string(d.target) + ")";
                              },
                              [](const Swap& s) {
                                return "Swap(" + std::to_string(s.removed) + "->" +
                                       std::to_string(s.added) + ")";
                              },
                              [](const Replace& r) { return "Replace(" + join(r.strategy) + ")"; },
                          },
                          action);
}

void check_compatible(const StrategyProfile& profile, const GameConfig& cfg) {
  if (profile.size() != cfg.n()) {
    throw ValidationError("profile has " + std::to_string(profile.size()) +
                          " agents but the game has n = " + std::to_string(cfg.n()));
  }
}

Rational agent_cost(const StrategyProfile& profile, const GameConfig& cfg, NodeId agent) {
  check_compatible(profile, cfg);
  const std::size_t bought = profile.strategy(agent).size();
  return cfg.alpha() * bought + missing_count(realize(profile), agent);
}

Rational social_cost(const StrategyProfile& profile, const GameConfig& cfg) {
  check_compatible(profile, cfg);
  const Graph g = realize(profile);
  Rational total = cfg.alpha() * profile.bought_edge_count();
  for (std::size_t u = 0; u < g.size(); ++u) total += missing_count(g, static_cast<NodeId>(u));
  return total;
}

OptimumCost optimum_cost(const GameConfig& cfg) {
  const Rational n(cfg.n());
  const Rational star = cfg.alpha() * (n - 1);
  const Rational empty = n * (n - 1);
  if (cfg.alpha() < n) return {star, OptimumStructure::Star};
  if (cfg.alpha() > n) return {empty, OptimumStructure::Empty};
  return {star, OptimumStructure::Both};
}

std::string to_string(OptimumStructure s) {
  switch (s) {
    case OptimumStructure::Star: return "star";
    case OptimumStructure::Empty: return "empty";
    case OptimumStructure::Both: return "both";
  }
  return "?";
}

std::vector<Move> enumerate_greedy_moves(const StrategyProfile& profile, NodeId agent) {
  const Strategy& owned = profile.strategy(agent);
  std::vector<NodeId> others;
  for (std::size_t v = 0; v < profile.size(); ++v) {
    const auto id = static_cast<NodeId>(v);
    if (id != agent && !std::binary_search(owned.begin(), owned.end(), id)) others.push_back(id);
  }
  std::vector<Move> moves;
  moves.reserve(others.size() + owned.size() * (1 + others.size()));
  for (NodeId x : others) moves.push_back(Move::add(agent, x));
  for (NodeId y : owned) moves.push_back(Move::remove(agent, y));
  for (NodeId y : owned) {
    for (NodeId x : others) moves.push_back(Move::swap(agent, y, x));
  }
  return moves;
}

Strategy resulting_strategy(const StrategyProfile& profile, const Move& move) {
  const Strategy& current = profile.strategy(move.agent);
  const auto owns = [&](NodeId t) { return std::binary_search(current.begin(), current.end(), t); };
  const auto in_range = [&](NodeId t) {
    return t >= 0 && static_cast<std::size_t>(t) < profile.size() && t != move.agent;
  };
  const std::string who = move.to_string() + " is illegal: ";
  Strategy next = current;
  std::visit(overloaded{
                 [&](const Add& a) {
                   if (!in_range(a.target)) throw IllegalMove(who + "target is not another agent");
                   if (owns(a.target)) throw IllegalMove(who + "Add requires a non-target");
                   next.insert(std::lower_bound(next.begin(), next.end(), a.target), a.target);
                 },
                 [&](const Delete& d) {
                   if (!owns(d.target)) throw IllegalMove(who + "Delete requires a current target");
                   next.erase(std::lower_bound(next.begin(), next.end(), d.target));
                 },
                 [&](const Swap& s) {
                   if (!owns(s.removed)) {
                     throw IllegalMove(who + "Swap must remove a current target");
                   }
                   if (!in_range(s.added)) throw IllegalMove(who + "target is not another agent");
                   if (owns(s.added)) throw IllegalMove(who + "Swap must add a non-target");
                   next.erase(std::lower_bound(next.begin(), next.end(), s.removed));
                   next.insert(std::lower_bound(next.begin(), next.end(), s.added), s.added);
                 },
                 [&](const Replace& r) {
                   next = r.strategy;
                   std::sort(next.begin(), next.end());
                   for (NodeId t : next) {
                     if (!in_range(t)) throw IllegalMove(who + "target is not another agent");
                   }
                   if (std::adjacent_find(next.begin(), next.end()) != next.end()) {
                     throw IllegalMove(who + "Replace lists a target twice");
                   }
                 },
             },
             move.action);
  return next;
}

StrategyProfile apply_move(const StrategyProfile& profile, const Move& move) {
  return profile.with_strategy(move.agent, resulting_strategy(profile, move));
}

Rational cost_delta(const StrategyProfile& profile, const GameConfig& cfg, const Move& move) {
  const StrategyProfile next = apply_move(profile, move);
  return agent_cost(next, cfg, move.agent) - agent_cost(profile, cfg, move.agent);
}

bool is_improving(const StrategyProfile& profile, const GameConfig& cfg, const Move& move) {
  return cost_delta(profile, cfg, move) < 0;
}

}  // namespace nmg
