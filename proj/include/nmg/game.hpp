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

#ifndef NMG_GAME_HPP
#define NMG_GAME_HPP

#include <string>
#include <variant>
#include <vector>

#include "nmg/graph.hpp"
#include "nmg/profile.hpp"
#include "nmg/rational.hpp"

namespace nmg {

/// Number of agents and the exact edge price.
class GameConfig {
 public:
  GameConfig(std::size_t n, Rational alpha);

  std::size_t n() const { return n_; }
  const Rational& alpha() const { return alpha_; }

 private:
  std::size_t n_;
  Rational alpha_;
};

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Add {
  NodeId target;
  friend bool operator==(const Add&, const Add&) = default;
};
struct Delete {
  NodeId target;
  friend bool operator==(const Delete&, const Delete&) = default;
};
struct Swap {
  NodeId removed;
  NodeId added;
  friend bool operator==(const Swap&, const Swap&) = default;
};
struct Replace {
  Strategy strategy;
  friend bool operator==(const Replace&, const Replace&) = default;
};

/// One agent's strategy change. Add/Delete/Swap are the greedy moves;
/// Replace is an arbitrary new strategy.
struct Move {
  NodeId agent;
  std::variant<Add, Delete, Swap, Replace> action;

  static Move add(NodeId agent, NodeId target) { return {agent, Add{target}}; }
  static Move remove(NodeId agent, NodeId target) { return {agent, Delete{target}}; }
  static Move swap(NodeId agent, NodeId removed, NodeId added) {
    return {agent, Swap{removed, added}};
  }
  static Move replace(NodeId agent, Strategy strategy) {
    return {agent, Replace{std::move(strategy)}};
  }

  bool is_greedy() const { return !std::holds_alternative<Replace>(action); }
  std::string to_string() const;

  friend bool operator==(const Move&, const Move&) = default;
};

/// alpha * |S_u| + (number of nodes farther than two hops from u).
Rational agent_cost(const StrategyProfile& profile, const GameConfig& cfg, NodeId agent);

Rational social_cost(const StrategyProfile& profile, const GameConfig& cfg);

enum class OptimumStructure { Star, Empty, Both };

struct OptimumCost {
  Rational cost;
  OptimumStructure structure;
};

/// Star for alpha < n, empty graph for alpha > n, both at alpha == n.
OptimumCost optimum_cost(const GameConfig& cfg);

std::string to_string(OptimumStructure s);

/// Every legal Add, Delete and Swap for the agent, in the fixed order
/// adds (ascending target), deletes (ascending), swaps (by removed, then added).
std::vector<Move> enumerate_greedy_moves(const StrategyProfile& profile, NodeId agent);

/// The mover's strategy after the move. Throws IllegalMove naming the rule.
Strategy resulting_strategy(const StrategyProfile& profile, const Move& move);

StrategyProfile apply_move(const StrategyProfile& profile, const Move& move);

/// New cost minus old cost for the mover.
Rational cost_delta(const StrategyProfile& profile, const GameConfig& cfg, const Move& move);

/// Strict decrease only; ties are not improvements.
bool is_improving(const StrategyProfile& profile, const GameConfig& cfg, const Move& move);

/// Throws ValidationError if the profile and config disagree on n.
void check_compatible(const StrategyProfile& profile, const GameConfig& cfg);

}  // namespace nmg

#endif  // NMG_GAME_HPP
