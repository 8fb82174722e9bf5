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

#ifndef NMG_PROFILE_HPP
#define NMG_PROFILE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmg {

using NodeId = std::int32_t;

/// Sorted, duplicate-free list of edge targets bought by one agent.
using Strategy = std::vector<NodeId>;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The game state: one bought-target set per agent. Immutable once built;
/// the constructor sorts each strategy and rejects self-targets, out-of-range
/// targets and repeated targets.
class StrategyProfile {
 public:
  explicit StrategyProfile(std::vector<Strategy> strategies);

  /// n agents, nobody buys anything.
  static StrategyProfile empty(std::size_t n);

  std::size_t size() const { return strategies_.size(); }
  const Strategy& strategy(NodeId agent) const;
  std::span<const Strategy> strategies() const { return strategies_; }

  /// Copy with one agent's strategy replaced (validated like the constructor).
  StrategyProfile with_strategy(NodeId agent, Strategy strategy) const;

  bool buys(NodeId agent, NodeId target) const;

  /// Sum of |S_u| over all agents; counts double-bought pairs twice.
  std::size_t bought_edge_count() const;

  /// Compact canonical text, e.g. "1|2|3||0,3|0,3". Used for hashing and
  /// cycle detection.
  std::string canonical() const;

  /// 64-bit FNV-1a of canonical().
  std::uint64_t hash() const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  std::vector<Strategy> strategies_;
};

/// Unordered pairs {u, v} (u < v) bought by both endpoints. Representable,
/// but never part of a stable profile.
std::vector<std::pair<NodeId, NodeId>> double_bought_edges(const StrategyProfile& profile);

}  // namespace nmg

#endif  // NMG_PROFILE_HPP
