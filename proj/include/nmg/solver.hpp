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

#ifndef NMG_SOLVER_HPP
#define NMG_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nmg/game.hpp"

namespace nmg {

// Best responses as coverage problems.
//
// Remove the agent's own bought edges and call the remaining graph G'. If the
// agent then buys a target set T, its 2-neighborhood is
//
//   base_cover  ∪  ⋃_{v in T} cover(v)
//
// where cover(v) is the closed neighborhood of v in G' and base_cover is the
// agent itself plus the covers of everyone who already buys an edge to it.
// The cost of T is alpha*|T| + n - |that union|, so a best response is a
// budgeted maximum-coverage problem.

enum class PruneReason {
  InNeighbor,  ///< already adjacent through an incoming edge
  NoGain,      ///< cover lies inside base_cover
  Dominated,   ///< cover (outside base) is inside the cover of a smaller id
};

struct PrunedCandidate {
  NodeId target;
  PruneReason reason;
  NodeId dominated_by = -1;  ///< set for Dominated
};

struct CoverageInstance {
  NodeId agent = 0;
  std::size_t n = 0;
  Rational alpha;
  std::vector<NodeId> in_neighbors;
  std::vector<NodeId> base_cover;
  /// covers[v] for every v != agent (covers[agent] is empty), sorted.
  std::vector<std::vector<NodeId>> covers;
  /// Targets that survive pruning, ascending.
  std::vector<NodeId> candidates;
  /// Every target removed from consideration, with the reason.
  std::vector<PrunedCandidate> pruned;

  /// base_cover ∪ ⋃ covers[t]; accepts any targets, pruned or not.
  std::vector<NodeId> coverage_of(std::span<const NodeId> targets) const;
};

/// Pruned targets are never part of the lexicographically smallest optimal
/// strategy: buying an in-neighbor or a no-gain target only adds cost, and a
/// dominated target can be exchanged for its smaller dominator without
/// increasing cost.
CoverageInstance coverage_instance(const StrategyProfile& profile, const GameConfig& cfg,
                                   NodeId agent);

const char* to_string(PruneReason reason);

enum class SearchMode { Auto, Exhaustive, BranchAndBound };

struct SolverOptions {
  /// Maximum number of candidates (after pruning) the exact solver accepts.
  std::size_t candidate_cap = 40;
  /// Auto mode enumerates every subset up to this many candidates.
  std::size_t exhaustive_limit = 20;
  SearchMode mode = SearchMode::Auto;
  /// Restrict to strategies with at most this many targets.
  std::optional<std::size_t> budget;
};

class SolverCapExceeded : public std::runtime_error {
 public:
  SolverCapExceeded(NodeId agent, std::size_t candidates, std::size_t cap);
  NodeId agent;
  std::size_t candidates;
  std::size_t cap;
};

struct BestResponse {
  Strategy strategy;  ///< lexicographically smallest optimal strategy
  Rational cost;
  std::size_t candidate_count = 0;
  std::uint64_t nodes_explored = 0;
  bool used_branch_and_bound = false;
};

/// Exact best response over all strategies (within options.budget). Ties are
/// broken toward the lexicographically smallest sorted target list.
BestResponse best_response_exact(const StrategyProfile& profile, const GameConfig& cfg,
                                 NodeId agent, const SolverOptions& options = {});

BestResponse best_response_exact(const CoverageInstance& instance,
                                 const SolverOptions& options = {});

struct GreedyResponse {
  std::optional<Move> move;  ///< empty when no single change strictly improves
  Rational delta;            ///< new cost - old cost (0 when no move)
};

/// The Add/Delete/Swap with the most negative cost change; ties go to the
/// move whose resulting strategy is lexicographically smallest.
GreedyResponse best_greedy_response(const StrategyProfile& profile, const GameConfig& cfg,
                                    NodeId agent);

/// The first strictly improving move in enumerate_greedy_moves order.
GreedyResponse first_improving_greedy(const StrategyProfile& profile, const GameConfig& cfg,
                                      NodeId agent);

}  // namespace nmg

#endif  // NMG_SOLVER_HPP
