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

#ifndef NMG_REDUCTION_HPP
#define NMG_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmg/solver.hpp"

namespace nmg {

// Dominating set -> best response.
//
// For a graph G on n nodes and price alpha, the instance keeps G's nodes as
// ids 0..n-1, gives every original v floor(alpha) copies that each buy the
// edge to v, and appends an isolated agent x. G has a dominating set of size
// <= k iff x has a strategy of at most k edges whose cost is at most
// alpha*k + (n-k)*floor(alpha).

struct BRDecisionInstance {
  StrategyProfile profile;
  NodeId x = 0;
  Rational alpha;
  std::size_t budget = 0;
  Rational threshold;
  std::size_t original_n = 0;  ///< |V(G)|

  GameConfig config() const { return GameConfig(profile.size(), alpha); }
};

/// Copies of original v have ids n + v*floor(alpha) + j; x is last. G's own
/// edges are bought by their lower endpoint.
BRDecisionInstance ds_to_br(const Graph& g, std::size_t k, const Rational& alpha);

/// Whether x has a strategy of size <= budget with cost <= threshold.
bool br_decision(const BRDecisionInstance& inst, const SolverOptions& options = {});

/// Smallest-first brute force: a dominating set of size <= k, if one exists.
std::optional<std::vector<NodeId>> dominating_set(const Graph& g, std::size_t k);

struct ReductionCase {
  Graph graph;
  std::size_t k = 0;
  Rational alpha;
  bool dominating = false;
  bool best_response = false;
};

struct ReductionReport {
  std::size_t exhaustive_graphs = 0;  ///< connected labelled graphs, n <= 5
  std::size_t random_graphs = 0;
  std::size_t cases = 0;  ///< (graph, k, alpha) triples checked
  std::vector<ReductionCase> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

/// Every connected labelled graph on 1..min(5, max_n) nodes plus `samples`
/// random graphs (n uniform in 1..max_n, each edge with probability 1/2),
/// for every alpha and every k in 0..n. Requires 1 <= max_n <= 8.
ReductionReport verify_reduction(std::size_t max_n, std::size_t samples, std::uint64_t seed,
                                 const std::vector<Rational>& alphas, unsigned threads = 1);

std::string describe(const ReductionCase& c);

}  // namespace nmg

#endif  // NMG_REDUCTION_HPP
