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

#ifndef NMG_CONSTRUCTIONS_HPP
#define NMG_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmg/game.hpp"

namespace nmg {

enum class ConstructionId {
  Obs1a,
  Obs1b,
  Cycle4,
  Cycle5,
  Cycle4Leaf,
  Cycle5Leaf,
  RegularSatellite,
  Lmr,
  TwoPentagon,
  GeDiam4,
  Irc,
};

std::string_view to_string(ConstructionId id);
/// Accepts the lowercase names used on the command line ("obs1a", "lmr", ...).
std::optional<ConstructionId> parse_construction(std::string_view name);
std::vector<ConstructionId> all_constructions();

/// A generated profile plus one label per node id (e.g. "v3", "a_t", "m_2").
struct Construction {
  StrategyProfile profile;
  std::vector<std::string> labels;

  /// Node id carrying the given label; throws std::out_of_range if absent.
  NodeId id_of(std::string_view label) const;
};

// Small equilibria, labelled v1..vn (id = index - 1):
//   obs1a        ({v2},{v3},{v4},{},{v1,v4},{v1,v4})
//   obs1b        ({v2,v8},{v3},{},{v3,v5},{v1,v6},{v7},{},{v4,v7})
//   cycle4/5     v_i buys v_{i+1}, the last buys v1
//   cycle4_leaf  ({v2},{v3},{},{v1,v3},{v1})
//   cycle5_leaf  ({v2},{v3},{v4},{},{v1,v4},{v1})
Construction build_small(ConstructionId id);

/// k-regular base graph on 2k+1 nodes (ids 0..2k, labels "base_1"..) plus
/// ceil(alpha) satellites per (k+1)-subset of the base, each buying the whole
/// subset. Subsets are taken in lexicographic order; satellite labels are
/// "sat_<subset>_<copy>", e.g. "sat_1.2.3_1".
///
/// Base graph: cliques on 0..k-1 and k..2k-1, matching i <-> k+i, the k/2
/// lowest matching edges replaced by edges to node 2k. Each base edge is
/// bought by its lower endpoint.
Construction build_regular_satellite(int k, const Rational& alpha);

/// The undirected base graph alone, for regularity checks.
Graph regular_base_graph(int k);

/// L/M/R network: l_i = i-1, m_i = k+i-1, r_i = 2k+i-1 (labels "l_i" etc.).
Construction build_lmr(int k);

/// Two 5-cycles a_1..a_5 (ids 0..4), b_1..b_5 (ids 5..9) and groups V_1..V_5
/// of ceil(alpha) nodes (labels "V_i_j"). Indices wrap as ((x-1) mod 5) + 1.
Construction build_two_pentagon(const Rational& alpha);

/// Diameter-4 greedy equilibrium for alpha >= 3 with f = floor(alpha):
/// A = {a_t, a_b, a_1..a_{f-2}}, B likewise, then M_tt, M_tb, M_bt, M_bb of
/// f nodes each, in that id order.
Construction build_ge_diam4(const Rational& alpha);

/// Improving response cycle instance and its six prescribed swaps.
struct IrcInstance {
  Construction start;
  std::vector<Move> moves;
};
IrcInstance build_irc();

/// Uniform entry point used by the CLI. `k` is required for
/// regular_satellite and lmr; alpha is ignored by alpha-free constructions.
Construction build(ConstructionId id, std::optional<int> k, const Rational& alpha);

/// 1-based cyclic index used by the two-pentagon network.
constexpr int wrap5(int x) { return ((x - 1) % 5 + 5) % 5 + 1; }

}  // namespace nmg

#endif  // NMG_CONSTRUCTIONS_HPP
