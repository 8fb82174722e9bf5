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

#ifndef NMG_ANALYSIS_HPP
#define NMG_ANALYSIS_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "nmg/certifier.hpp"

namespace nmg {

/// Largest diameter a connected equilibrium can have:
///   NE: 2 for alpha < 1, 3 for alpha >= 1
///   GE: 2 for alpha < 1, 3 for 1 <= alpha < 3, 4 for alpha >= 3
std::size_t diameter_bound(Concept c, const Rational& alpha);

struct DiameterBoundReport {
  bool connected = false;
  Distance diameter = Distance::infinite();
  std::optional<std::size_t> bound;  ///< empty when skipped (disconnected)
  bool pass = false;
  std::string note;
};

/// Disconnected profiles are skipped: the edgeless graph is the only
/// disconnected equilibrium, and the bound is about connected ones.
DiameterBoundReport check_diameter_bound(const StrategyProfile& profile, const GameConfig& cfg,
                                         Concept c);

/// Small graphs that may legitimately contain long degree-2 runs.
enum class ExceptionShape { None, Cycle4, Cycle4Leaf, Cycle5, Cycle5Leaf };

std::string to_string(ExceptionShape s);

/// Whether the shape can be an equilibrium at this price:
/// 4-cycle alpha <= 1, 4-cycle+leaf alpha == 1, 5-cycle alpha <= 2,
/// 5-cycle+leaf alpha == 2.
bool exception_admissible(ExceptionShape s, const Rational& alpha);

struct Degree2Run {
  std::vector<NodeId> nodes;  ///< in path order
  bool closed = false;        ///< the run is an entire cycle component
};

struct Degree2Report {
  std::vector<Degree2Run> runs;  ///< maximal runs of adjacent degree-2 nodes
  std::size_t max_run = 0;
  /// Runs of exactly two nodes whose outer neighbors have degree != 2.
  std::size_t two_node_runs = 0;
  ExceptionShape exception = ExceptionShape::None;
};

Degree2Report degree2_runs(const Graph& g);

/// Nodes adjacent to at least one leaf.
std::vector<NodeId> leaf_support(const Graph& g);

struct PoaReport {
  Rational social_cost;
  OptimumCost optimum;
  Rational ratio;
};

PoaReport poa_report(const StrategyProfile& profile, const GameConfig& cfg);

/// Isomorphism test by canonical form; graphs up to 8 nodes.
bool isomorphic_small(const Graph& a, const Graph& b);

/// Structural properties every equilibrium of the concept must have, checked
/// on one profile. Returns human-readable violations (empty = all hold).
/// For NE: diameter bound, connected-or-edgeless, no degree-2 run of length
/// >= 3 outside the admissible exception shapes, at most one two-node
/// degree-2 run (except the alpha = 2 eight-node example), and a single
/// leaf support when alpha > 1. For GE: diameter bound and
/// connected-or-edgeless.
std::vector<std::string> structural_violations(const StrategyProfile& profile,
                                               const GameConfig& cfg, Concept c);

struct EnumerateOptions {
  std::optional<std::chrono::milliseconds> time_cap;
  unsigned threads = 1;
};

struct EnumerationResult {
  std::vector<StrategyProfile> stable;  ///< in profile-index order
  std::uint64_t profiles_checked = 0;
  std::uint64_t profiles_total = 0;
  bool complete = false;  ///< false when the time cap cut the scan short
};

/// Every profile on cfg.n() agents, certified under the concept. Profile i
/// sets "agent u buys its j-th other node" from bit u*(n-1)+j of i.
/// n <= 5 for NE and n <= 6 for GE; larger sizes throw std::invalid_argument.
EnumerationResult enumerate_equilibria(const GameConfig& cfg, Concept c,
                                       const EnumerateOptions& options = {});

StrategyProfile profile_from_index(std::size_t n, std::uint64_t index);

}  // namespace nmg

#endif  // NMG_ANALYSIS_HPP
