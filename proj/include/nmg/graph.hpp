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

#ifndef NMG_GRAPH_HPP
#define NMG_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nmg/profile.hpp"

namespace nmg {

using Edge = std::pair<NodeId, NodeId>;

/// Hop distance that is either a finite count or "unreachable". Infinite
/// compares greater than every finite distance.
class Distance {
 public:
  static constexpr Distance finite(std::size_t hops) { return Distance(hops, false); }
  static constexpr Distance infinite() { return Distance(0, true); }

  constexpr bool is_finite() const { return !infinite_; }
  /// Only meaningful when is_finite().
  constexpr std::size_t hops() const { return hops_; }

  friend constexpr bool operator==(Distance a, Distance b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.hops_ == b.hops_);
  }
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.hops_ <=> b.hops_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(hops_); }

 private:
  constexpr Distance(std::size_t hops, bool inf) : hops_(hops), infinite_(inf) {}
  std::size_t hops_;
  bool infinite_;
};

/// Immutable simple undirected graph on nodes 0..n-1 with sorted adjacency.
class Graph {
 public:
  explicit Graph(std::size_t n);
  /// Builds from an edge list; repeated edges collapse. Self-loops and
  /// out-of-range endpoints throw ValidationError.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::span<const NodeId> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const { return neighbors(u).size(); }
  bool has_edge(NodeId u, NodeId v) const;
  std::size_t edge_count() const { return edge_count_; }
  /// Every edge once, as (min, max), sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(NodeId u) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Undirected network created by a profile: {u,v} is an edge iff u buys v or
/// v buys u.
Graph realize(const StrategyProfile& profile);

/// All nodes within hop distance 2 of u, u included, sorted.
std::vector<NodeId> two_neighborhood(const Graph& g, NodeId u);

/// BFS distances from u.
std::vector<Distance> distances_from(const Graph& g, NodeId u);

/// Largest pairwise distance; infinite when disconnected.
Distance diameter(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace nmg

#endif  // NMG_GRAPH_HPP
