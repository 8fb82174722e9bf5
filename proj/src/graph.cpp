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

#include "nmg/graph.hpp"

#include <algorithm>
#include <deque>

namespace nmg {

Graph::Graph(std::size_t n) : adjacency_(n) {
  if (n == 0) throw ValidationError("graph needs at least one node");
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    check(u);
    check(v);
    if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  edge_count_ = degree_sum / 2;
}

void Graph::check(NodeId u) const {
  if (u < 0 || static_cast<std::size_t>(u) >= adjacency_.size()) {
    throw ValidationError("node id " + std::to_string(u) + " out of range (n = " +
                          std::to_string(adjacency_.size()) + ")");
  }
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check(u);
  return adjacency_[static_cast<std::size_t>(u)];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  check(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (static_cast<NodeId>(u) < v) out.emplace_back(static_cast<NodeId>(u), v);
    }
  }
  return out;
}

Graph realize(const StrategyProfile& profile) {
  std::vector<Edge> edges;
  edges.reserve(profile.bought_edge_count());
  for (std::size_t u = 0; u < profile.size(); ++u) {
    for (NodeId v : profile.strategy(static_cast<NodeId>(u))) {
      edges.emplace_back(static_cast<NodeId>(u), v);
    }
  }
  return Graph(profile.size(), edges);
}

std::vector<NodeId> two_neighborhood(const Graph& g, NodeId u) {
  std::vector<char> seen(g.size(), 0);
  seen[static_cast<std::size_t>(u)] = 1;
  for (NodeId v : g.neighbors(u)) {
    seen[static_cast<std::size_t>(v)] = 1;
    for (NodeId w : g.neighbors(v)) seen[static_cast<std::size_t>(w)] = 1;
  }
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (seen[v]) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

std::vector<Distance> distances_from(const Graph& g, NodeId u) {
  std::vector<Distance> dist(g.size(), Distance::infinite());
  (void)g.neighbors(u);
  std::deque<NodeId> queue{u};
  dist[static_cast<std::size_t>(u)] = Distance::finite(0);
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    const std::size_t next = dist[static_cast<std::size_t>(v)].hops() + 1;
    for (NodeId w : g.neighbors(v)) {
      auto& d = dist[static_cast<std::size_t>(w)];
      if (!d.is_finite()) {
        d = Distance::finite(next);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance diameter(const Graph& g) {
  Distance best = Distance::finite(0);
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (const Distance& d : distances_from(g, static_cast<NodeId>(u))) {
      if (!d.is_finite()) return Distance::infinite();
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](Distance d) { return d.is_finite(); });
}

}  // namespace nmg
