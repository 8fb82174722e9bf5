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

#include "nmg/profile.hpp"

#include <algorithm>

namespace nmg {

namespace {

void normalize(Strategy& s, NodeId agent, std::size_t n) {
  for (NodeId t : s) {
    if (t < 0 || static_cast<std::size_t>(t) >= n) {
      throw ValidationError("agent " + std::to_string(agent) + " targets out-of-range node " +
                            std::to_string(t) + " (n = " + std::to_string(n) + ")");
    }
    if (t == agent) {
      throw ValidationError("agent " + std::to_string(agent) + " targets itself");
    }
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw ValidationError("agent " + std::to_string(agent) + " lists a target twice");
  }
}

}  // namespace

StrategyProfile::StrategyProfile(std::vector<Strategy> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.empty()) throw ValidationError("profile needs at least one agent");
  for (std::size_t u = 0; u < strategies_.size(); ++u) {
    normalize(strategies_[u], static_cast<NodeId>(u), strategies_.size());
  }
}

StrategyProfile StrategyProfile::empty(std::size_t n) {
  return StrategyProfile(std::vector<Strategy>(n));
}

const Strategy& StrategyProfile::strategy(NodeId agent) const {
  if (agent < 0 || static_cast<std::size_t>(agent) >= strategies_.size()) {
    throw ValidationError("agent id " + std::to_string(agent) + " out of range");
  }
  return strategies_[static_cast<std::size_t>(agent)];
}

StrategyProfile StrategyProfile::with_strategy(NodeId agent, Strategy strategy) const {
  (void)this->strategy(agent);
  normalize(strategy, agent, strategies_.size());
  StrategyProfile copy = *this;
  copy.strategies_[static_cast<std::size_t>(agent)] = std::move(strategy);
  return copy;
}

bool StrategyProfile::buys(NodeId agent, NodeId target) const {
  const Strategy& s = strategy(agent);
  return std::binary_search(s.begin(), s.end(), target);
}

std::size_t StrategyProfile::bought_edge_count() const {
  std::size_t total = 0;
  for (const auto& s : strategies_) total += s.size();
  return total;
}

std::string StrategyProfile::canonical() const {
  std::string out;
  for (std::size_t u = 0; u < strategies_.size(); ++u) {
    if (u > 0) out += '|';
    for (std::size_t i = 0; i < strategies_[u].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(strategies_[u][i]);
    }
  }
  return out;
}

std::uint64_t StrategyProfile::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::pair<NodeId, NodeId>> double_bought_edges(const StrategyProfile& profile) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (std::size_t u = 0; u < profile.size(); ++u) {
    for (NodeId v : profile.strategy(static_cast<NodeId>(u))) {
      if (static_cast<NodeId>(u) < v && profile.buys(v, static_cast<NodeId>(u))) {
        out.emplace_back(static_cast<NodeId>(u), v);
      }
    }
  }
  return out;
}

}  // namespace nmg
