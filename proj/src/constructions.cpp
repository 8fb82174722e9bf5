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

#include "nmg/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace nmg {

namespace {

constexpr std::array<std::pair<ConstructionId, std::string_view>, 11> kNames{{
    {ConstructionId::Obs1a, "obs1a"},
    {ConstructionId::Obs1b, "obs1b"},
    {ConstructionId::Cycle4, "cycle4"},
    {ConstructionId::Cycle5, "cycle5"},
    {ConstructionId::Cycle4Leaf, "cycle4_leaf"},
    {ConstructionId::Cycle5Leaf, "cycle5_leaf"},
    {ConstructionId::RegularSatellite, "regular_satellite"},
    {ConstructionId::Lmr, "lmr"},
    {ConstructionId::TwoPentagon, "two_pentagon"},
    {ConstructionId::GeDiam4, "ge_diam4"},
    {ConstructionId::Irc, "irc"},
}};

// Builds profiles from labelled nodes so generators read like the drawings.
class Builder {
 public:
  NodeId node(std::string label) {
    const auto id = static_cast<NodeId>(labels_.size());
    labels_.push_back(std::move(label));
    strategies_.emplace_back();
    return id;
  }
  void buy(NodeId from, NodeId to) { strategies_[static_cast<std::size_t>(from)].push_back(to); }
  Construction finish() {
    return Construction{StrategyProfile(std::move(strategies_)), std::move(labels_)};
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Strategy> strategies_;
};

Construction from_one_based(const std::vector<std::vector<int>>& spec) {
  Builder b;
  for (std::size_t i = 0; i < spec.size(); ++i) b.node("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < spec.size(); ++i) {
    for (int t : spec[i]) b.buy(static_cast<NodeId>(i), t - 1);
  }
  return b.finish();
}

int positive_ceil(const Rational& alpha) {
  if (alpha <= 0) throw ValidationError("edge price alpha must be positive");
  return static_cast<int>(ceil_i64(alpha));
}

std::vector<Edge> base_edges(int k) {
  if (k < 2 || k % 2 != 0) {
    throw ValidationError("regular_satellite needs an even k >= 2 (got " + std::to_string(k) + ")");
  }
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) edges.emplace_back(side * k + i, side * k + j);
    }
  }
  const NodeId extra = 2 * k;
  for (int i = 0; i < k; ++i) {
    if (i < k / 2) {
      edges.emplace_back(i, extra);
      edges.emplace_back(k + i, extra);
    } else {
      edges.emplace_back(i, k + i);
    }
  }
  return edges;
}

}  // namespace

std::string_view to_string(ConstructionId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "?";
}

std::optional<ConstructionId> parse_construction(std::string_view name) {
  for (const auto& [key, n] : kNames) {
    if (n == name) return key;
  }
  return std::nullopt;
}

std::vector<ConstructionId> all_constructions() {
  std::vector<ConstructionId> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

NodeId Construction::id_of(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("no node labelled '" + std::string(label) + "'");
  return static_cast<NodeId>(it - labels.begin());
}

Construction build_small(ConstructionId id) {
  switch (id) {
    case ConstructionId::Obs1a:
      return from_one_based({{2}, {3}, {4}, {}, {1, 4}, {1, 4}});
    case ConstructionId::Obs1b:
      return from_one_based({{2, 8}, {3}, {}, {3, 5}, {1, 6}, {7}, {}, {4, 7}});
    case ConstructionId::Cycle4:
      return from_one_based({{2}, {3}, {4}, {1}});
    case ConstructionId::Cycle5:
      return from_one_based({{2}, {3}, {4}, {5}, {1}});
    case ConstructionId::Cycle4Leaf:
      return from_one_based({{2}, {3}, {}, {1, 3}, {1}});
    case ConstructionId::Cycle5Leaf:
      return from_one_based({{2}, {3}, {4}, {}, {1, 4}, {1}});
    default:
      throw ValidationError(std::string(to_string(id)) + " is not a small construction");
  }
}

Graph regular_base_graph(int k) {
  const auto edges = base_edges(k);
  return Graph(static_cast<std::size_t>(2 * k + 1), edges);
}

Construction build_regular_satellite(int k, const Rational& alpha) {
  const auto edges = base_edges(k);
  const int copies = positive_ceil(alpha);
  const int base_size = 2 * k + 1;
  Builder b;
  for (int i = 0; i < base_size; ++i) b.node("base_" + std::to_string(i + 1));
  for (const auto& [u, v] : edges) b.buy(std::min(u, v), std::max(u, v));

  // (k+1)-subsets of the base in lexicographic order.
  std::vector<int> subset(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) subset[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::string tag;
    for (int x : subset) tag += (tag.empty() ? "" : ".") + std::to_string(x + 1);
    for (int c = 1; c <= copies; ++c) {
      const NodeId s = b.node("sat_" + tag + "_" + std::to_string(c));
      for (int x : subset) b.buy(s, x);
    }
    int i = k;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == base_size - (k + 1) + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= k; ++j) {
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return b.finish();
}

Construction build_lmr(int k) {
  if (k < 3) throw ValidationError("lmr needs k >= 3 (got " + std::to_string(k) + ")");
  Builder b;
  for (const char* side : {"l_", "m_", "r_"}) {
    for (int i = 1; i <= k; ++i) b.node(side + std::to_string(i));
  }
  const auto l = [](int i) { return static_cast<NodeId>(i - 1); };
  const auto m = [k](int i) { return static_cast<NodeId>(k + i - 1); };
  const auto r = [k](int i) { return static_cast<NodeId>(2 * k + i - 1); };
  for (int i = 1; i <= k; ++i) {
    b.buy(m(i), l(i));
    b.buy(m(i), r(i));
    for (int j = 1; j <= k; ++j) {
      if (j != i) b.buy(l(i), r(j));
    }
  }
  return b.finish();
}

Construction build_two_pentagon(const Rational& alpha) {
  if (alpha < 1) throw ValidationError("two_pentagon needs alpha >= 1");
  const int group = positive_ceil(alpha);
  Builder b;
  for (int i = 1; i <= 5; ++i) b.node("a_" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) b.node("b_" + std::to_string(i));
  const auto a = [](int i) { return static_cast<NodeId>(wrap5(i) - 1); };
  const auto bb = [](int i) { return static_cast<NodeId>(5 + wrap5(i) - 1); };
  for (int i = 1; i <= 5; ++i) {
    b.buy(a(i), a(i + 1));
    b.buy(bb(i), bb(i + 1));
  }
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= group; ++j) {
      const NodeId v = b.node("V_" + std::to_string(i) + "_" + std::to_string(j));
      b.buy(v, a(2 * i - 1));
      b.buy(v, a(2 * i + 1));
      b.buy(v, bb(i));
      b.buy(v, bb(i + 2));
    }
  }
  return b.finish();
}

Construction build_ge_diam4(const Rational& alpha) {
  if (alpha < 3) throw ValidationError("ge_diam4 needs alpha >= 3");
  const int f = static_cast<int>(floor_i64(alpha));
  Builder b;
  std::map<std::string, NodeId> top, bottom;
  for (const char side : {'a', 'b'}) {
    const std::string s(1, side);
    const NodeId t = b.node(s + "_t");
    const NodeId bo = b.node(s + "_b");
    top[s] = t;
    bottom[s] = bo;
    b.buy(t, bo);
    for (int i = 1; i <= f - 2; ++i) {
      const NodeId v = b.node(s + "_" + std::to_string(i));
      b.buy(v, t);
      b.buy(v, bo);
    }
  }
  for (const char x : {'t', 'b'}) {
    for (const char y : {'t', 'b'}) {
      for (int i = 1; i <= f; ++i) {
        const NodeId v = b.node(std::string("M_") + x + y + "_" + std::to_string(i));
        b.buy(v, x == 't' ? top["a"] : bottom["a"]);
        b.buy(v, y == 't' ? top["b"] : bottom["b"]);
      }
    }
  }
  return b.finish();
}

IrcInstance build_irc() {
  Builder b;
  const NodeId a1 = b.node("a_1");
  const NodeId a2 = b.node("a_2");
  const NodeId hub = b.node("b");
  const std::array<NodeId, 2> x{b.node("x_1"), b.node("x_2")};
  const std::array<NodeId, 2> y{b.node("y_1"), b.node("y_2")};
  const std::array<NodeId, 2> a{a1, a2};
  b.buy(a1, x[0]);
  b.buy(a2, x[1]);
  b.buy(hub, a1);
  for (int i = 0; i < 2; ++i) {
    const std::string idx = std::to_string(i + 1);
    b.buy(y[static_cast<std::size_t>(i)], hub);
    const NodeId va = b.node("Va_" + idx);
    b.buy(va, a[static_cast<std::size_t>(i)]);
    for (int j = 1; j <= 2; ++j) {
      const NodeId vy = b.node("Vy_" + idx + "_" + std::to_string(j));
      b.buy(vy, y[static_cast<std::size_t>(i)]);
    }
    for (int j = 1; j <= 4; ++j) {
      const NodeId vxb = b.node("Vxb_" + idx + "_" + std::to_string(j));
      b.buy(vxb, x[static_cast<std::size_t>(i)]);
      b.buy(vxb, hub);
    }
  }
  IrcInstance out{b.finish(), {}};
  out.moves = {
      Move::swap(a1, x[0], y[0]), Move::swap(hub, a1, a2), Move::swap(a2, x[1], y[1]),
      Move::swap(a1, y[0], x[0]), Move::swap(hub, a2, a1), Move::swap(a2, y[1], x[1]),
  };
  return out;
}

Construction build(ConstructionId id, std::optional<int> k, const Rational& alpha) {
  const auto need_k = [&]() {
    if (!k) throw ValidationError(std::string(to_string(id)) + " requires --k");
    return *k;
  };
  switch (id) {
    case ConstructionId::RegularSatellite: return build_regular_satellite(need_k(), alpha);
    case ConstructionId::Lmr: return build_lmr(need_k());
    case ConstructionId::TwoPentagon: return build_two_pentagon(alpha);
    case ConstructionId::GeDiam4: return build_ge_diam4(alpha);
    case ConstructionId::Irc: return build_irc().start;
    default: return build_small(id);
  }
}

}  // namespace nmg
