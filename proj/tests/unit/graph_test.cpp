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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nmg/constructions.hpp"
#include "nmg/graph.hpp"
#include "oracle.hpp"

using namespace nmg;

TEST_CASE("realize merges both ownership directions into one edge") {
  const Graph g = realize(StrategyProfile({{1}, {0}}));
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("realize obs1a") {
  const Graph g = realize(build_small(ConstructionId::Obs1a).profile);
  CHECK(g.size() == 6);
  CHECK(g.edge_count() == 7);
}

TEST_CASE("realize edgeless") {
  const Graph g = realize(StrategyProfile::empty(5));
  CHECK(g.edge_count() == 0);
  CHECK(diameter(g) == Distance::infinite());
}

TEST_CASE("graph rejects self loops and bad ids") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(Graph(3, far), std::invalid_argument);
}

TEST_CASE("two_neighborhood on a path and a cycle") {
  const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(two_neighborhood(Graph(5, path), 0) == std::vector<NodeId>{0, 1, 2});
  const Graph c5 = realize(build_small(ConstructionId::Cycle5).profile);
  for (NodeId u = 0; u < 5; ++u) CHECK(two_neighborhood(c5, u).size() == 5);
  const Graph o = realize(build_small(ConstructionId::Obs1a).profile);
  CHECK(two_neighborhood(o, 0).size() == 6);
}

TEST_CASE("distances") {
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  const auto d = distances_from(Graph(4, star), 0);
  for (NodeId v = 1; v < 4; ++v) CHECK(d[static_cast<std::size_t>(v)] == Distance::finite(1));
  const auto e = distances_from(Graph(3), 1);
  CHECK(e[1] == Distance::finite(0));
  CHECK(e[0] == Distance::infinite());
  CHECK(Distance::finite(1000) < Distance::infinite());
  CHECK(Distance::infinite().to_string() == "inf");

  const Construction tp = build_two_pentagon(Rational(1));
  const auto from_a1 = distances_from(realize(tp.profile), tp.id_of("a_1"));
  CHECK(from_a1[static_cast<std::size_t>(tp.id_of("b_4"))] == Distance::finite(3));
}

TEST_CASE("diameter of constructions") {
  CHECK(diameter(Graph(1)) == Distance::finite(0));
  CHECK(diameter(realize(build_regular_satellite(2, Rational(1)).profile)) == Distance::finite(2));
  CHECK(diameter(realize(build_ge_diam4(Rational(3)).profile)) == Distance::finite(4));
}

TEST_CASE("graph properties on random profiles") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const StrategyProfile p = oracle::random_profile(rng, n, 0.25);
    const Graph g = realize(p);
    // Symmetric adjacency.
    for (std::size_t u = 0; u < n; ++u) {
      for (NodeId v : g.neighbors(static_cast<NodeId>(u))) CHECK(g.has_edge(v, static_cast<NodeId>(u)));
    }
    // Ownership does not matter.
    std::vector<Strategy> flipped(n);
    for (const auto& [u, v] : g.edges()) flipped[static_cast<std::size_t>(v)].push_back(u);
    CHECK(realize(StrategyProfile(flipped)) == g);
    // N2 contains the closed neighborhood and matches the bitmask oracle.
    bool all_full = true;
    const auto adj = oracle::adjacency({p.strategies().begin(), p.strategies().end()});
    for (std::size_t u = 0; u < n; ++u) {
      const auto n2 = two_neighborhood(g, static_cast<NodeId>(u));
      CHECK(std::binary_search(n2.begin(), n2.end(), static_cast<NodeId>(u)));
      for (NodeId v : g.neighbors(static_cast<NodeId>(u))) CHECK(std::binary_search(n2.begin(), n2.end(), v));
      CHECK(n2.size() == oracle::reach2(adj, static_cast<NodeId>(u)));
      all_full = all_full && n2.size() == n;
    }
    const Distance d = diameter(g);
    CHECK((d <= Distance::finite(2)) == all_full);
  }
}
