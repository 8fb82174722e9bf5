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

#include "nmg/certifier.hpp"
#include "nmg/constructions.hpp"
#include "oracle.hpp"

using namespace nmg;

namespace {

struct Bound {
  ConstructionId id;
  Rational alpha;
};

const std::vector<Bound>& small_bounds() {
  static const std::vector<Bound> bounds{
      {ConstructionId::Obs1a, Rational(2)},  {ConstructionId::Obs1b, Rational(2)},
      {ConstructionId::Cycle4, Rational(1)}, {ConstructionId::Cycle5, Rational(2)},
      {ConstructionId::Cycle4Leaf, Rational(1)}, {ConstructionId::Cycle5Leaf, Rational(2)},
  };
  return bounds;
}

void check_witness(const Certificate& cert, const StrategyProfile& p, const GameConfig& cfg) {
  REQUIRE(cert.witness());
  const Witness& w = *cert.witness();
  CHECK(w.new_cost < w.old_cost);
  CHECK(agent_cost(p, cfg, w.agent) == w.old_cost);
  CHECK(agent_cost(apply_move(p, w.deviation), cfg, w.agent) == w.new_cost);
}

}  // namespace

TEST_CASE("small constructions are sharp at their price bound") {
  for (const auto& [id, alpha] : small_bounds()) {
    CAPTURE(to_string(id));
    const auto c = build_small(id);
    const GameConfig at(c.profile.size(), alpha);
    CHECK(certify_nash(c.profile, at).is_stable());
    CHECK(certify_greedy(c.profile, at).is_stable());
    const GameConfig above(c.profile.size(), alpha + Rational(1) / 2);
    const Certificate cert = certify_nash(c.profile, above);
    CHECK_FALSE(cert.is_stable());
    check_witness(cert, c.profile, above);
  }
}

TEST_CASE("obs1a witness above the bound") {
  const auto c = build_small(ConstructionId::Obs1a);
  const GameConfig cfg(6, Rational(5) / 2);
  const Certificate cert = certify_nash(c.profile, cfg);
  REQUIRE(cert.witness());
  // The lowest agent with a deviation is v1, which drops its only edge.
  CHECK(cert.witness()->agent == c.id_of("v1"));
  CHECK(cert.witness()->deviation == Move::replace(c.id_of("v1"), {}));
  CHECK(cert.witness()->old_cost - cert.witness()->new_cost == Rational(1) / 2);
  // A two-edge buyer also improves by deleting one edge: saves 5/2, loses 2.
  const NodeId v5 = c.id_of("v5");
  CHECK(cost_delta(c.profile, cfg, Move::remove(v5, c.id_of("v1"))) == Rational(-1) / 2);
}

TEST_CASE("greedy certification of constructions") {
  const auto lmr = build_lmr(4);
  CHECK(certify_greedy(lmr.profile, GameConfig(12, Rational(3) / 2)).is_stable());
  const Certificate bad = certify_greedy(lmr.profile, GameConfig(12, Rational(5) / 2));
  REQUIRE(bad.witness());
  CHECK(bad.witness()->agent == lmr.id_of("l_1"));
  CHECK(std::holds_alternative<Delete>(bad.witness()->deviation.action));

  const auto ge = build_ge_diam4(Rational(3));
  CHECK(certify_greedy(ge.profile, GameConfig(18, Rational(3))).is_stable());
  const Certificate ne = certify_nash(ge.profile, GameConfig(18, Rational(3)));
  CHECK_FALSE(ne.is_stable());
  check_witness(ne, ge.profile, GameConfig(18, Rational(3)));
}

TEST_CASE("two pentagon stability") {
  for (const Rational& alpha : {Rational(3) / 2, Rational(2), Rational(29) / 10}) {
    const auto tp = build_two_pentagon(alpha);
    CHECK(certify_nash(tp.profile, GameConfig(tp.profile.size(), alpha)).is_stable());
  }
  // With single-node groups a_1 can trade its cycle edge for the lone V_4
  // node: it keeps a_2 and V_4 and gains b_4.
  const auto tp = build_two_pentagon(Rational(1));
  const GameConfig cfg(15, Rational(1));
  const Move swap = Move::swap(tp.id_of("a_1"), tp.id_of("a_2"), tp.id_of("V_4_1"));
  CHECK(cost_delta(tp.profile, cfg, swap) == -1);
  CHECK_FALSE(certify_greedy(tp.profile, cfg).is_stable());
}

TEST_CASE("certificates agree with the oracle on random profiles") {
  std::mt19937_64 rng(31337);
  const std::vector<Rational> alphas{Rational(1) / 2, Rational(1), Rational(3) / 2, Rational(2),
                                     Rational(5) / 2, Rational(3)};
  std::size_t stable_seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const StrategyProfile p = oracle::random_profile(rng, n, 0.1 + 0.1 * static_cast<double>(rng() % 4));
    const Rational& alpha = alphas[rng() % alphas.size()];
    const GameConfig cfg(n, alpha);
    const Certificate ne = certify_nash(p, cfg);
    const Certificate ge = certify_greedy(p, cfg);
    CHECK(ne.is_stable() == oracle::is_nash(p, alpha));
    CHECK(ge.is_stable() == oracle::is_greedy_stable(p, alpha));
    if (ne.is_stable()) {
      ++stable_seen;
      CHECK(ge.is_stable());
      CHECK(double_bought_edges(p).empty());
    } else {
      check_witness(ne, p, cfg);
    }
    if (!ge.is_stable()) {
      check_witness(ge, p, cfg);
      CHECK(ge.witness()->deviation.is_greedy());
    }
    CHECK(ne.log().size() == n);
  }
  CHECK(stable_seen > 0);
}

TEST_CASE("symmetry reduction and threads give the same verdicts") {
  const auto sat = build_regular_satellite(2, Rational(2));
  const GameConfig cfg(sat.profile.size(), Rational(2));
  const auto rep = symmetry_representatives(sat.profile);
  // Two copies of each satellite type: the second maps to the first.
  CHECK(rep[6] == 5);
  CHECK(rep[5] == 5);

  CertifyOptions plain, fast;
  fast.symmetry = true;
  fast.threads = 4;
  const Certificate a = certify_nash(sat.profile, cfg, plain);
  const Certificate b = certify_nash(sat.profile, cfg, fast);
  CHECK(a.is_stable() == b.is_stable());
  REQUIRE(a.log().size() == b.log().size());
  for (std::size_t i = 0; i < a.log().size(); ++i) CHECK(a.log()[i].best_cost == b.log()[i].best_cost);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const StrategyProfile p = oracle::random_profile(rng, n, 0.2);
    const GameConfig c(n, Rational(1 + static_cast<long>(rng() % 3)));
    CHECK(certify_nash(p, c, plain).is_stable() == certify_nash(p, c, fast).is_stable());
    CHECK(certify_greedy(p, c, plain).is_stable() == certify_greedy(p, c, fast).is_stable());
  }
}

TEST_CASE("cap errors surface") {
  CertifyOptions opts;
  opts.solver.candidate_cap = 3;
  CHECK_THROWS_AS(certify_nash(StrategyProfile::empty(6), GameConfig(6, Rational(1) / 2), opts),
                  SolverCapExceeded);
}

TEST_CASE("bogus witnesses are refused") {
  const auto c = build_small(ConstructionId::Obs1a);
  const GameConfig cfg(6, Rational(2));
  const Rational cost = agent_cost(c.profile, cfg, 0);
  CHECK_THROWS_AS(Certificate::unstable(Concept::Nash, Witness{0, Move::replace(0, {}), cost, cost}, {},
                                        c.profile, cfg),
                  std::logic_error);
}

TEST_CASE("json report") {
  const auto c = build_small(ConstructionId::Cycle4);
  const Certificate cert = certify_nash(c.profile, GameConfig(4, Rational(3) / 2));
  const std::string text = certificate_to_json(cert, c.labels);
  CHECK(text.find("\"verdict\": \"unstable\"") != std::string::npos);
  CHECK(text.find("\"agent_label\": \"v1\"") != std::string::npos);
}

TEST_CASE("satellites can trade their base set for its complement") {
  // A satellite of type kappa that buys the k base nodes outside kappa still
  // reaches every other satellite type; it only loses its own copies.
  for (const Rational& alpha : {Rational(1), Rational(3, 2), Rational(2), Rational(7, 2)}) {
    for (int k : {2, 4}) {
      const auto sat = build_regular_satellite(k, alpha);
      const GameConfig cfg(sat.profile.size(), alpha);
      const std::size_t base = 2 * static_cast<std::size_t>(k) + 1;
      const auto copies = static_cast<long>(ceil_i64(alpha));
      const NodeId agent = static_cast<NodeId>(base);  // type {1, ..., k+1}
      Strategy rest;
      for (NodeId v = 0; v < static_cast<NodeId>(base); ++v) {
        const Strategy& own = sat.profile.strategy(agent);
        if (!std::binary_search(own.begin(), own.end(), v)) rest.push_back(v);
      }
      const Rational delta = cost_delta(sat.profile, cfg, Move::replace(agent, rest));
      CHECK(delta == -alpha + (copies - 1));
      CHECK(delta < 0);
    }
  }
}

TEST_CASE("lmr with three triples tolerates higher prices") {
  // With k = 3 each l-edge is the only route to one other l node.
  const auto lmr3 = build_lmr(3);
  CHECK(certify_greedy(lmr3.profile, GameConfig(9, Rational(5, 2))).is_stable());
  CHECK(certify_greedy(lmr3.profile, GameConfig(9, Rational(3))).is_stable());
  CHECK_FALSE(certify_greedy(lmr3.profile, GameConfig(9, Rational(7, 2))).is_stable());
  for (int k : {4, 5}) {
    const auto lmr = build_lmr(k);
    CHECK_FALSE(certify_greedy(lmr.profile, GameConfig(lmr.profile.size(), Rational(5, 2))).is_stable());
  }
}
