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

// Acceptance criteria, one PASS/FAIL line each. Exact rational comparisons
// throughout; the only tolerances are the wall-clock limits below.
//
// Usage: acceptance [--expect-fail 4,7] [--only 3]
// Exits 0 when the set of failing criteria equals the expected set.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "nmg/analysis.hpp"
#include "nmg/constructions.hpp"
#include "nmg/dynamics.hpp"
#include "nmg/reduction.hpp"

using namespace nmg;

namespace {

using Clock = std::chrono::steady_clock;

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Collects the reasons a criterion fails; empty means pass.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string str(const Rational& r) { return to_string(r); }

CertifyOptions fast_options() {
  CertifyOptions o;
  o.threads = worker_count();
  return o;
}

// Certified stable instances seen so far, for the PoA upper bound check.
struct StableInstance {
  std::string name;
  StrategyProfile profile;
  Rational alpha;
};
std::vector<StableInstance>& stable_instances() {
  static std::vector<StableInstance> all;
  return all;
}

bool certify_stable(Checks& c, Concept kind, const std::string& name, const StrategyProfile& p,
                    const Rational& alpha) {
  const Certificate cert = certify(kind, p, GameConfig(p.size(), alpha), fast_options());
  if (cert.is_stable()) {
    stable_instances().push_back({name, p, alpha});
    return true;
  }
  const Witness& w = *cert.witness();
  c.expect(false, name + " not " + to_string(kind) + "-stable at alpha=" + str(alpha) + " (" +
                      w.deviation.to_string() + ", cost " + str(w.old_cost) + " -> " +
                      str(w.new_cost) + ")");
  return false;
}

void expect_unstable(Checks& c, Concept kind, const std::string& name, const StrategyProfile& p,
                     const Rational& alpha) {
  const GameConfig cfg(p.size(), alpha);
  const Certificate cert = certify(kind, p, cfg, fast_options());
  if (cert.is_stable()) {
    c.expect(false, name + " unexpectedly " + to_string(kind) + "-stable at alpha=" + str(alpha));
    return;
  }
  const Witness& w = *cert.witness();
  const Rational before = agent_cost(p, cfg, w.agent);
  const Rational after = agent_cost(apply_move(p, w.deviation), cfg, w.agent);
  c.expect(after < before, name + ": witness replay did not lower the cost");
}

void expect_diameter(Checks& c, const std::string& name, const StrategyProfile& p, std::size_t d) {
  const Distance got = diameter(realize(p));
  c.expect(got == Distance::finite(d),
           name + " diameter " + got.to_string() + ", expected " + std::to_string(d));
}

// 1
void small_boundaries(Checks& c) {
  const std::vector<std::pair<ConstructionId, Rational>> bounds{
      {ConstructionId::Obs1a, Rational(2)},      {ConstructionId::Obs1b, Rational(2)},
      {ConstructionId::Cycle4, Rational(1)},     {ConstructionId::Cycle5, Rational(2)},
      {ConstructionId::Cycle4Leaf, Rational(1)}, {ConstructionId::Cycle5Leaf, Rational(2)},
  };
  for (const auto& [id, alpha] : bounds) {
    const std::string name(to_string(id));
    const Construction k = build_small(id);
    certify_stable(c, Concept::Nash, name, k.profile, alpha);
    expect_unstable(c, Concept::Nash, name, k.profile, alpha + Rational(1, 2));
  }
}

// 2
void satellite_k2(Checks& c) {
  const Construction k = build_regular_satellite(2, Rational(1));
  c.expect(k.profile.size() == 15, "node count " + std::to_string(k.profile.size()));
  c.expect(realize(k.profile).edge_count() == 35,
           "edge count " + std::to_string(realize(k.profile).edge_count()));
  CertifyOptions exhaustive = fast_options();
  exhaustive.solver.mode = SearchMode::Exhaustive;
  const Certificate cert = certify_nash(k.profile, GameConfig(15, Rational(1)), exhaustive);
  if (cert.is_stable()) {
    stable_instances().push_back({"regular_satellite k=2", k.profile, Rational(1)});
  } else {
    const Witness& w = *cert.witness();
    c.expect(false, "not NE-stable: " + k.labels[static_cast<std::size_t>(w.agent)] + " " +
                        w.deviation.to_string() + ", cost " + str(w.old_cost) + " -> " + str(w.new_cost));
  }
  expect_diameter(c, "regular_satellite k=2", k.profile, 2);
}

// 3
void satellite_k4(Checks& c) {
  const Construction k = build_regular_satellite(4, Rational(1));
  c.expect(k.profile.size() == 135, "node count " + std::to_string(k.profile.size()));
  c.expect(realize(k.profile).edge_count() == 648,
           "edge count " + std::to_string(realize(k.profile).edge_count()));
  certify_stable(c, Concept::Greedy, "regular_satellite k=4", k.profile, Rational(1));
  expect_diameter(c, "regular_satellite k=4", k.profile, 2);
  // Not part of the criterion: the multi-edge deviation that keeps the
  // instance from being a Nash equilibrium, checked by direct evaluation.
  const NodeId sat = k.id_of("sat_1.2.3.4.6_1");
  Strategy rest;
  for (NodeId v = 0; v < 9; ++v) {
    const Strategy& own = k.profile.strategy(sat);
    if (!std::binary_search(own.begin(), own.end(), v)) rest.push_back(v);
  }
  const Rational delta = cost_delta(k.profile, GameConfig(135, Rational(1)), Move::replace(sat, rest));
  c.note("sat_1.2.3.4.6_1 buying the other four base nodes changes its cost by " + str(delta));
}

// 4
void two_pentagon(Checks& c) {
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(29, 10)}) {
    const Construction k = build_two_pentagon(alpha);
    certify_stable(c, Concept::Nash, "two_pentagon", k.profile, alpha);
    expect_diameter(c, "two_pentagon alpha=" + str(alpha), k.profile, 3);
  }
  const Construction k = build_two_pentagon(Rational(4));
  certify_stable(c, Concept::Greedy, "two_pentagon", k.profile, Rational(4));
  expect_diameter(c, "two_pentagon alpha=4", k.profile, 3);
}

// 5
void ge_diam4(Checks& c) {
  for (const Rational& alpha : {Rational(3), Rational(7, 2)}) {
    const Construction k = build_ge_diam4(alpha);
    certify_stable(c, Concept::Greedy, "ge_diam4", k.profile, alpha);
    expect_unstable(c, Concept::Nash, "ge_diam4", k.profile, alpha);
    expect_diameter(c, "ge_diam4 alpha=" + str(alpha), k.profile, 4);
  }
}

// 6
void lmr(Checks& c) {
  for (int k : {3, 4, 5}) {
    const Construction net = build_lmr(k);
    const std::string name = "lmr k=" + std::to_string(k);
    for (const Rational& alpha : {Rational(1), Rational(3, 2), Rational(2)}) {
      certify_stable(c, Concept::Greedy, name, net.profile, alpha);
    }
    expect_unstable(c, Concept::Greedy, name, net.profile, Rational(5, 2));
    expect_diameter(c, name, net.profile, 3);
  }
  const PoaReport r = poa_report(build_lmr(4).profile, GameConfig(12, Rational(1)));
  c.expect(r.social_cost == 32, "lmr k=4 social cost " + str(r.social_cost));
  c.expect(r.ratio == Rational(32, 11), "lmr k=4 ratio " + str(r.ratio));
}

// 7
void irc(Checks& c) {
  const IrcReport r = replay_irc();
  c.expect(r.all_legal, "a move is illegal");
  c.expect(r.all_unit_improvements, "a step does not change cost by exactly -1");
  c.expect(r.returns_to_start, "s6 != s0");
  if (r.failure) c.note(*r.failure);
  const IrcInstance inst = build_irc();
  const Trace t = run_prescribed(inst.start.profile, GameConfig(21, Rational(1)), inst.moves, 60);
  c.expect(t.outcome == Outcome::Cycle && t.cycle_length == 6,
           "prescribed run: " + to_string(t.outcome) + " length " + std::to_string(t.cycle_length));
}

// 8
void reduction(Checks& c) {
  const ReductionReport r =
      verify_reduction(7, 100, 20260101, {Rational(1, 2), Rational(1), Rational(7, 3)}, worker_count());
  for (const auto& d : r.discrepancies) c.expect(false, describe(d));
  c.expect(r.random_graphs == 100, "random graph count");
  c.note(std::to_string(r.exhaustive_graphs) + " connected graphs + " + std::to_string(r.random_graphs) +
         " random, " + std::to_string(r.cases) + " cases");
}

// 9
void scan_n4(Checks& c) {
  std::size_t found = 0;
  for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2),
                                Rational(3), Rational(5)}) {
    EnumerateOptions opts;
    opts.threads = worker_count();
    const EnumerationResult r = enumerate_equilibria(GameConfig(4, alpha), Concept::Nash, opts);
    c.expect(r.complete && r.profiles_total == 4096, "scan incomplete at alpha=" + str(alpha));
    for (const StrategyProfile& p : r.stable) {
      ++found;
      for (const std::string& v : structural_violations(p, GameConfig(4, alpha), Concept::Nash)) {
        c.expect(false, "alpha=" + str(alpha) + " " + p.canonical() + ": " + v);
      }
    }
  }
  c.note(std::to_string(found) + " equilibria checked");
}

// 10
void poa(Checks& c) {
  const auto k2 = poa_report(build_regular_satellite(2, Rational(1)).profile, GameConfig(15, Rational(1)));
  c.expect(k2.ratio == Rational(5, 2), "k=2 ratio " + str(k2.ratio));
  c.expect(k2.ratio >= 2, "k=2 ratio below 2");
  const auto k4 = poa_report(build_regular_satellite(4, Rational(1)).profile, GameConfig(135, Rational(1)));
  c.expect(k4.ratio == Rational(324, 67), "k=4 ratio " + str(k4.ratio));
  c.expect(k4.ratio >= 4, "k=4 ratio below 4");
  std::size_t checked = 0;
  for (const auto& s : stable_instances()) {
    const auto n = static_cast<long>(s.profile.size());
    if (s.alpha > n) continue;
    ++checked;
    const Rational ratio = poa_report(s.profile, GameConfig(s.profile.size(), s.alpha)).ratio;
    c.expect(ratio <= Rational(n) / s.alpha,
             s.name + " alpha=" + str(s.alpha) + " ratio " + str(ratio) + " > n/alpha");
  }
  c.note(std::to_string(checked) + " certified instances within n/alpha");
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

std::set<int> parse_ids(const std::string& text) {
  std::set<int> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) ids.insert(std::stoi(item));
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures, only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_failures = parse_ids(argv[++i]);
    } else if (arg == "--only" && i + 1 < argc) {
      only = parse_ids(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--expect-fail IDS] [--only IDS]\n";
      return 2;
    }
  }

  // Criterion 10 reads the instances certified by the earlier ones, so order matters.
  const std::vector<Criterion> criteria{
      {1, "small constructions stable at bound, unstable at bound + 1/2", 1, small_boundaries},
      {2, "regular satellite k=2: 15 nodes, 35 edges, exact NE, diameter 2", 60, satellite_k2},
      {3, "regular satellite k=4: 135 nodes, 648 edges, GE, diameter 2", 300, satellite_k4},
      {4, "two pentagon: NE at 1, 2, 29/10; GE at 4; diameter 3", 300, two_pentagon},
      {5, "GE diameter-4 instance at 3, 7/2: GE-stable, NE-unstable, diameter 4", 120, ge_diam4},
      {6, "L/M/R k=3..5: GE at 1, 3/2, 2; unstable at 5/2; diameter 3; k=4 cost 32, ratio 32/11", 300, lmr},
      {7, "improving response cycle: legal, -1 per step, returns to s0, cycle length 6", 1, irc},
      {8, "dominating set reduction: zero discrepancies", 600, reduction},
      {9, "n=4 NE scan: structural theorems hold", 120, scan_n4},
      {10, "PoA: satellite ratios 5/2 and 324/67; certified ratios <= n/alpha", 60, poa},
  };

  std::set<int> failed;
  for (const Criterion& cr : criteria) {
    if (!only.empty() && !only.count(cr.id)) continue;
    Checks checks;
    const auto start = Clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    checks.expect(seconds < cr.limit_seconds,
                  "took " + std::to_string(seconds) + " s, limit " + std::to_string(cr.limit_seconds) + " s");
    const bool pass = checks.failures().empty();
    if (!pass) failed.insert(cr.id);
    std::printf("[%s] %2d  %s  (%.2f s)\n", pass ? "PASS" : "FAIL", cr.id, cr.title.c_str(), seconds);
    for (const auto& f : checks.failures()) std::printf("        - %s\n", f.c_str());
    for (const auto& n : checks.notes()) std::printf("        . %s\n", n.c_str());
  }

  std::set<int> expected;
  for (int id : expected_failures) {
    if (only.empty() || only.count(id)) expected.insert(id);
  }
  std::printf("%zu failed", failed.size());
  if (!expected.empty()) std::printf(" (expected to fail: %zu)", expected.size());
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
