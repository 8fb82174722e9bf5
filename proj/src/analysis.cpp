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

#include "nmg/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "nmg/constructions.hpp"

namespace nmg {

namespace {

std::uint32_t canonical_code(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  do {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (std::size_t u = 0; u < g.size(); ++u) d.push_back(g.degree(static_cast<NodeId>(u)));
  std::sort(d.begin(), d.end());
  return d;
}

const std::vector<std::pair<ExceptionShape, Graph>>& exception_templates() {
  static const std::vector<std::pair<ExceptionShape, Graph>> shapes = {
      {ExceptionShape::Cycle4, realize(build_small(ConstructionId::Cycle4).profile)},
      {ExceptionShape::Cycle4Leaf, realize(build_small(ConstructionId::Cycle4Leaf).profile)},
      {ExceptionShape::Cycle5, realize(build_small(ConstructionId::Cycle5).profile)},
      {ExceptionShape::Cycle5Leaf, realize(build_small(ConstructionId::Cycle5Leaf).profile)},
  };
  return shapes;
}

bool is_two_pair_example(const Graph& g) {
  static const Graph obs1b = realize(build_small(ConstructionId::Obs1b).profile);
  return isomorphic_small(g, obs1b);
}

}  // namespace

std::size_t diameter_bound(Concept c, const Rational& alpha) {
  if (alpha < 1) return 2;
  if (c == Concept::Nash) return 3;
  return alpha < 3 ? 3 : 4;
}

DiameterBoundReport check_diameter_bound(const StrategyProfile& profile, const GameConfig& cfg,
                                         Concept c) {
  check_compatible(profile, cfg);
  const Graph g = realize(profile);
  DiameterBoundReport r;
  r.diameter = diameter(g);
  r.connected = r.diameter.is_finite();
  if (!r.connected) {
    r.pass = true;
    r.note = g.edge_count() == 0
                 ? "edgeless: the only disconnected equilibrium, bound not applicable"
                 : "disconnected and not edgeless: cannot be an equilibrium, bound skipped";
    return r;
  }
  r.bound = diameter_bound(c, cfg.alpha());
  r.pass = r.diameter.hops() <= *r.bound;
  return r;
}

std::string to_string(ExceptionShape s) {
  switch (s) {
    case ExceptionShape::None: return "none";
    case ExceptionShape::Cycle4: return "4-cycle";
    case ExceptionShape::Cycle4Leaf: return "4-cycle with leaf";
    case ExceptionShape::Cycle5: return "5-cycle";
    case ExceptionShape::Cycle5Leaf: return "5-cycle with leaf";
  }
  return "?";
}

bool exception_admissible(ExceptionShape s, const Rational& alpha) {
  switch (s) {
    case ExceptionShape::None: return false;
    case ExceptionShape::Cycle4: return alpha <= 1;
    case ExceptionShape::Cycle4Leaf: return alpha == 1;
    case ExceptionShape::Cycle5: return alpha <= 2;
    case ExceptionShape::Cycle5Leaf: return alpha == 2;
  }
  return false;
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.size() > 8) throw std::invalid_argument("isomorphic_small supports at most 8 nodes");
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

Degree2Report degree2_runs(const Graph& g) {
  const std::size_t n = g.size();
  const auto deg2 = [&](NodeId v) { return g.degree(v) == 2; };
  std::vector<char> seen(n, 0);
  Degree2Report report;
  for (std::size_t s = 0; s < n; ++s) {
    const auto start = static_cast<NodeId>(s);
    if (seen[s] || !deg2(start)) continue;
    // Collect the component among degree-2 nodes.
    std::vector<NodeId> comp{start};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (NodeId w : g.neighbors(comp[i])) {
        if (deg2(w) && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    const auto inner_degree = [&](NodeId v) {
      std::size_t d = 0;
      for (NodeId w : g.neighbors(v)) d += deg2(w) ? 1 : 0;
      return d;
    };
    Degree2Run run;
    run.closed = std::all_of(comp.begin(), comp.end(), [&](NodeId v) { return inner_degree(v) == 2; });
    // A path starts at its smaller end, a cycle at its smallest node.
    NodeId first = *std::min_element(comp.begin(), comp.end());
    if (!run.closed) {
      first = std::numeric_limits<NodeId>::max();
      for (NodeId v : comp) {
        if (inner_degree(v) < 2) first = std::min(first, v);
      }
    }
    // Walk the path (or cycle) from `first`.
    NodeId prev = -1, cur = first;
    while (true) {
      run.nodes.push_back(cur);
      NodeId next = -1;
      for (NodeId w : g.neighbors(cur)) {
        if (deg2(w) && w != prev && std::find(run.nodes.begin(), run.nodes.end(), w) == run.nodes.end()) {
          next = w;
          break;
        }
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    report.max_run = std::max(report.max_run, run.nodes.size());
    if (!run.closed && run.nodes.size() == 2) ++report.two_node_runs;
    report.runs.push_back(std::move(run));
  }
  if (n >= 4 && n <= 6) {
    for (const auto& [shape, tmpl] : exception_templates()) {
      if (isomorphic_small(g, tmpl)) report.exception = shape;
    }
  }
  return report;
}

std::vector<NodeId> leaf_support(const Graph& g) {
  std::set<NodeId> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(static_cast<NodeId>(v)) == 1) out.insert(g.neighbors(static_cast<NodeId>(v))[0]);
  }
  return {out.begin(), out.end()};
}

PoaReport poa_report(const StrategyProfile& profile, const GameConfig& cfg) {
  PoaReport r{social_cost(profile, cfg), optimum_cost(cfg), Rational(0)};
  r.ratio = r.social_cost / r.optimum.cost;
  return r;
}

std::vector<std::string> structural_violations(const StrategyProfile& profile,
                                               const GameConfig& cfg, Concept c) {
  std::vector<std::string> out;
  const Graph g = realize(profile);
  const Distance diam = diameter(g);
  if (!diam.is_finite()) {
    if (g.edge_count() != 0) out.push_back("disconnected but not edgeless");
  } else if (diam.hops() > diameter_bound(c, cfg.alpha())) {
    out.push_back("diameter " + diam.to_string() + " exceeds bound " +
                  std::to_string(diameter_bound(c, cfg.alpha())));
  }
  if (c != Concept::Nash) return out;

  const Degree2Report runs = degree2_runs(g);
  if (runs.max_run >= 3 && !exception_admissible(runs.exception, cfg.alpha())) {
    out.push_back("degree-2 run of length " + std::to_string(runs.max_run) + " (shape " +
                  to_string(runs.exception) + ")");
  }
  if (runs.two_node_runs >= 2 && !(cfg.alpha() == 2 && is_two_pair_example(g))) {
    out.push_back(std::to_string(runs.two_node_runs) + " separate two-node degree-2 runs");
  }
  if (cfg.alpha() > 1) {
    const auto support = leaf_support(g);
    if (support.size() > 1) {
      out.push_back("leaves attach to " + std::to_string(support.size()) + " different nodes");
    }
  }
  return out;
}

StrategyProfile profile_from_index(std::size_t n, std::uint64_t index) {
  std::vector<Strategy> s(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      if ((index >> bit) & 1u) s[u].push_back(static_cast<NodeId>(v));
      ++bit;
    }
  }
  return StrategyProfile(std::move(s));
}

EnumerationResult enumerate_equilibria(const GameConfig& cfg, Concept c,
                                       const EnumerateOptions& options) {
  const std::size_t n = cfg.n();
  const std::size_t limit = c == Concept::Nash ? 5 : 6;
  if (n > limit) {
    throw std::invalid_argument("exhaustive " + to_string(c) + " enumeration supports n <= " +
                                std::to_string(limit) + " (got " + std::to_string(n) + ")");
  }
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
  const auto deadline = options.time_cap
                            ? std::optional(std::chrono::steady_clock::now() + *options.time_cap)
                            : std::nullopt;

  constexpr std::uint64_t chunk = 1024;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> checked{0};
  std::atomic<bool> timed_out{false};
  std::mutex guard;
  std::vector<std::uint64_t> hits;
  CertifyOptions copts;
  copts.stop_at_first = true;

  const auto worker = [&]() {
    std::vector<std::uint64_t> local;
    while (!timed_out) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= total) break;
      if (deadline && std::chrono::steady_clock::now() > *deadline) {
        timed_out = true;
        break;
      }
      const std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (certify(c, profile_from_index(n, i), cfg, copts).is_stable()) local.push_back(i);
      }
      checked += end - begin;
    }
    const std::lock_guard lock(guard);
    hits.insert(hits.end(), local.begin(), local.end());
  };

  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::sort(hits.begin(), hits.end());
  EnumerationResult result;
  for (std::uint64_t i : hits) result.stable.push_back(profile_from_index(n, i));
  result.profiles_checked = checked;
  result.profiles_total = total;
  result.complete = !timed_out && checked == total;
  return result;
}

}  // namespace nmg
