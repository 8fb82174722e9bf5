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

#include "nmg/reduction.hpp"

#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace nmg {

namespace {

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      pairs.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return pairs;
}

Graph graph_from_mask(std::size_t n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1u) edges.push_back(pairs[i]);
  }
  return Graph(n, edges);
}

bool dominates(const Graph& g, std::uint32_t set) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if ((set >> v) & 1u) continue;
    bool hit = false;
    for (NodeId w : g.neighbors(static_cast<NodeId>(v))) hit = hit || ((set >> w) & 1u);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

BRDecisionInstance ds_to_br(const Graph& g, std::size_t k, const Rational& alpha) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  const std::size_t n = g.size();
  const std::size_t copies = static_cast<std::size_t>(floor_i64(alpha));
  const std::size_t total = n * (1 + copies) + 1;
  std::vector<Strategy> s(total);
  for (const auto& [u, v] : g.edges()) s[static_cast<std::size_t>(u)].push_back(v);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < copies; ++j) s[n + v * copies + j].push_back(static_cast<NodeId>(v));
  }
  const auto kk = static_cast<std::int64_t>(k);
  const auto nn = static_cast<std::int64_t>(n);
  return BRDecisionInstance{StrategyProfile(std::move(s)), static_cast<NodeId>(total - 1), alpha, k,
                            alpha * kk + Rational(nn - kk) * Rational(floor_of(alpha)), n};
}

bool br_decision(const BRDecisionInstance& inst, const SolverOptions& options) {
  SolverOptions opts = options;
  opts.budget = inst.budget;
  const BestResponse br = best_response_exact(inst.profile, inst.config(), inst.x, opts);
  return br.cost <= inst.threshold;
}

std::optional<std::vector<NodeId>> dominating_set(const Graph& g, std::size_t k) {
  const std::size_t n = g.size();
  if (n > 20) throw std::invalid_argument("dominating_set brute force supports at most 20 nodes");
  std::optional<std::uint32_t> best;
  for (std::uint32_t set = 0; set < (std::uint32_t{1} << n); ++set) {
    const auto size = static_cast<std::size_t>(std::popcount(set));
    if (size > k) continue;
    if (best && size >= static_cast<std::size_t>(std::popcount(*best))) continue;
    if (dominates(g, set)) best = set;
  }
  if (!best) return std::nullopt;
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < n; ++v) {
    if ((*best >> v) & 1u) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

ReductionReport verify_reduction(std::size_t max_n, std::size_t samples, std::uint64_t seed,
                                 const std::vector<Rational>& alphas, unsigned threads) {
  if (max_n < 1 || max_n > 8) throw std::invalid_argument("max_n must be in 1..8");
  if (alphas.empty()) throw std::invalid_argument("no alpha values given");

  ReductionReport report;
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= std::min<std::size_t>(5, max_n); ++n) {
    const auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Graph g = graph_from_mask(n, pairs, mask);
      if (is_connected(g)) graphs.push_back(std::move(g));
    }
  }
  report.exhaustive_graphs = graphs.size();

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_n);
    const auto pairs = all_pairs(n);
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < pairs.size(); ++b) mask |= (rng() >> 63) << b;
    graphs.push_back(graph_from_mask(n, pairs, mask));
  }
  report.random_graphs = samples;

  struct Job {
    std::size_t graph;
    std::size_t k;
    std::size_t alpha;
  };
  std::vector<Job> jobs;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
      for (std::size_t k = 0; k <= graphs[gi].size(); ++k) jobs.push_back({gi, k, ai});
    }
  }
  report.cases = jobs.size();

  std::vector<char> mismatch(jobs.size(), 0);
  std::vector<char> ds_answer(jobs.size(), 0), br_answer(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex guard;
  const auto worker = [&]() {
    try {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        const Job& j = jobs[i];
        const Graph& g = graphs[j.graph];
        ds_answer[i] = dominating_set(g, j.k).has_value();
        br_answer[i] = br_decision(ds_to_br(g, j.k, alphas[j.alpha]));
        mismatch[i] = ds_answer[i] != br_answer[i];
      }
    } catch (...) {
      const std::lock_guard lock(guard);
      if (!error) error = std::current_exception();
      next = jobs.size();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!mismatch[i]) continue;
    report.discrepancies.push_back({graphs[jobs[i].graph], jobs[i].k, alphas[jobs[i].alpha],
                                    ds_answer[i] != 0, br_answer[i] != 0});
  }
  return report;
}

std::string describe(const ReductionCase& c) {
  std::string edges;
  for (const auto& [u, v] : c.graph.edges()) {
    if (!edges.empty()) edges += ' ';
    edges += std::to_string(u) + "-" + std::to_string(v);
  }
  return "n=" + std::to_string(c.graph.size()) + " edges=[" + edges + "] k=" + std::to_string(c.k) +
         " alpha=" + to_string(c.alpha) + ": dominating set " + (c.dominating ? "yes" : "no") +
         ", best response " + (c.best_response ? "yes" : "no");
}

}  // namespace nmg
