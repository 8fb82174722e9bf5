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

#include "nmg/certifier.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace nmg {

namespace {

struct AgentOutcome {
  Rational cost;
  Rational best_cost;
  std::optional<Move> deviation;
};

AgentOutcome check_greedy(const StrategyProfile& profile, const GameConfig& cfg, NodeId agent,
                          const Rational& cost) {
  const GreedyResponse r = best_greedy_response(profile, cfg, agent);
  return {cost, cost + r.delta, r.move};
}

AgentOutcome check_nash(const StrategyProfile& profile, const GameConfig& cfg, NodeId agent,
                        const Rational& cost, const SolverOptions& options) {
  BestResponse br = best_response_exact(profile, cfg, agent, options);
  std::optional<Move> dev;
  if (br.cost < cost) dev = Move::replace(agent, std::move(br.strategy));
  return {cost, br.cost, std::move(dev)};
}

Certificate run_checks(Concept c, const StrategyProfile& profile, const GameConfig& cfg,
                       const CertifyOptions& options) {
  check_compatible(profile, cfg);
  const std::size_t n = profile.size();
  const Graph g = realize(profile);
  std::vector<Rational> costs(n);
  for (std::size_t u = 0; u < n; ++u) {
    costs[u] = cfg.alpha() * profile.strategy(static_cast<NodeId>(u)).size() +
               Rational(n - two_neighborhood(g, static_cast<NodeId>(u)).size());
  }

  std::vector<NodeId> rep(n);
  if (options.symmetry) {
    rep = symmetry_representatives(profile);
  } else {
    for (std::size_t u = 0; u < n; ++u) rep[u] = static_cast<NodeId>(u);
  }
  std::vector<NodeId> todo;
  for (std::size_t u = 0; u < n; ++u) {
    if (rep[u] == static_cast<NodeId>(u)) todo.push_back(static_cast<NodeId>(u));
  }

  std::vector<std::optional<AgentOutcome>> results(n);
  const auto check_one = [&](NodeId u) {
    const auto idx = static_cast<std::size_t>(u);
    results[idx] = c == Concept::Greedy ? check_greedy(profile, cfg, u, costs[idx])
                                        : check_nash(profile, cfg, u, costs[idx], options.solver);
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  if (options.stop_at_first || threads <= 1 || todo.size() < 2) {
    for (NodeId u : todo) {
      check_one(u);
      if (options.stop_at_first && results[static_cast<std::size_t>(u)]->deviation) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(todo.size());
    std::vector<std::thread> pool;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, todo.size()));
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&]() {
        for (std::size_t i = next++; i < todo.size(); i = next++) {
          try {
            check_one(todo[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<AgentCheck> log;
  std::optional<Witness> witness;
  for (std::size_t u = 0; u < n; ++u) {
    const auto& r = results[static_cast<std::size_t>(rep[u])];
    if (!r) continue;  // stopped early
    log.push_back({static_cast<NodeId>(u), costs[u], r->best_cost, rep[u]});
    if (!witness && r->deviation && rep[u] == static_cast<NodeId>(u)) {
      witness = Witness{static_cast<NodeId>(u), *r->deviation, r->cost, r->best_cost};
    }
  }
  if (witness) return Certificate::unstable(c, std::move(*witness), std::move(log), profile, cfg);
  return Certificate::stable(c, std::move(log));
}

}  // namespace

std::string to_string(Concept c) { return c == Concept::Nash ? "NE" : "GE"; }
std::string to_string(Verdict v) { return v == Verdict::Stable ? "stable" : "unstable"; }

std::optional<Concept> parse_concept(std::string_view text) {
  if (text == "ne" || text == "NE") return Concept::Nash;
  if (text == "ge" || text == "GE") return Concept::Greedy;
  return std::nullopt;
}

Certificate Certificate::stable(Concept c, std::vector<AgentCheck> log) {
  return Certificate(c, Verdict::Stable, std::nullopt, std::move(log));
}

Certificate Certificate::unstable(Concept c, Witness witness, std::vector<AgentCheck> log,
                                  const StrategyProfile& profile, const GameConfig& cfg) {
  if (c == Concept::Greedy && !witness.deviation.is_greedy()) {
    throw std::logic_error("greedy certificate with a non-greedy witness");
  }
  const Rational before = agent_cost(profile, cfg, witness.agent);
  const Rational after = agent_cost(apply_move(profile, witness.deviation), cfg, witness.agent);
  if (before != witness.old_cost || after != witness.new_cost || !(after < before)) {
    throw std::logic_error("witness replay failed for " + witness.deviation.to_string() +
                           ": cost " + to_string(before) + " -> " + to_string(after));
  }
  return Certificate(c, Verdict::Unstable, std::move(witness), std::move(log));
}

std::vector<NodeId> symmetry_representatives(const StrategyProfile& profile) {
  const std::size_t n = profile.size();
  std::vector<Strategy> incoming(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (NodeId v : profile.strategy(static_cast<NodeId>(u))) {
      incoming[static_cast<std::size_t>(v)].push_back(static_cast<NodeId>(u));
    }
  }
  std::map<std::pair<Strategy, Strategy>, NodeId> classes;
  std::vector<NodeId> rep(n);
  for (std::size_t u = 0; u < n; ++u) {
    auto key = std::make_pair(profile.strategy(static_cast<NodeId>(u)), incoming[u]);
    rep[u] = classes.try_emplace(std::move(key), static_cast<NodeId>(u)).first->second;
  }
  return rep;
}

Certificate certify_greedy(const StrategyProfile& profile, const GameConfig& cfg,
                           const CertifyOptions& options) {
  return run_checks(Concept::Greedy, profile, cfg, options);
}

Certificate certify_nash(const StrategyProfile& profile, const GameConfig& cfg,
                         const CertifyOptions& options) {
  return run_checks(Concept::Nash, profile, cfg, options);
}

Certificate certify(Concept c, const StrategyProfile& profile, const GameConfig& cfg,
                    const CertifyOptions& options) {
  return run_checks(c, profile, cfg, options);
}

std::string certificate_to_json(const Certificate& cert, const std::vector<std::string>& labels) {
  using json = nlohmann::ordered_json;
  const auto name = [&](NodeId u) -> json {
    if (labels.empty()) return u;
    return labels.at(static_cast<std::size_t>(u));
  };
  json out;
  out["concept"] = to_string(cert.concept_checked());
  out["verdict"] = to_string(cert.verdict());
  if (const auto& w = cert.witness()) {
    out["witness"] = {{"agent", w->agent},
                      {"agent_label", name(w->agent)},
                      {"move", w->deviation.to_string()},
                      {"old_cost", to_string(w->old_cost)},
                      {"new_cost", to_string(w->new_cost)}};
  } else {
    out["witness"] = nullptr;
  }
  json agents = json::array();
  for (const auto& a : cert.log()) {
    agents.push_back({{"agent", a.agent},
                      {"cost", to_string(a.cost)},
                      {"best_cost", to_string(a.best_cost)},
                      {"checked_as", a.checked_as}});
  }
  out["agents"] = std::move(agents);
  return out.dump(2) + "\n";
}

}  // namespace nmg
