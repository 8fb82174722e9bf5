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

#include "nmg/solver.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

namespace nmg {

namespace {

using Word = std::uint64_t;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// Fixed-width bit rows stored back to back.
class BitRows {
 public:
  BitRows(std::size_t rows, std::size_t bits) : width_(words_for(bits)), data_(rows * width_, 0) {}

  std::size_t width() const { return width_; }
  Word* row(std::size_t r) { return data_.data() + r * width_; }
  const Word* row(std::size_t r) const { return data_.data() + r * width_; }

  void set(std::size_t r, std::size_t bit) { row(r)[bit / 64] |= Word{1} << (bit % 64); }

 private:
  std::size_t width_;
  std::vector<Word> data_;
};

std::size_t popcount(const Word* a, std::size_t w) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t popcount_or(const Word* a, const Word* b, std::size_t w) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w; ++i) c += static_cast<std::size_t>(std::popcount(a[i] | b[i]));
  return c;
}

std::size_t popcount_andnot(const Word* a, const Word* covered, std::size_t w) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w; ++i) {
    c += static_cast<std::size_t>(std::popcount(a[i] & ~covered[i]));
  }
  return c;
}

bool subset_outside(const Word* a, const Word* b, const Word* base, std::size_t w) {
  for (std::size_t i = 0; i < w; ++i) {
    if ((a[i] & ~base[i]) & ~b[i]) return false;
  }
  return true;
}

// alpha = p/q; all costs are compared as p*|T| + q*missing.
struct ScaledPrice {
  std::int64_t p;
  std::int64_t q;

  explicit ScaledPrice(const Rational& alpha, std::size_t n) {
    const BigInt num = boost::multiprecision::numerator(alpha);
    const BigInt den = boost::multiprecision::denominator(alpha);
    constexpr std::int64_t limit = std::int64_t{1} << 31;
    if (num >= limit || den >= limit || n >= (std::size_t{1} << 24)) {
      throw std::overflow_error("edge price or instance too large for the exact solver");
    }
    p = num.convert_to<std::int64_t>();
    q = den.convert_to<std::int64_t>();
  }

  std::int64_t cost(std::size_t bought, std::size_t missing) const {
    return p * static_cast<std::int64_t>(bought) + q * static_cast<std::int64_t>(missing);
  }
  Rational to_rational(std::int64_t scaled) const { return Rational(scaled, q); }
};

Graph graph_without_own_edges(const StrategyProfile& profile, NodeId agent) {
  return realize(profile.with_strategy(agent, {}));
}

// Covers for every target plus the base cover, in packed form.
struct PackedCoverage {
  std::size_t n;
  BitRows covers;  // row v = cover(v); row n = base
  PackedCoverage(const CoverageInstance& inst) : n(inst.n), covers(inst.n + 1, inst.n) {
    for (std::size_t v = 0; v < n; ++v) {
      for (NodeId x : inst.covers[v]) covers.set(v, static_cast<std::size_t>(x));
    }
    for (NodeId x : inst.base_cover) covers.set(n, static_cast<std::size_t>(x));
  }
  const Word* base() const { return covers.row(n); }
  const Word* cover(NodeId v) const { return covers.row(static_cast<std::size_t>(v)); }
  std::size_t width() const { return covers.width(); }
};

// Pre-order DFS over candidate subsets in lexicographic order of their sorted
// target lists. The first optimum met is therefore the lexicographically
// smallest, and later subtrees are cut as soon as they cannot do strictly
// better.
class CoverageSearch {
 public:
  CoverageSearch(const CoverageInstance& inst, const SolverOptions& options, bool bounded)
      : inst_(inst),
        price_(inst.alpha, inst.n),
        packed_(inst),
        width_(packed_.width()),
        bounded_(bounded),
        layers_((inst.candidates.size() + 2) * width_, 0) {
    const std::size_t m = inst.candidates.size();
    max_size_ = m;
    if (options.budget) max_size_ = std::min(max_size_, *options.budget);
    if (bounded_) {
      // Every edge of an optimal strategy must be the only source of at least
      // ceil(alpha) covered nodes, and those sets are disjoint.
      const std::size_t open = inst.n - inst.base_cover.size();
      const auto per_edge = static_cast<std::size_t>(std::max<std::int64_t>(1, ceil_i64(inst.alpha)));
      max_size_ = std::min(max_size_, open / per_edge);
    }
    gains_.resize(m);
  }

  BestResponse run() {
    const std::size_t m = inst_.candidates.size();
    Word* root = layer(0);
    std::copy_n(packed_.base(), width_, root);
    const std::size_t base_count = popcount(root, width_);

    best_ = std::numeric_limits<std::int64_t>::max();
    if (bounded_) seed_with_greedy();
    const std::int64_t empty_cost = price_.cost(0, inst_.n - base_count);
    consider(empty_cost);
    ++nodes_;
    descend(0, 0, base_count);

    BestResponse out;
    for (std::size_t i : best_set_) out.strategy.push_back(inst_.candidates[i]);
    out.cost = price_.to_rational(best_);
    out.candidate_count = m;
    out.nodes_explored = nodes_;
    out.used_branch_and_bound = bounded_;
    return out;
  }

 private:
  Word* layer(std::size_t depth) { return layers_.data() + depth * width_; }

  void consider(std::int64_t cost) {
    if (cost < best_ || (cost == best_ && !found_)) {
      best_ = cost;
      found_ = true;
      best_set_ = chosen_;
    }
  }

  // Greedy max-coverage completion gives the initial incumbent value. It is
  // only used as a number, so the lexicographic tie-break stays with the DFS.
  void seed_with_greedy() {
    std::vector<Word> covered(packed_.base(), packed_.base() + width_);
    std::size_t count = popcount(covered.data(), width_);
    std::vector<bool> used(inst_.candidates.size(), false);
    std::size_t size = 0;
    best_ = price_.cost(0, inst_.n - count);
    while (size < max_size_) {
      std::size_t best_gain = 0, pick = 0;
      for (std::size_t i = 0; i < inst_.candidates.size(); ++i) {
        if (used[i]) continue;
        const std::size_t g =
            popcount_andnot(packed_.cover(inst_.candidates[i]), covered.data(), width_);
        if (g > best_gain) best_gain = g, pick = i;
      }
      if (best_gain == 0) break;
      used[pick] = true;
      ++size;
      const Word* c = packed_.cover(inst_.candidates[pick]);
      for (std::size_t w = 0; w < width_; ++w) covered[w] |= c[w];
      count += best_gain;
      best_ = std::min(best_, price_.cost(size, inst_.n - count));
    }
  }

  // Lower bound on any strategy in the subtree strictly below the current
  // node: coverage is submodular, so j more targets add at most the j largest
  // individual marginal gains.
  std::int64_t subtree_bound(std::size_t start, std::size_t size, std::size_t covered,
                             const Word* cov) {
    std::size_t k = 0;
    for (std::size_t i = start; i < inst_.candidates.size(); ++i) {
      gains_[k++] = popcount_andnot(packed_.cover(inst_.candidates[i]), cov, width_);
    }
    const std::size_t j_max = std::min(k, max_size_ - size);
    std::partial_sort(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(j_max),
                      gains_.begin() + static_cast<std::ptrdiff_t>(k), std::greater<>());
    const std::size_t open = inst_.n - covered;
    std::int64_t bound = std::numeric_limits<std::int64_t>::max();
    std::size_t gained = 0;
    for (std::size_t j = 1; j <= j_max; ++j) {
      gained += gains_[j - 1];
      bound = std::min(bound, price_.cost(size + j, open - std::min(open, gained)));
    }
    return bound;
  }

  void descend(std::size_t start, std::size_t size, std::size_t covered) {
    const std::size_t m = inst_.candidates.size();
    if (size >= max_size_ || start >= m) return;
    const Word* cov = layer(size);
    if (bounded_) {
      const std::int64_t bound = subtree_bound(start, size, covered, cov);
      if (bound > best_ || (bound == best_ && found_)) return;
    }
    Word* next = layer(size + 1);
    for (std::size_t i = start; i < m; ++i) {
      const Word* c = packed_.cover(inst_.candidates[i]);
      std::size_t count = 0;
      for (std::size_t w = 0; w < width_; ++w) {
        next[w] = cov[w] | c[w];
        count += static_cast<std::size_t>(std::popcount(next[w]));
      }
      ++nodes_;
      chosen_.push_back(i);
      consider(price_.cost(size + 1, inst_.n - count));
      descend(i + 1, size + 1, count);
      chosen_.pop_back();
    }
  }

  const CoverageInstance& inst_;
  ScaledPrice price_;
  PackedCoverage packed_;
  std::size_t width_;
  bool bounded_;
  std::vector<Word> layers_;
  std::vector<std::size_t> gains_;
  std::size_t max_size_ = 0;
  std::int64_t best_ = 0;
  bool found_ = false;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_set_;
  std::uint64_t nodes_ = 0;
};

// Greedy move evaluation shared by best_greedy_response and
// first_improving_greedy.
class GreedyEvaluator {
 public:
  GreedyEvaluator(const StrategyProfile& profile, const GameConfig& cfg, NodeId agent)
      : inst_(coverage_instance(profile, cfg, agent)),
        price_(cfg.alpha(), cfg.n()),
        packed_(inst_),
        width_(packed_.width()),
        owned_(profile.strategy(agent)),
        without_(owned_.size() * width_, 0),
        full_(width_, 0) {
    std::copy_n(packed_.base(), width_, full_.data());
    for (NodeId t : owned_) or_into(full_.data(), packed_.cover(t));
    for (std::size_t k = 0; k < owned_.size(); ++k) {
      Word* row = without_.data() + k * width_;
      std::copy_n(packed_.base(), width_, row);
      for (std::size_t j = 0; j < owned_.size(); ++j) {
        if (j != k) or_into(row, packed_.cover(owned_[j]));
      }
    }
    current_ = price_.cost(owned_.size(), inst_.n - popcount(full_.data(), width_));
  }

  std::int64_t current() const { return current_; }
  const ScaledPrice& price() const { return price_; }

  std::int64_t cost_of(const Move& move) const {
    const std::size_t size = owned_.size();
    if (const auto* a = std::get_if<Add>(&move.action)) {
      return price_.cost(size + 1, inst_.n - popcount_or(full_.data(), packed_.cover(a->target), width_));
    }
    if (const auto* d = std::get_if<Delete>(&move.action)) {
      return price_.cost(size - 1, inst_.n - popcount(without(d->target), width_));
    }
    const auto& s = std::get<Swap>(move.action);
    return price_.cost(size, inst_.n - popcount_or(without(s.removed), packed_.cover(s.added), width_));
  }

 private:
  static void or_into(Word* dst, const Word* src, std::size_t w) {
    for (std::size_t i = 0; i < w; ++i) dst[i] |= src[i];
  }
  void or_into(Word* dst, const Word* src) const { or_into(dst, src, width_); }

  const Word* without(NodeId target) const {
    const auto it = std::lower_bound(owned_.begin(), owned_.end(), target);
    return without_.data() + static_cast<std::size_t>(it - owned_.begin()) * width_;
  }

  CoverageInstance inst_;
  ScaledPrice price_;
  PackedCoverage packed_;
  std::size_t width_;
  Strategy owned_;
  std::vector<Word> without_;
  std::vector<Word> full_;
  std::int64_t current_ = 0;
};

}  // namespace

std::vector<NodeId> CoverageInstance::coverage_of(std::span<const NodeId> targets) const {
  std::vector<char> in(n, 0);
  for (NodeId x : base_cover) in[static_cast<std::size_t>(x)] = 1;
  for (NodeId t : targets) {
    for (NodeId x : covers.at(static_cast<std::size_t>(t))) in[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v]) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

const char* to_string(PruneReason reason) {
  switch (reason) {
    case PruneReason::InNeighbor: return "in-neighbor";
    case PruneReason::NoGain: return "no-gain";
    case PruneReason::Dominated: return "dominated";
  }
  return "?";
}

CoverageInstance coverage_instance(const StrategyProfile& profile, const GameConfig& cfg,
                                   NodeId agent) {
  check_compatible(profile, cfg);
  (void)profile.strategy(agent);
  const Graph rest = graph_without_own_edges(profile, agent);
  CoverageInstance inst;
  inst.agent = agent;
  inst.n = cfg.n();
  inst.alpha = cfg.alpha();
  inst.covers.resize(inst.n);
  for (std::size_t v = 0; v < inst.n; ++v) {
    if (static_cast<NodeId>(v) == agent) continue;
    auto& c = inst.covers[v];
    const auto nb = rest.neighbors(static_cast<NodeId>(v));
    c.assign(nb.begin(), nb.end());
    c.insert(std::lower_bound(c.begin(), c.end(), static_cast<NodeId>(v)), static_cast<NodeId>(v));
  }
  const auto in = rest.neighbors(agent);
  inst.in_neighbors.assign(in.begin(), in.end());
  inst.base_cover = inst.coverage_of(inst.in_neighbors);
  if (inst.base_cover.empty() || !std::binary_search(inst.base_cover.begin(), inst.base_cover.end(), agent)) {
    inst.base_cover.insert(std::lower_bound(inst.base_cover.begin(), inst.base_cover.end(), agent), agent);
  }

  PackedCoverage packed(inst);
  const std::size_t w = packed.width();
  std::vector<NodeId> kept;
  for (std::size_t v = 0; v < inst.n; ++v) {
    const auto id = static_cast<NodeId>(v);
    if (id == agent) continue;
    if (std::binary_search(inst.in_neighbors.begin(), inst.in_neighbors.end(), id)) {
      inst.pruned.push_back({id, PruneReason::InNeighbor});
      continue;
    }
    if (popcount_andnot(packed.cover(id), packed.base(), w) == 0) {
      inst.pruned.push_back({id, PruneReason::NoGain});
      continue;
    }
    NodeId dominator = -1;
    for (NodeId d : kept) {
      if (subset_outside(packed.cover(id), packed.cover(d), packed.base(), w)) {
        dominator = d;
        break;
      }
    }
    if (dominator >= 0) {
      inst.pruned.push_back({id, PruneReason::Dominated, dominator});
      continue;
    }
    kept.push_back(id);
  }
  inst.candidates = std::move(kept);
  return inst;
}

SolverCapExceeded::SolverCapExceeded(NodeId a, std::size_t c, std::size_t k)
    : std::runtime_error("agent " + std::to_string(a) + " has " + std::to_string(c) +
                         " candidates after pruning, above the exact-solver cap of " +
                         std::to_string(k) +
                         "; certify greedily or raise the cap"),
      agent(a),
      candidates(c),
      cap(k) {}

BestResponse best_response_exact(const CoverageInstance& instance, const SolverOptions& options) {
  const std::size_t m = instance.candidates.size();
  if (m > options.candidate_cap) {
    throw SolverCapExceeded(instance.agent, m, options.candidate_cap);
  }
  bool bounded = false;
  switch (options.mode) {
    case SearchMode::Auto: bounded = m > options.exhaustive_limit; break;
    case SearchMode::Exhaustive: bounded = false; break;
    case SearchMode::BranchAndBound: bounded = true; break;
  }
  return CoverageSearch(instance, options, bounded).run();
}

BestResponse best_response_exact(const StrategyProfile& profile, const GameConfig& cfg,
                                 NodeId agent, const SolverOptions& options) {
  return best_response_exact(coverage_instance(profile, cfg, agent), options);
}

GreedyResponse best_greedy_response(const StrategyProfile& profile, const GameConfig& cfg,
                                    NodeId agent) {
  const GreedyEvaluator eval(profile, cfg, agent);
  std::optional<Move> best;
  std::int64_t best_cost = eval.current();
  Strategy best_strategy;
  for (const Move& m : enumerate_greedy_moves(profile, agent)) {
    const std::int64_t c = eval.cost_of(m);
    if (c > best_cost) continue;
    if (c == best_cost) {
      if (!best) continue;  // ties with the current strategy never improve
      Strategy s = resulting_strategy(profile, m);
      if (!(s < best_strategy)) continue;
      best_strategy = std::move(s);
    } else {
      best_strategy = resulting_strategy(profile, m);
    }
    best = m;
    best_cost = c;
  }
  if (!best) return {std::nullopt, Rational(0)};
  return {best, eval.price().to_rational(best_cost - eval.current())};
}

GreedyResponse first_improving_greedy(const StrategyProfile& profile, const GameConfig& cfg,
                                      NodeId agent) {
  const GreedyEvaluator eval(profile, cfg, agent);
  for (const Move& m : enumerate_greedy_moves(profile, agent)) {
    const std::int64_t c = eval.cost_of(m);
    if (c < eval.current()) return {m, eval.price().to_rational(c - eval.current())};
  }
  return {std::nullopt, Rational(0)};
}

}  // namespace nmg
