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

#ifndef NMG_CERTIFIER_HPP
#define NMG_CERTIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "nmg/solver.hpp"

namespace nmg {

enum class Concept { Nash, Greedy };
enum class Verdict { Stable, Unstable };

std::string to_string(Concept c);
std::string to_string(Verdict v);
/// "ne" or "ge".
std::optional<Concept> parse_concept(std::string_view text);

/// An improving deviation found for one agent.
struct Witness {
  NodeId agent;
  Move deviation;
  Rational old_cost;
  Rational new_cost;
};

struct AgentCheck {
  NodeId agent;
  Rational cost;       ///< current cost
  Rational best_cost;  ///< best reachable cost under the concept's moves
  /// Agent whose check was reused (itself unless symmetry reduction applied).
  NodeId checked_as;
};

/// Verdict plus evidence. An unstable certificate always carries a witness
/// whose replay strictly lowers the witness agent's cost; the factory checks
/// this against a fresh cost evaluation and throws std::logic_error if not.
class Certificate {
 public:
  static Certificate stable(Concept c, std::vector<AgentCheck> log);
  static Certificate unstable(Concept c, Witness witness, std::vector<AgentCheck> log,
                              const StrategyProfile& profile, const GameConfig& cfg);

  Concept concept_checked() const { return concept_; }
  Verdict verdict() const { return verdict_; }
  bool is_stable() const { return verdict_ == Verdict::Stable; }
  const std::optional<Witness>& witness() const { return witness_; }
  const std::vector<AgentCheck>& log() const { return log_; }

 private:
  Certificate(Concept c, Verdict v, std::optional<Witness> w, std::vector<AgentCheck> log)
      : concept_(c), verdict_(v), witness_(std::move(w)), log_(std::move(log)) {}

  Concept concept_;
  Verdict verdict_;
  std::optional<Witness> witness_;
  std::vector<AgentCheck> log_;
};

struct CertifyOptions {
  SolverOptions solver;
  /// Check one agent per class of interchangeable agents (same strategy and
  /// same set of in-neighbors); swapping two such agents maps the profile to
  /// itself, so their best responses are mirror images.
  bool symmetry = false;
  /// Stop at the first unstable agent instead of logging every agent.
  bool stop_at_first = false;
  /// Worker threads for per-agent checks; 0 = hardware concurrency.
  unsigned threads = 1;
};

Certificate certify_greedy(const StrategyProfile& profile, const GameConfig& cfg,
                           const CertifyOptions& options = {});

/// Throws SolverCapExceeded when some checked agent's exact solve is too big.
Certificate certify_nash(const StrategyProfile& profile, const GameConfig& cfg,
                         const CertifyOptions& options = {});

Certificate certify(Concept c, const StrategyProfile& profile, const GameConfig& cfg,
                    const CertifyOptions& options = {});

/// Agent -> representative of its interchangeability class (smallest id).
std::vector<NodeId> symmetry_representatives(const StrategyProfile& profile);

/// JSON report; labels are optional.
std::string certificate_to_json(const Certificate& cert, const std::vector<std::string>& labels = {});

}  // namespace nmg

#endif  // NMG_CERTIFIER_HPP
