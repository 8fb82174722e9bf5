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

#ifndef NMG_DYNAMICS_HPP
#define NMG_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmg/certifier.hpp"

namespace nmg {

enum class Policy { FirstImprovingGreedy, BestGreedy, BestResponse };

std::string to_string(Policy p);
std::optional<Policy> parse_policy(std::string_view text);

/// Which agent gets to move. Round robin continues after the last mover;
/// seeded random draws a fresh agent permutation per step from a 64-bit
/// Mersenne Twister. Both pick the first agent in their order that has an
/// improving move under the policy.
struct Scheduler {
  enum class Kind { RoundRobin, SeededRandom };
  Kind kind = Kind::RoundRobin;
  std::uint64_t seed = 0;

  static Scheduler round_robin() { return {Kind::RoundRobin, 0}; }
  static Scheduler seeded_random(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
};

std::string to_string(const Scheduler& s);

enum class Outcome {
  Fixpoint,  ///< nobody has an improving move of the policy's class
  Cycle,     ///< a profile repeated
  StepCap,   ///< max_steps reached
  Rejected,  ///< a prescribed move was illegal or not improving
};

std::string to_string(Outcome o);

struct TraceStep {
  Move move;
  Rational delta;            ///< always negative
  std::uint64_t state_hash;  ///< hash of the profile after the move
};

struct Trace {
  StrategyProfile initial;
  std::uint64_t initial_hash = 0;
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::StepCap;
  StrategyProfile final_profile;
  /// Fixpoint: the equilibrium concept the final profile satisfies.
  std::optional<Concept> fixpoint_concept;
  /// Cycle: the repeated state is state `cycle_start` (0 = initial) and the
  /// loop has `cycle_length` steps.
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
  /// Rejected: why.
  std::string message;
};

Trace run(const StrategyProfile& start, const GameConfig& cfg, const Scheduler& scheduler,
          Policy policy, std::size_t max_steps, const SolverOptions& solver = {});

/// Applies `moves` in order, repeating the list, until a profile repeats or
/// max_steps is hit. Every move must be legal and strictly improving.
Trace run_prescribed(const StrategyProfile& start, const GameConfig& cfg,
                     const std::vector<Move>& moves, std::size_t max_steps);

struct IrcStepReport {
  Move move;
  bool legal = false;
  Rational delta;
};

struct IrcReport {
  std::vector<IrcStepReport> steps;
  bool all_legal = false;
  bool all_unit_improvements = false;  ///< every delta exactly -1
  bool returns_to_start = false;
  std::optional<std::string> failure;  ///< first failing check, by step

  bool ok() const { return all_legal && all_unit_improvements && returns_to_start; }
};

/// Replays the six prescribed swaps of the improving response cycle at the
/// given edge price (they are swaps only, so the price does not matter).
IrcReport replay_irc(const Rational& alpha = Rational(1));

std::string trace_to_json(const Trace& trace, const GameConfig& cfg, Policy policy,
                          const Scheduler& scheduler);

}  // namespace nmg

#endif  // NMG_DYNAMICS_HPP
