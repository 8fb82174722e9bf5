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

// Command-line workbench for the 2-neighborhood maximization game.
//
// Exit codes: 0 = success / all assertions hold, 1 = unstable or failed
// check, 2 = usage or input error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nmg/analysis.hpp"
#include "nmg/constructions.hpp"
#include "nmg/dynamics.hpp"
#include "nmg/io.hpp"
#include "nmg/reduction.hpp"

namespace {

using namespace nmg;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Input problems the user can fix; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("malformed rational for " + flag + ": '" + text + "' (" + e.what() + ")");
  }
}

std::vector<Rational> rational_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(rational_flag(flag, item));
  if (out.empty()) throw UsageError(flag + " needs at least one value");
  return out;
}

ProfileDocument load_profile(const std::string& path, const std::string& alpha_text) {
  ProfileDocument doc = [&] {
    try {
      return read_profile_file(path);
    } catch (const FormatError& e) {
      throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError("invalid profile in " + path + ": " + e.what());
    }
  }();
  if (!alpha_text.empty()) {
    doc.config = GameConfig(doc.profile.size(), rational_flag("--alpha", alpha_text));
  }
  return doc;
}

std::string label(const ProfileDocument& doc, NodeId v) {
  if (doc.labels.empty()) return std::to_string(v);
  return doc.labels.at(static_cast<std::size_t>(v)) + " (" + std::to_string(v) + ")";
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct GenerateArgs {
  std::string construction, alpha = "1", out, dot;
  std::optional<int> k;
};

int cmd_generate(const GenerateArgs& a) {
  const auto id = parse_construction(a.construction);
  if (!id) throw UsageError("unknown construction '" + a.construction + "'");
  const Rational alpha = rational_flag("--alpha", a.alpha);
  Construction c = [&] {
    try {
      return build(*id, a.k, alpha);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const ProfileDocument doc{GameConfig(c.profile.size(), alpha), c.profile, c.labels};
  if (a.out.empty()) {
    std::cout << write_profile_document(doc);
  } else {
    write_profile_file(a.out, doc);
    std::cout << a.construction << ": " << c.profile.size() << " agents, "
              << realize(c.profile).edge_count() << " edges -> " << a.out << "\n";
  }
  if (!a.dot.empty()) write_text_file(a.dot, to_dot(c.profile, c.labels));
  if (*id == ConstructionId::Irc) {
    std::cout << "prescribed moves:\n";
    for (const Move& m : build_irc().moves) std::cout << "  " << m.to_string() << "\n";
  }
  return kOk;
}

struct CertifyArgs {
  std::string profile, alpha, concept_name, report;
  std::size_t cap = 40;
  bool symmetry = false;
  unsigned threads = 0;
};

int cmd_certify(const CertifyArgs& a) {
  const ProfileDocument doc = load_profile(a.profile, a.alpha);
  const auto c = parse_concept(a.concept_name);
  if (!c) throw UsageError("--concept must be ne or ge, got '" + a.concept_name + "'");
  CertifyOptions opts;
  opts.solver.candidate_cap = a.cap;
  opts.symmetry = a.symmetry;
  opts.threads = a.threads == 0 ? default_threads() : a.threads;
  Certificate cert = [&] {
    try {
      return certify(*c, doc.profile, doc.config, opts);
    } catch (const SolverCapExceeded& e) {
      throw UsageError(std::string(e.what()) + "; use --concept ge or raise --cap");
    }
  }();
  std::cout << to_string(*c) << " at alpha=" << to_string(doc.config.alpha()) << ": "
            << to_string(cert.verdict()) << "\n";
  if (const auto& w = cert.witness()) {
    std::cout << "witness: " << label(doc, w->agent) << " " << w->deviation.to_string() << ", cost "
              << to_string(w->old_cost) << " -> " << to_string(w->new_cost) << "\n";
  }
  if (!a.report.empty()) write_text_file(a.report, certificate_to_json(cert, doc.labels));
  return cert.is_stable() ? kOk : kFail;
}

struct SimulateArgs {
  std::string profile, alpha, policy = "best_greedy", scheduler = "round_robin", out;
  std::uint64_t seed = 0;
  std::size_t max_steps = 1000;
};

int cmd_simulate(const SimulateArgs& a) {
  const ProfileDocument doc = load_profile(a.profile, a.alpha);
  const auto policy = parse_policy(a.policy);
  if (!policy) throw UsageError("unknown policy '" + a.policy + "'");
  Scheduler sched;
  if (a.scheduler == "round_robin") {
    sched = Scheduler::round_robin();
  } else if (a.scheduler == "seeded_random") {
    sched = Scheduler::seeded_random(a.seed);
  } else {
    throw UsageError("unknown scheduler '" + a.scheduler + "'");
  }
  if (a.max_steps < 1) throw UsageError("--max-steps must be at least 1");
  const Trace t = run(doc.profile, doc.config, sched, *policy, a.max_steps);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    std::cout << "step " << i + 1 << ": " << t.steps[i].move.to_string() << "  delta "
              << to_string(t.steps[i].delta) << "\n";
  }
  std::cout << "outcome: " << to_string(t.outcome);
  if (t.fixpoint_concept) std::cout << " (" << to_string(*t.fixpoint_concept) << ")";
  if (t.outcome == Outcome::Cycle) {
    std::cout << " back to state " << t.cycle_start << ", length " << t.cycle_length;
  }
  std::cout << "\n";
  if (!a.out.empty()) write_text_file(a.out, trace_to_json(t, doc.config, *policy, sched));
  return kOk;
}

struct AnalyzeArgs {
  std::string profile, alpha, concept_name, dot;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const ProfileDocument doc = load_profile(a.profile, a.alpha);
  const Graph g = realize(doc.profile);
  const GameConfig& cfg = doc.config;
  std::cout << "agents " << g.size() << ", edges " << g.edge_count() << ", bought "
            << doc.profile.bought_edge_count() << ", alpha " << to_string(cfg.alpha()) << "\n";
  std::cout << "diameter " << diameter(g).to_string() << " (bounds: NE "
            << diameter_bound(Concept::Nash, cfg.alpha()) << ", GE "
            << diameter_bound(Concept::Greedy, cfg.alpha()) << ")\n";
  const Degree2Report runs = degree2_runs(g);
  std::cout << "degree-2 runs " << runs.runs.size() << ", longest " << runs.max_run
            << ", two-node runs " << runs.two_node_runs << ", shape " << to_string(runs.exception)
            << "\n";
  const auto support = leaf_support(g);
  std::cout << "leaf support {";
  for (std::size_t i = 0; i < support.size(); ++i) std::cout << (i ? ", " : "") << label(doc, support[i]);
  std::cout << "}\n";
  const PoaReport poa = poa_report(doc.profile, cfg);
  std::cout << "social cost " << to_string(poa.social_cost) << ", optimum "
            << to_string(poa.optimum.cost) << " (" << to_string(poa.optimum.structure)
            << "), ratio " << to_string(poa.ratio) << "\n";
  if (!a.dot.empty()) write_text_file(a.dot, to_dot(doc.profile, doc.labels));
  if (a.concept_name.empty()) return kOk;
  const auto c = parse_concept(a.concept_name);
  if (!c) throw UsageError("--concept must be ne or ge, got '" + a.concept_name + "'");
  const auto violations = structural_violations(doc.profile, cfg, *c);
  for (const auto& v : violations) std::cout << "violation (" << to_string(*c) << "): " << v << "\n";
  if (violations.empty()) std::cout << "no " << to_string(*c) << " structural violations\n";
  return violations.empty() ? kOk : kFail;
}

struct ScanArgs {
  std::size_t n = 4;
  std::string alphas = "1/2,1,3/2,2,5/2,3,5", concept_name = "ne";
  std::optional<long> time_cap_ms;
  unsigned threads = 0;
};

int cmd_scan(const ScanArgs& a) {
  const auto c = parse_concept(a.concept_name);
  if (!c) throw UsageError("--concept must be ne or ge, got '" + a.concept_name + "'");
  EnumerateOptions opts;
  opts.threads = a.threads == 0 ? default_threads() : a.threads;
  if (a.time_cap_ms) opts.time_cap = std::chrono::milliseconds(*a.time_cap_ms);
  bool ok = true;
  std::printf("%-8s %-7s %-10s %-8s %-9s %-11s %-10s\n", "alpha", "concept", "profiles", "stable",
              "max diam", "violations", "max ratio");
  for (const Rational& alpha : rational_list("--alphas", a.alphas)) {
    const GameConfig cfg(a.n, alpha);
    EnumerationResult r = [&] {
      try {
        return enumerate_equilibria(cfg, *c, opts);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    std::size_t violations = 0;
    std::optional<Distance> max_diam;
    Rational max_ratio = 0;
    for (const auto& p : r.stable) {
      for (const auto& v : structural_violations(p, cfg, *c)) {
        ++violations;
        std::cerr << "alpha=" << to_string(alpha) << " " << p.canonical() << ": " << v << "\n";
      }
      const Distance d = diameter(realize(p));
      if (d.is_finite() && (!max_diam || *max_diam < d)) max_diam = d;
      max_ratio = std::max(max_ratio, poa_report(p, cfg).ratio);
    }
    ok = ok && violations == 0;
    const std::string checked = std::to_string(r.profiles_checked) + (r.complete ? "" : "*");
    std::printf("%-8s %-7s %-10s %-8zu %-9s %-11zu %-10s\n", to_string(alpha).c_str(),
                to_string(*c).c_str(), checked.c_str(), r.stable.size(), (max_diam ? max_diam->to_string() : std::string("-")).c_str(),
                violations, to_string(max_ratio).c_str());
  }
  if (a.time_cap_ms) std::printf("* = cut short by --time-cap-ms\n");
  return ok ? kOk : kFail;
}

struct ReduceArgs {
  std::string graph, alpha, out;
  std::size_t k = 0;
};

int cmd_reduce(const ReduceArgs& a) {
  const Graph g = [&] {
    try {
      return read_edge_list_file(a.graph);
    } catch (const FormatError& e) {
      throw UsageError(e.what());
    }
  }();
  const BRDecisionInstance inst = ds_to_br(g, a.k, rational_flag("--alpha", a.alpha));
  std::cout << "instance: " << inst.profile.size() << " agents, x = " << inst.x << ", budget "
            << inst.budget << ", threshold " << to_string(inst.threshold) << "\n";
  const bool br = br_decision(inst);
  const bool ds = g.size() <= 20 ? dominating_set(g, a.k).has_value() : br;
  std::cout << "best response within threshold: " << (br ? "yes" : "no") << "\n";
  if (g.size() <= 20) std::cout << "dominating set of size <= k: " << (ds ? "yes" : "no") << "\n";
  if (!a.out.empty()) {
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < inst.profile.size(); ++v) {
      if (static_cast<NodeId>(v) == inst.x) {
        labels.push_back("x");
      } else if (v < inst.original_n) {
        labels.push_back("v" + std::to_string(v));
      } else {
        const std::size_t copies = (inst.profile.size() - 1 - inst.original_n) / inst.original_n;
        const std::size_t rel = v - inst.original_n;
        labels.push_back("v" + std::to_string(rel / copies) + "_copy" + std::to_string(rel % copies + 1));
      }
    }
    write_profile_file(a.out, {inst.config(), inst.profile, labels});
  }
  return br == ds ? kOk : kFail;
}

struct VerifyArgs {
  std::size_t max_n = 7, samples = 100;
  std::uint64_t seed = 1;
  std::string alphas = "1/2,1,7/3";
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.max_n < 1 || a.max_n > 8) throw UsageError("--max-n must be in 1..8");
  const ReductionReport r = verify_reduction(a.max_n, a.samples, a.seed, rational_list("--alphas", a.alphas),
                                             a.threads == 0 ? default_threads() : a.threads);
  std::cout << r.exhaustive_graphs << " connected graphs, " << r.random_graphs << " random graphs, "
            << r.cases << " cases, " << r.discrepancies.size() << " discrepancies\n";
  for (const auto& d : r.discrepancies) std::cout << "  " << describe(d) << "\n";
  return r.ok() ? kOk : kFail;
}

int cmd_irc() {
  const IrcInstance irc = build_irc();
  const IrcReport r = replay_irc();
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    std::cout << "s" << i << " -> s" << (i + 1) % 6 << ": "
              << irc.start.labels[static_cast<std::size_t>(s.move.agent)] << " " << s.move.to_string()
              << "  delta " << to_string(s.delta) << (s.legal ? "" : "  ILLEGAL") << "\n";
  }
  const Trace t = run_prescribed(irc.start.profile, GameConfig(21, Rational(1)), irc.moves, 60);
  if (r.ok() && t.outcome == Outcome::Cycle && t.cycle_length == 6) {
    std::cout << "cycle confirmed: 6 improving swaps return to s0\n";
    return kOk;
  }
  std::cout << "cycle NOT confirmed: " << r.failure.value_or(t.message) << "\n";
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the 2-neighborhood maximization game"};
  app.require_subcommand(1);
  int code = kOk;

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Build a construction and write it as a profile file");
  g->add_option("--construction", gen.construction, "Construction name")->required();
  g->add_option("--k", gen.k, "Size parameter (regular_satellite, lmr)");
  g->add_option("--alpha", gen.alpha, "Edge price P/Q");
  g->add_option("--out", gen.out, "Output profile file (stdout if omitted)");
  g->add_option("--dot", gen.dot, "Also write a Graphviz file");
  g->callback([&] { code = cmd_generate(gen); });

  CertifyArgs cert;
  auto* c = app.add_subcommand("certify", "Check Nash or greedy stability");
  c->add_option("--profile", cert.profile, "Profile file")->required();
  c->add_option("--alpha", cert.alpha, "Edge price P/Q (default: the file's)");
  c->add_option("--concept", cert.concept_name, "ne or ge")->required();
  c->add_option("--cap", cert.cap, "Exact solver candidate cap");
  c->add_flag("--symmetry", cert.symmetry, "Check one agent per class of interchangeable agents");
  c->add_option("--threads", cert.threads, "Worker threads (0 = all cores)");
  c->add_option("--report", cert.report, "Write the certificate as JSON");
  c->callback([&] { code = cmd_certify(cert); });

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run improving-response dynamics");
  s->add_option("--profile", sim.profile, "Starting profile file")->required();
  s->add_option("--alpha", sim.alpha, "Edge price P/Q (default: the file's)");
  s->add_option("--policy", sim.policy, "first_improving_greedy, best_greedy or best_response");
  s->add_option("--scheduler", sim.scheduler, "round_robin or seeded_random");
  s->add_option("--seed", sim.seed, "Seed for seeded_random");
  s->add_option("--max-steps", sim.max_steps, "Step cap");
  s->add_option("--out", sim.out, "Write the trace as JSON");
  s->callback([&] { code = cmd_simulate(sim); });

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Structural report and price-of-anarchy ratio");
  a->add_option("--profile", an.profile, "Profile file")->required();
  a->add_option("--alpha", an.alpha, "Edge price P/Q (default: the file's)");
  a->add_option("--concept", an.concept_name, "Also check the structural properties of ne or ge");
  a->add_option("--dot", an.dot, "Also write a Graphviz file");
  a->callback([&] { code = cmd_analyze(an); });

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "Enumerate every profile on n agents");
  scan->add_option("--n", sc.n, "Number of agents");
  scan->add_option("--alphas", sc.alphas, "Comma-separated edge prices");
  scan->add_option("--concept", sc.concept_name, "ne or ge");
  scan->add_option("--time-cap-ms", sc.time_cap_ms, "Stop each scan after this many milliseconds");
  scan->add_option("--threads", sc.threads, "Worker threads (0 = all cores)");
  scan->callback([&] { code = cmd_scan(sc); });

  ReduceArgs red;
  auto* r = app.add_subcommand("reduce", "Dominating set instance to best-response instance");
  r->add_option("--graph", red.graph, "Edge-list file")->required();
  r->add_option("--k", red.k, "Dominating set size / edge budget")->required();
  r->add_option("--alpha", red.alpha, "Edge price P/Q")->required();
  r->add_option("--out", red.out, "Write the instance as a profile file");
  r->callback([&] { code = cmd_reduce(red); });

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify-reduction", "Compare both decision problems on many graphs");
  v->add_option("--max-n", ver.max_n, "Largest random graph (<= 8)");
  v->add_option("--samples", ver.samples, "Random graphs");
  v->add_option("--seed", ver.seed, "Random seed");
  v->add_option("--alphas", ver.alphas, "Comma-separated edge prices");
  v->add_option("--threads", ver.threads, "Worker threads (0 = all cores)");
  v->callback([&] { code = cmd_verify(ver); });

  auto* irc = app.add_subcommand("irc", "Replay the improving response cycle");
  irc->callback([&] { code = cmd_irc(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
