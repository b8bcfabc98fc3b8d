#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "recore/answer.hpp"
#include "recore/dsp_opt.hpp"
#include "recore/gen.hpp"
#include "recore/io.hpp"
#include "recore/oracle.hpp"
#include "recore/reach.hpp"

namespace {

using namespace recore;

// Exit code contract: verdicts map to 10/20/30, 0 is success for
// non-verdict commands, 1 is a usage or input error, 2 an internal error.
constexpr int kExitReachable = 10;
constexpr int kExitUnreachable = 20;
constexpr int kExitUnknown = 30;
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::Reachable: return kExitReachable;
    case Verdict::Unreachable: return kExitUnreachable;
    case Verdict::Unknown: return kExitUnknown;
  }
  return kExitInternal;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("RECORE_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    std::cerr << "warning: ignoring non-numeric RECORE_SEED\n";
  }
  return 0;
}

struct CommonInstanceArgs {
  std::string graph_path;
  std::string dat_path;
  std::string rule_name = "tj";
  std::optional<int> threshold;
};

void add_instance_flags(CLI::App* cmd, CommonInstanceArgs& args, bool with_dat) {
  cmd->add_option("--graph", args.graph_path, "DIMACS .col graph file")
      ->required();
  if (with_dat)
    cmd->add_option("--dat", args.dat_path, "start/goal .dat file")->required();
  cmd->add_option("--rule", args.rule_name, "adjacency rule: tj or tar")
      ->required()
      ->check(CLI::IsMember({"tj", "tar"}));
  cmd->add_option("--threshold", args.threshold,
                  "token threshold (tar only)");
}

Instance load_instance(const CommonInstanceArgs& args) {
  Graph g = parse_dimacs_file(args.graph_path);
  StatePair states = parse_dat_file(args.dat_path, g.node_count());
  Rule rule = args.rule_name == "tj" ? Rule::TokenJumping : Rule::TokenAdditionRemoval;
  return make_instance(std::move(g), std::move(states.start), std::move(states.goal),
                       rule, args.threshold);
}

encode::EncodingVariant parse_variant(const std::string& name) {
  return name == "base2" ? encode::EncodingVariant::Base2
                         : encode::EncodingVariant::Base1;
}

int run_solve(const CommonInstanceArgs& inst_args, const std::string& hints_text,
              bool heu, const std::string& variant_name, int max_steps,
              bool prove_unreachable, double timeout, uint64_t seed,
              const std::string& stats_mode, const std::string& dump_cnf) {
  auto hints = encode::parse_hints(hints_text);
  if (!hints) {
    std::cerr << "error: unknown hint in --hints '" << hints_text << "'\n";
    return kExitUsage;
  }
  Instance inst = load_instance(inst_args);

  SolveConfig cfg;
  cfg.hints = *hints;
  cfg.heu = heu;
  cfg.variant = parse_variant(variant_name);
  cfg.max_steps = max_steps;
  if (timeout > 0) cfg.timeout_seconds = timeout;
  cfg.prove_unreachable = prove_unreachable;
  cfg.seed = seed;

  ReconfigResult result = solve_reachability(inst, cfg);
  write_answer(std::cout, result);
  if (stats_mode == "comment")
    write_stats_comments(std::cout, result);
  else if (stats_mode == "json")
    std::cout << stats_to_json(result) << '\n';

  if (!dump_cnf.empty()) {
    // rebuild the final-depth formula and dump it for cross-checking
    ReachSession session(inst, cfg);
    int final_depth = result.depths.empty() ? 0 : result.depths.back().depth;
    while (session.depth() < final_depth) session.extend();
    std::ofstream out(dump_cnf, std::ios::binary);
    session.solver().dump_dimacs(out);
  }
  return verdict_exit_code(result.verdict);
}

int run_mindom(const std::string& graph_path, const std::string& strategy_name,
               const std::string& variant_name, double timeout) {
  Graph g = parse_dimacs_file(graph_path);
  OptStrategy strategy =
      strategy_name == "below" ? OptStrategy::FromBelow : OptStrategy::FromAbove;
  MinimizeResult r = minimize_dominating_set(
      g, parse_variant(variant_name), strategy,
      timeout > 0 ? timeout : std::numeric_limits<double>::infinity());
  std::cout << "k " << r.k << '\n';
  std::cout << "proven " << (r.proven ? "true" : "false") << '\n';
  std::cout << 'w';
  r.witness.for_each([&](int v) { std::cout << ' ' << v + 1; });
  std::cout << '\n';
  return kExitOk;
}

int run_enum(const std::string& graph_path, int cap, const std::string& variant_name) {
  Graph g = parse_dimacs_file(graph_path);
  MinimizeResult opt = minimize_dominating_set(g, parse_variant(variant_name),
                                               OptStrategy::FromAbove);
  EnumerateResult r = enumerate_optimal(g, opt.k, cap, parse_variant(variant_name));
  for (const StateSet& s : r.sets) {
    std::cout << 'a';
    s.for_each([&](int v) { std::cout << ' ' << v + 1; });
    std::cout << '\n';
  }
  std::cout << "count " << r.sets.size() << " complete "
            << (r.complete ? "true" : "false") << '\n';
  return kExitOk;
}

int run_gen(const std::string& graph_path, const std::string& out_dir, int max_reach,
            int max_unreach, uint64_t seed, const std::string& rule_name,
            std::optional<int> threshold, std::optional<int> k_override, int cap) {
  Graph g = parse_dimacs_file(graph_path);
  GenOptions options;
  options.rule = rule_name == "tar" ? Rule::TokenAdditionRemoval : Rule::TokenJumping;
  options.max_reach = max_reach;
  options.max_unreach = max_unreach;
  options.seed = seed;
  options.threshold = threshold;
  options.k_override = k_override;
  options.enumeration_cap = cap;

  std::string stem = std::filesystem::path(graph_path).stem().string();
  GenResult result = generate_benchmarks(g, stem, out_dir, options);
  for (const std::string& note : result.notes) std::cerr << "note: " << note << '\n';
  std::cout << result.manifest_json;
  return kExitOk;
}

int run_oracle(const CommonInstanceArgs& inst_args, double max_combinations,
               int64_t max_states) {
  Instance inst = load_instance(inst_args);
  OracleLimits limits;
  if (max_combinations > 0) limits.max_combinations = max_combinations;
  if (max_states > 0) limits.max_states = max_states;
  OracleAnswer answer = oracle_reachability(inst, limits);
  std::cout << "s " << to_string(answer.verdict) << '\n';
  if (answer.shortest.has_value()) std::cout << "l " << *answer.shortest << '\n';
  return verdict_exit_code(answer.verdict);
}

int run_validate(const CommonInstanceArgs& inst_args, const std::string& answer_path) {
  Instance inst = load_instance(inst_args);
  std::ifstream in(answer_path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + answer_path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  ParsedAnswer answer = parse_answer(text, inst.graph.node_count());
  if (answer.verdict != Verdict::Reachable) {
    // nothing checkable is claimed
    std::cout << "valid\n";
    return kExitOk;
  }
  ValidationIssue issue = validate_sequence(inst, answer.states);
  if (issue.valid()) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cout << issue.to_string() << '\n';
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recore: dominating set reconfiguration solver toolkit"};
  app.require_subcommand(1);

  // solve
  CommonInstanceArgs solve_args;
  std::string hints = "t1,t2,t3";
  bool heu = false;
  std::string variant = "base1";
  int max_steps = 1 << 20;
  bool prove_unreachable = false;
  double timeout = 0;  // 0: no limit
  uint64_t seed = default_seed();
  std::string stats_mode;
  std::string dump_cnf;
  CLI::App* solve = app.add_subcommand("solve", "decide reachability");
  add_instance_flags(solve, solve_args, true);
  solve->add_option("--hints", hints, "comma list of t1,t2,t3,d1,d2 or 'none'");
  solve->add_flag("--heu", heu, "prefer token-free assignments (minimal-set bias)");
  solve->add_option("--variant", variant, "domination encoding")
      ->check(CLI::IsMember({"base1", "base2"}));
  solve->add_option("--max-steps", max_steps, "bound on the sequence length");
  solve->add_flag("--prove-unreachable", prove_unreachable,
                  "enable distinctness clauses and the termination check");
  solve->add_option("--timeout", timeout, "wall-clock budget in seconds");
  solve->add_option("--seed", seed, "run seed (RECORE_SEED is the fallback)");
  solve->add_option("--stats", stats_mode, "append statistics: comment or json")
      ->check(CLI::IsMember({"comment", "json"}));
  solve->add_option("--dump-cnf", dump_cnf, "write the final formula as DIMACS CNF");

  // mindom
  std::string mindom_graph, mindom_strategy = "above", mindom_variant = "base1";
  double mindom_timeout = 0;
  CLI::App* mindom = app.add_subcommand("mindom", "minimum dominating set size");
  mindom->add_option("--graph", mindom_graph, "DIMACS .col graph file")->required();
  mindom->add_option("--strategy", mindom_strategy, "above or below")
      ->check(CLI::IsMember({"above", "below"}));
  mindom->add_option("--variant", mindom_variant, "domination encoding")
      ->check(CLI::IsMember({"base1", "base2"}));
  mindom->add_option("--timeout", mindom_timeout, "wall-clock budget in seconds");

  // enum
  std::string enum_graph, enum_variant = "base1";
  int enum_cap = 0;
  CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate optimal dominating sets");
  enum_cmd->add_option("--graph", enum_graph, "DIMACS .col graph file")->required();
  enum_cmd->add_option("--cap", enum_cap, "maximum number of solutions")->required();
  enum_cmd->add_option("--variant", enum_variant, "domination encoding")
      ->check(CLI::IsMember({"base1", "base2"}));

  // gen
  std::string gen_graph, gen_out, gen_rule = "tj";
  int gen_max_reach = 10, gen_max_unreach = 10, gen_cap = 200000;
  uint64_t gen_seed = default_seed();
  std::optional<int> gen_threshold, gen_k;
  CLI::App* gen = app.add_subcommand("gen", "generate benchmark instances");
  gen->add_option("--graph", gen_graph, "DIMACS .col graph file")->required();
  gen->add_option("--out", gen_out, "output directory")->required();
  gen->add_option("--max-reach", gen_max_reach, "cap on reachable instances");
  gen->add_option("--max-unreach", gen_max_unreach, "cap on unreachable instances");
  gen->add_option("--seed", gen_seed, "generation seed (RECORE_SEED is the fallback)");
  gen->add_option("--rule", gen_rule, "adjacency rule: tj or tar (tar is experimental)")
      ->check(CLI::IsMember({"tj", "tar"}));
  gen->add_option("--threshold", gen_threshold, "token threshold (tar only)");
  gen->add_option("--k", gen_k, "enumerate at this size instead of the optimum (tj)");
  gen->add_option("--cap", gen_cap, "solution enumeration refusal bound");

  // oracle
  CommonInstanceArgs oracle_args;
  double oracle_max_combos = 0;
  int64_t oracle_max_states = 0;
  CLI::App* oracle = app.add_subcommand("oracle", "explicit-state BFS ground truth");
  add_instance_flags(oracle, oracle_args, true);
  oracle->add_option("--max-combinations", oracle_max_combos,
                     "enumeration refusal bound");
  oracle->add_option("--max-states", oracle_max_states, "state count refusal bound");

  // validate
  CommonInstanceArgs validate_args;
  std::string answer_path;
  CLI::App* validate = app.add_subcommand("validate", "check an answer stream");
  add_instance_flags(validate, validate_args, true);
  validate->add_option("--answer", answer_path, "answer stream file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      if (solve_args.rule_name == "tj" && solve_args.threshold.has_value()) {
        std::cerr << "error: --threshold is only valid with --rule tar\n";
        return kExitUsage;
      }
      if (solve_args.rule_name == "tar" && !solve_args.threshold.has_value()) {
        std::cerr << "error: --rule tar requires --threshold\n";
        return kExitUsage;
      }
      return run_solve(solve_args, hints, heu, variant, max_steps, prove_unreachable,
                       timeout, seed, stats_mode, dump_cnf);
    }
    if (mindom->parsed())
      return run_mindom(mindom_graph, mindom_strategy, mindom_variant, mindom_timeout);
    if (enum_cmd->parsed()) return run_enum(enum_graph, enum_cap, enum_variant);
    if (gen->parsed())
      return run_gen(gen_graph, gen_out, gen_max_reach, gen_max_unreach, gen_seed,
                     gen_rule, gen_threshold, gen_k, gen_cap);
    if (oracle->parsed())
      return run_oracle(oracle_args, oracle_max_combos, oracle_max_states);
    if (validate->parsed()) return run_validate(validate_args, answer_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
