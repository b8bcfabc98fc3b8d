#include "recore/dsp_opt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace recore {

using encode::EncodingVariant;
using sat::Lit;
using sat::SolveResult;

StateSet greedy_dominating_set(const Graph& g) {
  int n = g.node_count();
  StateSet chosen(n);
  StateSet covered(n);
  while (covered.cardinality() < n) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < n; ++v) {
      if (chosen.contains(v)) continue;
      int gain = g.closed_neighborhood(v).difference_size(covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    chosen.insert(best);
    covered.unite_with(g.closed_neighborhood(best));
  }
  return chosen;
}

namespace {

struct DspContext {
  sat::Solver solver;
  encode::VarMap vm;
  encode::SolverSink sink;

  DspContext(const Graph& g, EncodingVariant variant)
      : solver(), vm(solver, g.node_count(), variant), sink(solver) {
    vm.ensure_step(0);
    encode::encode_domination(g, 0, vm, sink);
  }

  StateSet model_state() { return encode::state_from_model(solver, vm, 0); }
};

std::optional<std::chrono::steady_clock::time_point> deadline_from(double seconds) {
  if (!std::isfinite(seconds)) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(seconds));
}

}  // namespace

std::optional<StateSet> solve_decision_dsp(const Graph& g, int k,
                                           EncodingVariant variant) {
  DspContext ctx(g, variant);
  std::vector<Lit> lits;
  for (int x = 0; x < g.node_count(); ++x) lits.push_back(ctx.vm.in(x, 0));
  encode::encode_cardinality(lits, k, k, ctx.vm, ctx.sink);
  if (ctx.solver.solve() == SolveResult::Sat) return ctx.model_state();
  return std::nullopt;
}

MinimizeResult minimize_dominating_set(const Graph& g, EncodingVariant variant,
                                       OptStrategy strategy, double timeout_seconds) {
  int n = g.node_count();
  StateSet greedy = greedy_dominating_set(g);
  int ub = greedy.cardinality();
  if (n == 0 || ub == 0) return {0, StateSet(n), true};

  DspContext ctx(g, variant);
  ctx.solver.set_deadline(deadline_from(timeout_seconds));

  std::vector<Lit> lits;
  for (int x = 0; x < n; ++x) lits.push_back(ctx.vm.in(x, 0));
  int rows = std::min(n, ub + 1);
  std::vector<Lit> at_least = encode::encode_counter_ladder(lits, rows, ctx.vm, ctx.sink);

  if (strategy == OptStrategy::FromAbove) {
    int current = ub;
    StateSet witness = greedy;
    while (current > 0) {
      // ask for a dominating set of size <= current-1
      SolveResult r = ctx.solver.solve({~at_least[static_cast<size_t>(current - 1)]});
      if (r == SolveResult::Sat) {
        witness = ctx.model_state();
        current = witness.cardinality();
      } else if (r == SolveResult::Unsat) {
        return {current, witness, true};
      } else {
        return {current, witness, false};
      }
    }
    return {0, witness, true};  // only the empty graph ends up here
  }

  // FromBelow: grow the size until satisfiable.
  for (int k = 1; k <= ub; ++k) {
    std::vector<Lit> assume;
    assume.push_back(at_least[static_cast<size_t>(k - 1)]);
    if (k < n) assume.push_back(~at_least[static_cast<size_t>(k)]);
    SolveResult r = ctx.solver.solve(assume);
    if (r == SolveResult::Sat) return {k, ctx.model_state(), true};
    if (r == SolveResult::Interrupted) return {ub, greedy, false};
  }
  // Every size below the greedy bound is refuted, so the bound is optimal.
  return {ub, greedy, true};
}

namespace {

EnumerateResult enumerate_with_blocking(const Graph& g, int cap,
                                        EncodingVariant variant, int lo, int hi,
                                        bool block_exactly) {
  DspContext ctx(g, variant);
  std::vector<Lit> lits;
  for (int x = 0; x < g.node_count(); ++x) lits.push_back(ctx.vm.in(x, 0));
  encode::encode_cardinality(lits, lo, hi, ctx.vm, ctx.sink);

  EnumerateResult result;
  while (true) {
    SolveResult r = ctx.solver.solve();
    if (r == SolveResult::Unsat) {
      result.complete = true;
      break;
    }
    if (r == SolveResult::Interrupted) break;
    StateSet found = ctx.model_state();
    if (static_cast<int>(result.sets.size()) == cap) break;  // cap hit: incomplete
    std::vector<Lit> blocking;
    if (block_exactly) {
      for (int x = 0; x < g.node_count(); ++x)
        blocking.push_back(found.contains(x) ? ~ctx.vm.in(x, 0) : ctx.vm.in(x, 0));
    } else {
      // all solutions share one size, so excluding the members suffices
      found.for_each([&](int x) { blocking.push_back(~ctx.vm.in(x, 0)); });
    }
    result.sets.push_back(std::move(found));
    ctx.solver.add_clause(blocking);
  }
  std::sort(result.sets.begin(), result.sets.end(), StateSet::word_less);
  return result;
}

}  // namespace

EnumerateResult enumerate_optimal(const Graph& g, int k, int cap,
                                  EncodingVariant variant) {
  return enumerate_with_blocking(g, cap, variant, k, k, /*block_exactly=*/false);
}

EnumerateResult enumerate_dominating_up_to(const Graph& g, int threshold, int cap,
                                           EncodingVariant variant) {
  return enumerate_with_blocking(g, cap, variant, 0,
                                 std::min(threshold, g.node_count()),
                                 /*block_exactly=*/true);
}

}  // namespace recore
