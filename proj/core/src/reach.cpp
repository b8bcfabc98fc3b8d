#include "recore/reach.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace recore {

using encode::EncodingVariant;
using encode::Hint;
using sat::SolveResult;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Reachable: return "REACHABLE";
    case Verdict::Unreachable: return "UNREACHABLE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string ValidationIssue::to_string() const {
  switch (kind) {
    case Kind::None: return "valid";
    case Kind::EmptySequence: return "invalid: empty sequence";
    case Kind::StartMismatch: return "invalid state 0: does not match start";
    case Kind::GoalMismatch:
      return "invalid state " + std::to_string(index) + ": does not match goal";
    case Kind::NotDominating:
      return "invalid state " + std::to_string(index) + ": not dominating";
    case Kind::BadTransition:
      return "invalid pair " + std::to_string(index) + ": " + detail;
  }
  return "invalid";
}

ValidationIssue validate_sequence(const Instance& inst, std::span<const StateSet> seq) {
  if (seq.empty()) return {ValidationIssue::Kind::EmptySequence, -1, {}};
  if (!(seq.front() == inst.start))
    return {ValidationIssue::Kind::StartMismatch, 0, {}};
  if (!(seq.back() == inst.goal))
    return {ValidationIssue::Kind::GoalMismatch, static_cast<int>(seq.size()) - 1, {}};
  for (size_t i = 0; i < seq.size(); ++i)
    if (!is_dominating(inst.graph, seq[i]))
      return {ValidationIssue::Kind::NotDominating, static_cast<int>(i), {}};
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    const StateSet& a = seq[i];
    const StateSet& b = seq[i + 1];
    if (adjacency_check(inst.rule, inst.threshold, a, b)) continue;
    std::string detail;
    if (inst.rule == Rule::TokenJumping) {
      if (a == b)
        detail = "states equal, no token moved";
      else if (a.cardinality() != b.cardinality())
        detail = "token count changed";
      else if (a.difference_size(b) == 2)
        detail = "two tokens moved";
      else
        detail = "more than one token moved";
    } else {
      if (a.symmetric_difference_size(b) != 1)
        detail = "not a single token addition or removal";
      else
        detail = "token count exceeds threshold";
    }
    return {ValidationIssue::Kind::BadTransition, static_cast<int>(i), detail};
  }
  return {};
}

std::vector<StateSet> extract_sequence(const sat::Solver& solver,
                                       const encode::VarMap& vm, int length) {
  std::vector<StateSet> seq;
  seq.reserve(static_cast<size_t>(length) + 1);
  for (int t = 0; t <= length; ++t) seq.push_back(encode::state_from_model(solver, vm, t));
  return seq;
}

ReachSession::ReachSession(const Instance& inst, const SolveConfig& cfg)
    : inst_(inst), cfg_(cfg), solver_(), vm_(solver_, inst.graph.node_count(), cfg.variant),
      sink_(solver_) {
  emit_step(0);
  encode::encode_start(inst_.start, vm_, sink_);
  install_check(0);
}

void ReachSession::emit_step(int t) {
  vm_.ensure_step(t);
  encode::encode_domination(inst_.graph, t, vm_, sink_);
  if (t >= 1) {
    if (inst_.rule == Rule::TokenJumping)
      encode::encode_transition_tj(inst_.graph, t, inst_.token_count, vm_, sink_);
    else
      encode::encode_transition_tar(inst_.graph, t, inst_.threshold, vm_, sink_);
    if (cfg_.hints.has(Hint::T3)) encode::encode_hint(Hint::T3, t, t, inst_, vm_, sink_);
    if (t >= 2) {
      if (cfg_.hints.has(Hint::T1)) encode::encode_hint(Hint::T1, t, t, inst_, vm_, sink_);
      if (cfg_.hints.has(Hint::T2)) encode::encode_hint(Hint::T2, t, t, inst_, vm_, sink_);
    }
    if (cfg_.hints.has(Hint::D1)) encode::encode_hint(Hint::D1, t, t, inst_, vm_, sink_);
    if (cfg_.prove_unreachable) encode::encode_distinctness(t, vm_, sink_);
  } else {
    // step-0 size constraints; domination of the pinned start also holds
    std::vector<sat::Lit> lits;
    for (int x = 0; x < vm_.node_count(); ++x) lits.push_back(vm_.in(x, 0));
    if (inst_.rule == Rule::TokenJumping)
      encode::encode_cardinality(lits, inst_.token_count, inst_.token_count, vm_, sink_);
    else
      encode::encode_cardinality(lits, 0, std::min(inst_.threshold, vm_.node_count()),
                                 vm_, sink_);
  }
  if (cfg_.heu)
    for (int x = 0; x < vm_.node_count(); ++x)
      solver_.set_default_polarity(vm_.in(x, t).var(), false);
}

void ReachSession::install_check(int t) {
  vm_.query(t);
  encode::encode_goal_check(inst_.goal, t, vm_, sink_);
  if (cfg_.hints.has(Hint::D2))
    for (int step = 0; step <= t; ++step)
      encode::encode_hint(Hint::D2, step, t, inst_, vm_, sink_);
}

void ReachSession::extend() {
  ++depth_;
  emit_step(depth_);
  solver_.add_unit(~vm_.query_lit(depth_ - 1));  // retire the previous check
  install_check(depth_);
}

SolveResult ReachSession::solve_current() {
  return solver_.solve({vm_.query_lit(depth_)});
}

SolveResult ReachSession::solve_without_goal() { return solver_.solve(); }

SolveResult ReachSession::solve_assuming_query(int t) {
  return solver_.solve({vm_.query_lit(t)});
}

std::vector<StateSet> ReachSession::extract_sequence() const {
  return recore::extract_sequence(solver_, vm_, depth_);
}

ReconfigResult solve_reachability(const Instance& inst, const SolveConfig& cfg) {
  if (cfg.max_steps < 0) throw std::invalid_argument("max_steps must be >= 0");
  if (!(cfg.timeout_seconds > 0)) throw std::invalid_argument("timeout must be > 0");

  using clock = std::chrono::steady_clock;
  auto started = clock::now();
  std::optional<clock::time_point> deadline;
  if (std::isfinite(cfg.timeout_seconds))
    deadline = started + std::chrono::duration_cast<clock::duration>(
                             std::chrono::duration<double>(cfg.timeout_seconds));

  ReachSession session(inst, cfg);
  session.solver().set_external_stop(cfg.stop);
  session.solver().set_deadline(deadline);

  ReconfigResult result;
  auto out_of_time = [&] { return deadline && clock::now() >= *deadline; };
  auto seconds_since = [](clock::time_point from) {
    return std::chrono::duration<double>(clock::now() - from).count();
  };

  for (int depth = 0;; ++depth) {
    if (depth > 0) session.extend();
    if (out_of_time()) break;  // Unknown

    const auto& st = session.solver().stats();
    DepthStats ds;
    ds.depth = depth;
    uint64_t conflicts0 = st.conflicts, decisions0 = st.decisions,
             props0 = st.propagations;
    auto t0 = clock::now();
    SolveResult r = session.solve_current();
    ds.check_seconds = seconds_since(t0);
    ds.check_result = r;
    ds.conflicts = st.conflicts - conflicts0;
    ds.decisions = st.decisions - decisions0;
    ds.propagations = st.propagations - props0;
    ds.clauses = session.solver().num_clauses();
    ds.learnts = session.solver().num_learnts();
    ds.vars = session.solver().num_vars();

    if (r == SolveResult::Sat) {
      result.depths.push_back(ds);
      result.verdict = Verdict::Reachable;
      result.length = depth;
      result.sequence = session.extract_sequence();
      auto issue = validate_sequence(inst, result.sequence);
      if (!issue.valid())
        throw std::logic_error("engine produced an invalid witness: " +
                               issue.to_string());
      break;
    }
    if (r == SolveResult::Interrupted) {
      result.depths.push_back(ds);
      break;  // Unknown
    }

    if (cfg.prove_unreachable) {
      uint64_t pc0 = st.conflicts;
      auto p0 = clock::now();
      SolveResult probe = session.solve_without_goal();
      ds.ran_probe = true;
      ds.probe_result = probe;
      ds.probe_seconds = seconds_since(p0);
      ds.conflicts += st.conflicts - pc0;
      result.depths.push_back(ds);
      if (probe == SolveResult::Unsat) {
        // No distinct-state sequence of this length exists at all, and every
        // shorter goal check failed: the goal is unreachable.
        result.verdict = Verdict::Unreachable;
        break;
      }
      if (probe == SolveResult::Interrupted) break;  // Unknown
    } else {
      result.depths.push_back(ds);
    }

    if (depth >= cfg.max_steps) break;  // Unknown: budget exhausted
  }

  result.total_seconds = seconds_since(started);
  return result;
}

}  // namespace recore
