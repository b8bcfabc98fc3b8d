#pragma once

#include <atomic>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "recore/encode/encoder.hpp"
#include "recore/instance.hpp"

namespace recore {

enum class Verdict { Reachable, Unreachable, Unknown };

std::string to_string(Verdict v);

struct SolveConfig {
  encode::HintSet hints;  // callers choose; the CLI defaults to t1,t2,t3
  bool heu = false;       // bias in-variables toward false (minimal-set preference)
  encode::EncodingVariant variant = encode::EncodingVariant::Base1;
  int max_steps = 1 << 20;
  double timeout_seconds = std::numeric_limits<double>::infinity();
  // Enables distinctness clauses and the per-depth termination probe that
  // can conclude UNREACHABLE.
  bool prove_unreachable = false;
  // Reserved escape hatch: admits hint sets whose shortest-preservation is
  // unestablished during unreachability proofs. All built-in hints are
  // proven safe, so this has no effect today.
  bool unsafe_hints_for_unreachability = false;
  uint64_t seed = 0;
  const std::atomic<bool>* stop = nullptr;
};

struct DepthStats {
  int depth = 0;
  sat::SolveResult check_result = sat::SolveResult::Unsat;
  double check_seconds = 0.0;
  uint64_t conflicts = 0;  // deltas accumulated over this depth
  uint64_t decisions = 0;
  uint64_t propagations = 0;
  int clauses = 0;  // totals after this depth
  int learnts = 0;
  int vars = 0;
  bool ran_probe = false;  // unreachability termination probe
  sat::SolveResult probe_result = sat::SolveResult::Unsat;
  double probe_seconds = 0.0;
};

struct ReconfigResult {
  Verdict verdict = Verdict::Unknown;
  int length = -1;                 // REACHABLE only
  std::vector<StateSet> sequence;  // REACHABLE only: start..goal inclusive
  std::vector<DepthStats> depths;
  double total_seconds = 0.0;
};

struct ValidationIssue {
  enum class Kind {
    None,
    EmptySequence,
    StartMismatch,
    GoalMismatch,
    NotDominating,
    BadTransition
  };
  Kind kind = Kind::None;
  int index = -1;
  std::string detail;

  bool valid() const { return kind == Kind::None; }
  std::string to_string() const;
};

// Checks a claimed witness independently of the SAT engine and encoder:
// endpoints, per-state domination, per-pair adjacency (incl. the TAR
// threshold). Reports the first violation.
ValidationIssue validate_sequence(const Instance& inst, std::span<const StateSet> seq);

// Incremental owner of the bounded formula: step 0 plus one goal check at
// the current depth. extend() adds the next step's transition, hint and
// distinctness clauses, retires the previous check via a negative
// activation unit, and installs a fresh one.
class ReachSession {
 public:
  ReachSession(const Instance& inst, const SolveConfig& cfg);

  int depth() const { return depth_; }
  void extend();

  sat::SolveResult solve_current();            // assumes query(depth)
  sat::SolveResult solve_without_goal();       // no assumptions: termination probe
  sat::SolveResult solve_assuming_query(int t);

  std::vector<StateSet> extract_sequence() const;

  sat::Solver& solver() { return solver_; }
  const encode::VarMap& vars() const { return vm_; }

 private:
  void emit_step(int t);
  void install_check(int t);

  const Instance& inst_;
  SolveConfig cfg_;
  sat::Solver solver_;
  encode::VarMap vm_;
  encode::SolverSink sink_;
  int depth_ = 0;
};

// States read off the model of a successful check at the given depth.
std::vector<StateSet> extract_sequence(const sat::Solver& solver,
                                       const encode::VarMap& vm, int length);

// The bounded, incremental reachability loop: depths are tried strictly
// in increasing order from 0, so a REACHABLE answer carries a minimal
// length; with prove_unreachable, exhaustion of distinct-state sequences
// at some depth concludes UNREACHABLE.
ReconfigResult solve_reachability(const Instance& inst, const SolveConfig& cfg);

}  // namespace recore
