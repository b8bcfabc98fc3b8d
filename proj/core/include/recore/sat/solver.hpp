#pragma once

#include <atomic>
#include <chrono>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace recore::sat {

using Var = int32_t;  // variables are numbered from 1

// A literal packs (variable, polarity) into one int: code = 2*var + sign.
// code 0/1 are reserved as "undefined". Negation is an involution.
struct Lit {
  int32_t code = 0;

  constexpr Lit() = default;
  constexpr explicit Lit(int32_t c) : code(c) {}

  static constexpr Lit make(Var v, bool negative = false) {
    return Lit((v << 1) | static_cast<int32_t>(negative));
  }
  static constexpr Lit positive(Var v) { return make(v, false); }
  static constexpr Lit negative(Var v) { return make(v, true); }

  constexpr Var var() const { return code >> 1; }
  constexpr bool is_negative() const { return code & 1; }
  constexpr bool is_defined() const { return code >= 2; }
  constexpr Lit operator~() const { return Lit(code ^ 1); }

  constexpr int32_t to_dimacs() const { return is_negative() ? -var() : var(); }
  static constexpr Lit from_dimacs(int32_t d) {
    return d < 0 ? negative(-d) : positive(d);
  }

  constexpr auto operator<=>(const Lit&) const = default;
};

enum class Value : uint8_t { False = 0, True = 1, Undef = 2 };

inline Value value_of(bool b) { return b ? Value::True : Value::False; }
inline Value negate(Value v) {
  return v == Value::Undef ? Value::Undef
                           : (v == Value::True ? Value::False : Value::True);
}

enum class SolveResult { Sat, Unsat, Interrupted };

struct SolverStats {
  uint64_t solves = 0;
  uint64_t decisions = 0;
  uint64_t propagations = 0;
  uint64_t conflicts = 0;
  uint64_t restarts = 0;
  uint64_t learned_clauses = 0;
  uint64_t deleted_clauses = 0;
  uint64_t reductions = 0;
  uint64_t garbage_collections = 0;
  uint64_t minimized_literals = 0;
};

struct SolverOptions {
  double var_decay = 0.95;
  int restart_base = 100;     // Luby unit, in conflicts
  int first_reduce = 2000;    // conflicts before the first learnt-DB reduction
  int reduce_increment = 300; // extra conflicts between successive reductions
  double garbage_fraction = 0.25;  // wasted-arena share that triggers collection
  // Re-evaluate every original clause against the model after each SAT
  // answer; throws std::logic_error on violation.
  bool check_models = false;
};

// Incremental conflict-driven clause-learning SAT engine with solving under
// assumptions: two-watched-literal propagation, first-UIP learning with
// non-chronological backjumping, activity-ordered decisions, Luby restarts,
// phase saving and LBD-guided learnt-clause deletion (unit and binary
// learnts are always retained). Clauses are permanent; assumptions hold for
// a single solve() call. There is no pre- or inprocessing, so auxiliary
// and activation variables are never eliminated.
//
// A single instance is strictly single-threaded; request_stop() is the one
// member that may be called from another thread.
class Solver {
 public:
  explicit Solver(const SolverOptions& options = {});
  ~Solver();

  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  // Fresh variable, numbered consecutively from 1. Throws std::length_error
  // past 2^30 variables.
  Var new_var();
  Lit new_lit() { return Lit::positive(new_var()); }
  int num_vars() const { return static_cast<int>(nvars_); }

  // Adds a permanent clause. Duplicate literals are merged and tautologies
  // dropped; the empty clause makes the solver permanently unsatisfiable.
  // Throws std::out_of_range if a literal names an unknown variable.
  void add_clause(std::span<const Lit> lits);
  void add_clause(std::initializer_list<Lit> lits);
  void add_unit(Lit l) { add_clause({&l, 1}); }

  // Number of live problem clauses of size >= 2 (units are absorbed into
  // the root-level assignment).
  int num_clauses() const;
  int num_learnts() const;

  // False once an empty clause has been derived at the root level; every
  // subsequent solve returns Unsat.
  bool okay() const { return ok_; }

  // Solves the current formula under the given assumptions. On Sat the
  // model is total over all created variables; on Unsat the core is a
  // subset of the assumptions sufficient for unsatisfiability. Learned
  // clauses persist across calls, assumptions do not.
  SolveResult solve(std::span<const Lit> assumptions = {});
  SolveResult solve(std::initializer_list<Lit> assumptions);

  // Valid after solve() returned Sat, until the next solve() call.
  bool model_value(Var v) const;
  bool model_value(Lit l) const;

  // Valid after solve() returned Unsat; subset of the passed assumptions.
  std::span<const Lit> unsat_core() const { return core_; }

  // Phase tried first when the decision heuristic picks v and no saved
  // phase exists. The default for every variable is false.
  void set_default_polarity(Var v, bool sign);

  // Cooperative interruption: the current/next solve returns Interrupted.
  // Safe to call from another thread.
  void request_stop() { stop_.store(true, std::memory_order_relaxed); }
  void clear_stop() { stop_.store(false, std::memory_order_relaxed); }
  // Optional additional stop flag owned by the caller (may be nullptr).
  void set_external_stop(const std::atomic<bool>* flag) { external_stop_ = flag; }
  // Wall-clock cutoff checked periodically during search.
  void set_deadline(std::optional<std::chrono::steady_clock::time_point> t) {
    deadline_ = t;
  }

  const SolverStats& stats() const { return stats_; }

  // DIMACS CNF dump of the current formula: root-level input units plus all
  // problem clauses (learned clauses are derived and not part of the dump).
  void dump_dimacs(std::ostream& out) const;

 private:
  using ClauseRef = uint32_t;
  static constexpr ClauseRef kNoClause = UINT32_MAX;

  struct Watcher {
    ClauseRef cref;
    Lit blocker;
  };

  // Max-activity binary heap over variables.
  class OrderHeap {
   public:
    explicit OrderHeap(const std::vector<double>& act) : act_(act) {}
    bool empty() const { return heap_.empty(); }
    bool contains(Var v) const {
      return v < static_cast<Var>(pos_.size()) && pos_[static_cast<size_t>(v)] >= 0;
    }
    void reserve_var(Var v);
    void insert(Var v);
    void update_up(Var v);
    Var pop_max();

   private:
    void sift_up(size_t i);
    void sift_down(size_t i);
    const std::vector<double>& act_;
    std::vector<Var> heap_;
    std::vector<int32_t> pos_;
  };

  // Clause layout in mem_: [header][lbd if learnt][lit codes...].
  // header = size << 3 | learnt << 0 | dead << 1 | relocated << 2.
  uint32_t clause_size(ClauseRef c) const { return mem_[c] >> 3; }
  bool clause_learnt(ClauseRef c) const { return mem_[c] & 1; }
  bool clause_dead(ClauseRef c) const { return mem_[c] & 2; }
  uint32_t clause_lbd(ClauseRef c) const { return mem_[c + 1]; }
  Lit* clause_lits(ClauseRef c) {
    return reinterpret_cast<Lit*>(&mem_[c + 1 + (mem_[c] & 1)]);
  }
  const Lit* clause_lits(ClauseRef c) const {
    return reinterpret_cast<const Lit*>(&mem_[c + 1 + (mem_[c] & 1)]);
  }

  ClauseRef alloc_clause(std::span<const Lit> lits, bool learnt, uint32_t lbd);
  void attach_clause(ClauseRef c);
  void detach_clause(ClauseRef c);
  void mark_dead(ClauseRef c);
  void garbage_collect();

  Value value(Var v) const { return assigns_[static_cast<size_t>(v)]; }
  Value value(Lit l) const {
    Value v = assigns_[static_cast<size_t>(l.var())];
    return l.is_negative() ? negate(v) : v;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  int level(Var v) const { return level_[static_cast<size_t>(v)]; }

  void enqueue(Lit l, ClauseRef reason);
  ClauseRef propagate();
  void new_decision_level() { trail_lim_.push_back(static_cast<int32_t>(trail_.size())); }
  void cancel_until(int target_level);
  Lit pick_branch_lit();

  void analyze(ClauseRef confl, std::vector<Lit>& out_learnt, int& out_btlevel,
               uint32_t& out_lbd);
  bool literal_redundant(Lit l);
  void analyze_final(Lit failed, bool failed_on_trail);
  uint32_t compute_lbd(std::span<const Lit> lits);

  void bump_var(Var v);
  void decay_var_activity() { var_inc_ /= options_.var_decay; }
  void rescale_activities();

  void reduce_learnts();
  bool should_stop();

  // search for one restart window; returns Sat/Unsat or nullopt to restart
  std::optional<SolveResult> search(int64_t conflict_budget);

  SolverOptions options_;
  bool ok_ = true;
  Var nvars_ = 0;

  std::vector<uint32_t> mem_;
  uint32_t wasted_ = 0;
  std::vector<ClauseRef> clauses_;
  std::vector<ClauseRef> learnts_;
  std::vector<Lit> root_units_;  // input unit clauses, for dump_dimacs

  std::vector<std::vector<Watcher>> watches_;  // indexed by Lit::code
  std::vector<Value> assigns_;                 // indexed by var
  std::vector<int32_t> level_;
  std::vector<ClauseRef> reason_;
  std::vector<double> activity_;
  std::vector<uint8_t> saved_phase_;  // 0 false, 1 true, 2 none
  std::vector<uint8_t> default_pol_;
  std::vector<uint8_t> seen_;

  OrderHeap order_{activity_};
  double var_inc_ = 1.0;

  std::vector<Lit> trail_;
  std::vector<int32_t> trail_lim_;
  size_t qhead_ = 0;

  std::vector<Lit> assumptions_;
  std::vector<Lit> core_;
  std::vector<uint8_t> model_;

  std::vector<uint64_t> level_stamp_;  // LBD computation scratch
  uint64_t stamp_counter_ = 0;

  int64_t next_reduce_conflicts_;
  int reduce_count_ = 0;
  uint64_t tick_ = 0;

  std::atomic<bool> stop_{false};
  const std::atomic<bool>* external_stop_ = nullptr;
  std::optional<std::chrono::steady_clock::time_point> deadline_;

  SolverStats stats_;

  std::vector<std::vector<Lit>> original_clauses_;  // only when check_models
  std::vector<Lit> add_tmp_;
  std::vector<Lit> learnt_tmp_;
  std::vector<Lit> minimize_stack_;
};

}  // namespace recore::sat
