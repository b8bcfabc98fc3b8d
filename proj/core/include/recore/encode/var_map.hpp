#pragma once

#include <span>
#include <string>
#include <vector>

#include "recore/sat/solver.hpp"
#include "recore/state_set.hpp"

namespace recore::encode {

enum class EncodingVariant {
  Base1,  // auxiliary dominated(X,t) variables
  Base2   // direct per-node domination clauses
};

std::string to_string(EncodingVariant v);

// Destination for emitted clauses. Encoders are pure translators from
// inputs to clause lists; the sink decides whether clauses land in a
// solver, a collection, or both.
class ClauseSink {
 public:
  virtual ~ClauseSink() = default;
  virtual void add(std::span<const sat::Lit> lits) = 0;

  void add(std::initializer_list<sat::Lit> lits) {
    add(std::span<const sat::Lit>(lits.begin(), lits.size()));
  }
};

class SolverSink final : public ClauseSink {
 public:
  explicit SolverSink(sat::Solver& solver) : solver_(solver) {}
  void add(std::span<const sat::Lit> lits) override { solver_.add_clause(lits); }

 private:
  sat::Solver& solver_;
};

class CollectSink final : public ClauseSink {
 public:
  void add(std::span<const sat::Lit> lits) override {
    clauses.emplace_back(lits.begin(), lits.end());
  }
  std::vector<std::vector<sat::Lit>> clauses;
};

// Prepends a guard literal to every clause, so the wrapped group is inert
// unless the guard's negation holds (the activation-literal pattern).
class GuardedSink final : public ClauseSink {
 public:
  GuardedSink(ClauseSink& inner, sat::Lit guard) : inner_(inner), guard_(guard) {}
  void add(std::span<const sat::Lit> lits) override {
    tmp_.clear();
    tmp_.push_back(guard_);
    tmp_.insert(tmp_.end(), lits.begin(), lits.end());
    inner_.add(tmp_);
  }

 private:
  ClauseSink& inner_;
  sat::Lit guard_;
  std::vector<sat::Lit> tmp_;
};

class TeeSink final : public ClauseSink {
 public:
  TeeSink(ClauseSink& first, ClauseSink& second) : first_(first), second_(second) {}
  void add(std::span<const sat::Lit> lits) override {
    first_.add(lits);
    second_.add(lits);
  }

 private:
  ClauseSink& first_;
  ClauseSink& second_;
};

// Injective registry mapping the step-indexed semantic atoms — in(X,t),
// removed(X,t), added(X,t), query(t), dominated(X,t) and the counter/
// distinctness auxiliaries — to solver variables. Steps are allocated
// contiguously; node arguments are 0-based in code and rendered 1-based
// in symbolic names.
class VarMap {
 public:
  VarMap(sat::Solver& solver, int node_count, EncodingVariant variant);

  int node_count() const { return n_; }
  EncodingVariant variant() const { return variant_; }
  sat::Solver& solver() { return solver_; }

  // Highest allocated step, -1 before the first ensure_step call.
  int max_step() const { return static_cast<int>(steps_.size()) - 1; }
  void ensure_step(int t);

  sat::Lit in(int x, int t) const;
  sat::Lit removed(int x, int t) const;  // t >= 1
  sat::Lit added(int x, int t) const;    // t >= 1
  sat::Lit dominated(int x, int t) const;  // Base1 only

  // Activation literal for the goal check at step t; allocated on first use,
  // contiguously in t.
  sat::Lit query(int t);
  bool has_query(int t) const { return t >= 0 && t < static_cast<int>(query_.size()); }
  sat::Lit query_lit(int t) const;

  // Auxiliary allocation for cardinality ladders and distinctness selectors.
  int begin_ladder();
  sat::Var fresh_counter(int ladder, int i, int j);
  sat::Var fresh_diff(int x, int t_prev, int t);

  std::string name(sat::Var v) const;
  std::string name(sat::Lit l) const;
  std::string format_clause(std::span<const sat::Lit> lits) const;

 private:
  enum class AtomKind : uint8_t {
    Unregistered,  // variable created outside this map
    In,
    Removed,
    Added,
    Dominated,
    Query,
    Counter,
    Diff
  };
  struct Desc {
    AtomKind kind = AtomKind::Unregistered;
    int32_t a = 0, b = 0, c = 0;
  };

  sat::Var alloc(Desc d);

  struct StepVars {
    std::vector<sat::Var> in, removed, added, dominated;
  };

  sat::Solver& solver_;
  int n_;
  EncodingVariant variant_;
  std::vector<StepVars> steps_;
  std::vector<sat::Var> query_;
  std::vector<Desc> desc_;  // indexed by variable, slot 0 unused
  int ladder_count_ = 0;
};

// State at step t read off a satisfying model.
StateSet state_from_model(const sat::Solver& solver, const VarMap& vm, int t);

}  // namespace recore::encode
