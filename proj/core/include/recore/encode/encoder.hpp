#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recore/encode/var_map.hpp"
#include "recore/graph.hpp"
#include "recore/instance.hpp"

namespace recore::encode {

enum class Hint : uint8_t {
  T1 = 1 << 0,  // no move back to a node a token just left
  T2 = 1 << 1,  // no move away from a node a token just reached
  T3 = 1 << 2,  // token destination: arriving token must cover the vacated node
  D1 = 1 << 3,  // at most t start nodes vacated by step t
  D2 = 1 << 4,  // at most bound-t goal nodes still missing at step t (guarded)
};

struct HintSet {
  uint8_t mask = 0;

  constexpr HintSet() = default;
  constexpr HintSet(std::initializer_list<Hint> hints) {
    for (Hint h : hints) set(h);
  }

  constexpr bool has(Hint h) const { return mask & static_cast<uint8_t>(h); }
  constexpr void set(Hint h) { mask |= static_cast<uint8_t>(h); }
  constexpr bool empty() const { return mask == 0; }
  constexpr bool operator==(const HintSet&) const = default;

  static constexpr HintSet all() { return {Hint::T1, Hint::T2, Hint::T3, Hint::D1, Hint::D2}; }
};

// "t1,t2,t3" etc., or "none" for the empty set. Returns nullopt on an
// unknown hint name.
std::optional<HintSet> parse_hints(std::string_view text);
std::string to_string(HintSet hints);

// Domination constraint at step t in the VarMap's variant. Base2 emits one
// clause per node over its closed neighborhood; Base1 routes through
// dominated(X,t) definition variables plus a positive unit per node. Both
// have identical projections onto the in-variables.
void encode_domination(const Graph& g, int t, VarMap& vm, ClauseSink& sink);

// Pins step 0 to exactly `start` (positive and negative units).
void encode_start(const StateSet& start, VarMap& vm, ClauseSink& sink);

// Guarded goal check: assuming query(t) forces state t = goal; with
// query(t) false the clauses are inert. query(t) must be registered.
void encode_goal_check(const StateSet& goal, int t, VarMap& vm, ClauseSink& sink);

// Token-jumping transition into step t: removed/added definitions,
// exactly-one removal, exactly-one addition, exactly-k tokens at t.
void encode_transition_tj(const Graph& g, int t, int k, VarMap& vm, ClauseSink& sink);

// Token-addition-removal transition into step t: definitions, exactly-one
// change over removals and additions combined, at-most-threshold tokens.
void encode_transition_tar(const Graph& g, int t, int threshold, VarMap& vm,
                           ClauseSink& sink);

// lo <= #true(lits) <= hi via a sequential-counter ladder with full
// defining clauses. Exactly-one over at most 6 literals uses pairwise
// clauses instead. Throws std::invalid_argument unless
// 0 <= lo <= hi <= |lits|.
void encode_cardinality(std::span<const sat::Lit> lits, int lo, int hi, VarMap& vm,
                        ClauseSink& sink);

// Registers ladder rows 1..rows for lits and returns the top-row literals:
// result[j-1] holds iff at least j of lits are true. No bound units are
// emitted; callers constrain through the returned literals.
std::vector<sat::Lit> encode_counter_ladder(std::span<const sat::Lit> lits, int rows,
                                            VarMap& vm, ClauseSink& sink);

// Hint clauses at step t. `bound` is the current depth and is only used by
// d2, whose clauses are guarded by ~query(bound). t1/t2 constrain the
// consecutive pair (t-1, t) and require t >= 2; t3 requires t >= 1.
void encode_hint(Hint h, int t, int bound, const Instance& inst, VarMap& vm,
                 ClauseSink& sink);

// All states pairwise distinct: for each t' < t, fresh selectors
// d(X,t',t) -> in(X,t') xor in(X,t) plus a covering clause.
void encode_distinctness(int t, VarMap& vm, ClauseSink& sink);

}  // namespace recore::encode
