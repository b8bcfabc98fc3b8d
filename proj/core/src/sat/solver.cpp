#include "recore/sat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace recore::sat {

namespace {

// Luby sequence value at index x (0-based): 1,1,2,1,1,2,4,...
int64_t luby(int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return int64_t{1} << seq;
}

}  // namespace

// ---------------------------------------------------------------- OrderHeap

void Solver::OrderHeap::reserve_var(Var v) {
  if (static_cast<size_t>(v) >= pos_.size()) pos_.resize(static_cast<size_t>(v) + 1, -1);
}

void Solver::OrderHeap::insert(Var v) {
  reserve_var(v);
  if (pos_[static_cast<size_t>(v)] >= 0) return;
  pos_[static_cast<size_t>(v)] = static_cast<int32_t>(heap_.size());
  heap_.push_back(v);
  sift_up(heap_.size() - 1);
}

Var Solver::OrderHeap::pop_max() {
  Var top = heap_[0];
  heap_[0] = heap_.back();
  pos_[static_cast<size_t>(heap_[0])] = 0;
  heap_.pop_back();
  pos_[static_cast<size_t>(top)] = -1;
  if (!heap_.empty()) sift_down(0);
  return top;
}

void Solver::OrderHeap::update_up(Var v) {
  if (contains(v)) sift_up(static_cast<size_t>(pos_[static_cast<size_t>(v)]));
}

void Solver::OrderHeap::sift_up(size_t i) {
  Var v = heap_[i];
  while (i > 0) {
    size_t parent = (i - 1) >> 1;
    Var pv = heap_[parent];
    if (act_[static_cast<size_t>(v)] > act_[static_cast<size_t>(pv)] ||
        (act_[static_cast<size_t>(v)] == act_[static_cast<size_t>(pv)] && v < pv)) {
      heap_[i] = pv;
      pos_[static_cast<size_t>(pv)] = static_cast<int32_t>(i);
      i = parent;
    } else {
      break;
    }
  }
  heap_[i] = v;
  pos_[static_cast<size_t>(v)] = static_cast<int32_t>(i);
}

void Solver::OrderHeap::sift_down(size_t i) {
  Var v = heap_[i];
  auto better = [&](Var a, Var b) {
    return act_[static_cast<size_t>(a)] > act_[static_cast<size_t>(b)] ||
           (act_[static_cast<size_t>(a)] == act_[static_cast<size_t>(b)] && a < b);
  };
  while (2 * i + 1 < heap_.size()) {
    size_t child = 2 * i + 1;
    if (child + 1 < heap_.size() && better(heap_[child + 1], heap_[child])) ++child;
    if (!better(heap_[child], v)) break;
    heap_[i] = heap_[child];
    pos_[static_cast<size_t>(heap_[i])] = static_cast<int32_t>(i);
    i = child;
  }
  heap_[i] = v;
  pos_[static_cast<size_t>(v)] = static_cast<int32_t>(i);
}

// ------------------------------------------------------------------ Solver

Solver::Solver(const SolverOptions& options)
    : options_(options), next_reduce_conflicts_(options.first_reduce) {
  // index 0 of the per-variable arrays is a dummy slot
  watches_.resize(2);
  assigns_.push_back(Value::Undef);
  level_.push_back(0);
  reason_.push_back(kNoClause);
  activity_.push_back(0.0);
  saved_phase_.push_back(2);
  default_pol_.push_back(0);
  seen_.push_back(0);
  level_stamp_.push_back(0);
}

Solver::~Solver() = default;

Var Solver::new_var() {
  if (nvars_ >= (1 << 30)) throw std::length_error("variable capacity exceeded");
  Var v = ++nvars_;
  watches_.resize(2 * static_cast<size_t>(nvars_) + 2);
  assigns_.push_back(Value::Undef);
  level_.push_back(0);
  reason_.push_back(kNoClause);
  activity_.push_back(0.0);
  saved_phase_.push_back(2);
  default_pol_.push_back(0);
  seen_.push_back(0);
  level_stamp_.push_back(0);
  order_.insert(v);
  return v;
}

void Solver::set_default_polarity(Var v, bool sign) {
  if (v < 1 || v > nvars_) throw std::out_of_range("unknown variable");
  default_pol_[static_cast<size_t>(v)] = sign ? 1 : 0;
}

int Solver::num_clauses() const { return static_cast<int>(clauses_.size()); }
int Solver::num_learnts() const { return static_cast<int>(learnts_.size()); }

Solver::ClauseRef Solver::alloc_clause(std::span<const Lit> lits, bool learnt,
                                       uint32_t lbd) {
  assert(lits.size() >= 2);
  if (mem_.size() > UINT32_MAX / 2) throw std::length_error("clause arena exhausted");
  ClauseRef c = static_cast<ClauseRef>(mem_.size());
  mem_.push_back(static_cast<uint32_t>(lits.size()) << 3 | (learnt ? 1u : 0u));
  if (learnt) mem_.push_back(lbd);
  for (Lit l : lits) mem_.push_back(static_cast<uint32_t>(l.code));
  return c;
}

void Solver::attach_clause(ClauseRef c) {
  const Lit* lits = clause_lits(c);
  watches_[static_cast<size_t>(lits[0].code)].push_back({c, lits[1]});
  watches_[static_cast<size_t>(lits[1].code)].push_back({c, lits[0]});
}

void Solver::detach_clause(ClauseRef c) {
  const Lit* lits = clause_lits(c);
  for (int t = 0; t < 2; ++t) {
    auto& ws = watches_[static_cast<size_t>(lits[t].code)];
    for (size_t i = 0; i < ws.size(); ++i) {
      if (ws[i].cref == c) {
        ws[i] = ws.back();
        ws.pop_back();
        break;
      }
    }
  }
}

void Solver::mark_dead(ClauseRef c) {
  wasted_ += 1 + (mem_[c] & 1) + clause_size(c);
  mem_[c] |= 2;
}

void Solver::garbage_collect() {
  ++stats_.garbage_collections;
  std::vector<uint32_t> fresh;
  fresh.reserve(mem_.size() - wasted_);
  auto reloc = [&](ClauseRef& c) {
    if (mem_[c] & 4) {  // forwarded
      c = mem_[c + 1];
      return;
    }
    uint32_t header = mem_[c];
    uint32_t learnt = header & 1;
    uint32_t sz = header >> 3;
    ClauseRef nc = static_cast<ClauseRef>(fresh.size());
    fresh.push_back(header);
    for (uint32_t k = 0; k < learnt + sz; ++k) fresh.push_back(mem_[c + 1 + k]);
    mem_[c] |= 4;
    mem_[c + 1] = nc;
    c = nc;
  };
  for (auto& ws : watches_)
    for (auto& w : ws) reloc(w.cref);
  for (Lit l : trail_) {
    ClauseRef& r = reason_[static_cast<size_t>(l.var())];
    if (r != kNoClause) reloc(r);
  }
  for (ClauseRef& c : clauses_) reloc(c);
  for (ClauseRef& c : learnts_) reloc(c);
  mem_ = std::move(fresh);
  wasted_ = 0;
}

void Solver::add_clause(std::initializer_list<Lit> lits) {
  add_clause(std::span<const Lit>(lits.begin(), lits.size()));
}

void Solver::add_clause(std::span<const Lit> lits) {
  assert(decision_level() == 0);
  for (Lit l : lits)
    if (!l.is_defined() || l.var() > nvars_)
      throw std::out_of_range("unknown variable in clause");
  if (options_.check_models)
    original_clauses_.emplace_back(lits.begin(), lits.end());
  if (!ok_) return;

  add_tmp_.assign(lits.begin(), lits.end());
  std::sort(add_tmp_.begin(), add_tmp_.end());
  size_t j = 0;
  Lit prev;
  for (Lit l : add_tmp_) {
    if (value(l) == Value::True && level(l.var()) == 0) return;  // already satisfied
    if (l == ~prev) return;                                      // tautology
    if (l == prev) continue;                                     // duplicate
    prev = l;
    if (value(l) == Value::False && level(l.var()) == 0) continue;  // root-false
    add_tmp_[j++] = l;
  }
  add_tmp_.resize(j);

  if (add_tmp_.empty()) {
    ok_ = false;
    return;
  }
  if (add_tmp_.size() == 1) {
    root_units_.push_back(add_tmp_[0]);
    enqueue(add_tmp_[0], kNoClause);
    if (propagate() != kNoClause) ok_ = false;
    return;
  }
  ClauseRef c = alloc_clause(add_tmp_, false, 0);
  clauses_.push_back(c);
  attach_clause(c);
}

void Solver::enqueue(Lit l, ClauseRef reason) {
  Var v = l.var();
  assert(value(v) == Value::Undef);
  assigns_[static_cast<size_t>(v)] = l.is_negative() ? Value::False : Value::True;
  level_[static_cast<size_t>(v)] = static_cast<int32_t>(decision_level());
  reason_[static_cast<size_t>(v)] = reason;
  trail_.push_back(l);
}

Solver::ClauseRef Solver::propagate() {
  ClauseRef confl = kNoClause;
  while (qhead_ < trail_.size()) {
    Lit p = trail_[qhead_++];
    ++stats_.propagations;
    std::vector<Watcher>& ws = watches_[static_cast<size_t>((~p).code)];
    size_t i = 0, j = 0;
    while (i < ws.size()) {
      Watcher w = ws[i];
      if (value(w.blocker) == Value::True) {
        ws[j++] = ws[i++];
        continue;
      }
      ClauseRef c = w.cref;
      Lit* lits = clause_lits(c);
      Lit false_lit = ~p;
      if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
      assert(lits[1] == false_lit);
      ++i;
      Lit first = lits[0];
      if (first != w.blocker && value(first) == Value::True) {
        ws[j++] = {c, first};
        continue;
      }
      uint32_t sz = clause_size(c);
      bool moved = false;
      for (uint32_t k = 2; k < sz; ++k) {
        if (value(lits[k]) != Value::False) {
          std::swap(lits[1], lits[k]);
          watches_[static_cast<size_t>(lits[1].code)].push_back({c, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {c, first};
      if (value(first) == Value::False) {
        confl = c;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        enqueue(first, c);
      }
    }
    ws.resize(j);
    if (confl != kNoClause) break;
  }
  return confl;
}

void Solver::cancel_until(int target_level) {
  if (decision_level() <= target_level) return;
  size_t bound = static_cast<size_t>(trail_lim_[static_cast<size_t>(target_level)]);
  for (size_t i = trail_.size(); i-- > bound;) {
    Var v = trail_[i].var();
    saved_phase_[static_cast<size_t>(v)] =
        assigns_[static_cast<size_t>(v)] == Value::True ? 1 : 0;
    assigns_[static_cast<size_t>(v)] = Value::Undef;
    reason_[static_cast<size_t>(v)] = kNoClause;
    if (!order_.contains(v)) order_.insert(v);
  }
  qhead_ = bound;
  trail_.resize(bound);
  trail_lim_.resize(static_cast<size_t>(target_level));
}

Lit Solver::pick_branch_lit() {
  while (!order_.empty()) {
    Var v = order_.pop_max();
    if (value(v) == Value::Undef) {
      uint8_t saved = saved_phase_[static_cast<size_t>(v)];
      bool phase = saved != 2 ? saved != 0 : default_pol_[static_cast<size_t>(v)] != 0;
      return Lit::make(v, !phase);
    }
  }
  return Lit();
}

void Solver::bump_var(Var v) {
  activity_[static_cast<size_t>(v)] += var_inc_;
  if (activity_[static_cast<size_t>(v)] > 1e100) rescale_activities();
  order_.update_up(v);
}

void Solver::rescale_activities() {
  for (Var v = 1; v <= nvars_; ++v) activity_[static_cast<size_t>(v)] *= 1e-100;
  var_inc_ *= 1e-100;
}

uint32_t Solver::compute_lbd(std::span<const Lit> lits) {
  ++stamp_counter_;
  uint32_t lbd = 0;
  for (Lit l : lits) {
    int32_t lev = level(l.var());
    if (level_stamp_[static_cast<size_t>(lev)] != stamp_counter_) {
      level_stamp_[static_cast<size_t>(lev)] = stamp_counter_;
      ++lbd;
    }
  }
  return lbd;
}

void Solver::analyze(ClauseRef confl, std::vector<Lit>& out_learnt, int& out_btlevel,
                     uint32_t& out_lbd) {
  out_learnt.clear();
  out_learnt.push_back(Lit());  // slot for the asserting literal
  int path_count = 0;
  Lit p;
  size_t index = trail_.size();

  do {
    assert(confl != kNoClause);
    const Lit* lits = clause_lits(confl);
    uint32_t sz = clause_size(confl);
    for (uint32_t k = p.is_defined() ? 1 : 0; k < sz; ++k) {
      Lit q = lits[k];
      Var v = q.var();
      if (!seen_[static_cast<size_t>(v)] && level(v) > 0) {
        bump_var(v);
        seen_[static_cast<size_t>(v)] = 1;
        if (level(v) >= decision_level())
          ++path_count;
        else
          out_learnt.push_back(q);
      }
    }
    while (!seen_[static_cast<size_t>(trail_[--index].var())]) {}
    p = trail_[index];
    confl = reason_[static_cast<size_t>(p.var())];
    seen_[static_cast<size_t>(p.var())] = 0;
    --path_count;
  } while (path_count > 0);
  out_learnt[0] = ~p;

  // Basic conflict-clause minimization: drop literals whose reason clause is
  // entirely covered by the remaining learnt literals. Seen flags stay set
  // for dropped literals until the final sweep so later checks still count
  // them as covered.
  minimize_stack_.assign(out_learnt.begin(), out_learnt.end());
  size_t kept = 1;
  for (size_t i = 1; i < out_learnt.size(); ++i) {
    Var v = out_learnt[i].var();
    ClauseRef r = reason_[static_cast<size_t>(v)];
    bool redundant = false;
    if (r != kNoClause) {
      redundant = true;
      const Lit* lits = clause_lits(r);
      uint32_t sz = clause_size(r);
      for (uint32_t k = 1; k < sz; ++k) {
        Var u = lits[k].var();
        if (!seen_[static_cast<size_t>(u)] && level(u) > 0) {
          redundant = false;
          break;
        }
      }
    }
    if (redundant)
      ++stats_.minimized_literals;
    else
      out_learnt[kept++] = out_learnt[i];
  }
  out_learnt.resize(kept);
  for (Lit l : minimize_stack_) seen_[static_cast<size_t>(l.var())] = 0;

  if (out_learnt.size() == 1) {
    out_btlevel = 0;
  } else {
    size_t max_i = 1;
    for (size_t i = 2; i < out_learnt.size(); ++i)
      if (level(out_learnt[i].var()) > level(out_learnt[max_i].var())) max_i = i;
    std::swap(out_learnt[1], out_learnt[max_i]);
    out_btlevel = level(out_learnt[1].var());
  }
  out_lbd = compute_lbd(out_learnt);
}

void Solver::analyze_final(Lit failed, bool) {
  core_.clear();
  core_.push_back(failed);
  if (decision_level() == 0) return;

  seen_[static_cast<size_t>(failed.var())] = 1;
  size_t bound = static_cast<size_t>(trail_lim_[0]);
  for (size_t i = trail_.size(); i-- > bound;) {
    Var v = trail_[i].var();
    if (!seen_[static_cast<size_t>(v)]) continue;
    ClauseRef r = reason_[static_cast<size_t>(v)];
    if (r == kNoClause) {
      // a decision below the assumption boundary is itself an assumption
      assert(level(v) > 0);
      core_.push_back(trail_[i]);
    } else {
      const Lit* lits = clause_lits(r);
      uint32_t sz = clause_size(r);
      for (uint32_t k = 1; k < sz; ++k)
        if (level(lits[k].var()) > 0) seen_[static_cast<size_t>(lits[k].var())] = 1;
    }
    seen_[static_cast<size_t>(v)] = 0;
  }
  seen_[static_cast<size_t>(failed.var())] = 0;
}

void Solver::reduce_learnts() {
  ++stats_.reductions;
  next_reduce_conflicts_ +=
      options_.first_reduce + static_cast<int64_t>(options_.reduce_increment) * ++reduce_count_;
  auto locked = [&](ClauseRef c) {
    Lit l0 = clause_lits(c)[0];
    return value(l0) == Value::True && reason_[static_cast<size_t>(l0.var())] == c;
  };
  std::vector<ClauseRef> candidates;
  for (ClauseRef c : learnts_)
    if (clause_size(c) > 2 && clause_lbd(c) > 2 && !locked(c)) candidates.push_back(c);
  std::sort(candidates.begin(), candidates.end(), [&](ClauseRef a, ClauseRef b) {
    if (clause_lbd(a) != clause_lbd(b)) return clause_lbd(a) > clause_lbd(b);
    if (clause_size(a) != clause_size(b)) return clause_size(a) > clause_size(b);
    return a < b;
  });
  size_t kill = candidates.size() / 2;
  for (size_t i = 0; i < kill; ++i) {
    detach_clause(candidates[i]);
    mark_dead(candidates[i]);
  }
  learnts_.erase(
      std::remove_if(learnts_.begin(), learnts_.end(),
                     [&](ClauseRef c) { return clause_dead(c); }),
      learnts_.end());
  stats_.deleted_clauses += kill;
  if (wasted_ > 0 &&
      static_cast<double>(wasted_) > options_.garbage_fraction * static_cast<double>(mem_.size()))
    garbage_collect();
}

bool Solver::should_stop() {
  if (stop_.load(std::memory_order_relaxed)) return true;
  if (external_stop_ && external_stop_->load(std::memory_order_relaxed)) return true;
  if (deadline_ && (++tick_ & 255) == 0 &&
      std::chrono::steady_clock::now() > *deadline_)
    return true;
  return false;
}

std::optional<SolveResult> Solver::search(int64_t conflict_budget) {
  int64_t conflicts_here = 0;
  while (true) {
    if (should_stop()) return SolveResult::Interrupted;
    ClauseRef confl = propagate();
    if (confl != kNoClause) {
      ++stats_.conflicts;
      ++conflicts_here;
      if (decision_level() == 0) {
        ok_ = false;
        core_.clear();
        return SolveResult::Unsat;
      }
      int btlevel;
      uint32_t lbd;
      analyze(confl, learnt_tmp_, btlevel, lbd);
      cancel_until(btlevel);
      if (learnt_tmp_.size() == 1) {
        enqueue(learnt_tmp_[0], kNoClause);
      } else {
        ClauseRef c = alloc_clause(learnt_tmp_, true, lbd);
        learnts_.push_back(c);
        attach_clause(c);
        enqueue(learnt_tmp_[0], c);
      }
      ++stats_.learned_clauses;
      decay_var_activity();
      if (static_cast<int64_t>(stats_.conflicts) >= next_reduce_conflicts_)
        reduce_learnts();
    } else {
      if (conflicts_here >= conflict_budget) return std::nullopt;  // restart
      Lit next;
      while (decision_level() < static_cast<int>(assumptions_.size())) {
        Lit a = assumptions_[static_cast<size_t>(decision_level())];
        if (value(a) == Value::True) {
          new_decision_level();  // dummy level, assumption already holds
        } else if (value(a) == Value::False) {
          analyze_final(a, false);
          return SolveResult::Unsat;
        } else {
          next = a;
          break;
        }
      }
      if (!next.is_defined()) {
        next = pick_branch_lit();
        if (!next.is_defined()) return SolveResult::Sat;  // total assignment
        ++stats_.decisions;
      }
      new_decision_level();
      enqueue(next, kNoClause);
    }
  }
}

SolveResult Solver::solve(std::initializer_list<Lit> assumptions) {
  return solve(std::span<const Lit>(assumptions.begin(), assumptions.size()));
}

SolveResult Solver::solve(std::span<const Lit> assumptions) {
  ++stats_.solves;
  model_.clear();
  core_.clear();
  for (Lit a : assumptions)
    if (!a.is_defined() || a.var() > nvars_)
      throw std::out_of_range("unknown variable in assumptions");
  if (!ok_) return SolveResult::Unsat;

  assumptions_.assign(assumptions.begin(), assumptions.end());
  cancel_until(0);
  if (propagate() != kNoClause) {
    ok_ = false;
    assumptions_.clear();
    return SolveResult::Unsat;
  }

  SolveResult result;
  int curr_restarts = 0;
  while (true) {
    if (should_stop()) {
      result = SolveResult::Interrupted;
      break;
    }
    int64_t budget = luby(curr_restarts) * options_.restart_base;
    auto outcome = search(budget);
    ++curr_restarts;
    if (outcome) {
      result = *outcome;
      break;
    }
    ++stats_.restarts;
    cancel_until(0);
  }

  if (result == SolveResult::Sat) {
    model_.resize(static_cast<size_t>(nvars_) + 1);
    for (Var v = 1; v <= nvars_; ++v) {
      assert(value(v) != Value::Undef);
      model_[static_cast<size_t>(v)] = value(v) == Value::True ? 1 : 0;
    }
    if (options_.check_models) {
      for (const auto& clause : original_clauses_) {
        bool sat = false;
        for (Lit l : clause)
          if (model_value(l)) {
            sat = true;
            break;
          }
        if (!sat) throw std::logic_error("model violates an added clause");
      }
    }
  }
  cancel_until(0);
  assumptions_.clear();
  return result;
}

bool Solver::model_value(Var v) const {
  assert(!model_.empty() && v >= 1 && v <= nvars_);
  return model_[static_cast<size_t>(v)] != 0;
}

bool Solver::model_value(Lit l) const {
  bool b = model_value(l.var());
  return l.is_negative() ? !b : b;
}

void Solver::dump_dimacs(std::ostream& out) const {
  out << "p cnf " << nvars_ << ' ' << root_units_.size() + clauses_.size() << '\n';
  for (Lit u : root_units_) out << u.to_dimacs() << " 0\n";
  for (ClauseRef c : clauses_) {
    const Lit* lits = clause_lits(c);
    uint32_t sz = clause_size(c);
    for (uint32_t k = 0; k < sz; ++k) out << lits[k].to_dimacs() << ' ';
    out << "0\n";
  }
}

}  // namespace recore::sat
