#include "recore/encode/encoder.hpp"

#include <cassert>
#include <stdexcept>

namespace recore::encode {

using sat::Lit;

std::optional<HintSet> parse_hints(std::string_view text) {
  if (text == "none" || text.empty()) return HintSet{};
  HintSet hints;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = comma == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, comma - pos);
    if (tok == "t1")
      hints.set(Hint::T1);
    else if (tok == "t2")
      hints.set(Hint::T2);
    else if (tok == "t3")
      hints.set(Hint::T3);
    else if (tok == "d1")
      hints.set(Hint::D1);
    else if (tok == "d2")
      hints.set(Hint::D2);
    else
      return std::nullopt;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return hints;
}

std::string to_string(HintSet hints) {
  if (hints.empty()) return "none";
  std::string out;
  auto append = [&](Hint h, const char* name) {
    if (hints.has(h)) {
      if (!out.empty()) out += ',';
      out += name;
    }
  };
  append(Hint::T1, "t1");
  append(Hint::T2, "t2");
  append(Hint::T3, "t3");
  append(Hint::D1, "d1");
  append(Hint::D2, "d2");
  return out;
}

void encode_domination(const Graph& g, int t, VarMap& vm, ClauseSink& sink) {
  assert(t >= 0 && t <= vm.max_step());
  std::vector<Lit> clause;
  if (vm.variant() == EncodingVariant::Base2) {
    for (int x = 0; x < g.node_count(); ++x) {
      clause.clear();
      clause.push_back(vm.in(x, t));
      for (int y : g.neighbors(x)) clause.push_back(vm.in(y, t));
      sink.add(clause);
    }
    return;
  }
  // Base1: dominated(X,t) <-> in(X,t) v OR in(Y,t), plus the unit.
  for (int x = 0; x < g.node_count(); ++x) {
    Lit dom = vm.dominated(x, t);
    sink.add({~vm.in(x, t), dom});
    for (int y : g.neighbors(x)) sink.add({~vm.in(y, t), dom});
    clause.clear();
    clause.push_back(~dom);
    clause.push_back(vm.in(x, t));
    for (int y : g.neighbors(x)) clause.push_back(vm.in(y, t));
    sink.add(clause);
    sink.add({dom});
  }
}

void encode_start(const StateSet& start, VarMap& vm, ClauseSink& sink) {
  assert(vm.max_step() >= 0);
  for (int x = 0; x < vm.node_count(); ++x)
    sink.add({start.contains(x) ? vm.in(x, 0) : ~vm.in(x, 0)});
}

void encode_goal_check(const StateSet& goal, int t, VarMap& vm, ClauseSink& sink) {
  assert(vm.has_query(t) && t <= vm.max_step());
  Lit q = vm.query_lit(t);
  for (int x = 0; x < vm.node_count(); ++x)
    sink.add({~q, goal.contains(x) ? vm.in(x, t) : ~vm.in(x, t)});
}

namespace {

void encode_move_definitions(int t, VarMap& vm, ClauseSink& sink) {
  for (int x = 0; x < vm.node_count(); ++x) {
    Lit rem = vm.removed(x, t);
    Lit before = vm.in(x, t - 1);
    Lit now = vm.in(x, t);
    sink.add({~rem, before});
    sink.add({~rem, ~now});
    sink.add({rem, ~before, now});
  }
  for (int x = 0; x < vm.node_count(); ++x) {
    Lit add = vm.added(x, t);
    Lit before = vm.in(x, t - 1);
    Lit now = vm.in(x, t);
    sink.add({~add, ~before});
    sink.add({~add, now});
    sink.add({add, before, ~now});
  }
}

std::vector<Lit> in_lits(int t, VarMap& vm) {
  std::vector<Lit> lits;
  lits.reserve(static_cast<size_t>(vm.node_count()));
  for (int x = 0; x < vm.node_count(); ++x) lits.push_back(vm.in(x, t));
  return lits;
}

}  // namespace

void encode_transition_tj(const Graph& g, int t, int k, VarMap& vm, ClauseSink& sink) {
  assert(t >= 1 && t <= vm.max_step());
  encode_move_definitions(t, vm, sink);

  std::vector<Lit> lits;
  lits.reserve(static_cast<size_t>(g.node_count()));
  for (int x = 0; x < g.node_count(); ++x) lits.push_back(vm.removed(x, t));
  encode_cardinality(lits, 1, 1, vm, sink);

  lits.clear();
  for (int x = 0; x < g.node_count(); ++x) lits.push_back(vm.added(x, t));
  encode_cardinality(lits, 1, 1, vm, sink);

  encode_cardinality(in_lits(t, vm), k, k, vm, sink);
}

void encode_transition_tar(const Graph& g, int t, int threshold, VarMap& vm,
                           ClauseSink& sink) {
  assert(t >= 1 && t <= vm.max_step());
  encode_move_definitions(t, vm, sink);

  std::vector<Lit> moves;
  moves.reserve(2 * static_cast<size_t>(g.node_count()));
  for (int x = 0; x < g.node_count(); ++x) moves.push_back(vm.removed(x, t));
  for (int x = 0; x < g.node_count(); ++x) moves.push_back(vm.added(x, t));
  encode_cardinality(moves, 1, 1, vm, sink);

  encode_cardinality(in_lits(t, vm), 0, std::min(threshold, g.node_count()), vm, sink);
}

std::vector<Lit> encode_counter_ladder(std::span<const Lit> lits, int rows, VarMap& vm,
                                       ClauseSink& sink) {
  int n = static_cast<int>(lits.size());
  assert(rows >= 1 && rows <= n);
  int ladder = vm.begin_ladder();

  // s[i][j] <-> at least j of lits[0..i) are true; rows j in 1..min(i,rows)
  std::vector<std::vector<Lit>> s(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    int top = std::min(i, rows);
    s[static_cast<size_t>(i)].reserve(static_cast<size_t>(top));
    for (int j = 1; j <= top; ++j)
      s[static_cast<size_t>(i)].push_back(
          Lit::positive(vm.fresh_counter(ladder, i, j)));
  }
  auto row = [&](int i, int j) { return s[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]; };
  auto exists = [&](int i, int j) { return j >= 1 && j <= std::min(i, rows); };

  sink.add({~lits[0], row(1, 1)});
  sink.add({~row(1, 1), lits[0]});
  for (int i = 2; i <= n; ++i) {
    Lit xi = lits[static_cast<size_t>(i - 1)];
    int top = std::min(i, rows);
    for (int j = 1; j <= top; ++j) {
      // forward: carries and increments imply the count
      if (exists(i - 1, j)) sink.add({~row(i - 1, j), row(i, j)});
      if (j == 1)
        sink.add({~xi, row(i, 1)});
      else
        sink.add({~xi, ~row(i - 1, j - 1), row(i, j)});
      // backward: the count implies a carry or an increment
      if (j == 1) {
        sink.add({~row(i, 1), row(i - 1, 1), xi});
      } else if (exists(i - 1, j)) {
        sink.add({~row(i, j), row(i - 1, j), xi});
        sink.add({~row(i, j), row(i - 1, j), row(i - 1, j - 1)});
      } else {  // j == i: all of the first i literals are true
        sink.add({~row(i, j), xi});
        sink.add({~row(i, j), row(i - 1, j - 1)});
      }
    }
  }

  std::vector<Lit> top_row;
  top_row.reserve(static_cast<size_t>(rows));
  for (int j = 1; j <= rows; ++j) top_row.push_back(row(n, j));
  return top_row;
}

void encode_cardinality(std::span<const Lit> lits, int lo, int hi, VarMap& vm,
                        ClauseSink& sink) {
  int n = static_cast<int>(lits.size());
  if (lo < 0 || lo > hi || hi > n)
    throw std::invalid_argument("cardinality bounds out of range: lo=" +
                                std::to_string(lo) + " hi=" + std::to_string(hi) +
                                " n=" + std::to_string(n));
  if (n == 0) return;
  if (lo == n) {
    for (Lit l : lits) sink.add({l});
    return;
  }
  if (hi == 0) {
    for (Lit l : lits) sink.add({~l});
    return;
  }
  if (lo == 0 && hi == n) return;  // vacuous
  if (hi == 1 && n <= 6) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        sink.add({~lits[static_cast<size_t>(i)], ~lits[static_cast<size_t>(j)]});
    if (lo == 1) sink.add(lits);
    return;
  }

  int rows = hi < n ? hi + 1 : lo;
  std::vector<Lit> top = encode_counter_ladder(lits, rows, vm, sink);
  if (lo >= 1) sink.add({top[static_cast<size_t>(lo - 1)]});
  if (hi < n) sink.add({~top[static_cast<size_t>(hi)]});
}

void encode_hint(Hint h, int t, int bound, const Instance& inst, VarMap& vm,
                 ClauseSink& sink) {
  const Graph& g = inst.graph;
  switch (h) {
    case Hint::T3: {
      assert(t >= 1 && t <= vm.max_step());
      std::vector<Lit> clause;
      for (int x = 0; x < g.node_count(); ++x) {
        clause.clear();
        clause.push_back(~vm.removed(x, t));
        for (int y : g.neighbors(x)) clause.push_back(vm.in(y, t - 1));
        for (int y : g.neighbors(x)) clause.push_back(vm.added(y, t));
        sink.add(clause);
      }
      return;
    }
    case Hint::D1: {
      assert(t >= 0 && t <= vm.max_step());
      if (t >= inst.start.cardinality()) return;  // vacuous
      std::vector<Lit> vacated;
      inst.start.for_each([&](int x) { vacated.push_back(~vm.in(x, t)); });
      encode_cardinality(vacated, 0, t, vm, sink);
      return;
    }
    case Hint::D2: {
      assert(t >= 0 && t <= bound && vm.has_query(bound));
      if (bound - t >= inst.goal.cardinality()) return;  // vacuous
      std::vector<Lit> missing;
      inst.goal.for_each([&](int x) { missing.push_back(~vm.in(x, t)); });
      GuardedSink guarded(sink, ~vm.query_lit(bound));
      encode_cardinality(missing, 0, bound - t, vm, guarded);
      return;
    }
    case Hint::T1: {
      assert(t >= 2 && t <= vm.max_step());
      for (int x = 0; x < g.node_count(); ++x)
        sink.add({~vm.removed(x, t - 1), ~vm.added(x, t)});
      return;
    }
    case Hint::T2: {
      assert(t >= 2 && t <= vm.max_step());
      for (int x = 0; x < g.node_count(); ++x)
        sink.add({~vm.added(x, t - 1), ~vm.removed(x, t)});
      return;
    }
  }
  throw std::invalid_argument("unknown hint id");
}

void encode_distinctness(int t, VarMap& vm, ClauseSink& sink) {
  assert(t >= 1 && t <= vm.max_step());
  std::vector<Lit> cover;
  for (int prev = 0; prev < t; ++prev) {
    cover.clear();
    for (int x = 0; x < vm.node_count(); ++x) {
      Lit d = Lit::positive(vm.fresh_diff(x, prev, t));
      sink.add({~d, vm.in(x, prev), vm.in(x, t)});
      sink.add({~d, ~vm.in(x, prev), ~vm.in(x, t)});
      cover.push_back(d);
    }
    sink.add(cover);
  }
}

}  // namespace recore::encode
