#include "recore/encode/var_map.hpp"

#include <cassert>
#include <stdexcept>

namespace recore::encode {

std::string to_string(EncodingVariant v) {
  return v == EncodingVariant::Base1 ? "base1" : "base2";
}

VarMap::VarMap(sat::Solver& solver, int node_count, EncodingVariant variant)
    : solver_(solver), n_(node_count), variant_(variant) {}

// The solver may hold variables created outside this map; the descriptor
// table is sparse and leaves those unregistered.
sat::Var VarMap::alloc(Desc d) {
  sat::Var v = solver_.new_var();
  if (desc_.size() <= static_cast<size_t>(v)) desc_.resize(static_cast<size_t>(v) + 1);
  desc_[static_cast<size_t>(v)] = d;
  return v;
}

void VarMap::ensure_step(int t) {
  assert(t >= 0);
  while (static_cast<int>(steps_.size()) <= t) {
    int step = static_cast<int>(steps_.size());
    StepVars sv;
    sv.in.reserve(static_cast<size_t>(n_));
    for (int x = 0; x < n_; ++x)
      sv.in.push_back(alloc({AtomKind::In, x, step, 0}));
    if (variant_ == EncodingVariant::Base1) {
      sv.dominated.reserve(static_cast<size_t>(n_));
      for (int x = 0; x < n_; ++x)
        sv.dominated.push_back(alloc({AtomKind::Dominated, x, step, 0}));
    }
    if (step >= 1) {
      sv.removed.reserve(static_cast<size_t>(n_));
      sv.added.reserve(static_cast<size_t>(n_));
      for (int x = 0; x < n_; ++x)
        sv.removed.push_back(alloc({AtomKind::Removed, x, step, 0}));
      for (int x = 0; x < n_; ++x)
        sv.added.push_back(alloc({AtomKind::Added, x, step, 0}));
    }
    steps_.push_back(std::move(sv));
  }
}

sat::Lit VarMap::in(int x, int t) const {
  assert(t >= 0 && t <= max_step() && x >= 0 && x < n_);
  return sat::Lit::positive(steps_[static_cast<size_t>(t)].in[static_cast<size_t>(x)]);
}

sat::Lit VarMap::removed(int x, int t) const {
  assert(t >= 1 && t <= max_step() && x >= 0 && x < n_);
  return sat::Lit::positive(steps_[static_cast<size_t>(t)].removed[static_cast<size_t>(x)]);
}

sat::Lit VarMap::added(int x, int t) const {
  assert(t >= 1 && t <= max_step() && x >= 0 && x < n_);
  return sat::Lit::positive(steps_[static_cast<size_t>(t)].added[static_cast<size_t>(x)]);
}

sat::Lit VarMap::dominated(int x, int t) const {
  assert(variant_ == EncodingVariant::Base1);
  assert(t >= 0 && t <= max_step() && x >= 0 && x < n_);
  return sat::Lit::positive(steps_[static_cast<size_t>(t)].dominated[static_cast<size_t>(x)]);
}

sat::Lit VarMap::query(int t) {
  assert(t >= 0 && t <= static_cast<int>(query_.size()));
  if (t == static_cast<int>(query_.size()))
    query_.push_back(alloc({AtomKind::Query, t, 0, 0}));
  return sat::Lit::positive(query_[static_cast<size_t>(t)]);
}

sat::Lit VarMap::query_lit(int t) const {
  assert(has_query(t));
  return sat::Lit::positive(query_[static_cast<size_t>(t)]);
}

int VarMap::begin_ladder() { return ladder_count_++; }

sat::Var VarMap::fresh_counter(int ladder, int i, int j) {
  return alloc({AtomKind::Counter, ladder, i, j});
}

sat::Var VarMap::fresh_diff(int x, int t_prev, int t) {
  return alloc({AtomKind::Diff, x, t_prev, t});
}

std::string VarMap::name(sat::Var v) const {
  if (v < 1 || static_cast<size_t>(v) >= desc_.size()) return "v" + std::to_string(v);
  const Desc& d = desc_[static_cast<size_t>(v)];
  switch (d.kind) {
    case AtomKind::Unregistered:
      return "v" + std::to_string(v);
    case AtomKind::In:
      return "in(" + std::to_string(d.a + 1) + "," + std::to_string(d.b) + ")";
    case AtomKind::Removed:
      return "removed(" + std::to_string(d.a + 1) + "," + std::to_string(d.b) + ")";
    case AtomKind::Added:
      return "added(" + std::to_string(d.a + 1) + "," + std::to_string(d.b) + ")";
    case AtomKind::Dominated:
      return "dominated(" + std::to_string(d.a + 1) + "," + std::to_string(d.b) + ")";
    case AtomKind::Query:
      return "query(" + std::to_string(d.a) + ")";
    case AtomKind::Counter:
      return "s" + std::to_string(d.a) + "(" + std::to_string(d.b) + "," +
             std::to_string(d.c) + ")";
    case AtomKind::Diff:
      return "d(" + std::to_string(d.a + 1) + "," + std::to_string(d.b) + "," +
             std::to_string(d.c) + ")";
  }
  return "v" + std::to_string(v);
}

std::string VarMap::name(sat::Lit l) const {
  return l.is_negative() ? "~" + name(l.var()) : name(l.var());
}

std::string VarMap::format_clause(std::span<const sat::Lit> lits) const {
  std::string out;
  for (size_t i = 0; i < lits.size(); ++i) {
    if (i) out += " | ";
    out += name(lits[i]);
  }
  return out;
}

StateSet state_from_model(const sat::Solver& solver, const VarMap& vm, int t) {
  StateSet s(vm.node_count());
  for (int x = 0; x < vm.node_count(); ++x)
    if (solver.model_value(vm.in(x, t))) s.insert(x);
  return s;
}

}  // namespace recore::encode
