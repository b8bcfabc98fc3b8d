#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace recore {

// A set of node ids over a fixed universe [0, n), backed by a bit vector.
// Cardinality is cached and kept in sync by the mutators. States, closed
// neighborhoods and BFS frontiers are all StateSets.
class StateSet {
 public:
  StateSet() = default;

  explicit StateSet(int universe)
      : n_(universe), words_(static_cast<size_t>((universe + 63) / 64), 0) {
    assert(universe >= 0);
  }

  static StateSet of(int universe, std::span<const int> nodes) {
    StateSet s(universe);
    for (int v : nodes) s.insert(v);
    return s;
  }

  static StateSet of(int universe, std::initializer_list<int> nodes) {
    return of(universe, std::span<const int>(nodes.begin(), nodes.size()));
  }

  int universe_size() const { return n_; }
  int cardinality() const { return card_; }
  bool empty() const { return card_ == 0; }

  bool contains(int v) const {
    assert(v >= 0 && v < n_);
    return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void insert(int v) {
    assert(v >= 0 && v < n_);
    uint64_t& w = words_[static_cast<size_t>(v) >> 6];
    uint64_t bit = uint64_t{1} << (v & 63);
    if (!(w & bit)) {
      w |= bit;
      ++card_;
    }
  }

  void erase(int v) {
    assert(v >= 0 && v < n_);
    uint64_t& w = words_[static_cast<size_t>(v) >> 6];
    uint64_t bit = uint64_t{1} << (v & 63);
    if (w & bit) {
      w &= ~bit;
      --card_;
    }
  }

  void clear() {
    std::fill(words_.begin(), words_.end(), 0);
    card_ = 0;
  }

  bool intersects(const StateSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const StateSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  int symmetric_difference_size(const StateSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] ^ o.words_[i]);
    return c;
  }

  // |this \ o|
  int difference_size(const StateSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & ~o.words_[i]);
    return c;
  }

  void unite_with(const StateSet& o) {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= o.words_[i];
      c += std::popcount(words_[i]);
    }
    card_ = c;
  }

  void subtract(const StateSet& o) {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= ~o.words_[i];
      c += std::popcount(words_[i]);
    }
    card_ = c;
  }

  // Members in ascending order.
  std::vector<int> to_nodes() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(card_));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  std::span<const uint64_t> words() const { return words_; }

  bool operator==(const StateSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

  // Strict total order on same-universe sets; used for canonical sorting.
  static bool word_less(const StateSet& a, const StateSet& b) {
    assert(a.n_ == b.n_);
    for (size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

 private:
  int n_ = 0;
  int card_ = 0;
  std::vector<uint64_t> words_;
};

struct StateSetHash {
  size_t operator()(const StateSet& s) const noexcept {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(s.universe_size());
    for (uint64_t w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<size_t>(h ^ (h >> 33));
  }
};

}  // namespace recore
