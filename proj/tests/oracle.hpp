#ifndef TESTS_ORACLE_HPP_
#define TESTS_ORACLE_HPP_

// Brute-force cross-checks used only by the tests.
//
// low_index_normal_tables enumerates every complete coset table of
// D = <r0, r1, r2 | ri^2, (r0 r2)^2> on at most max_index cosets whose
// point-0 stabilizer is normal, by backtracking over partial tables.  It
// shares nothing with the library's Todd-Coxeter or descent machinery: it
// discovers tables cell by cell instead of deriving them from relators or
// module functionals, so agreement with the census is an independent check.
//
// Cells are filled in row-major order and new rows are numbered first-seen,
// which is exactly the breadth-first canonical numbering: every table the
// search emits is already canonical, and each subgroup appears once.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "regmaps/coset_table.hpp"
#include "regmaps/word.hpp"

namespace regmaps::testing {

// Stabilizers of all points coincide (the point-0 stabilizer is normal in
// D) iff every Schreier generator fixes every point.
inline bool is_normal_table(const CosetTable& t) {
  BfsTree tree = bfs_tree(t);
  std::vector<Word> words(t.size());
  for (uint32_t c = 0; c < t.size(); ++c) words[c] = flag_word(tree, c);
  for (uint32_t c = 0; c < t.size(); ++c) {
    for (Gen g = 0; g < 3; ++g) {
      uint32_t d = t.apply(c, g);
      Word u = words[c];
      u.push_back(g);
      Word back = inverse(words[d]);
      u.insert(u.end(), back.begin(), back.end());
      for (uint32_t x = 0; x < t.size(); ++x)
        if (t.trace(x, u) != x) return false;
    }
  }
  return true;
}

class LowIndexNormalSearch {
 public:
  explicit LowIndexNormalSearch(uint32_t max_index) : max_index_(max_index) {}

  std::vector<CosetTable> run() {
    tab_.assign(1, {kNone, kNone, kNone});
    path_.assign(1, {});
    trail_.clear();
    results_.clear();
    search();
    return std::move(results_);
  }

 private:
  static constexpr int32_t kNone = -1;

  struct Cell {
    uint32_t c;
    Gen g;
  };

  // c.g = d and d.g = c; false on conflict with existing entries.
  bool set_pair(uint32_t c, Gen g, uint32_t d) {
    if (tab_[c][g] != kNone) return tab_[c][g] == static_cast<int32_t>(d);
    if (tab_[d][g] != kNone) return false;
    tab_[c][g] = static_cast<int32_t>(d);
    trail_.push_back({c, g});
    if (d != c) {
      tab_[d][g] = static_cast<int32_t>(c);
      trail_.push_back({d, g});
    }
    return true;
  }

  // Forces consequences of (r0 r2)^2 at every coset until a fixpoint;
  // false on contradiction.  No coincidences: partial tables only extend.
  bool propagate() {
    const Word rel{kR0, kR2, kR0, kR2};
    bool changed = true;
    while (changed) {
      changed = false;
      for (uint32_t c = 0; c < tab_.size(); ++c) {
        uint32_t f = c, b = c;
        size_t i = 0, r = rel.size();
        while (i < r && tab_[f][rel[i]] != kNone) f = static_cast<uint32_t>(tab_[f][rel[i++]]);
        while (r > i && tab_[b][rel[r - 1]] != kNone)
          b = static_cast<uint32_t>(tab_[b][rel[--r]]);
        if (i == r) {
          if (f != b) return false;
        } else if (r == i + 1) {
          if (!set_pair(f, rel[i], b)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  // No fully-traceable Schreier generator may move any point (each fixes
  // point 0 by construction).  Safe pruning: traces in a partial table
  // agree with any completion.
  bool normal_so_far() const {
    for (uint32_t c = 0; c < tab_.size(); ++c) {
      for (Gen g = 0; g < 3; ++g) {
        if (tab_[c][g] == kNone) continue;
        uint32_t d = static_cast<uint32_t>(tab_[c][g]);
        Word u = path_[c];
        u.push_back(g);
        Word back = inverse(path_[d]);
        u.insert(u.end(), back.begin(), back.end());
        for (uint32_t x = 0; x < tab_.size(); ++x) {
          uint32_t y = x;
          bool complete = true;
          for (Gen h : u) {
            if (tab_[y][h] == kNone) {
              complete = false;
              break;
            }
            y = static_cast<uint32_t>(tab_[y][h]);
          }
          if (complete && y != x) return false;
        }
      }
    }
    return true;
  }

  void search() {
    uint32_t c = 0;
    Gen g = 0;
    bool found = false;
    for (c = 0; c < tab_.size() && !found; c += found ? 0 : 1)
      for (g = 0; g < 3 && !found; ++g)
        if (tab_[c][g] == kNone) found = true;
    if (found) --g;  // undo the inner increment past the hit
    if (!found) {
      CosetTable t;
      t.rows.resize(tab_.size());
      for (uint32_t x = 0; x < tab_.size(); ++x)
        for (Gen h = 0; h < 3; ++h) t.rows[x][h] = static_cast<uint32_t>(tab_[x][h]);
      results_.push_back(std::move(t));
      return;
    }
    uint32_t limit = static_cast<uint32_t>(tab_.size());
    for (uint32_t d = 0; d <= limit; ++d) {
      size_t trail_mark = trail_.size();
      size_t rows_mark = tab_.size();
      if (d == rows_mark) {
        if (rows_mark >= max_index_) break;
        tab_.push_back({kNone, kNone, kNone});
        Word w = path_[c];
        w.push_back(g);
        path_.push_back(std::move(w));
      } else if (tab_[d][g] != kNone) {
        continue;
      }
      if (set_pair(c, g, d) && propagate() && normal_so_far()) search();
      while (trail_.size() > trail_mark) {
        tab_[trail_.back().c][trail_.back().g] = kNone;
        trail_.pop_back();
      }
      tab_.resize(rows_mark);
      path_.resize(rows_mark);
    }
  }

  uint32_t max_index_;
  std::vector<std::array<int32_t, 3>> tab_;
  std::vector<Word> path_;  // first-seen word from point 0 to each row
  std::vector<Cell> trail_;
  std::vector<CosetTable> results_;
};

inline std::vector<CosetTable> low_index_normal_tables(uint32_t max_index) {
  return LowIndexNormalSearch(max_index).run();
}

}  // namespace regmaps::testing

#endif  // TESTS_ORACLE_HPP_
