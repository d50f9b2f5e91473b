#include "regmaps/todd_coxeter.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace regmaps {

namespace {

constexpr int32_t kUndef = -1;

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgens, uint32_t max_cosets)
      : max_cosets_(max_cosets) {
    for (const Word& r : p.relators) {
      Word cr = cyclic_reduce(r);
      if (!cr.empty()) relators_.push_back(std::move(cr));
    }
    for (const Word& s : subgens) {
      Word w = free_reduce(s);
      if (!w.empty()) subgens_.push_back(std::move(w));
    }
    new_coset();
  }

  CosetTable run() {
    for (const Word& s : subgens_) scan_and_fill(0, s);
    for (uint32_t c = 0; c < tab_.size(); ++c) {
      if (!alive(c)) continue;
      // The squares ri^2 cancel under free reduction (letters are their own
      // inverses), so they never appear among the relators; their effect --
      // every row entry defined -- is forced here instead.
      for (Gen g = 0; g < 3 && alive(c); ++g) {
        if (tab_[c][g] == kUndef) set_pair(c, g, new_coset());
      }
      if (!alive(c)) continue;
      for (const Word& r : relators_) {
        scan_and_fill(c, r);
        if (!alive(c)) break;  // c merged into an earlier coset; its rep was or will be scanned
      }
    }
    return compact();
  }

 private:
  bool alive(uint32_t c) const { return uf_[c] == static_cast<int32_t>(c); }

  uint32_t rep(uint32_t c) {
    while (uf_[c] != static_cast<int32_t>(c)) {
      uf_[c] = uf_[uf_[c]];
      c = static_cast<uint32_t>(uf_[c]);
    }
    return c;
  }

  uint32_t new_coset() {
    if (tab_.size() >= max_cosets_) throw EnumerationLimitExceeded(max_cosets_);
    tab_.push_back({kUndef, kUndef, kUndef});
    uf_.push_back(static_cast<int32_t>(tab_.size() - 1));
    return static_cast<uint32_t>(tab_.size() - 1);
  }

  void scan_and_fill(uint32_t start, const Word& w) {
    uint32_t f = rep(start);
    uint32_t b = f;
    size_t i = 0;
    size_t r = w.size();  // positions [i, r) remain to be scanned
    while (true) {
      while (i < r && tab_[f][w[i]] != kUndef) {
        f = rep(static_cast<uint32_t>(tab_[f][w[i]]));
        ++i;
      }
      if (i == r) {
        if (f != b) coincide(f, b);
        return;
      }
      while (r > i && tab_[b][w[r - 1]] != kUndef) {
        b = rep(static_cast<uint32_t>(tab_[b][w[r - 1]]));
        --r;
      }
      if (r < i + 1) {  // backward scan crossed the forward position
        if (f != b) coincide(f, b);
        return;
      }
      if (r == i + 1) {  // single gap: deduction
        Gen g = w[i];
        set_pair(f, g, b);
        return;
      }
      // fill the forward gap with a fresh coset
      uint32_t d = new_coset();
      set_pair(f, w[i], d);
      f = d;
      ++i;
    }
  }

  void set_pair(uint32_t a, Gen g, uint32_t b) {
    // a.g = b, hence b.g = a (involutory generator)
    int32_t& ag = tab_[a][g];
    if (ag != kUndef) {
      uint32_t other = rep(static_cast<uint32_t>(ag));
      if (other != b) coincide(other, b);
      return;
    }
    int32_t& bg = tab_[b][g];
    if (bg != kUndef) {
      uint32_t other = rep(static_cast<uint32_t>(bg));
      if (other != a) coincide(other, a);
      return;
    }
    ag = static_cast<int32_t>(b);
    tab_[b][g] = static_cast<int32_t>(a);
  }

  void merge(uint32_t a, uint32_t b, std::vector<uint32_t>& dead) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uf_[b] = static_cast<int32_t>(a);
    dead.push_back(b);
  }

  void coincide(uint32_t a, uint32_t b) {
    std::vector<uint32_t> dead;
    merge(a, b, dead);
    for (size_t idx = 0; idx < dead.size(); ++idx) {
      uint32_t y = dead[idx];
      for (Gen g = 0; g < 3; ++g) {
        int32_t d = tab_[y][g];
        if (d == kUndef) continue;
        tab_[y][g] = kUndef;
        // remove the mirror reference before re-pairing
        if (tab_[d][g] == static_cast<int32_t>(y)) tab_[d][g] = kUndef;
        uint32_t u = rep(y);
        uint32_t v = rep(static_cast<uint32_t>(d));
        int32_t ug = tab_[u][g];
        if (ug != kUndef) {
          merge(static_cast<uint32_t>(ug), v, dead);
          continue;
        }
        int32_t vg = tab_[v][g];
        if (vg != kUndef) {
          merge(static_cast<uint32_t>(vg), u, dead);
          continue;
        }
        tab_[u][g] = static_cast<int32_t>(v);
        tab_[v][g] = static_cast<int32_t>(u);
      }
    }
  }

  CosetTable compact() {
    std::vector<uint32_t> newid(tab_.size(), 0);
    uint32_t n = 0;
    for (uint32_t c = 0; c < tab_.size(); ++c)
      if (alive(c)) newid[c] = n++;
    CosetTable out;
    out.rows.resize(n);
    for (uint32_t c = 0; c < tab_.size(); ++c) {
      if (!alive(c)) continue;
      for (Gen g = 0; g < 3; ++g) {
        int32_t d = tab_[c][g];
        if (d == kUndef) throw std::logic_error("incomplete table after enumeration");
        out.rows[newid[c]][g] = newid[rep(static_cast<uint32_t>(d))];
      }
    }
    return out;
  }

  uint32_t max_cosets_;
  std::vector<Word> relators_;
  std::vector<Word> subgens_;
  std::vector<std::array<int32_t, 3>> tab_;
  std::vector<int32_t> uf_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        const EnumerationLimits& limits) {
  if (limits.max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  return Enumerator(p, subgens, limits.max_cosets).run();
}

}  // namespace regmaps
