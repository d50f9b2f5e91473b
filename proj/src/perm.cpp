#include "regmaps/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace regmaps {

Permutation::Permutation(size_t degree) : img(degree) {
  std::iota(img.begin(), img.end(), 0u);
}

Permutation Permutation::identity(size_t degree) { return Permutation(degree); }

bool Permutation::is_identity() const {
  for (uint32_t p = 0; p < img.size(); ++p)
    if (img[p] != p) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation out;
  out.img.resize(img.size());
  for (uint32_t p = 0; p < img.size(); ++p) out.img[p] = o.img[img[p]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img.resize(img.size());
  for (uint32_t p = 0; p < img.size(); ++p) out.img[img[p]] = p;
  return out;
}

void Permutation::swap_fixed(uint32_t a, uint32_t b) {
  if (a >= degree() || b >= degree()) throw std::out_of_range("swap_fixed: point out of range");
  if (a == b) throw std::invalid_argument("swap_fixed: points coincide");
  if (img[a] != a || img[b] != b)
    throw std::invalid_argument("swap_fixed: transpositions are not disjoint");
  img[a] = b;
  img[b] = a;
}

uint64_t permutation_order(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  uint64_t ord = 1;
  for (uint32_t s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    uint64_t len = 0;
    for (uint32_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation permutation_power(const Permutation& p, uint64_t k) {
  Permutation acc = Permutation::identity(p.degree());
  Permutation base = p;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string cycles_string(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::ostringstream os;
  bool any = false;
  for (uint32_t s = 0; s < p.degree(); ++s) {
    if (seen[s] || p[s] == s) continue;
    any = true;
    os << '(';
    bool first = true;
    for (uint32_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << (x + 1);
      first = false;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

namespace {

uint32_t first_moved(const Permutation& p) {
  for (uint32_t x = 0; x < p.degree(); ++x)
    if (p[x] != x) return x;
  throw std::logic_error("first_moved on identity");
}

struct ChainLevel {
  uint32_t base = 0;
  std::vector<const Permutation*> gens;
  std::unordered_map<uint32_t, Permutation> transversal;  // point -> u with base^u = point
};

void rebuild_orbit(ChainLevel& lvl, size_t degree) {
  lvl.transversal.clear();
  lvl.transversal.emplace(lvl.base, Permutation::identity(degree));
  std::vector<uint32_t> queue = {lvl.base};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t p = queue[qi];
    for (const Permutation* g : lvl.gens) {
      uint32_t q = (*g)[p];
      if (lvl.transversal.count(q)) continue;
      lvl.transversal.emplace(q, lvl.transversal.at(p) * *g);
      queue.push_back(q);
    }
  }
}

// Sifts g through levels [from, end); returns the level where it sticks
// (levels.size() if it fixes every base point) and the residue.
std::pair<size_t, Permutation> strip(Permutation g, const std::vector<ChainLevel>& levels,
                                     size_t from) {
  for (size_t i = from; i < levels.size(); ++i) {
    if (g.is_identity()) return {levels.size(), std::move(g)};
    uint32_t x = g[levels[i].base];
    auto it = levels[i].transversal.find(x);
    if (it == levels[i].transversal.end()) return {i, std::move(g)};
    g = g * it->second.inverse();
  }
  return {levels.size(), std::move(g)};
}

}  // namespace

uint64_t group_order(const std::vector<Permutation>& gens) {
  std::vector<Permutation> strong;
  for (const Permutation& g : gens)
    if (!g.is_identity()) strong.push_back(g);
  if (strong.empty()) return 1;
  const size_t degree = strong[0].degree();
  for (const Permutation& g : strong)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");

  std::vector<uint32_t> base;
  bool dirty = true;
  std::vector<ChainLevel> levels;
  while (dirty) {
    dirty = false;
    // every strong generator must move some base point
    for (const Permutation& s : strong) {
      bool fixes_all = true;
      for (uint32_t b : base)
        if (s[b] != b) {
          fixes_all = false;
          break;
        }
      if (fixes_all) base.push_back(first_moved(s));
    }
    levels.assign(base.size(), ChainLevel{});
    for (size_t i = 0; i < base.size(); ++i) {
      levels[i].base = base[i];
      for (const Permutation& s : strong) {
        bool fixes_prefix = true;
        for (size_t j = 0; j < i; ++j)
          if (s[base[j]] != base[j]) {
            fixes_prefix = false;
            break;
          }
        if (fixes_prefix) levels[i].gens.push_back(&s);
      }
      rebuild_orbit(levels[i], degree);
    }
    // Schreier generators must sift to the identity
    for (size_t i = 0; i < levels.size() && !dirty; ++i) {
      for (const auto& [p, u] : levels[i].transversal) {
        for (const Permutation* g : levels[i].gens) {
          Permutation s = u * *g * levels[i].transversal.at((*g)[p]).inverse();
          auto [lvl, h] = strip(std::move(s), levels, i + 1);
          (void)lvl;
          if (!h.is_identity()) {
            strong.push_back(std::move(h));
            dirty = true;
            break;
          }
        }
        if (dirty) break;
      }
    }
  }
  uint64_t order = 1;
  for (const ChainLevel& lvl : levels) order *= lvl.transversal.size();
  return order;
}

bool is_transitive(const std::vector<Permutation>& gens) {
  if (gens.empty()) return false;
  size_t degree = gens[0].degree();
  std::vector<bool> seen(degree, false);
  std::vector<uint32_t> queue = {0};
  seen[0] = true;
  size_t cnt = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Permutation& g : gens) {
      uint32_t q = g[queue[qi]];
      if (!seen[q]) {
        seen[q] = true;
        ++cnt;
        queue.push_back(q);
      }
    }
  return cnt == degree;
}

Permutation evaluate_word(const Word& w, const Permutation& p0, const Permutation& p1,
                          const Permutation& p2) {
  const Permutation* ps[3] = {&p0, &p1, &p2};
  Permutation acc = Permutation::identity(p0.degree());
  for (Gen g : w) acc = acc * *ps[g];
  return acc;
}

bool check_relations(const Presentation& p, const Permutation& p0, const Permutation& p1,
                     const Permutation& p2) {
  for (const Word& r : p.relators)
    if (!evaluate_word(r, p0, p1, p2).is_identity()) return false;
  return true;
}

std::array<Permutation, 3> regular_rep(const CosetTable& t) {
  std::array<Permutation, 3> out;
  for (Gen g = 0; g < 3; ++g) {
    out[g].img.resize(t.size());
    for (uint32_t c = 0; c < t.size(); ++c) out[g].img[c] = t.apply(c, g);
  }
  return out;
}

CosetTable table_from_perms(const Permutation& p0, const Permutation& p1, const Permutation& p2) {
  const Permutation* ps[3] = {&p0, &p1, &p2};
  size_t degree = p0.degree();
  for (const Permutation* p : ps) {
    if (p->degree() != degree) throw std::invalid_argument("permutation degree mismatch");
    if (!(*p * *p).is_identity()) throw std::invalid_argument("generators must be involutions");
  }
  CosetTable t;
  t.rows.resize(degree);
  for (uint32_t c = 0; c < degree; ++c)
    for (Gen g = 0; g < 3; ++g) t.rows[c][g] = (*ps[g])[c];
  return t;
}

InvolutionTriple thm43_permutations(int n) {
  if (n < 8) throw std::invalid_argument("thm43_permutations requires n >= 8");
  const uint64_t t = uint64_t{1} << (n - 4);
  const uint64_t blocks = t / 8;  // per quarter
  const size_t degree = static_cast<size_t>(4 * t);
  // 1-based point jt + 8i + k, stored 0-based
  auto idx = [t](uint64_t i, uint64_t off, uint64_t k) {
    return static_cast<uint32_t>(off + 8 * i + k - 1);
  };

  InvolutionTriple r{Permutation::identity(degree), Permutation::identity(degree),
                     Permutation::identity(degree)};
  for (uint64_t i = 0; i < blocks; ++i) {
    const uint64_t ci = blocks - 1 - i;
    r.a.swap_fixed(idx(i, 2 * t, 1), idx(ci, 3 * t, 8));
    r.a.swap_fixed(idx(i, 2 * t, 8), idx(ci, 3 * t, 1));
    r.a.swap_fixed(idx(i, 0, 2), idx(ci, 2 * t, 7));
    r.a.swap_fixed(idx(i, t, 2), idx(i, 2 * t, 2));
    r.a.swap_fixed(idx(i, 3 * t, 2), idx(ci, t, 7));
    r.a.swap_fixed(idx(i, 0, 7), idx(i, 3 * t, 7));
    r.a.swap_fixed(idx(i, 0, 3), idx(ci, 2 * t, 6));
    r.a.swap_fixed(idx(i, t, 3), idx(i, 2 * t, 3));
    r.a.swap_fixed(idx(i, 3 * t, 3), idx(ci, t, 6));
    r.a.swap_fixed(idx(i, 0, 6), idx(i, 3 * t, 6));
    r.a.swap_fixed(idx(i, 0, 4), idx(ci, t, 5));
    r.a.swap_fixed(idx(i, 0, 5), idx(ci, t, 4));
  }
  for (uint64_t j = 0; j < 4; ++j)
    for (uint64_t i = 0; i < blocks; ++i)
      for (uint64_t k = 1; k <= 7; k += 2) r.b.swap_fixed(idx(i, j * t, k), idx(i, j * t, k + 1));
  for (uint64_t j = 0; j < 4; ++j) {
    for (uint64_t i = 0; i < blocks; ++i)
      for (uint64_t k = 2; k <= 6; k += 2) r.c.swap_fixed(idx(i, j * t, k), idx(i, j * t, k + 1));
    for (uint64_t i = 0; i + 1 < blocks; ++i)
      r.c.swap_fixed(idx(i, j * t, 8), idx(i + 1, j * t, 1));
  }
  // the glue between the two halves; 1, 2t+1 and the matching block ends
  // stay fixed
  for (uint64_t i = 0; i < 2; ++i)
    r.c.swap_fixed(idx(blocks - 1, 2 * t * i, 8), idx(0, t + 2 * t * i, 1));
  return r;
}

}  // namespace regmaps
