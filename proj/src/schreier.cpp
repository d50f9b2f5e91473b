#include "regmaps/schreier.hpp"

#include <stdexcept>

namespace regmaps {

namespace {

// Extracts the coordinates at `cols` from a (fully reduced) vector.
BitVec extract(const BitVec& v, const std::vector<size_t>& cols) {
  BitVec out(cols.size());
  for (size_t i = 0; i < cols.size(); ++i)
    if (v.get(cols[i])) out.set(i, true);
  return out;
}

}  // namespace

BitVec ModuleSpace::trace_symbols(const CosetTable& t, uint32_t start, const Word& w) const {
  BitVec acc(num_symbols);
  uint32_t c = start;
  for (Gen g : w) {
    int s = symbol_of_edge[3 * c + g];
    if (s >= 0) acc.flip(static_cast<size_t>(s));
    c = t.apply(c, g);
  }
  if (c != start) throw std::logic_error("trace_symbols: word does not return to its start coset");
  return to_v(std::move(acc));
}

BitVec ModuleSpace::to_v(BitVec symbol_vec) const {
  relations.reduce(symbol_vec);
  return extract(symbol_vec, v_columns);
}

ModuleSpace schreier_module(const CosetTable& t) {
  BfsTree tree = bfs_tree(t);
  ModuleSpace m;
  m.symbol_of_edge.assign(3 * t.size(), -2);
  for (uint32_t c = 0; c < t.size(); ++c) {
    for (Gen g = 0; g < 3; ++g) {
      if (m.symbol_of_edge[3 * c + g] != -2) continue;
      uint32_t d = t.apply(c, g);
      if (tree.is_tree_edge(t, c, g)) {
        m.symbol_of_edge[3 * c + g] = -1;
        m.symbol_of_edge[3 * d + g] = -1;
        continue;
      }
      int s = static_cast<int>(m.num_symbols++);
      m.symbol_of_edge[3 * c + g] = s;
      m.symbol_of_edge[3 * d + g] = s;  // same cell when d == c (a loop)
      m.symbol_edge.emplace_back(c, g);
    }
  }

  // Relations of V: the defining relators of D traced at every coset.
  // The squares ri^2 traverse one edge twice and contribute nothing, so
  // only (r0 r2)^2 matters, but tracing all four keeps the code honest.
  const Word kDeltaRelators[] = {
      {kR0, kR0}, {kR1, kR1}, {kR2, kR2}, {kR0, kR2, kR0, kR2}};
  m.relations = EchelonBasis(m.num_symbols);
  for (uint32_t c = 0; c < t.size(); ++c) {
    for (const Word& r : kDeltaRelators) {
      BitVec acc(m.num_symbols);
      uint32_t x = c;
      for (Gen g : r) {
        int s = m.symbol_of_edge[3 * x + g];
        if (s >= 0) acc.flip(static_cast<size_t>(s));
        x = t.apply(x, g);
      }
      if (x != c) throw std::invalid_argument("schreier_module: relators of D do not hold");
      m.relations.insert(std::move(acc));
    }
  }
  m.v_columns = m.relations.free_columns();
  m.dim = m.v_columns.size();
  m.v_coord.assign(m.num_symbols, -1);
  for (size_t i = 0; i < m.v_columns.size(); ++i)
    m.v_coord[m.v_columns[i]] = static_cast<int>(i);

  // Conjugation action: basis symbol s is the Schreier generator
  // w_c g w_d^{-1}; its r_i-conjugate is traced from coset 0.
  std::vector<Word> flag_words(t.size());
  for (uint32_t c = 0; c < t.size(); ++c) flag_words[c] = flag_word(tree, c);
  for (Gen i = 0; i < 3; ++i) {
    BitMatrix a(m.dim, m.dim);
    for (size_t f = 0; f < m.dim; ++f) {
      auto [c, g] = m.symbol_edge[m.v_columns[f]];
      uint32_t d = t.apply(c, g);
      Word w;
      w.push_back(i);
      w.insert(w.end(), flag_words[c].begin(), flag_words[c].end());
      w.push_back(g);
      Word back = inverse(flag_words[d]);
      w.insert(w.end(), back.begin(), back.end());
      w.push_back(i);
      a.rows[f] = m.trace_symbols(t, 0, w);
    }
    m.action[i] = std::move(a);
  }
  return m;
}

Coinvariants coinvariants(const CosetTable& t, const ModuleSpace& m) {
  (void)t;
  EchelonBasis u(m.dim);
  for (Gen i = 0; i < 3; ++i) {
    for (size_t f = 0; f < m.dim; ++f) {
      BitVec v = m.action[i].rows[f];
      v.flip(f);  // A_i e_f - e_f
      u.insert(std::move(v));
    }
  }
  Coinvariants w;
  std::vector<size_t> free_cols = u.free_columns();
  w.dim = free_cols.size();
  w.projection = BitMatrix(m.dim, w.dim);
  for (size_t f = 0; f < m.dim; ++f) {
    BitVec e(m.dim);
    e.set(f, true);
    u.reduce(e);
    w.projection.rows[f] = extract(e, free_cols);
  }
  w.symbol_w.resize(m.num_symbols);
  for (size_t s = 0; s < m.num_symbols; ++s) {
    BitVec sym(m.num_symbols);
    sym.set(s, true);
    BitVec v = m.to_v(std::move(sym));
    u.reduce(v);
    w.symbol_w[s] = extract(v, free_cols);
  }
  return w;
}

CosetTable extend(const CosetTable& t, const ModuleSpace& m, const Coinvariants& w,
                  const BitVec& lambda) {
  if (lambda.size() != w.dim) throw std::invalid_argument("extend: functional has wrong dimension");
  if (!lambda.any()) throw std::invalid_argument("extend: functional must be nonzero");
  const uint32_t n = t.size();
  CosetTable out;
  out.rows.resize(2 * static_cast<size_t>(n));
  for (uint32_t c = 0; c < n; ++c) {
    for (Gen g = 0; g < 3; ++g) {
      uint32_t d = t.apply(c, g);
      int s = m.symbol_of_edge[3 * c + g];
      uint32_t bit = (s >= 0 && lambda.dot(w.symbol_w[s])) ? 1u : 0u;
      out.rows[c][g] = d + bit * n;
      out.rows[c + n][g] = d + (1u - bit) * n;
    }
  }
  return out;
}

}  // namespace regmaps
