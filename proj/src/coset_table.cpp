#include "regmaps/coset_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "regmaps/digest.hpp"

namespace regmaps {

bool CosetTable::involutory_columns() const {
  for (uint32_t c = 0; c < size(); ++c)
    for (Gen g = 0; g < 3; ++g)
      if (rows[c][g] >= size() || rows[rows[c][g]][g] != c) return false;
  return true;
}

bool CosetTable::is_connected() const {
  if (rows.empty()) return false;
  std::vector<char> seen(size(), 0);
  std::vector<uint32_t> stack{0};
  seen[0] = 1;
  uint32_t count = 1;
  while (!stack.empty()) {
    uint32_t c = stack.back();
    stack.pop_back();
    for (Gen g = 0; g < 3; ++g) {
      uint32_t d = rows[c][g];
      if (!seen[d]) {
        seen[d] = 1;
        ++count;
        stack.push_back(d);
      }
    }
  }
  return count == size();
}

bool CosetTable::relators_hold(const Presentation& p) const {
  for (const Word& r : p.relators)
    for (uint32_t c = 0; c < size(); ++c)
      if (trace(c, r) != c) return false;
  return true;
}

BfsTree bfs_tree(const CosetTable& t) {
  BfsTree tree;
  uint32_t n = t.size();
  tree.parent.assign(n, 0);
  tree.parent_gen.assign(n, 0);
  tree.depth.assign(n, 0);
  tree.order.reserve(n);
  std::vector<char> seen(n, 0);
  tree.order.push_back(0);
  seen[0] = 1;
  for (size_t i = 0; i < tree.order.size(); ++i) {
    uint32_t c = tree.order[i];
    for (Gen g = 0; g < 3; ++g) {
      uint32_t d = t.apply(c, g);
      if (!seen[d]) {
        seen[d] = 1;
        tree.parent[d] = c;
        tree.parent_gen[d] = g;
        tree.depth[d] = tree.depth[c] + 1;
        tree.order.push_back(d);
      }
    }
  }
  if (tree.order.size() != n) throw std::invalid_argument("coset table is disconnected");
  return tree;
}

Word flag_word(const BfsTree& tree, uint32_t c) {
  Word w;
  w.reserve(tree.depth[c]);
  while (c != 0) {
    w.push_back(tree.parent_gen[c]);
    c = tree.parent[c];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<uint8_t> CanonicalTable::key() const {
  uint32_t n = table.size();
  int width = n <= 0xFF ? 1 : (n <= 0xFFFF ? 2 : 4);
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(n) * 3 * width);
  for (uint32_t c = 0; c < n; ++c)
    for (Gen g = 0; g < 3; ++g) {
      uint32_t v = table.rows[c][g] + 1;  // 1-based
      for (int b = width - 1; b >= 0; --b) out.push_back(static_cast<uint8_t>(v >> (8 * b)));
    }
  return out;
}

std::string CanonicalTable::digest() const { return sha256_hex(key()); }

CanonicalTable canonicalize(const CosetTable& t) {
  BfsTree tree = bfs_tree(t);
  uint32_t n = t.size();
  std::vector<uint32_t> newid(n);
  for (uint32_t i = 0; i < n; ++i) newid[tree.order[i]] = i;
  CanonicalTable out;
  out.table.rows.resize(n);
  for (uint32_t c = 0; c < n; ++c)
    for (Gen g = 0; g < 3; ++g) out.table.rows[newid[c]][g] = newid[t.apply(c, g)];
  return out;
}

uint64_t element_order(const CosetTable& t, const Word& w) {
  uint32_t c = t.trace(0, w);
  uint64_t k = 1;
  while (c != 0) {
    c = t.trace(c, w);
    ++k;
    if (k > t.size()) throw std::logic_error("element order exceeds table size");
  }
  return k;
}

std::vector<uint32_t> subgroup_closure(const CosetTable& t, const std::vector<Word>& gens) {
  std::vector<Word> moves;
  for (const Word& g : gens) {
    Word r = free_reduce(g);
    if (r.empty()) continue;
    moves.push_back(r);
    Word ri = inverse(r);
    if (ri != r) moves.push_back(std::move(ri));
  }
  std::vector<char> seen(t.size(), 0);
  std::vector<uint32_t> frontier{0}, members{0};
  seen[0] = 1;
  while (!frontier.empty()) {
    uint32_t c = frontier.back();
    frontier.pop_back();
    for (const Word& m : moves) {
      uint32_t d = t.trace(c, m);
      if (!seen[d]) {
        seen[d] = 1;
        members.push_back(d);
        frontier.push_back(d);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_proper(const CosetTable& t) {
  for (Gen g = 0; g < 3; ++g)
    if (t.apply(0, g) == 0) return false;  // some r_i is trivial
  return t.apply(0, kR0) != t.apply(0, kR2);
}

CosetTable quotient_by_central_involution(const CosetTable& t, uint32_t z_flag) {
  if (z_flag == 0 || z_flag >= t.size()) throw std::invalid_argument("bad central flag");
  BfsTree tree = bfs_tree(t);
  Word zw = flag_word(tree, z_flag);
  uint32_t n = t.size();
  constexpr uint32_t kUnset = 0xFFFFFFFF;
  std::vector<uint32_t> block(n, kUnset);
  uint32_t nblocks = 0;
  for (uint32_t c = 0; c < n; ++c) {
    if (block[c] != kUnset) continue;
    uint32_t d = t.trace(c, zw);
    if (d == c) throw std::invalid_argument("flag does not label an involution");
    block[c] = block[d] = nblocks++;
  }
  CosetTable q;
  q.rows.resize(nblocks);
  std::vector<char> set(nblocks, 0);
  for (uint32_t c = 0; c < n; ++c) {
    for (Gen g = 0; g < 3; ++g) {
      uint32_t img = block[t.apply(c, g)];
      if (!set[block[c]]) {
        q.rows[block[c]][g] = img;
      } else if (q.rows[block[c]][g] != img) {
        throw std::invalid_argument("block system is not invariant: element not central");
      }
    }
    set[block[c]] = 1;
  }
  return q;
}

}  // namespace regmaps
