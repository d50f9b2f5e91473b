#ifndef REGMAPS_COSET_TABLE_HPP_
#define REGMAPS_COSET_TABLE_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "regmaps/presentation.hpp"
#include "regmaps/word.hpp"

namespace regmaps {

// A complete coset table for the action of r0, r1, r2 on cosets.
// Rows are 0-based internally; row 0 is the coset of the subgroup (the
// identity flag for regular tables).  External formats are 1-based.
struct CosetTable {
  std::vector<std::array<uint32_t, 3>> rows;

  uint32_t size() const { return static_cast<uint32_t>(rows.size()); }
  uint32_t apply(uint32_t c, Gen g) const { return rows[c][g]; }

  uint32_t trace(uint32_t c, const Word& w) const {
    for (Gen g : w) c = rows[c][g];
    return c;
  }

  bool involutory_columns() const;
  bool is_connected() const;
  // Every relator traces back to its start coset, at every coset.
  bool relators_hold(const Presentation& p) const;
};

// BFS spanning tree from row 0, neighbors explored in generator order.
struct BfsTree {
  std::vector<uint32_t> order;       // cosets in visit order
  std::vector<uint32_t> parent;      // parent coset (root: itself)
  std::vector<Gen> parent_gen;       // generator from parent to coset
  std::vector<uint32_t> depth;
  bool is_tree_edge(const CosetTable& t, uint32_t c, Gen g) const {
    uint32_t d = t.apply(c, g);
    return (parent[d] == c && parent_gen[d] == g && d != 0) ||
           (parent[c] == d && parent_gen[c] == g && c != 0);
  }
};

BfsTree bfs_tree(const CosetTable& t);

// Word from row 0 to flag c along the BFS tree.
Word flag_word(const BfsTree& tree, uint32_t c);

struct CanonicalTable {
  CosetTable table;
  // Row-major 1-based entries, big-endian fixed width (1, 2 or 4 bytes,
  // the smallest that holds the row count).  This is the census dedup key.
  std::vector<uint8_t> key() const;
  std::string digest() const;  // SHA-256 of key(), lowercase hex

  bool operator==(const CanonicalTable& o) const { return table.rows == o.table.rows; }
};

// BFS relabeling from coset 1 with tie-breaking by generator order 0,1,2
// and first-seen numbering.  Idempotent; throws on disconnected tables.
CanonicalTable canonicalize(const CosetTable& t);

// Least k >= 1 such that tracing w k times from flag 1 returns to flag 1.
// For regular tables this is the order of the group element w.
uint64_t element_order(const CosetTable& t, const Word& w);

// Flags reachable from flag 1 by tracing the given words and their
// inverses: the subgroup generated by them, as a flag set (sorted).
std::vector<uint32_t> subgroup_closure(const CosetTable& t, const std::vector<Word>& gens);

// True order of generator images: o(r_i) and o(r0 r2) in the table group.
bool is_proper(const CosetTable& t);

// Quotient of a regular table by the central subgroup {1, z} where z is
// the element labeling flag z_flag.  Throws if the block system is not
// compatible (z not central) or z_flag == 0.
CosetTable quotient_by_central_involution(const CosetTable& t, uint32_t z_flag);

}  // namespace regmaps

#endif  // REGMAPS_COSET_TABLE_HPP_
