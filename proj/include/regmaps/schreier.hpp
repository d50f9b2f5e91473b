#ifndef REGMAPS_SCHREIER_HPP_
#define REGMAPS_SCHREIER_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "regmaps/coset_table.hpp"
#include "regmaps/gf2.hpp"

namespace regmaps {

// The kernel module of a finite quotient table T of the rank-3 Coxeter-type
// group D = <r0,r1,r2 | ri^2, (r0 r2)^2>: with K the kernel of D -> G(T),
// V = K / [K,K] K^2 as a GF(2) space.  Symbols index the non-tree edges of
// the canonical BFS spanning tree (Schreier generators of K); V is the
// quotient of the symbol space by the rows obtained from tracing the
// defining relators of D at every coset.  The conjugation action of the
// three generators descends to V.
struct ModuleSpace {
  size_t num_symbols = 0;
  // (coset, gen) -> symbol id, or -1 for spanning-tree edges.  Both
  // directions of an edge share the id.
  std::vector<int> symbol_of_edge;
  // one representative (coset, gen) per symbol
  std::vector<std::pair<uint32_t, Gen>> symbol_edge;
  EchelonBasis relations;
  std::vector<size_t> v_columns;  // free symbol columns = basis of V
  std::vector<int> v_coord;       // symbol col -> V coordinate or -1
  size_t dim = 0;                 // dim V
  std::array<BitMatrix, 3> action;

  ModuleSpace() : relations(0) {}

  // Accumulated symbol vector of a word traced from `start` (must return
  // to `start`), then reduced into V coordinates.
  BitVec trace_symbols(const CosetTable& t, uint32_t start, const Word& w) const;
  BitVec to_v(BitVec symbol_vec) const;
};

// Builds the module of a canonical table (the spanning tree must be the
// canonical BFS tree, so pass canonicalize(t).table).
ModuleSpace schreier_module(const CosetTable& t);

// W = V / span{ A_i v - v }: the coinvariants, whose nonzero functionals
// classify the D-invariant index-2 subgroups of K, i.e. the order-doubling
// quotient extensions of T.
struct Coinvariants {
  size_t dim = 0;          // dim W
  BitMatrix projection;    // dim V x dim W, row i = image of V basis vector
  // precomputed W-coordinates of each symbol's class (num_symbols rows)
  std::vector<BitVec> symbol_w;
};

Coinvariants coinvariants(const CosetTable& t, const ModuleSpace& m);

// The doubled table for a nonzero functional lambda on W (dim W bits):
// rows (c, eps) with (c, eps) . g = (c.g, eps + lambda(symbol of edge)),
// tree edges contributing 0.  Row order: (c,0) for all c, then (c,1).
CosetTable extend(const CosetTable& t, const ModuleSpace& m, const Coinvariants& w,
                  const BitVec& lambda);

}  // namespace regmaps

#endif  // REGMAPS_SCHREIER_HPP_
