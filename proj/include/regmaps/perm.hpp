#ifndef REGMAPS_PERM_HPP_
#define REGMAPS_PERM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "regmaps/coset_table.hpp"
#include "regmaps/word.hpp"

namespace regmaps {

// A permutation of {0, ..., degree-1}, acting on the right: the image of a
// point p under a*b is b[a[p]].  Printing is 1-based cycle notation.
struct Permutation {
  std::vector<uint32_t> img;

  Permutation() = default;
  explicit Permutation(size_t degree);
  static Permutation identity(size_t degree);

  size_t degree() const { return img.size(); }
  uint32_t operator[](uint32_t p) const { return img[p]; }
  bool is_identity() const;
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool operator==(const Permutation& o) const { return img == o.img; }

  // Exchanges two currently-fixed points; throws if either already moves.
  // Used to assemble products of disjoint transpositions safely.
  void swap_fixed(uint32_t a, uint32_t b);
};

uint64_t permutation_order(const Permutation& p);
Permutation permutation_power(const Permutation& p, uint64_t k);
std::string cycles_string(const Permutation& p);  // 1-based, fixed points omitted

// Order of the generated group, by a Schreier-Sims stabilizer chain.
uint64_t group_order(const std::vector<Permutation>& gens);

// True iff the generated group is transitive on all points.
bool is_transitive(const std::vector<Permutation>& gens);

// Evaluates a word in three given involutions.
Permutation evaluate_word(const Word& w, const Permutation& p0, const Permutation& p1,
                          const Permutation& p2);

// True iff every relator evaluates to the identity.
bool check_relations(const Presentation& p, const Permutation& p0, const Permutation& p1,
                     const Permutation& p2);

// Columns of a coset table as permutations of the rows.
std::array<Permutation, 3> regular_rep(const CosetTable& t);

// A coset table whose rows are the points and whose columns are the three
// permutations; requires each to be an involution.
CosetTable table_from_perms(const Permutation& p0, const Permutation& p1, const Permutation& p2);

// The explicit degree-2^(n-2) permutations a, b, c: three involutions on
// {1, ..., 4t} with t = 2^(n-4), generating a group of order 2^n in which
// a b has order 8 and b c has order 2^(n-3).  Requires n >= 8 so that the
// block pattern (eight points per block, t/8 blocks per quarter) exists.
struct InvolutionTriple {
  Permutation a, b, c;
};

InvolutionTriple thm43_permutations(int n);

}  // namespace regmaps

#endif  // REGMAPS_PERM_HPP_
