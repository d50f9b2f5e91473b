#ifndef REGMAPS_GF2_HPP_
#define REGMAPS_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace regmaps {

// Bit-packed GF(2) row vector.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  size_t size() const { return nbits_; }
  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void operator^=(const BitVec& o) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  int lowest_set() const;  // -1 if zero

  // GF(2) inner product (parity of the AND).
  bool dot(const BitVec& o) const;

  bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

 private:
  size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

// Row space in reduced echelon form, built incrementally.  Supports
// reduction of vectors modulo the space.
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t nbits) : nbits_(nbits) {}

  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return nbits_; }

  // Reduces v against the basis in place; returns true if nonzero remains.
  bool reduce(BitVec& v) const;

  // Reduces v and, if independent, inserts it.  Returns true on growth.
  bool insert(BitVec v);

  bool is_pivot(size_t col) const { return pivot_row_.size() > col && pivot_row_[col] >= 0; }

  // Columns that are not pivots: coordinates of the quotient space.
  std::vector<size_t> free_columns() const;

 private:
  size_t nbits_;
  std::vector<BitVec> rows_;
  std::vector<int> pivot_of_row_;
  std::vector<int> pivot_row_;  // col -> row index or -1
};

// Dense GF(2) matrix as a vector of BitVec rows (row-major, ncols bits).
struct BitMatrix {
  size_t ncols = 0;
  std::vector<BitVec> rows;

  BitMatrix() = default;
  BitMatrix(size_t r, size_t c) : ncols(c), rows(r, BitVec(c)) {}

  static BitMatrix identity(size_t n);
  // v * M  (v has rows.size() bits, result has ncols bits)
  BitVec apply(const BitVec& v) const;
  bool operator==(const BitMatrix& o) const { return ncols == o.ncols && rows == o.rows; }
};

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

}  // namespace regmaps

#endif  // REGMAPS_GF2_HPP_
