#include "regmaps/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace regmaps {

int BitVec::lowest_set() const {
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(64 * w + std::countr_zero(words_[w]));
  return -1;
}

bool BitVec::dot(const BitVec& o) const {
  if (nbits_ != o.nbits_) throw std::invalid_argument("BitVec::dot size mismatch");
  uint64_t acc = 0;
  for (size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
  return std::popcount(acc) & 1;
}

bool EchelonBasis::reduce(BitVec& v) const {
  // Rows are kept fully reduced (each one meets the pivot columns only in
  // its own pivot), so one pass clears every pivot coordinate of v.
  for (size_t r = 0; r < rows_.size(); ++r)
    if (v.get(static_cast<size_t>(pivot_of_row_[r]))) v ^= rows_[r];
  return v.any();
}

bool EchelonBasis::insert(BitVec v) {
  if (!reduce(v)) return false;
  int p = v.lowest_set();
  // keep reduced form: clear bit p from existing rows
  for (size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].get(static_cast<size_t>(p))) rows_[r] ^= v;
  if (pivot_row_.size() < nbits_) pivot_row_.assign(nbits_, -1);
  pivot_row_[p] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  pivot_of_row_.push_back(p);
  return true;
}

std::vector<size_t> EchelonBasis::free_columns() const {
  std::vector<size_t> out;
  for (size_t c = 0; c < nbits_; ++c)
    if (!(pivot_row_.size() > c && pivot_row_[c] >= 0)) out.push_back(c);
  return out;
}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.rows[i].set(i, true);
  return m;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  if (v.size() != rows.size()) throw std::invalid_argument("BitMatrix::apply dimension mismatch");
  BitVec out(ncols);
  for (size_t i = 0; i < rows.size(); ++i)
    if (v.get(i)) out ^= rows[i];
  return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.ncols != b.rows.size()) throw std::invalid_argument("BitMatrix multiply mismatch");
  BitMatrix out(a.rows.size(), b.ncols);
  for (size_t i = 0; i < a.rows.size(); ++i) out.rows[i] = b.apply(a.rows[i]);
  return out;
}

}  // namespace regmaps
