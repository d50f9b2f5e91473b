#include "regmaps/word.hpp"

namespace regmaps {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Gen g : w) {
    if (!out.empty() && out.back() == g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, unsigned k) {
  Word out;
  out.reserve(w.size() * k);
  for (unsigned i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word conjugate(const Word& x, const Word& y) {
  Word out = inverse(y);
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Word commutator(const Word& x, const Word& y) {
  Word out = inverse(x);
  Word yi = inverse(y);
  out.insert(out.end(), yi.begin(), yi.end());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Gen g : w) {
    if (!s.empty()) s += ' ';
    s += 'r';
    s += static_cast<char>('0' + g);
  }
  return s;
}

}  // namespace regmaps
