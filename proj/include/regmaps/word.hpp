#ifndef REGMAPS_WORD_HPP_
#define REGMAPS_WORD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regmaps {

// Generator index: 0, 1, 2 for the three involutory reflections.
using Gen = uint8_t;

inline constexpr Gen kR0 = 0;
inline constexpr Gen kR1 = 1;
inline constexpr Gen kR2 = 2;

// A word over the three involutory generators.  Each letter is its own
// inverse, so inversion is sequence reversal and there are no formal
// inverse letters.
using Word = std::vector<Gen>;

// Cancels adjacent equal letters until none remain.  Idempotent.
Word free_reduce(const Word& w);

inline Word inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word concat(const Word& a, const Word& b);
Word power(const Word& w, unsigned k);

// y^-1 x y
Word conjugate(const Word& x, const Word& y);

// x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);

// Cyclic reduction (on top of free reduction): strips equal first/last
// letters.  The result defines the same normal closure.
Word cyclic_reduce(const Word& w);

std::string word_to_string(const Word& w);

}  // namespace regmaps

#endif  // REGMAPS_WORD_HPP_
