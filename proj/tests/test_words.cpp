#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>

#include "regmaps/word.hpp"

using namespace regmaps;

namespace {
Word W(std::initializer_list<Gen> letters) { return Word(letters); }
}  // namespace

TEST_CASE("free reduction cancels adjacent equal letters") {
  CHECK(free_reduce(W({})) == W({}));
  CHECK(free_reduce(W({kR0})) == W({kR0}));
  CHECK(free_reduce(W({kR0, kR0})) == W({}));
  CHECK(free_reduce(W({kR0, kR1, kR1, kR0, kR2})) == W({kR2}));
  CHECK(free_reduce(W({kR0, kR1, kR2, kR2, kR1, kR0})) == W({}));
  CHECK(free_reduce(W({kR0, kR1, kR0, kR1})) == W({kR0, kR1, kR0, kR1}));
}

TEST_CASE("free reduction is idempotent") {
  Word w = W({kR0, kR1, kR1, kR2, kR2, kR1, kR0, kR0});
  Word r = free_reduce(w);
  CHECK(free_reduce(r) == r);
}

TEST_CASE("inversion of involutory words is reversal") {
  Word w = W({kR0, kR1, kR2});
  CHECK(inverse(w) == W({kR2, kR1, kR0}));
  CHECK(free_reduce(concat(w, inverse(w))) == W({}));
  CHECK(inverse(W({})) == W({}));
}

TEST_CASE("concat and power") {
  CHECK(concat(W({kR0}), W({kR1, kR2})) == W({kR0, kR1, kR2}));
  CHECK(power(W({kR0, kR1}), 0) == W({}));
  CHECK(power(W({kR0, kR1}), 3) == W({kR0, kR1, kR0, kR1, kR0, kR1}));
}

TEST_CASE("conjugate and commutator expand to the defining products") {
  // y^-1 x y with x = r0, y = r1 r2
  CHECK(conjugate(W({kR0}), W({kR1, kR2})) == W({kR2, kR1, kR0, kR1, kR2}));
  // x^-1 y^-1 x y with x = r0, y = r1
  CHECK(commutator(W({kR0}), W({kR1})) == W({kR0, kR1, kR0, kR1}));
  // a trivial commutator reduces to nothing
  CHECK(free_reduce(commutator(W({kR0}), W({kR0}))) == W({}));
}

TEST_CASE("cyclic reduction strips matching ends after free reduction") {
  CHECK(cyclic_reduce(W({kR0, kR1, kR2, kR1, kR0})) == W({kR2}));
  CHECK(cyclic_reduce(W({kR0, kR0, kR1, kR2})) == W({kR1, kR2}));
  CHECK(cyclic_reduce(W({kR1, kR0, kR1})) == W({kR0}));
  CHECK(cyclic_reduce(W({kR0})) == W({kR0}));
  CHECK(cyclic_reduce(W({})) == W({}));
  CHECK(cyclic_reduce(W({kR0, kR1})) == W({kR0, kR1}));
}

TEST_CASE("word rendering") {
  CHECK(word_to_string(W({})) == "1");
  CHECK(word_to_string(W({kR0})) == "r0");
  CHECK(word_to_string(W({kR0, kR1, kR2})) == "r0 r1 r2");
}
