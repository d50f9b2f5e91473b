#ifndef REGMAPS_RELATOR_HPP_
#define REGMAPS_RELATOR_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "regmaps/word.hpp"

namespace regmaps {

// Expression tree for relators written in the r0/r1/r2 notation.
//
// Grammar (whitespace-insensitive):
//   expr   := term { ['*'] term }          product by juxtaposition or '*'
//   term   := atom { '^' suffix }
//   suffix := integer (>= 1)               power
//           | '(' expr ')'                 conjugation x^(y) = y^-1 x y
//   atom   := 'r0' | 'r1' | 'r2'
//           | '(' expr ')'
//           | '[' expr ',' expr ']'        commutator [x,y] = x^-1 y^-1 x y
struct RelatorExpr {
  enum class Kind { kGenerator, kProduct, kPower, kConjugation, kCommutator };

  Kind kind = Kind::kGenerator;
  Gen gen = 0;                        // kGenerator
  unsigned exponent = 1;              // kPower
  std::vector<RelatorExpr> children;  // kProduct: n-ary; kPower/kConjugation/
                                      // kCommutator: as named below

  static RelatorExpr generator(Gen g);
  static RelatorExpr product(std::vector<RelatorExpr> factors);
  static RelatorExpr pow(RelatorExpr base, unsigned k);
  static RelatorExpr conj(RelatorExpr x, RelatorExpr y);  // y^-1 x y
  static RelatorExpr comm(RelatorExpr x, RelatorExpr y);  // x^-1 y^-1 x y
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

RelatorExpr parse_relator(const std::string& text);

// Concatenation of leaves, with inverses expanded by reversal.  Not freely
// reduced; compose with free_reduce for the reduced form.
Word flatten(const RelatorExpr& e);

}  // namespace regmaps

#endif  // REGMAPS_RELATOR_HPP_
