#ifndef REGMAPS_PRESENTATION_HPP_
#define REGMAPS_PRESENTATION_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "regmaps/word.hpp"

namespace regmaps {

// A presentation over the three involutory generators.  The relators
// r0^2, r1^2, r2^2 are always present (first three entries); every relator
// is freely reduced and nonempty.
struct Presentation {
  std::vector<Word> relators;
  std::string family_tag;  // e.g. "G1(n=12)"; empty for custom input
};

// Builds a presentation from arbitrary relator words: freely reduces them,
// drops empty ones, and prepends the generator squares if missing.
Presentation presentation_from_relators(std::vector<Word> relators,
                                        std::string family_tag = "");

// Preset catalog.  Families and their parameters:
//   delta                      no parameters
//   dihedral        n >= 3
//   c2xd            n >= 3
//   thm32_case1     n, s, t    2 <= s,t <= n-2, s+t <= n-1
//   thm32_case2     n, s, t    2 <= s,t <= n-2, s+t = n
//   thm32_case3     n, t       2 <= t <= n-2, 2t > n
//   prop28_L        n >= 5
//   G1..G2          n >= 4
//   G3..G6          n >= 5
//   H1..H6          n >= 4 (H1, H2) or n >= 5
Presentation preset(const std::string& family, const std::vector<long>& params = {});

// One relator per line, preceded by a "# family: ..." header when the
// presentation came from the preset catalog.
std::string presentation_to_text(const Presentation& p);
Presentation presentation_from_text(const std::string& text);

}  // namespace regmaps

#endif  // REGMAPS_PRESENTATION_HPP_
