#ifndef REGMAPS_TODD_COXETER_HPP_
#define REGMAPS_TODD_COXETER_HPP_

#include <stdexcept>

#include "regmaps/coset_table.hpp"
#include "regmaps/presentation.hpp"

namespace regmaps {

struct EnumerationLimits {
  uint32_t max_cosets = 1u << 22;
};

class EnumerationLimitExceeded : public std::runtime_error {
 public:
  explicit EnumerationLimitExceeded(uint32_t limit)
      : std::runtime_error("coset enumeration aborted: limit of " + std::to_string(limit) +
                           " cosets exceeded (index may be larger, or infinite)") {}
};

// HLT-style Todd-Coxeter with both-end scanning, eager deductions and
// union-find coincidence merging.  Returns the complete, compacted table
// of the action on right cosets of <subgens>.  Relators are cyclically
// reduced before tracing.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens = {},
                        const EnumerationLimits& limits = {});

}  // namespace regmaps

#endif  // REGMAPS_TODD_COXETER_HPP_
