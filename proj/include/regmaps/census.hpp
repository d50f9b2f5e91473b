#ifndef REGMAPS_CENSUS_HPP_
#define REGMAPS_CENSUS_HPP_

#include <string>
#include <vector>

#include "regmaps/coset_table.hpp"
#include "regmaps/map_analysis.hpp"

namespace regmaps {

// One group of order 2^order_exp in the descent tree.  Improper nodes
// (where some generator dies or r0 = r2) are kept: their descendants can
// still be proper.  `record` is only meaningful when `proper` is true.
struct CensusNode {
  CanonicalTable canon;
  std::string digest;
  std::string parent_digest;  // "-" for the trivial group
  bool proper = false;
  RegularMapRecord record;
};

struct CensusLevel {
  int order_exp = 0;
  std::vector<CensusNode> nodes;
  size_t proper_count() const;
};

struct CensusOptions {
  int threads = 1;
  std::string out_dir;   // empty: in-memory only
  bool resume = false;   // reuse completed levels found in out_dir
  bool verbose = false;  // per-level progress on stderr
};

struct Census {
  std::vector<CensusLevel> levels;  // levels[k] holds order 2^k

  int max_exp() const { return static_cast<int>(levels.size()) - 1; }
  const CensusNode* find(int order_exp, const std::string& digest) const;
};

// Enumerates every quotient 2-group of D = <r0,r1,r2 | ri^2, (r0 r2)^2>
// of order up to 2^max_exp, level by level: the children of a group are
// its order-doubling quotient extensions, one per nonzero functional on
// the coinvariant space of its kernel module, deduplicated by canonical
// table digest.  Every order-2^(k+1) quotient has a central order-2
// subgroup inside the kernel level, so the level-wise sweep is complete.
Census run_census(int max_exp, const CensusOptions& opts = {});

// Loads consecutive completed levels from a census directory (up to
// 2^max_exp when max_exp >= 0, otherwise all that are present) without
// computing anything new.  Throws if no level is present.
Census load_census(const std::string& dir, int max_exp = -1);

// Structured text records of the proper maps, one per line.
std::string census_records(const Census& c);

enum class CrosscheckStatus { kOk, kMismatch, kMissing };

struct CrosscheckResult {
  CrosscheckStatus status = CrosscheckStatus::kOk;
  std::string detail;
};

// Compares per-order proper-map counts against a CSV file with lines
// "order_exp,count" (a header line is permitted).  Orders absent from the
// file are ignored.
CrosscheckResult crosscheck_counts(const Census& c, const std::string& csv_path);

}  // namespace regmaps

#endif  // REGMAPS_CENSUS_HPP_
