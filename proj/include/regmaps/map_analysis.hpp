#ifndef REGMAPS_MAP_ANALYSIS_HPP_
#define REGMAPS_MAP_ANALYSIS_HPP_

#include <cstdint>
#include <string>

#include "regmaps/coset_table.hpp"

namespace regmaps {

struct RegularMapRecord {
  uint64_t flags = 0;
  uint64_t face_len = 0;  // order of r0 r1
  uint64_t valency = 0;   // order of r1 r2
  int s_exp = -1;         // log2(face_len), -1 if not a 2-power
  int t_exp = -1;         // log2(valency), -1 if not a 2-power
  uint64_t vertices = 0;
  uint64_t edges = 0;
  uint64_t faces = 0;
  int64_t euler = 0;
  bool orientable = false;
  int64_t genus = 0;  // crosscap number when nonorientable
  bool simple_graph = false;
};

// Map data of a proper regular table: orbit counts of the two-generator
// subgroups on flags, type from element orders, orientability from the
// rotation subgroup index, Euler characteristic and genus.
// Throws std::invalid_argument on non-proper tables.
RegularMapRecord analyze(const CosetTable& t);

// Swaps the roles of r0 and r2 (vertices and faces exchange).
CosetTable dual(const CosetTable& t);

// Rank d of the 2-group: index of the Frattini subgroup is 2^d.
int frattini_rank(const CosetTable& t);

// True iff the underlying graph has no loops and no parallel edges.
bool simple_underlying(const CosetTable& t);

std::string record_to_string(const RegularMapRecord& r);

}  // namespace regmaps

#endif  // REGMAPS_MAP_ANALYSIS_HPP_
