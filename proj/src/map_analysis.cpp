#include "regmaps/map_analysis.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regmaps {

namespace {

int log2_exact(uint64_t v) {
  if (v == 0 || (v & (v - 1)) != 0) return -1;
  return std::countr_zero(v);
}

// Labels orbits of the subgroup generated by `gens` on flags; returns the
// label vector and stores the orbit count in *count.
std::vector<uint32_t> orbit_labels(const CosetTable& t, const std::vector<Gen>& gens,
                                   uint64_t* count) {
  const uint32_t kUnseen = UINT32_MAX;
  std::vector<uint32_t> label(t.size(), kUnseen);
  uint32_t next = 0;
  std::vector<uint32_t> stack;
  for (uint32_t start = 0; start < t.size(); ++start) {
    if (label[start] != kUnseen) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      uint32_t c = stack.back();
      stack.pop_back();
      for (Gen g : gens) {
        uint32_t d = t.apply(c, g);
        if (label[d] == kUnseen) {
          label[d] = next;
          stack.push_back(d);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

}  // namespace

bool simple_underlying(const CosetTable& t) {
  uint64_t nv = 0;
  std::vector<uint32_t> vid = orbit_labels(t, {kR1, kR2}, &nv);
  uint64_t ne = 0;
  std::vector<uint32_t> eid = orbit_labels(t, {kR0, kR2}, &ne);
  // Endpoints of each edge: the vertex orbits of a flag and its r0-image.
  std::vector<std::pair<uint32_t, uint32_t>> ends(
      ne, {UINT32_MAX, UINT32_MAX});
  for (uint32_t f = 0; f < t.size(); ++f) {
    if (ends[eid[f]].first != UINT32_MAX) continue;
    uint32_t a = vid[f];
    uint32_t b = vid[t.apply(f, kR0)];
    if (a > b) std::swap(a, b);
    if (a == b) return false;  // loop
    ends[eid[f]] = {a, b};
  }
  std::map<std::pair<uint32_t, uint32_t>, int> mult;
  for (const auto& p : ends)
    if (++mult[p] > 1) return false;  // parallel edges
  return true;
}

RegularMapRecord analyze(const CosetTable& t) {
  if (!is_proper(t))
    throw std::invalid_argument(
        "table is not a proper regular map: a generator acts trivially or r0 and r2 coincide");
  RegularMapRecord r;
  r.flags = t.size();
  r.face_len = element_order(t, {kR0, kR1});
  r.valency = element_order(t, {kR1, kR2});
  r.s_exp = log2_exact(r.face_len);
  r.t_exp = log2_exact(r.valency);
  orbit_labels(t, {kR1, kR2}, &r.vertices);
  orbit_labels(t, {kR0, kR2}, &r.edges);
  orbit_labels(t, {kR0, kR1}, &r.faces);
  r.euler = static_cast<int64_t>(r.vertices) - static_cast<int64_t>(r.edges) +
            static_cast<int64_t>(r.faces);
  std::vector<uint32_t> rot =
      subgroup_closure(t, {{kR0, kR1}, {kR1, kR2}});
  r.orientable = (2 * rot.size() == t.size());
  r.genus = r.orientable ? (2 - r.euler) / 2 : (2 - r.euler);
  r.simple_graph = simple_underlying(t);
  return r;
}

CosetTable dual(const CosetTable& t) {
  CosetTable out = t;
  for (auto& row : out.rows) std::swap(row[0], row[2]);
  return out;
}

int frattini_rank(const CosetTable& t) {
  // d = log2 of the number of homomorphisms onto GF(2)^k quotients:
  // count sign assignments eps in GF(2)^3 \ {0} that extend to a
  // consistent labeling of the flag graph.
  BfsTree tree = bfs_tree(t);
  int homs = 0;
  std::vector<uint8_t> sign(t.size(), 0);
  for (int eps = 1; eps < 8; ++eps) {
    for (uint32_t c : tree.order) {
      if (c == 0)
        sign[c] = 0;
      else
        sign[c] = sign[tree.parent[c]] ^ static_cast<uint8_t>((eps >> tree.parent_gen[c]) & 1);
    }
    bool ok = true;
    for (uint32_t c = 0; c < t.size() && ok; ++c)
      for (Gen g = 0; g < 3; ++g)
        if ((sign[c] ^ ((eps >> g) & 1)) != sign[t.apply(c, g)]) {
          ok = false;
          break;
        }
    if (ok) ++homs;
  }
  int d = log2_exact(static_cast<uint64_t>(homs) + 1);
  if (d < 0) throw std::logic_error("inconsistent sign character count");
  return d;
}

std::string record_to_string(const RegularMapRecord& r) {
  std::ostringstream os;
  os << "flags=" << r.flags << " type={" << r.face_len << "," << r.valency << "}"
     << " V=" << r.vertices << " E=" << r.edges << " F=" << r.faces
     << " euler=" << r.euler << " genus=" << r.genus
     << " orientable=" << (r.orientable ? "yes" : "no")
     << " simple=" << (r.simple_graph ? "yes" : "no");
  return os.str();
}

}  // namespace regmaps
