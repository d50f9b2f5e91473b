#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>
#include <stdexcept>

#include "regmaps/census.hpp"
#include "regmaps/map_analysis.hpp"
#include "regmaps/presentation.hpp"
#include "regmaps/todd_coxeter.hpp"

using namespace regmaps;

namespace {
Word W(std::initializer_list<Gen> letters) { return Word(letters); }
}  // namespace

TEST_CASE("the dihedral map is the one-vertex map on the projective plane") {
  // r0 is identified with a rotation power, so <r1, r2> is everything:
  // one vertex, and the surface is nonorientable with euler number 1
  CosetTable t = todd_coxeter(preset("dihedral", {4}));
  RegularMapRecord r = analyze(t);
  CHECK(r.flags == 16);
  CHECK(r.face_len == 2);
  CHECK(r.valency == 8);
  CHECK(r.s_exp == 1);
  CHECK(r.t_exp == 3);
  CHECK(r.vertices == 1);
  CHECK(r.edges == 4);
  CHECK(r.faces == 4);
  CHECK(r.euler == 1);
  CHECK(r.genus == 1);  // crosscap number of the projective plane
  CHECK_FALSE(r.orientable);
  CHECK_FALSE(r.simple_graph);  // every edge is a loop at the lone vertex
  CHECK(record_to_string(r) ==
        "flags=16 type={2,8} V=1 E=4 F=4 euler=1 genus=1 orientable=no simple=no");
}

TEST_CASE("the c2xd map is the spherical dipole") {
  CosetTable t = todd_coxeter(preset("c2xd", {4}));
  RegularMapRecord r = analyze(t);
  CHECK(r.flags == 16);
  CHECK(r.face_len == 2);
  CHECK(r.valency == 4);
  CHECK(r.vertices == 2);
  CHECK(r.edges == 4);
  CHECK(r.faces == 4);
  CHECK(r.euler == 2);
  CHECK(r.genus == 0);
  CHECK(r.orientable);
  CHECK_FALSE(r.simple_graph);  // four parallel edges between the two vertices
}

TEST_CASE("analyze rejects degenerate tables") {
  CosetTable trivial;
  trivial.rows = {{0, 0, 0}};
  CHECK_THROWS_AS(analyze(trivial), std::invalid_argument);
  // r0 = r2 collapse: o(r0 r2) = 1
  CosetTable collapsed = todd_coxeter(
      presentation_from_relators({W({kR0, kR2}), power(W({kR0, kR1}), 4)}));
  CHECK_THROWS_AS(analyze(collapsed), std::invalid_argument);
}

TEST_CASE("duality swaps vertices and faces and is an involution") {
  CosetTable t = todd_coxeter(preset("dihedral", {4}));
  CosetTable d = dual(t);
  RegularMapRecord r = analyze(t), rd = analyze(d);
  CHECK(rd.vertices == r.faces);
  CHECK(rd.faces == r.vertices);
  CHECK(rd.edges == r.edges);
  CHECK(rd.face_len == r.valency);
  CHECK(rd.valency == r.face_len);
  CHECK(rd.euler == r.euler);
  CHECK(rd.orientable == r.orientable);
  CHECK(dual(d).rows == t.rows);
}

TEST_CASE("euler and flag counting identities across the small census") {
  Census c = run_census(6);
  int checked = 0;
  for (const CensusLevel& lvl : c.levels) {
    for (const CensusNode& n : lvl.nodes) {
      if (!n.proper) continue;
      ++checked;
      const RegularMapRecord& r = n.record;
      CHECK(r.flags == n.canon.table.size());
      CHECK(r.euler == static_cast<int64_t>(r.vertices) - static_cast<int64_t>(r.edges) +
                           static_cast<int64_t>(r.faces));
      CHECK(r.flags == 4 * r.edges);
      CHECK(r.flags == r.vertices * 2 * r.valency);
      CHECK(r.flags == r.faces * 2 * r.face_len);
      CHECK(r.genus == (r.orientable ? (2 - r.euler) / 2 : 2 - r.euler));
      CHECK(r.simple_graph == simple_underlying(n.canon.table));
      // the type is realized by exact element orders
      CHECK(element_order(n.canon.table, W({kR0, kR1})) == r.face_len);
      CHECK(element_order(n.canon.table, W({kR1, kR2})) == r.valency);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("frattini rank matches hand values") {
  // order 2: one generator
  CosetTable c2;
  c2.rows = {{1, 1, 1}, {0, 0, 0}};
  CHECK(frattini_rank(c2) == 1);
  // dihedral groups are 2-generated
  CHECK(frattini_rank(todd_coxeter(preset("dihedral", {4}))) == 2);
  CHECK(frattini_rank(todd_coxeter(preset("dihedral", {5}))) == 2);
  // the elementary abelian quotient C2 x C2 x C2 needs all three
  Presentation e8 = presentation_from_relators({commutator(W({kR0}), W({kR1})),
                                                commutator(W({kR1}), W({kR2})),
                                                commutator(W({kR0}), W({kR2}))});
  CHECK(frattini_rank(todd_coxeter(e8)) == 3);
  // proper maps need both r1-products: rank is 2 or 3 throughout the census
  Census c = run_census(5);
  for (const CensusLevel& lvl : c.levels)
    for (const CensusNode& n : lvl.nodes)
      if (n.proper) {
        int d = frattini_rank(n.canon.table);
        CHECK(d >= 2);
        CHECK(d <= 3);
      }
}

TEST_CASE("frattini rank agrees with the word-closure recipe when it is normal") {
  // for these groups the subgroup generated by squares and commutators is
  // normal, so its index equals the Frattini index 2^d
  for (const char* fam : {"dihedral", "G1", "G3", "H2"}) {
    CosetTable t = todd_coxeter(preset(fam, {6}));
    std::vector<Word> gens = {power(W({kR0, kR1}), 2),       power(W({kR1, kR2}), 2),
                              power(W({kR0, kR2}), 2),       commutator(W({kR0}), W({kR1})),
                              commutator(W({kR1}), W({kR2})), commutator(W({kR0}), W({kR2}))};
    std::vector<uint32_t> cl = subgroup_closure(t, gens);
    uint64_t index = t.size() / cl.size();
    CHECK((uint64_t{1} << frattini_rank(t)) == index);
  }
}

TEST_CASE("a simple-graph map exists in the census and is reported as such") {
  Census c = run_census(6);
  bool found_simple = false, found_nonsimple = false, found_nonorientable = false;
  for (const CensusLevel& lvl : c.levels)
    for (const CensusNode& n : lvl.nodes)
      if (n.proper) {
        (n.record.simple_graph ? found_simple : found_nonsimple) = true;
        if (!n.record.orientable) found_nonorientable = true;
      }
  CHECK(found_simple);
  CHECK(found_nonsimple);
  CHECK(found_nonorientable);
}
