#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "regmaps/census.hpp"
#include "regmaps/presentation.hpp"
#include "regmaps/todd_coxeter.hpp"
#include "regmaps/verify.hpp"

using namespace regmaps;

TEST_CASE("construction check passes on all three parameter regimes") {
  CHECK(verify_thm32(10, 3, 4).passed());   // s+t <= n-1
  CHECK(verify_thm32(10, 4, 6).passed());   // s+t = n
  CHECK(verify_thm32(10, 7, 7).passed());   // s+t > n with s = t
  CHECK(verify_thm32(10, 2, 8).passed());   // boundary values
  VerificationReport r = verify_thm32(10, 3, 4);
  CHECK(r.claim == "thm32");
  CHECK(r.evidence.find("|G|=1024") != std::string::npos);
}

TEST_CASE("construction check rejects illegal parameters") {
  CHECK_THROWS_AS(verify_thm32(10, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_thm32(10, 4, 9), std::invalid_argument);
  CHECK_THROWS_AS(verify_thm32(10, 6, 7), std::invalid_argument);  // s+t > n, s != t
}

TEST_CASE("the full legal grid at n = 8") {
  std::vector<VerificationReport> grid = verify_thm32_grid(8);
  // s,t in [2,6]: 15 pairs with s+t <= 8, plus s = t in {5,6}
  CHECK(grid.size() == 17);
  for (const VerificationReport& r : grid) {
    INFO(r.params);
    CHECK(r.passed());
  }
}

TEST_CASE("nonexistence scan over the census") {
  Census c = run_census(6);
  VerificationReport r = verify_nonexistence(6, 3, 5, c);  // s+t = 8 > 6, s != t
  CHECK(r.passed());
  CHECK(verify_nonexistence(6, 5, 3, c).passed());
  // skipped where existence holds instead
  CHECK(verify_nonexistence(6, 5, 5, c).status == VerifyStatus::kSkipped);
  CHECK(verify_nonexistence(6, 2, 4, c).status == VerifyStatus::kSkipped);
  // a too-shallow census is an error, not a silent pass
  CHECK_THROWS(verify_nonexistence(9, 4, 6, c));
}

TEST_CASE("conjecture scan over the census") {
  Census c = run_census(7);
  VerificationReport r = verify_conjecture34(c, 7);
  CHECK(r.passed());
  CHECK(r.evidence.find("proper maps") != std::string::npos);
  CHECK_THROWS(verify_conjecture34(c, 8));
}

TEST_CASE("classification at the base order 2^10") {
  Census c = run_census(10);
  VerificationReport both = verify_classification(10, c);
  INFO(both.evidence);
  CHECK(both.passed());
  // four maps of type (7,7), two of type (8,8)
  CHECK(both.evidence.find("type (8,8): 2 census maps") != std::string::npos);
  CHECK(both.evidence.find("type (7,7): 4 census maps") != std::string::npos);
  CHECK(verify_classification(10, c, ClassificationClass::kTypeNm2).passed());
  CHECK(verify_classification(10, c, ClassificationClass::kTypeNm3).passed());
  CHECK_THROWS(verify_classification(11, c));
}

TEST_CASE("central quotient halves both type exponents") {
  CHECK(verify_lemma42(todd_coxeter(preset("G1", {10}))).passed());
  CHECK(verify_lemma42(todd_coxeter(preset("G4", {10}))).passed());
  // hypothesis violations are errors: dihedral has s = 1
  CHECK_THROWS_AS(verify_lemma42(todd_coxeter(preset("dihedral", {4}))),
                  std::invalid_argument);
  // s+t <= n also violates the hypothesis
  CHECK_THROWS_AS(verify_lemma42(todd_coxeter(preset("thm32_case1", {8, 3, 4}))),
                  std::invalid_argument);
}

TEST_CASE("commutator identities: part one always, part two when it applies") {
  // the hypothesis [(r0r1)^2, r2] = 1 holds in the s+t = n construction
  VerificationReport full = verify_lemma31(todd_coxeter(preset("thm32_case2", {10, 4, 6})));
  INFO(full.evidence);
  CHECK(full.status == VerifyStatus::kPass);
  // part (1) alone on a group where the hypothesis fails
  VerificationReport part1 = verify_lemma31(todd_coxeter(preset("prop28_L", {8})));
  CHECK(part1.status == VerifyStatus::kSkipped);
  CHECK(part1.evidence.find("part (1) pass") != std::string::npos);
  // part (1) holds even on the humble dihedral map
  VerificationReport dih = verify_lemma31(todd_coxeter(preset("dihedral", {4})));
  CHECK(dih.status != VerifyStatus::kFail);
}

TEST_CASE("involution triple verification") {
  VerificationReport r = verify_thm43_perms(8);
  INFO(r.evidence);
  CHECK(r.passed());
  CHECK(verify_thm43_perms(11).passed());
  CHECK_THROWS(verify_thm43_perms(6));
}

TEST_CASE("report rendering and summary tally") {
  VerificationReport r = verify_thm32(8, 2, 2);
  std::string line = report_to_string(r);
  CHECK(line.find("claim=thm32") != std::string::npos);
  CHECK(line.find("status=pass") != std::string::npos);
  CHECK(line.find("params=[n=8 s=2 t=2]") != std::string::npos);
  VerificationReport skip;
  skip.claim = "demo";
  skip.status = VerifyStatus::kSkipped;
  std::string summary = report_summary({r, skip});
  CHECK(summary.find("summary: 1 pass, 0 fail, 1 skipped") != std::string::npos);
}
