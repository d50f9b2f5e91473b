#ifndef REGMAPS_VERIFY_HPP_
#define REGMAPS_VERIFY_HPP_

#include <string>
#include <vector>

#include "regmaps/census.hpp"
#include "regmaps/coset_table.hpp"
#include "regmaps/todd_coxeter.hpp"

namespace regmaps {

enum class VerifyStatus { kPass, kFail, kSkipped };

struct VerificationReport {
  std::string claim;
  std::string params;
  VerifyStatus status = VerifyStatus::kFail;
  std::string evidence;  // orders/counts/keys, or the reason for skip/fail

  bool passed() const { return status == VerifyStatus::kPass; }
};

std::string report_to_string(const VerificationReport& r);
// One line per report plus a pass/fail/skip tally.
std::string report_summary(const std::vector<VerificationReport>& rs);

// Existence: builds the matching construction for (n, s, t), enumerates,
// and checks |G| = 2^n with every listed exponent an exact element order.
// Legal inputs: 2 <= s,t <= n-2 and (s+t <= n, or s+t > n with s = t).
VerificationReport verify_thm32(int n, int s, int t, const EnumerationLimits& limits = {});
// The full legal (s,t) grid at one n.
std::vector<VerificationReport> verify_thm32_grid(int n, const EnumerationLimits& limits = {});

// Nonexistence for s+t > n, s < t (or s > t): pass iff the census has no
// proper map of order 2^n with those type exponents in either order.
// Returns a skipped report when s+t <= n (existence territory) or s = t.
// Throws if the census does not reach order 2^n.
VerificationReport verify_nonexistence(int n, int s, int t, const Census& census);

// Scans every order <= 2^max_n in the census for a proper map with
// s+t > n and s != t; pass iff none exists.
VerificationReport verify_conjecture34(const Census& census, int max_n);

enum class ClassificationClass { kTypeNm2, kTypeNm3, kBoth };

// Canonical keys of the census maps of type exponents (n-2,n-2) must equal
// the keys of G1(n), G2(n); likewise (n-3,n-3) against G3(n)..G6(n).  Also
// asserts the preset keys are pairwise distinct.
VerificationReport verify_classification(int n, const Census& census,
                                         ClassificationClass which = ClassificationClass::kBoth,
                                         const EnumerationLimits& limits = {});

// Quotient by the common central involution (r0 r1)^(2^(s-1)) =
// (r1 r2)^(2^(t-1)): requires a proper map of order 2^n with s+t > n and
// 2 <= s,t <= n-2; checks the quotient is proper of order 2^(n-1) with
// type exponents (s-1, t-1).  Throws on hypothesis violation.
VerificationReport verify_lemma42(const CosetTable& t);

// Part (1): the two word identities that hold in every quotient of D.
// Part (2): checked only when [(r0 r1)^2, r2] is trivial in the group.
VerificationReport verify_lemma31(const CosetTable& t);

// The explicit involution triple at n: involutions, relations of the
// intended presentation, exact orders of a*b and b*c, the power identity
// (b c)^(2^(n-4)) = (a b)^4 = [(a b)^2, c], transitivity, fixed point 1
// of a and c, and group order 2^n.
VerificationReport verify_thm43_perms(int n);

}  // namespace regmaps

#endif  // REGMAPS_VERIFY_HPP_
