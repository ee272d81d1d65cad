#ifndef POSETOP_SUITES_HPP_
#define POSETOP_SUITES_HPP_

// Exhaustive verification suites over small posets. Every suite returns a
// report whose failure list is empty exactly when the checked law holds on
// the whole grid.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "posetop/operad.hpp"
#include "posetop/poset.hpp"
#include "posetop/report.hpp"

namespace posetop {

struct SuiteOptions {
  std::size_t max_n = 3;
  std::size_t jobs = 1;  // 0: all hardware threads
};

// All labeled posets with 1..max_n elements labeled prefix+"1", prefix+"2"...
std::vector<Poset> small_posets(std::size_t max_n, const std::string& prefix);

// Parallel and nested associativity of one family; |A|, |B|, |C| <= max_n.
VerificationReport verify_axioms(Family f, const SuiteOptions& opt);
// Unit laws: singleton o_x B = B and A o_a singleton = A; sizes <= max_n.
VerificationReport verify_units(Family f, const SuiteOptions& opt);
// quotient succeeds exactly on convex subsets; all posets with n <= max_n.
VerificationReport verify_quotient_criterion(const SuiteOptions& opt);
// Phi(A bullet_a B) = Phi(A) circ_a Phi(B) for |A|, |B| <= max_n, and
// Phi^-1 Phi = id on sums over ground sets with at most max_n + 1 elements.
VerificationReport verify_phi_suite(const SuiteOptions& opt);
// The three mixed identities for |A| <= max_n, |B|, |C| <= max_n - 1.
VerificationReport verify_mixed(const SuiteOptions& opt);
// Opposite preserves bullet and swaps down/up; |A|, |B| <= max_n.
VerificationReport verify_involution(const SuiteOptions& opt);
// circ terms are refinements of bullet and bullet is a term; every circ term
// is in Omega; sizes <= max_n.
VerificationReport verify_circ_bounds(const SuiteOptions& opt);
// theta is a bijection from WN to nabla-compatible posets on {1..n},
// n <= max_n, with theta_inverse as inverse.
VerificationReport verify_theta(const SuiteOptions& opt);
// b(A nabla B) = A + bB, r(A nabla B) = rB, min(A nabla B) = min B.
VerificationReport verify_br_lemma(const SuiteOptions& opt);
// closure_wn / closure_nabla equal the WN / nabla-compatible classes, the
// presentation relations hold, and the triple closure covers the connected
// classes up to 5 elements.
VerificationReport verify_structure(const SuiteOptions& opt);
// Count cross-checks against the naive relation oracle and the pinned
// sequence prefixes.
VerificationReport verify_counts(const SuiteOptions& opt);
// All hopf laws with classes of total size <= max_n.
VerificationReport verify_hopf(const SuiteOptions& opt);

struct SuiteInfo {
  std::string name;
  std::string description;
  std::function<VerificationReport(const SuiteOptions&)> run;
};

// Every named suite; "axioms" covers all four families.
const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(std::string_view name);

}  // namespace posetop

#endif  // POSETOP_SUITES_HPP_
