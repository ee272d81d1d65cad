#ifndef POSETOP_STRUCTURE_HPP_
#define POSETOP_STRUCTURE_HPP_

// WN posets (no induced N) and their ordinal factorization, the b/r split
// and nabla-compatible posets, the bijection theta between the two families,
// and suboperad closures.
//
// Throughout, A nabla B is the poset on A and B where the minima of B are
// below every element of A.

#include <string>
#include <utility>
#include <vector>

#include "posetop/canon.hpp"
#include "posetop/poset.hpp"

namespace posetop {

// The N poset a<c, b<c, b<d.
Poset n_poset();

// Labeled set-level products (label sets must be disjoint, LabelClash).
Poset ordinal_sum(const Poset& a, const Poset& b);   // all of a below all of b
Poset up_tri(const Poset& a, const Poset& b);        // a below the maxima of b
Poset down_tri(const Poset& a, const Poset& b);      // minima of b below a

bool is_wn(const Poset& p);

struct Factorization {
  enum class Kind { Ordinal, BR };
  Kind kind = Kind::Ordinal;
  // Ordinal: A = factors[0] down ... down factors[k-1].
  // BR: factors = {b, r} with A = b nabla r.
  std::vector<Poset> factors;
};

// Unique maximal ordinal factorization; each factor is a singleton or
// disconnected. Throws NotWN or EmptyPoset.
Factorization wn_factorize(const Poset& p);

// b = elements strictly above every minimum, r = the rest. Throws EmptyPoset.
Factorization br_split(const Poset& p);

bool is_nabla_compatible(const Poset& p);

// Throws NotWN.
Poset theta(const Poset& p);
// Throws NotNablaCompatible.
Poset theta_inverse(const Poset& p);

struct RelationCheck {
  std::string name;
  bool holds = false;
  std::string lhs;
  std::string rhs;
};

// The arity-3 relations of both suboperad presentations.
std::vector<RelationCheck> verify_suboperad_relations();

// Arity-2 generators on {1,2}.
Poset generator_m();       // antichain {1,2}
Poset generator_down();    // 1 < 2
Poset generator_nabla();   // 2 < 1: the minimum of input 2 sits below input 1

enum class ClosureFamily { WN, Nabla, Triple };

std::string_view to_string(ClosureFamily f) noexcept;
ClosureFamily parse_closure_family(std::string_view name);

// Isoclasses of every size 1..n_max reachable from the generators (and the
// unit class) by partial compositions of the family, sorted by (size, key).
std::vector<IsoClass> closure(ClosureFamily family, std::size_t n_max);
inline std::vector<IsoClass> closure_wn(std::size_t n_max) {
  return closure(ClosureFamily::WN, n_max);
}
inline std::vector<IsoClass> closure_nabla(std::size_t n_max) {
  return closure(ClosureFamily::Nabla, n_max);
}
inline std::vector<IsoClass> closure_triple(std::size_t n_max) {
  return closure(ClosureFamily::Triple, n_max);
}

}  // namespace posetop

#endif  // POSETOP_STRUCTURE_HPP_
