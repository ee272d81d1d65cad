#ifndef POSETOP_LINEAR_SPECIES_HPP_
#define POSETOP_LINEAR_SPECIES_HPP_

// The species automorphism Phi(P) = sum of all refinements of P, its
// inverse, and the check that Phi turns bullet into circ.

#include <string_view>
#include <vector>

#include "posetop/formal_sum.hpp"
#include "posetop/poset.hpp"

namespace posetop {

// Every poset Q on the ground set of p with Q finer than p (p and the
// antichain included).
std::vector<Poset> refinements(const Poset& p);

FormalSum phi(const Poset& p);
FormalSum phi(const FormalSum& x);
FormalSum phi_inverse(const FormalSum& x);

// Bilinear extension of the circ composition.
FormalSum circ_bilinear(const FormalSum& x, std::string_view vertex,
                        const FormalSum& y);

// Phi(A bullet_a B) == Phi(A) circ_a Phi(B).
bool verify_phi_morphism(const Poset& a, std::string_view vertex,
                         const Poset& b);

}  // namespace posetop

#endif  // POSETOP_LINEAR_SPECIES_HPP_
