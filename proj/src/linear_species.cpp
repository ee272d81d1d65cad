#include "posetop/linear_species.hpp"

#include <bit>

#include "posetop/operad.hpp"
#include "posetop/suborders.hpp"

namespace posetop {

std::vector<Poset> refinements(const Poset& p) {
  std::vector<Poset> out;
  for_each_suborder(p, {}, [&](const std::vector<Bits>& rows) {
    out.push_back(Poset::from_order(p.labels(), rows));
  });
  return out;
}

FormalSum phi(const Poset& p) {
  FormalSum out;
  for (auto const& q : refinements(p)) out.add(q);
  return out;
}

FormalSum phi(const FormalSum& x) {
  FormalSum out;
  for (auto const& [p, c] : x.terms()) {
    FormalSum part = phi(p);
    part *= c;
    out += part;
  }
  return out;
}

// Phi is unitriangular for the refinement order: Phi(P) = P + strictly finer
// terms, and strictly finer means fewer strict pairs. Peeling off the
// coarsest remaining term therefore terminates.
FormalSum phi_inverse(const FormalSum& x) {
  FormalSum out;
  FormalSum rest = x;
  while (!rest.empty()) {
    auto terms = rest.terms();
    std::size_t best = 0;
    for (std::size_t k = 1; k < terms.size(); ++k) {
      if (terms[k].first.strict_pair_count() >
          terms[best].first.strict_pair_count()) {
        best = k;
      }
    }
    auto const& [p, c] = terms[best];
    out.add(p, c);
    FormalSum image = phi(p);
    image *= c;
    rest -= image;
  }
  return out;
}

FormalSum circ_bilinear(const FormalSum& x, std::string_view vertex,
                        const FormalSum& y) {
  return compose_bilinear(Family::Circ, x, vertex, y);
}

bool verify_phi_morphism(const Poset& a, std::string_view vertex,
                         const Poset& b) {
  auto site = InsertionSite::make(a, vertex, b);
  FormalSum const lhs = phi(compose_bullet(site));
  FormalSum const rhs = circ_bilinear(phi(site.outer), site.vertex,
                                      phi(site.inner));
  return lhs == rhs;
}

}  // namespace posetop
