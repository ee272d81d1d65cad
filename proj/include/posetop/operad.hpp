#ifndef POSETOP_OPERAD_HPP_
#define POSETOP_OPERAD_HPP_

// Partial compositions of posets.
//
// Inserting B at the vertex a of A always produces a poset on
// A \ {a} together with B. The three set-theoretic families differ in how B
// is attached to the rest of A:
//   bullet : all of B sits where a was;
//   down   : only the minima of B inherit the elements above a;
//   up     : only the maxima of B inherit the elements below a.
// The linear family `circ` is the formal sum of every order on the union
// that restricts to B, keeps B convex and collapses back onto A.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetop/formal_sum.hpp"
#include "posetop/poset.hpp"

namespace posetop {

enum class Family { Circ, Bullet, Down, Up };

std::string_view to_string(Family f) noexcept;
// Accepts "circ", "bullet", "down", "up". Throws ParseError.
Family parse_family(std::string_view name);

struct InsertionSite {
  Poset outer;
  Label vertex;
  Poset inner;
  // Inner labels that clashed with outer labels, as (original, renamed).
  std::vector<LabelPair> renamed;

  // Validates the vertex (VertexNotFound) and the inner poset (EmptyInner);
  // inner labels that clash with outer \ {vertex} get "'" appended until
  // they are fresh.
  static InsertionSite make(Poset outer, std::string_view vertex, Poset inner);
};

Poset compose_bullet(const InsertionSite& site);
Poset compose_down(const InsertionSite& site);
Poset compose_up(const InsertionSite& site);
FormalSum compose_circ(const InsertionSite& site);

// Set-theoretic family dispatch; Circ is rejected with a logic_error.
Poset compose_set(Family f, const InsertionSite& site);
Poset compose_set(Family f, const Poset& outer, std::string_view vertex,
                  const Poset& inner);
// Any family, as a formal sum (a single term for the set families).
FormalSum compose(Family f, const Poset& outer, std::string_view vertex,
                  const Poset& inner);

// Bilinear extension: sum over terms P of x and Q of y of c_P c_Q (P o_a Q).
FormalSum compose_bilinear(Family f, const FormalSum& x, std::string_view vertex,
                           const FormalSum& y);

// Whether `candidate` (on A \ {a} plus B) is an element of Omega(A, a, B):
// restriction to B equals B, B is convex, and collapsing B onto a gives A.
bool in_omega(const Poset& outer, std::string_view vertex, const Poset& inner,
              const Poset& candidate);

// Species-style composition on numeric labels: outer on {1..n}, inner on
// {1..m}; inner element k becomes i+k-1 and outer elements j > i shift by m-1.
FormalSum compose_indexed(Family f, const Poset& outer, std::size_t i,
                          const Poset& inner);

// outer2 on {1,2}: (outer2 o_1 B) o_2 C, checked against (outer2 o_2 C) o_1 B.
// Throws std::logic_error if the two evaluation orders disagree.
FormalSum compose_pair(const Poset& outer2, Family f, const Poset& b,
                       const Poset& c);

// Operad axiom checks. Label sets of A, B, C must be pairwise disjoint.
bool verify_parallel(Family f, const Poset& a, const Poset& b, const Poset& c,
                     std::string_view x, std::string_view y);
bool verify_nested(Family f, const Poset& a, const Poset& b, const Poset& c,
                   std::string_view x, std::string_view y);

struct MixedCompat {
  bool up_bullet = false;    // (A up_a B) bullet_b C == (A bullet_b C) up_a B
  bool down_bullet = false;  // (A down_a B) bullet_b C == (A bullet_b C) down_a B
  bool down_up = false;      // (A down_a B) up_b C == (A up_b C) down_a B

  bool all() const { return up_bullet && down_bullet && down_up; }
};

MixedCompat verify_mixed_compat(const Poset& a, const Poset& b, const Poset& c,
                                std::string_view x, std::string_view y);

// opposite(A down_a B) == opposite(A) up_a opposite(B) and opposite commutes
// with bullet.
bool involution_exchange(const Poset& a, const Poset& b, std::string_view x);

}  // namespace posetop

#endif  // POSETOP_OPERAD_HPP_
