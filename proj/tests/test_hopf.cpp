#include <doctest.h>

#include "oracles.hpp"
#include "posetop/enumeration.hpp"
#include "posetop/hopf.hpp"
#include "posetop/structure.hpp"

using namespace posetop;

namespace {
ClassSum C(std::string_view s) { return class_of(parse_poset(s)); }
const ClassSum kOne{kUnitKey};
CanonKey K(std::string_view s) { return canonical_key(parse_poset(s)); }
}  // namespace

TEST_CASE("disjoint union product") {
  CHECK(prod_m(C("1"), C("1")) == C("1, 2"));
  CHECK(prod_m(C("1"), C("1<2")) == C("1<2, 3"));
  CHECK(prod_m(kOne, C("1<2")) == C("1<2"));
  CHECK(prod_m(C("1<2"), kOne) == C("1<2"));
}

TEST_CASE("ordinal product") {
  CHECK(prod_ordinal(C("1"), C("1")) == C("1<2"));
  CHECK(prod_ordinal(C("1<2"), C("1")) == C("1<2<3"));
  CHECK(prod_ordinal(prod_ordinal(C("1"), C("1")), C("1")) ==
        prod_ordinal(C("1"), prod_ordinal(C("1"), C("1"))));
}

TEST_CASE("star product") {
  CHECK(prod_star(C("1"), C("1")) == C("1, 2") + C("1<2"));
  CHECK(prod_star(kOne, C("1<2")) == C("1<2"));
  ClassSum triple = prod_star(prod_star(C("1"), C("1")), C("1"));
  CHECK(triple == prod_star(C("1"), prod_star(C("1"), C("1"))));
  ClassSum want = C("1, 2, 3") + C("1<2<3") + C("1<2, 1<3") + C("1<3, 2<3");
  want.add(K("1<2, 3"), 3);
  CHECK(triple == want);
  std::int64_t terms = 0;
  for (auto const& [k, c] : triple) terms += c;
  CHECK(terms == 7);
  // Labeled: no element of b below an element of a.
  FormalSum s = star_labeled(parse_poset("a"), parse_poset("b"));
  CHECK(s == FormalSum(parse_poset("a, b")) + FormalSum(parse_poset("a<b")));
}

TEST_CASE("triangle products") {
  CHECK(prod_up_tri(C("1"), C("1")) == C("1<2"));
  CHECK(prod_up_tri(C("1, 2"), C("1")) == C("1<3, 2<3"));
  CHECK(prod_up_tri(C("1"), prod_up_tri(C("1"), C("1"))) ==
        prod_up_tri(C("1, 2"), C("1")));
  CHECK(prod_down_tri(C("1"), C("1")) == C("1<2"));
  CHECK(prod_down_tri(C("1, 2"), C("1")) == C("3<1, 3<2"));
  // Opposite exchanges the two on classes with two elements.
  auto opp = [](const ClassSum& x) {
    ClassSum out;
    for (auto const& [k, c] : x) out.add(canonical_key(opposite(poset_from_key(k))), c);
    return out;
  };
  for (auto const& x : {C("1, 2"), C("1<2")})
    for (auto const& y : {C("1, 2"), C("1<2")})
      CHECK(opp(prod_down_tri(x, y)) == prod_up_tri(opp(x), opp(y)));
}

TEST_CASE("coproducts") {
  TensorSum d1 = coproduct_delta(C("1"));
  TensorSum want1 = tensor(C("1"), kOne) + tensor(kOne, C("1"));
  CHECK(d1 == want1);
  TensorSum d2 = coproduct_delta(C("1, 2"));
  TensorSum want2 = tensor(C("1, 2"), kOne) + tensor(kOne, C("1, 2"));
  want2.add({K("1"), K("1")}, 2);
  CHECK(d2 == want2);
  CHECK(coproduct_delta(C("1<2<3")) ==
        tensor(C("1<2<3"), kOne) + tensor(kOne, C("1<2<3")));

  CHECK(coproduct_delta_star(C("1<2")) ==
        tensor(C("1<2"), kOne) + tensor(C("1"), C("1")) + tensor(kOne, C("1<2")));
  CHECK(coproduct_delta_star(C("1, 2")) == want2);

  Poset n = n_poset();
  TensorSum dn = coproduct_delta_star(class_of(n));
  std::int64_t total = 0;
  for (auto const& [k, c] : dn) total += c;
  auto ideals = oracle::upper_sets(n);
  CHECK(total == std::int64_t(ideals.size()));
  // Each ideal I contributes (N \ I) (x) I.
  TensorSum expect;
  for (Bits s : ideals) {
    Bits all = (Bits{1} << n.size()) - 1;
    Poset lower = restrict_mask(n, all & ~s), upper = restrict_mask(n, s);
    expect.add({lower.empty() ? kUnitKey : canonical_key(lower),
                upper.empty() ? kUnitKey : canonical_key(upper)});
  }
  CHECK(dn == expect);
}

TEST_CASE("pairing") {
  CHECK(pairing(C("1<2<3"), C("1<2<3")) == 1);
  CHECK(pairing(C("1, 2, 3"), C("1, 2, 3")) == 6);
  CHECK(pairing(C("1<2"), C("1, 2")) == 0);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto cs = all_isoclasses(n);
    for (auto const& a : cs)
      for (auto const& b : cs) {
        std::int64_t v = pairing(ClassSum(a.key), ClassSum(b.key));
        if (a.key == b.key) {
          CHECK(v == std::int64_t(oracle::automorphisms(a.representative)));
        } else {
          CHECK(v == 0);
        }
      }
  }
}

TEST_CASE("duality on small classes") {
  // <xy, z> = <x (x) y, Delta z> and <x*y, z> = <x (x) y, Delta* z>.
  std::vector<ClassSum> small;
  for (std::size_t n = 1; n <= 2; ++n)
    for (auto const& c : all_isoclasses(n)) small.emplace_back(c.key);
  std::vector<ClassSum> big;
  for (std::size_t n = 2; n <= 4; ++n)
    for (auto const& c : all_isoclasses(n)) big.emplace_back(c.key);
  for (auto const& x : small)
    for (auto const& y : small)
      for (auto const& z : big) {
        CHECK(pairing(prod_m(x, y), z) == pairing(tensor(x, y), coproduct_delta(z)));
        CHECK(pairing(prod_star(x, y), z) ==
              pairing(tensor(x, y), coproduct_delta_star(z)));
      }
}

TEST_CASE("law verifiers at small sizes") {
  for (std::size_t n : {2u, 3u}) {
    CHECK(verify_products(n).ok());
    CHECK(verify_coalgebra(n).ok());
    CHECK(verify_bialgebra(n).ok());
    CHECK(verify_infinitesimal(n).ok());
    CHECK(verify_nap(n).ok());
  }
  // Infinitesimal identity on single points.
  ClassSum x = C("1");
  TensorSum lhs = coproduct_delta_star(prod_ordinal(x, x));
  TensorSum rhs = tensor_product(Product::Down, coproduct_delta_star(x), tensor(kOne, x)) +
                  tensor_product(Product::Down, tensor(x, kOne), coproduct_delta_star(x)) -
                  tensor(x, x);
  CHECK(lhs == rhs);
  CHECK(lhs == tensor(C("1<2"), kOne) + tensor(C("1"), C("1")) + tensor(kOne, C("1<2")));
  // NAP with an edge.
  ClassSum e = C("1<2"), p = C("1");
  CHECK(prod_up_tri(e, prod_up_tri(p, p)) == prod_up_tri(prod_m(e, p), p));
  CHECK(prod_up_tri(e, prod_up_tri(p, p)) == prod_up_tri(p, prod_up_tri(e, p)));
  CHECK(prod_down_tri(e, prod_down_tri(p, p)) == prod_down_tri(prod_m(e, p), p));
}

TEST_CASE("parsing names") {
  CHECK(parse_product("star") == Product::Star);
  CHECK(parse_coproduct("dstar") == Coproduct::DeltaStar);
  CHECK_THROWS(parse_product("times"));
}
