#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "posetop/canon.hpp"
#include "posetop/enumeration.hpp"
#include "posetop/error.hpp"
#include "posetop/structure.hpp"

using namespace posetop;

namespace {
Poset P(std::string_view s) { return parse_poset(s); }
const char* kHook = "1<2<4, 3<4";

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

std::set<CanonKey> keys(const std::vector<IsoClass>& cs) {
  std::set<CanonKey> out;
  for (auto const& c : cs) out.insert(c.key);
  return out;
}
}  // namespace

TEST_CASE("N detection") {
  CHECK_FALSE(is_wn(n_poset()));
  CHECK(is_wn(P(kHook)));
  for (std::size_t n = 1; n <= 5; ++n) {
    all_posets(n, [&](const Poset& p) {
      CHECK(is_wn(p) == !oracle::has_induced_n(p));
      if (n <= 3) CHECK(is_wn(p));
    });
  }
}

TEST_CASE("ordinal factorization") {
  Factorization c = wn_factorize(P("1<2<3"));
  CHECK(c.kind == Factorization::Kind::Ordinal);
  CHECK(c.factors == std::vector<Poset>{P("1"), P("2"), P("3")});
  Factorization h = wn_factorize(P(kHook));
  CHECK(h.factors == std::vector<Poset>{P("1<2, 3"), P("4")});
  Factorization d = wn_factorize(P("1<2, 3"));
  CHECK(d.factors == std::vector<Poset>{P("1<2, 3")});
  CHECK(code_of([] { wn_factorize(n_poset()); }) == ErrorCode::NotWN);
  CHECK(code_of([] { wn_factorize(Poset()); }) == ErrorCode::EmptyPoset);
}

TEST_CASE("ordinal factorization is the unique maximal one, n <= 4") {
  // Brute force: split points are the down-sets D with D below everything
  // outside D; the maximal factorization cuts at all of them.
  for (std::size_t n = 1; n <= 4; ++n) {
    all_posets(n, [&](const Poset& p) {
      if (!is_wn(p)) return;
      std::size_t cuts = 0;
      Bits all = p.all_mask();
      for (Bits d = 1; d < all; ++d) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
          for (std::size_t j = 0; j < n && ok; ++j)
            if (((d >> i) & 1) && !((d >> j) & 1)) ok = p.less(i, j);
        cuts += ok;
      }
      Factorization f = wn_factorize(p);
      CHECK(f.factors.size() == cuts + 1);
      Poset back = f.factors[0];
      for (std::size_t k = 1; k < f.factors.size(); ++k) back = ordinal_sum(back, f.factors[k]);
      CHECK(back == p);
      for (auto const& x : f.factors) CHECK((x.size() == 1 || !is_connected(x)));
    });
  }
}

TEST_CASE("WN is closed under factors and products, n <= 4") {
  auto ps = std::vector<Poset>{};
  for (std::size_t n = 1; n <= 2; ++n) all_posets(n, [&](const Poset& p) { ps.push_back(p); });
  for (auto const& a : ps)
    for (auto const& b0 : ps) {
      Poset b = b0.relabeled([](const Label& l) { return "b" + l; });
      CHECK(is_wn(ordinal_sum(a, b)) == (is_wn(a) && is_wn(b)));
      CHECK(is_wn(disjoint_union(a, b)) == (is_wn(a) && is_wn(b)));
    }
  for (std::size_t n = 1; n <= 4; ++n) {
    all_posets(n, [&](const Poset& p) {
      if (!is_wn(p)) return;
      for (auto const& g : connected_components(p)) CHECK(is_wn(restrict(p, g)));
    });
  }
}

TEST_CASE("b/r split") {
  Factorization c = br_split(P("1<2<3"));
  CHECK(c.kind == Factorization::Kind::BR);
  CHECK(c.factors[0] == P("2<3"));
  CHECK(c.factors[1] == P("1"));
  Factorization s = br_split(P("x"));
  CHECK(s.factors[0].empty());
  CHECK(s.factors[1] == P("x"));
  Factorization n = br_split(P("1<2, 1<4, 3<4"));
  CHECK(n.factors[0] == P("4"));
  CHECK(n.factors[1] == P("1<2, 3"));
  CHECK(code_of([] { br_split(Poset()); }) == ErrorCode::EmptyPoset);
}

TEST_CASE("nabla-compatibility") {
  CHECK(is_nabla_compatible(n_poset()));
  CHECK_FALSE(is_nabla_compatible(P(kHook)));
  CHECK(is_nabla_compatible(P("x")));
  CHECK(is_nabla_compatible(P("x, y, z")));
}

TEST_CASE("b/r of A nabla B, |A|, |B| <= 3") {
  std::vector<Poset> as, bs;
  for (std::size_t n = 1; n <= 3; ++n) {
    all_posets(n, [&](const Poset& p) {
      as.push_back(p.relabeled([](const Label& l) { return "a" + l; }));
      bs.push_back(p.relabeled([](const Label& l) { return "b" + l; }));
    });
  }
  for (auto const& a : as)
    for (auto const& b : bs) {
      Poset ab = down_tri(a, b);
      Factorization s = br_split(ab), sb = br_split(b);
      CHECK(s.factors[0] == disjoint_union(a, sb.factors[0]));
      CHECK(s.factors[1] == sb.factors[1]);
      CHECK(extrema(ab).first == extrema(b).first);
    }
}

TEST_CASE("theta") {
  CHECK(theta(P("x")) == P("x"));
  CHECK(theta(P("x, y, z")) == P("x, y, z"));
  Poset t = theta(P("1<2<3"));
  CHECK(t == P("3<2<1"));
  CHECK(are_isomorphic(t, P("1<2<3")));
  CHECK(theta_inverse(P("x")) == P("x"));
  CHECK(theta_inverse(t) == P("1<2<3"));
  CHECK(theta(P(kHook)) == P("4<2<1, 4<3"));
  CHECK(code_of([] { theta(n_poset()); }) == ErrorCode::NotWN);
  CHECK(code_of([] { theta_inverse(P(kHook)); }) == ErrorCode::NotNablaCompatible);
}

TEST_CASE("theta is a bijection on each ground set, n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<std::string>> images;
    std::size_t wn = 0, nabla = 0;
    all_posets(n, [&](const Poset& p) {
      if (is_nabla_compatible(p)) ++nabla;
      if (!is_wn(p)) return;
      ++wn;
      Poset q = theta(p);
      CHECK(is_nabla_compatible(q));
      CHECK(theta_inverse(q) == p);
      auto s = q.sorted();
      images.insert({s.to_string()});
    });
    CHECK(images.size() == wn);
    CHECK(wn == nabla);
  }
}

TEST_CASE("presentation relations") {
  auto checks = verify_suboperad_relations();
  CHECK(checks.size() == 8);
  for (auto const& c : checks) {
    INFO(c.name, ": ", c.lhs, " vs ", c.rhs);
    CHECK(c.holds);
  }
  CHECK(generator_nabla() == P("2<1"));
}

TEST_CASE("closures up to four elements") {
  CHECK(closure_wn(2).size() == 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<CanonKey> wn, nabla, conn;
    for (std::size_t k = 1; k <= n; ++k) {
      for (auto const& c : all_isoclasses(k, ClassFilter::WN)) wn.insert(c.key);
      for (auto const& c : all_isoclasses(k, ClassFilter::Nabla)) nabla.insert(c.key);
      for (auto const& c : all_isoclasses(k, ClassFilter::Connected)) conn.insert(c.key);
    }
    CHECK(keys(closure_wn(n)) == wn);
    CHECK(keys(closure_nabla(n)) == nabla);
    CHECK(keys(closure_triple(n)) == conn);
  }
  std::set<CanonKey> two;
  for (auto const& c : closure_wn(2)) if (c.key.n == 2) two.insert(c.key);
  CHECK(two == std::set<CanonKey>{canonical_key(P("1, 2")), canonical_key(P("1<2"))});
  CHECK(closure_wn(4).size() - closure_wn(3).size() == 15);
  CHECK(closure_nabla(4).size() - closure_nabla(3).size() == 15);
}
