#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "posetop/canon.hpp"
#include "posetop/enumeration.hpp"
#include "posetop/error.hpp"
#include "posetop/operad.hpp"
#include "posetop/structure.hpp"
#include "posetop/suites.hpp"

using namespace posetop;

namespace {

Poset P(std::string_view s) { return parse_poset(s); }

FormalSum sum_of(const std::vector<Poset>& ps) {
  FormalSum s;
  for (auto const& p : ps) s.add(p);
  return s;
}

const Family kSet[] = {Family::Bullet, Family::Down, Family::Up};
const Family kAll[] = {Family::Bullet, Family::Down, Family::Up, Family::Circ};

// The four-case definitions written out directly.
Poset naive_set(Family f, const Poset& a, const Label& v, const Poset& b) {
  std::vector<Label> labels;
  for (auto const& l : a.labels()) {
    if (l == v) {
      labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    } else {
      labels.push_back(l);
    }
  }
  auto [bmin, bmax] = extrema(b);
  auto in = [](const std::vector<Label>& v, const Label& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  std::vector<LabelPair> gens;
  for (auto const& x : labels) {
    for (auto const& y : labels) {
      bool xb = b.contains(x), yb = b.contains(y), ok = false;
      if (xb && yb) ok = b.leq(x, y);
      else if (!xb && !yb) ok = a.leq(x, y);
      else if (!xb && yb) ok = a.leq(x, v) && (f != Family::Up || in(bmax, y));
      else ok = a.leq(v, y) && (f != Family::Down || in(bmin, x));
      if (ok && x != y) gens.emplace_back(x, y);
    }
  }
  return Poset::build(labels, gens);
}

}  // namespace

TEST_CASE("bullet examples") {
  CHECK(compose_bullet(InsertionSite::make(P("a<b<c"), "b", P("1<2"))) ==
        P("a<1<2<c"));
  CHECK(compose_bullet(InsertionSite::make(P("a<b<c"), "b", P("1, 2"))) ==
        P("a<1<c, a<2<c"));
  CHECK(compose_bullet(InsertionSite::make(P("a"), "a", P("x<y, z"))) ==
        P("x<y, z"));
}

TEST_CASE("down and up examples") {
  CHECK(compose_down(InsertionSite::make(P("a<b<c"), "b", P("1<2"))) ==
        P("a<1<2, 1<c"));
  CHECK(compose_set(Family::Down, P("1<b"), "1", P("a<c")) == P("a<b, a<c"));
  CHECK(compose_set(Family::Down, P("a"), "a", P("x<y")) == P("x<y"));
  CHECK(compose_up(InsertionSite::make(P("a<b<c"), "b", P("1<2"))) ==
        P("1<2<c, a<2"));
  CHECK(compose_set(Family::Up, P("b<1"), "1", P("c<a")) == P("b<a, c<a"));
  CHECK(compose_set(Family::Up, P("a"), "a", P("x<y")) == P("x<y"));
}

TEST_CASE("set families match the four-case definitions") {
  auto as = small_posets(3, "a");
  auto bs = small_posets(3, "b");
  for (auto const& a : as)
    for (auto const& v : a.labels())
      for (auto const& b : bs)
        for (Family f : kSet) CHECK(compose_set(f, a, v, b) == naive_set(f, a, v, b));
}

TEST_CASE("circ examples") {
  FormalSum e = compose(Family::Circ, P("a<b"), "a", P("1<2"));
  CHECK(e == sum_of({P("1<2, 1<b"), P("1<2<b")}));
  FormalSum f = compose(Family::Circ, P("a<b<c"), "b", P("1<2"));
  CHECK(f.size() == 5);
  CHECK(f.coefficient(P("a<1<2<c")) == 1);
  // The term where a and c are incomparable.
  Poset nterm = P("a<2, 1<2, 1<c");
  CHECK(f.coefficient(nterm) == 1);
  CHECK_FALSE(nterm.leq("a", "c"));
  CHECK(compose(Family::Circ, P("x<y, z"), "y", P("q")) == FormalSum(P("x<q, z")));
}

TEST_CASE("circ agrees with the subset-filter Omega oracle") {
  auto as = small_posets(3, "a");
  auto bs = small_posets(3, "b");
  for (auto const& a : as) {
    for (auto const& v : a.labels()) {
      for (auto const& b : bs) {
        if (a.size() + b.size() > 6) continue;
        Poset bullet = compose_set(Family::Bullet, a, v, b);
        auto om = oracle::omega(a, v, b, bullet);
        FormalSum got = compose(Family::Circ, a, v, b);
        CHECK(got == sum_of(om));
        for (auto const& [t, c] : got.terms()) {
          CHECK(c == 1);
          CHECK(is_finer(t, bullet));
          CHECK(in_omega(a, v, b, t));
        }
        CHECK(got.coefficient(bullet) == 1);
      }
    }
  }
}

TEST_CASE("errors and relabeling") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([] { InsertionSite::make(P("a<b"), "z", P("1")); }) ==
        ErrorCode::VertexNotFound);
  CHECK(code([] { InsertionSite::make(P("a<b"), "a", Poset()); }) ==
        ErrorCode::EmptyInner);
  InsertionSite s = InsertionSite::make(P("a<b"), "a", P("b<c"));
  REQUIRE(s.renamed.size() == 1);
  CHECK(s.renamed[0] == LabelPair{"b", "b'"});
  CHECK(compose_bullet(s) == P("b'<c<b"));
  // The vertex itself may be reused inside the inner poset.
  CHECK(compose_set(Family::Bullet, P("a<b"), "a", P("a<x")) == P("a<x<b"));
}

TEST_CASE("unit laws, n <= 4") {
  for (auto const& p : small_posets(4, "p")) {
    for (Family f : kAll) {
      CHECK(compose(f, singleton("u"), "u", p) == FormalSum(p));
      for (auto const& v : p.labels()) {
        CHECK(compose(f, p, v, singleton(v)) == FormalSum(p));
      }
    }
  }
}

TEST_CASE("associativity on a small grid, all families") {
  // |A| = 2 and |B|, |C| <= 2; the full |A|,|B|,|C| <= 3 grid runs in the
  // acceptance binary.
  auto as = small_posets(2, "a");
  auto bs = small_posets(2, "b");
  auto cs = small_posets(2, "c");
  for (Family f : kAll) {
    for (auto const& a : as) {
      if (a.size() != 2) continue;
      for (auto const& b : bs)
        for (auto const& c : cs) {
          CHECK(verify_parallel(f, a, b, c, a.label(0), a.label(1)));
          for (auto const& x : a.labels())
            for (auto const& y : b.labels())
              CHECK(verify_nested(f, a, b, c, x, y));
        }
    }
  }
  // Antichain outer under bullet gives the disjoint union.
  Poset r = compose_set(Family::Bullet,
                        compose_set(Family::Bullet, P("x, y"), "x", P("1<2")), "y",
                        P("3"));
  CHECK(r == P("1<2, 3"));
  // circ on edges: both sides expand to the same multiset.
  CHECK(verify_parallel(Family::Circ, P("a1<a2"), P("b1<b2"), P("c1<c2"), "a1", "a2"));
  CHECK(verify_nested(Family::Circ, P("a1<a2"), P("b1<b2"), P("c1<c2"), "a1", "b2"));
}

TEST_CASE("compose_pair") {
  Poset b = P("b1<b2"), c = P("c1, c2");
  for (Family f : kAll) {
    CHECK(compose_pair(P("1, 2"), f, b, c) == FormalSum(disjoint_union(b, c)));
  }
  CHECK(compose_pair(P("1<2"), Family::Bullet, b, c) == FormalSum(ordinal_sum(b, c)));
  CHECK(compose_pair(P("1<2"), Family::Down, P("x"), P("y")) == FormalSum(P("x<y")));
  CHECK(compose_indexed(Family::Bullet, P("1<2"), 2, P("1, 2")) ==
        FormalSum(P("1<2, 1<3")));
}

TEST_CASE("mixed compatibilities") {
  auto as = small_posets(3, "a");
  auto bs = small_posets(2, "b");
  auto cs = small_posets(2, "c");
  for (auto const& a : as)
    for (auto const& x : a.labels())
      for (auto const& y : a.labels()) {
        if (x == y) continue;
        for (auto const& b : bs)
          for (auto const& c : cs) CHECK(verify_mixed_compat(a, b, c, x, y).all());
      }
  CHECK(verify_mixed_compat(P("a, b"), P("x"), P("y"), "a", "b").all());
  // Nested positions are not compatible in general.
  Poset lhs = compose_set(Family::Bullet,
                          compose_set(Family::Up, P("u<a"), "a", P("v<b")), "b",
                          P("1<2"));
  Poset rhs = compose_set(Family::Up, P("u<a"), "a",
                          compose_set(Family::Bullet, P("v<b"), "b", P("1<2")));
  CHECK_FALSE(are_isomorphic(lhs, rhs));
  CHECK(are_isomorphic(lhs, P("1<3, 2<3, 3<4")));
  CHECK(are_isomorphic(rhs, P("1<2<4, 3<4")));
}

TEST_CASE("involution") {
  Poset a = P("a<b<c"), b = P("1<2");
  CHECK(opposite(compose_set(Family::Down, a, "b", b)) ==
        compose_set(Family::Up, opposite(a), "b", opposite(b)));
  CHECK(involution_exchange(a, b, "b"));
  CHECK(involution_exchange(P("x"), P("y"), "x"));
  for (auto const& p : small_posets(3, "a"))
    for (auto const& v : p.labels())
      for (auto const& q : small_posets(3, "b")) CHECK(involution_exchange(p, q, v));
}

TEST_CASE("down keeps rooted trees rooted") {
  auto is_tree = [](const Poset& p) {
    auto [mn, mx] = extrema(p);
    if (mn.size() != 1) return false;
    // Every element other than the root has exactly one lower cover.
    std::map<Label, int> lower;
    for (auto const& [u, v] : hasse_covers(p)) ++lower[v];
    for (auto const& l : p.labels())
      if (l != mn[0] && lower[l] != 1) return false;
    return true;
  };
  std::vector<Poset> trees_a, trees_b;
  for (auto const& p : small_posets(4, "a")) if (is_tree(p)) trees_a.push_back(p);
  for (auto const& p : small_posets(3, "b")) if (is_tree(p)) trees_b.push_back(p);
  CHECK(trees_a.size() > 10);
  for (auto const& a : trees_a)
    for (auto const& v : a.labels())
      for (auto const& b : trees_b) {
        if (a.size() + b.size() > 5) continue;
        CHECK(is_tree(compose_set(Family::Down, a, v, b)));
      }
}

TEST_CASE("generation identities with the triple family") {
  struct Row {
    Family f;
    const char *a, *v, *b, *want;
  };
  const Row rows[] = {
      {Family::Bullet, "a<1", "1", "b<c", "a<b<c"},
      {Family::Down, "1<b", "1", "a<c", "a<c, a<b"},
      {Family::Up, "b<1", "1", "c<a", "c<a, b<a"},
      {Family::Bullet, "1<c<d", "1", "a<b", "a<b<c<d"},
      {Family::Down, "a<1<c", "1", "b<d", "a<b<d, b<c"},
      {Family::Down, "1<b<c", "1", "a<d", "a<d, a<b<c"},
      {Family::Down, "1<c, 1<b", "1", "a<d", "a<d, a<c, a<b"},
      {Family::Up, "a<1<d", "1", "b<c", "b<c<d, a<c"},
      {Family::Up, "a<b<1", "1", "c<d", "c<d, a<b<d"},
      {Family::Up, "a<1, b<1", "1", "c<d", "c<d, a<d, b<d"},
      {Family::Up, "a<1, a<b", "1", "d<c", "d<c, a<c, a<b"},
      {Family::Down, "1<b", "1", "a<c, d<c", "a<c, d<c, a<b, d<b"},
      {Family::Bullet, "a<1", "1", "c<b, d<b", "a<c, a<d, c<b, d<b"},
  };
  std::set<CanonKey> reached;
  for (auto const& r : rows) {
    Poset got = compose_set(r.f, P(r.a), r.v, P(r.b));
    CHECK(got == P(r.want));
    if (got.size() == 4) reached.insert(canonical_key(got));
  }
  std::set<CanonKey> connected4;
  for (auto const& c : all_isoclasses(4, ClassFilter::Connected)) connected4.insert(c.key);
  CHECK(reached == connected4);
}
