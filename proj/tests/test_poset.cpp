#include <doctest.h>

#include "oracles.hpp"
#include "posetop/enumeration.hpp"
#include "posetop/error.hpp"
#include "posetop/poset.hpp"

using namespace posetop;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

Poset n_shape() { return Poset::build({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}}); }

std::vector<Poset> posets_upto(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      out.emplace_back();
      continue;
    }
    all_posets(k, [&](const Poset& p) { out.push_back(p); });
  }
  return out;
}

}  // namespace

TEST_CASE("build closes generators") {
  Poset p = Poset::build({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  CHECK(p.leq("1", "3"));
  CHECK(p.leq("1", "2"));
  CHECK_FALSE(p.leq("3", "1"));
  CHECK(p.strict_pair_count() == 3);

  Poset n = n_shape();
  CHECK(n.strict_pair_count() == 3);
  CHECK_FALSE(n.leq("a", "d"));
}

TEST_CASE("build errors") {
  CHECK(code_of([] { Poset::build({"1", "2"}, {{"1", "2"}, {"2", "1"}}); }) ==
        ErrorCode::CycleDetected);
  CHECK(code_of([] { Poset::build({"1", "1"}, {}); }) == ErrorCode::DuplicateLabel);
  CHECK(code_of([] { Poset::build({"1"}, {{"1", "x"}}); }) == ErrorCode::UnknownLabel);
}

TEST_CASE("stored relation matches the naive closure") {
  // Random-ish generator sets over 5 points.
  for (unsigned seed = 1; seed < 200; ++seed) {
    std::vector<std::pair<int, int>> gens;
    std::vector<LabelPair> named;
    unsigned s = seed * 2654435761u;
    for (int k = 0; k < 5; ++k) {
      s = s * 1103515245u + 12345u;
      int u = (s >> 8) % 5, v = (s >> 16) % 5;
      if (u < v) {
        gens.emplace_back(u, v);
        named.emplace_back(std::to_string(u), std::to_string(v));
      }
    }
    std::vector<Label> labels = {"0", "1", "2", "3", "4"};
    Poset q = Poset::build(labels, named);
    CHECK(oracle::relation(q) == oracle::close(5, gens));
  }
}

TEST_CASE("hasse covers") {
  auto c = hasse_covers(chain({"1", "2", "3"}));
  CHECK(c == std::vector<LabelPair>{{"1", "2"}, {"2", "3"}});
  CHECK(hasse_covers(antichain({"1", "2"})).empty());
  Poset diamond = Poset::build({"a", "b", "c", "d"},
                               {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"a", "d"}});
  auto d = hasse_covers(diamond);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<LabelPair>{{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

TEST_CASE("hasse covers round trip through build, n <= 4") {
  for (auto const& p : posets_upto(4)) {
    CHECK(Poset::build(p.labels(), hasse_covers(p)) == p);
    // A cover has nothing strictly between, checked by brute force.
    for (auto const& [u, v] : hasse_covers(p)) {
      for (auto const& w : p.labels()) {
        if (w == u || w == v) continue;
        CHECK_FALSE((p.leq(u, w) && p.leq(w, v)));
      }
    }
  }
}

TEST_CASE("restrict") {
  Poset c = chain({"1", "2", "3"});
  CHECK(restrict(c, {{"1", "3"}}) == chain({"1", "3"}));
  CHECK(restrict(n_shape(), {{"a", "c", "d"}}) ==
        Poset::build({"a", "c", "d"}, {{"a", "c"}}));
  CHECK(restrict(n_shape(), {n_shape().labels()}) == n_shape());
  CHECK(code_of([&] { restrict(c, {{"9"}}); }) == ErrorCode::UnknownLabel);
}

TEST_CASE("opposite") {
  CHECK(opposite(chain({"1", "2"})) == chain({"2", "1"}));
  CHECK(opposite(antichain({"1", "2"})) == antichain({"1", "2"}));
  for (auto const& p : posets_upto(4)) {
    CHECK(opposite(opposite(p)) == p);
    auto [mn, mx] = extrema(p);
    auto [omn, omx] = extrema(opposite(p));
    CHECK(omn == mx);
    CHECK(omx == mn);
  }
}

TEST_CASE("disjoint union") {
  CHECK(disjoint_union(singleton("a"), singleton("b")) == antichain({"a", "b"}));
  Poset two = disjoint_union(chain({"1", "2"}), chain({"3", "4"}));
  CHECK(two.strict_pair_count() == 2);
  CHECK(connected_components(two).size() == 2);
  CHECK(code_of([] { disjoint_union(singleton("a"), singleton("a")); }) ==
        ErrorCode::LabelClash);
  auto small = posets_upto(3);
  for (auto const& p : small) {
    for (auto const& q0 : small) {
      Poset q = q0.relabeled([](const Label& l) { return "q" + l; });
      auto cp = connected_components(p), cq = connected_components(q);
      cp.insert(cp.end(), cq.begin(), cq.end());
      auto cu = connected_components(disjoint_union(p, q));
      auto norm = [](std::vector<GroundSubset> v) {
        for (auto& g : v) std::sort(g.members.begin(), g.members.end());
        std::sort(v.begin(), v.end(),
                  [](auto const& x, auto const& y) { return x.members < y.members; });
        return v;
      };
      CHECK(norm(cu) == norm(cp));
    }
  }
}

TEST_CASE("refinement order") {
  CHECK(is_finer(antichain({"1", "2"}), chain({"1", "2"})));
  CHECK_FALSE(is_finer(chain({"1", "2"}), antichain({"1", "2"})));
  CHECK(code_of([] { is_finer(singleton("1"), singleton("2")); }) ==
        ErrorCode::GroundSetMismatch);
  std::vector<Poset> three;
  all_posets(3, [&](const Poset& p) { three.push_back(p); });
  for (auto const& p : three) {
    CHECK(is_finer(p, p));
    for (auto const& q : three) {
      if (is_finer(p, q) && is_finer(q, p)) CHECK(p == q);
      for (auto const& r : three) {
        if (is_finer(p, q) && is_finer(q, r)) CHECK(is_finer(p, r));
      }
    }
  }
}

TEST_CASE("components and extrema") {
  CHECK(connected_components(n_shape()).size() == 1);
  CHECK(connected_components(antichain({"1", "2", "3"})).size() == 3);
  auto [mn, mx] = extrema(chain({"1", "2", "3"}));
  CHECK(mn == std::vector<Label>{"1"});
  CHECK(mx == std::vector<Label>{"3"});
  auto [nmn, nmx] = extrema(n_shape());
  CHECK(nmn == std::vector<Label>{"a", "b"});
  CHECK(nmx == std::vector<Label>{"c", "d"});
  auto [amn, amx] = extrema(antichain({"x", "y"}));
  CHECK(amn.size() == 2);
  CHECK(amx.size() == 2);
}

TEST_CASE("convexity and quotient") {
  Poset c = chain({"1", "2", "3"});
  CHECK_FALSE(is_convex(c, {{"1", "3"}}));
  CHECK(is_convex(c, {{"1", "2"}}));
  CHECK(is_convex(c, {{"2"}}));
  CHECK(quotient(c, {{"1", "2"}}, "B") == chain({"B", "3"}));
  CHECK(quotient(n_shape(), {{"b", "d"}}, "B") ==
        Poset::build({"a", "c", "B"}, {{"a", "c"}, {"B", "c"}}));
  CHECK(code_of([&] { quotient(c, {{"1", "3"}}, "B"); }) == ErrorCode::NotConvex);
  CHECK(code_of([&] { quotient(c, {{}}, "B"); }) == ErrorCode::EmptySubset);
}

TEST_CASE("quotient exists exactly on convex subsets, n <= 4") {
  for (auto const& p : posets_upto(4)) {
    for (Bits s = 1; s < (Bits{1} << p.size()); ++s) {
      GroundSubset g;
      for (std::size_t i = 0; i < p.size(); ++i)
        if ((s >> i) & 1) g.members.push_back(p.label(i));
      // Naive convexity: every z with x <= z <= y for x, y in g is in g.
      bool convex = true;
      for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
          for (std::size_t z = 0; z < p.size(); ++z)
            if (((s >> x) & 1) && ((s >> y) & 1) && !((s >> z) & 1) &&
                p.leq(x, z) && p.leq(z, y))
              convex = false;
      CHECK(is_convex(p, g) == convex);
      bool ok = true;
      try {
        Poset q = quotient(p, g, "Q");
        CHECK(q.size() == p.size() - g.members.size() + 1);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotConvex);
        ok = false;
      }
      CHECK(ok == convex);
    }
  }
}

TEST_CASE("parse_poset inverts to_string") {
  CHECK(parse_poset("{a<b<c, d}") ==
        Poset::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}}));
  CHECK(parse_poset("").empty());
  CHECK(parse_poset("{}").empty());
  for (auto const& p : posets_upto(4)) CHECK(parse_poset(p.to_string()) == p);
  CHECK(code_of([] { parse_poset("{a<}"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_poset("{a<b"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_poset("a<b, b<a"); }) == ErrorCode::CycleDetected);
}
