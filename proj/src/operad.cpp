#include "posetop/operad.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "posetop/error.hpp"
#include "posetop/suborders.hpp"

namespace posetop {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Circ: return "circ";
    case Family::Bullet: return "bullet";
    case Family::Down: return "down";
    case Family::Up: return "up";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "circ") return Family::Circ;
  if (name == "bullet") return Family::Bullet;
  if (name == "down") return Family::Down;
  if (name == "up") return Family::Up;
  throw Error(ErrorCode::ParseError,
              "unknown family '" + std::string(name) + "'");
}

namespace {

constexpr Bits bit(std::size_t i) { return Bits{1} << i; }

// Inner labels clashing with outer \ {vertex} get "'" appended until fresh.
std::vector<Label> fresh_inner_labels(const std::vector<Label>& outer,
                                      const Label& vertex,
                                      std::vector<Label> inner,
                                      std::vector<LabelPair>* renamed) {
  auto in_outer = [&](const Label& l) {
    return l != vertex && std::find(outer.begin(), outer.end(), l) != outer.end();
  };
  auto in_inner = [&](const Label& l) {
    return std::find(inner.begin(), inner.end(), l) != inner.end();
  };
  for (auto& l : inner) {
    if (!in_outer(l)) continue;
    Label fresh = l + "'";
    while (in_outer(fresh) || in_inner(fresh)) fresh += "'";
    if (renamed) renamed->emplace_back(l, fresh);
    l = fresh;
  }
  return inner;
}

// Where each element of a composite comes from, and its position in sorted
// label order. Shared by every pair of terms with the same ground sets.
struct Plan {
  std::vector<Label> labels;  // outer order, vertex replaced by the inner block
  std::vector<int> from_outer;
  std::vector<int> from_inner;
  Bits inner_mask = 0;
  std::size_t vertex = 0;
  std::vector<std::size_t> pos;
  std::vector<Label> ground;

  Plan(const std::vector<Label>& outer, std::size_t a,
       const std::vector<Label>& inner)
      : vertex(a) {
    for (std::size_t i = 0; i < outer.size(); ++i) {
      if (i == a) {
        for (std::size_t k = 0; k < inner.size(); ++k) {
          inner_mask |= bit(labels.size());
          labels.push_back(inner[k]);
          from_outer.push_back(-1);
          from_inner.push_back(static_cast<int>(k));
        }
      } else {
        labels.push_back(outer[i]);
        from_outer.push_back(static_cast<int>(i));
        from_inner.push_back(-1);
      }
    }
    std::size_t const n = labels.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return labels[i] < labels[j];
    });
    pos.resize(n);
    ground.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      pos[order[k]] = k;
      ground[k] = labels[order[k]];
    }
  }

  // Rows re-indexed into sorted-label order.
  void to_sorted(const std::vector<Bits>& rows, std::vector<Bits>& out) const {
    out.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Bits r = 0;
      for (Bits rest = rows[i]; rest; rest &= rest - 1) {
        r |= bit(pos[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      out[pos[i]] = r;
    }
  }
};

Bits minimal_of(const std::vector<Bits>& up) {
  Bits below = 0;  // elements that are strictly above something
  for (std::size_t i = 0; i < up.size(); ++i) below |= up[i] & ~bit(i);
  return (up.size() >= 64 ? ~Bits{0} : bit(up.size()) - 1) & ~below;
}

Bits maximal_of(const std::vector<Bits>& up) {
  Bits out = 0;
  for (std::size_t i = 0; i < up.size(); ++i) {
    if (up[i] == bit(i)) out |= bit(i);
  }
  return out;
}

// The set-theoretic composite of rows A (outer) and B (inner), in plan order.
void set_rows(Family f, const Plan& plan, const std::vector<Bits>& A,
              const std::vector<Bits>& B, std::vector<Bits>& up) {
  std::size_t const a = plan.vertex;
  Bits const bmin = minimal_of(B);
  Bits const bmax = maximal_of(B);
  std::size_t const n = plan.labels.size();
  up.assign(n, 0);
  auto leq = [](const std::vector<Bits>& r, std::size_t i, std::size_t j) {
    return ((r[i] >> j) & 1U) != 0;
  };
  for (std::size_t x = 0; x < n; ++x) {
    int const ox = plan.from_outer[x], ix = plan.from_inner[x];
    for (std::size_t y = 0; y < n; ++y) {
      int const oy = plan.from_outer[y], iy = plan.from_inner[y];
      bool rel = false;
      if (ix >= 0 && iy >= 0) {
        rel = leq(B, static_cast<std::size_t>(ix), static_cast<std::size_t>(iy));
      } else if (ox >= 0 && oy >= 0) {
        rel = leq(A, static_cast<std::size_t>(ox), static_cast<std::size_t>(oy));
      } else if (ox >= 0) {  // x in A', y in B
        rel = leq(A, static_cast<std::size_t>(ox), a);
        if (f == Family::Up) rel = rel && ((bmax >> iy) & 1U);
      } else {  // x in B, y in A'
        rel = leq(A, a, static_cast<std::size_t>(oy));
        if (f == Family::Down) rel = rel && ((bmin >> ix) & 1U);
      }
      if (rel) up[x] |= bit(y);
    }
  }
}

// Adds c times every member of Omega(A, a, B) to out. The members are the
// sub-orders of A bullet_a B that keep B intact, keep every pair of A' not
// routed through a, and keep at least one link between B and each element
// of A' comparable to a.
void circ_into(const Plan& plan, const std::vector<Bits>& A,
               const std::vector<Bits>& B, std::int64_t c, FormalSum& out) {
  std::vector<Bits> host;
  set_rows(Family::Bullet, plan, A, B, host);
  std::size_t const a = plan.vertex;
  std::size_t const n = host.size();
  auto less = [&](std::size_t i, std::size_t j) {
    return i != j && ((A[i] >> j) & 1U);
  };

  SuborderConstraints cons;
  cons.rule = [&](std::size_t x, std::size_t y) {
    int const ox = plan.from_outer[x], oy = plan.from_outer[y];
    if (plan.from_inner[x] >= 0 && plan.from_inner[y] >= 0) return PairRule::Must;
    if (ox >= 0 && oy >= 0) {
      bool const through = less(static_cast<std::size_t>(ox), a) &&
                           less(a, static_cast<std::size_t>(oy));
      return through ? PairRule::Free : PairRule::Must;
    }
    return PairRule::Free;
  };
  for (std::size_t x = 0; x < n; ++x) {
    int const ox = plan.from_outer[x];
    if (ox < 0) continue;
    bool const below = less(static_cast<std::size_t>(ox), a);
    bool const above = less(a, static_cast<std::size_t>(ox));
    if (!below && !above) continue;
    std::vector<std::pair<std::size_t, std::size_t>> group;
    for (Bits rest = plan.inner_mask; rest; rest &= rest - 1) {
      auto b = static_cast<std::size_t>(std::countr_zero(rest));
      group.emplace_back(below ? x : b, below ? b : x);
    }
    cons.at_least_one.push_back(std::move(group));
  }

  std::vector<Bits> sorted;
  for_each_suborder(host, cons, [&](const std::vector<Bits>& rows) {
    plan.to_sorted(rows, sorted);
    out.add_rows(plan.ground, sorted, c);
  });
}

std::size_t vertex_index(const std::vector<Label>& labels,
                         std::string_view vertex) {
  auto it = std::find(labels.begin(), labels.end(), vertex);
  if (it == labels.end()) {
    throw Error(ErrorCode::VertexNotFound,
                "vertex '" + std::string(vertex) + "' is not an element");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

InsertionSite InsertionSite::make(Poset outer, std::string_view vertex,
                                  Poset inner) {
  vertex_index(outer.labels(), vertex);
  if (inner.empty()) {
    throw Error(ErrorCode::EmptyInner, "cannot insert the empty poset");
  }
  InsertionSite site;
  site.vertex = std::string(vertex);
  auto labels = fresh_inner_labels(outer.labels(), site.vertex, inner.labels(),
                                   &site.renamed);
  site.outer = std::move(outer);
  site.inner = site.renamed.empty() ? std::move(inner)
                                    : inner.with_labels(std::move(labels));
  return site;
}

Poset compose_set(Family f, const InsertionSite& site) {
  if (f == Family::Circ) {
    throw std::logic_error("compose_set called with the linear family");
  }
  Plan const plan(site.outer.labels(), site.outer.require(site.vertex),
                  site.inner.labels());
  std::vector<Bits> up;
  set_rows(f, plan, site.outer.up_rows(), site.inner.up_rows(), up);
  assert(Poset::is_partial_order(up));
  Poset out = Poset::from_order(plan.labels, std::move(up));
#ifndef NDEBUG
  if (out.size() <= 6) assert(in_omega(site.outer, site.vertex, site.inner, out));
#endif
  return out;
}

Poset compose_set(Family f, const Poset& outer, std::string_view vertex,
                  const Poset& inner) {
  return compose_set(f, InsertionSite::make(outer, vertex, inner));
}

Poset compose_bullet(const InsertionSite& site) {
  return compose_set(Family::Bullet, site);
}
Poset compose_down(const InsertionSite& site) {
  return compose_set(Family::Down, site);
}
Poset compose_up(const InsertionSite& site) {
  return compose_set(Family::Up, site);
}

FormalSum compose_circ(const InsertionSite& site) {
  Plan const plan(site.outer.labels(), site.outer.require(site.vertex),
                  site.inner.labels());
  FormalSum out;
  circ_into(plan, site.outer.up_rows(), site.inner.up_rows(), 1, out);
  return out;
}

FormalSum compose(Family f, const Poset& outer, std::string_view vertex,
                  const Poset& inner) {
  auto site = InsertionSite::make(outer, vertex, inner);
  if (f == Family::Circ) return compose_circ(site);
  return FormalSum(compose_set(f, site));
}

FormalSum compose_bilinear(Family f, const FormalSum& x,
                           std::string_view vertex, const FormalSum& y) {
  FormalSum out;
  if (x.empty() || y.empty()) return out;
  if (y.ground().empty()) {
    throw Error(ErrorCode::EmptyInner, "cannot insert the empty poset");
  }
  std::size_t const a = vertex_index(x.ground(), vertex);
  auto const inner = fresh_inner_labels(x.ground(), Label(vertex), y.ground(),
                                        nullptr);
  Plan const plan(x.ground(), a, inner);
  std::vector<Bits> up, sorted;
  for (auto const& [p, cp] : x.raw_terms()) {
    for (auto const& [q, cq] : y.raw_terms()) {
      if (f == Family::Circ) {
        circ_into(plan, p, q, cp * cq, out);
      } else {
        set_rows(f, plan, p, q, up);
        plan.to_sorted(up, sorted);
        out.add_rows(plan.ground, sorted, cp * cq);
      }
    }
  }
  return out;
}

bool in_omega(const Poset& outer, std::string_view vertex, const Poset& inner,
              const Poset& candidate) {
  if (!outer.contains(vertex)) return false;
  std::vector<Label> want;
  for (auto const& l : outer.labels()) {
    if (l != vertex) want.push_back(l);
  }
  for (auto const& l : inner.labels()) want.push_back(l);
  std::vector<Label> have = candidate.labels();
  std::sort(want.begin(), want.end());
  std::sort(have.begin(), have.end());
  if (want != have) return false;
  GroundSubset const b{inner.labels()};
  if (!(restrict(candidate, b) == inner)) return false;
  if (!is_convex(candidate, b)) return false;
  return quotient(candidate, b, Label(vertex)) == outer;
}

FormalSum compose_indexed(Family f, const Poset& outer, std::size_t i,
                          const Poset& inner) {
  std::size_t const n = outer.size();
  std::size_t const m = inner.size();
  if (i == 0 || i > n) {
    throw Error(ErrorCode::VertexNotFound,
                "position " + std::to_string(i) + " out of range");
  }
  auto shift_outer = [&](const Label& l) {
    std::size_t const j = std::stoul(l);
    return std::to_string(j > i ? j + m - 1 : j);
  };
  auto shift_inner = [&](const Label& l) {
    return std::to_string(i + std::stoul(l) - 1);
  };
  return compose(f, outer.relabeled(shift_outer), std::to_string(i),
                 inner.relabeled(shift_inner));
}

FormalSum compose_pair(const Poset& outer2, Family f, const Poset& b,
                       const Poset& c) {
  if (outer2.size() != 2 || !outer2.contains("1") || !outer2.contains("2")) {
    throw Error(ErrorCode::GroundSetMismatch,
                "compose_pair needs an outer poset on {1,2}");
  }
  // Park the outer labels on tokens that cannot clash with B or C.
  std::string t1 = "#1", t2 = "#2";
  while (b.contains(t1) || c.contains(t1) || b.contains(t2) || c.contains(t2)) {
    t1.insert(0, "#");
    t2.insert(0, "#");
  }
  Poset const outer =
      outer2.relabeled([&](const Label& l) { return l == "1" ? t1 : t2; });
  FormalSum const fb(b), fc(c);
  FormalSum first = compose_bilinear(
      f, compose_bilinear(f, FormalSum(outer), t1, fb), t2, fc);
  FormalSum second = compose_bilinear(
      f, compose_bilinear(f, FormalSum(outer), t2, fc), t1, fb);
  if (!(first == second)) {
    throw std::logic_error("compose_pair: evaluation orders disagree");
  }
  return first;
}

namespace {

void require_disjoint(const Poset& p, const Poset& q) {
  for (auto const& l : q.labels()) {
    if (p.contains(l)) {
      throw Error(ErrorCode::LabelClash, "label '" + l + "' used twice");
    }
  }
}

void require_disjoint(const Poset& a, const Poset& b, const Poset& c) {
  require_disjoint(a, b);
  require_disjoint(a, c);
  require_disjoint(b, c);
}

}  // namespace

bool verify_parallel(Family f, const Poset& a, const Poset& b, const Poset& c,
                     std::string_view x, std::string_view y) {
  require_disjoint(a, b, c);
  FormalSum const fb(b), fc(c);
  FormalSum const lhs = compose_bilinear(f, compose(f, a, x, b), y, fc);
  FormalSum const rhs = compose_bilinear(f, compose(f, a, y, c), x, fb);
  return lhs == rhs;
}

bool verify_nested(Family f, const Poset& a, const Poset& b, const Poset& c,
                   std::string_view x, std::string_view y) {
  require_disjoint(a, b, c);
  FormalSum const fc(c);
  FormalSum const lhs = compose_bilinear(f, compose(f, a, x, b), y, fc);
  FormalSum const rhs =
      compose_bilinear(f, FormalSum(a), x, compose(f, b, y, c));
  return lhs == rhs;
}

MixedCompat verify_mixed_compat(const Poset& a, const Poset& b, const Poset& c,
                                std::string_view x, std::string_view y) {
  require_disjoint(a, b, c);
  auto both = [&](Family f, Family g) {
    Poset const lhs = compose_set(g, compose_set(f, a, x, b), y, c);
    Poset const rhs = compose_set(f, compose_set(g, a, y, c), x, b);
    return lhs == rhs;
  };
  MixedCompat out;
  out.up_bullet = both(Family::Up, Family::Bullet);
  out.down_bullet = both(Family::Down, Family::Bullet);
  out.down_up = both(Family::Down, Family::Up);
  return out;
}

bool involution_exchange(const Poset& a, const Poset& b, std::string_view x) {
  Poset const oa = opposite(a), ob = opposite(b);
  bool const swap = opposite(compose_set(Family::Down, a, x, b)) ==
                    compose_set(Family::Up, oa, x, ob);
  bool const keep = opposite(compose_set(Family::Bullet, a, x, b)) ==
                    compose_set(Family::Bullet, oa, x, ob);
  return swap && keep;
}

}  // namespace posetop
