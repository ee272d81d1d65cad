#include "posetop/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "posetop/error.hpp"
#include "posetop/operad.hpp"

namespace posetop {

namespace {

constexpr Bits bit(std::size_t i) { return Bits{1} << i; }

// Disjoint union as raw rows, a first; `link(i, j)` adds a_i <= b_j (when
// a_below) or b_j <= a_i.
template <class Link>
Poset glue(const Poset& a, const Poset& b, Link link) {
  for (auto const& l : b.labels()) {
    if (a.contains(l)) {
      throw Error(ErrorCode::LabelClash, "label '" + l + "' in both posets");
    }
  }
  std::size_t const n = a.size(), m = b.size();
  std::vector<Label> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Bits> up(n + m, 0);
  for (std::size_t i = 0; i < n; ++i) up[i] = a.up(i);
  for (std::size_t j = 0; j < m; ++j) up[n + j] = b.up(j) << n;
  link(up, n);
  return Poset::from_generators(std::move(labels), std::move(up));
}

}  // namespace

Poset n_poset() {
  return Poset::build({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}});
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
  return glue(a, b, [&](std::vector<Bits>& up, std::size_t n) {
    Bits const all_b = b.all_mask() << n;
    for (std::size_t i = 0; i < n; ++i) up[i] |= all_b;
  });
}

Poset up_tri(const Poset& a, const Poset& b) {
  return glue(a, b, [&](std::vector<Bits>& up, std::size_t n) {
    Bits const top = b.maximal_mask() << n;
    for (std::size_t i = 0; i < n; ++i) up[i] |= top;
  });
}

Poset down_tri(const Poset& a, const Poset& b) {
  return glue(a, b, [&](std::vector<Bits>& up, std::size_t n) {
    Bits const all_a = a.all_mask();
    for (Bits rest = b.minimal_mask(); rest; rest &= rest - 1) {
      up[n + static_cast<std::size_t>(std::countr_zero(rest))] |= all_a;
    }
  });
}

// N = {a<c, b<c, b<d} with a||b, a||d, c||d. For each b<c and each d>b
// incomparable to c, look for an a below c incomparable to both b and d.
bool is_wn(const Poset& p) {
  std::size_t const n = p.size();
  if (n < 4) return true;
  for (std::size_t c = 0; c < n; ++c) {
    Bits const below_c = p.down(c) & ~bit(c);
    for (Bits bs = below_c; bs; bs &= bs - 1) {
      auto b = static_cast<std::size_t>(std::countr_zero(bs));
      Bits const cmp_c = p.up(c) | p.down(c);
      Bits const ds = p.up(b) & ~bit(b) & ~cmp_c;
      Bits const cmp_b = p.up(b) | p.down(b);
      for (Bits rest = ds; rest; rest &= rest - 1) {
        auto d = static_cast<std::size_t>(std::countr_zero(rest));
        Bits const cmp_d = p.up(d) | p.down(d);
        if (below_c & ~cmp_b & ~cmp_d) return false;
      }
    }
  }
  return true;
}

namespace {

void split_ordinal(const Poset& p, std::vector<Poset>& out) {
  if (p.size() == 1 || !is_connected(p)) {
    out.push_back(p);
    return;
  }
  Bits const maxima = p.maximal_mask();
  Bits lower = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    bool below_all = true;
    for (Bits rest = maxima; rest; rest &= rest - 1) {
      auto m = static_cast<std::size_t>(std::countr_zero(rest));
      if (!p.less(x, m)) below_all = false;
    }
    if (below_all) lower |= bit(x);
  }
  if (lower == 0) {
    throw std::logic_error("connected WN poset without an ordinal split: " +
                           p.to_string());
  }
  split_ordinal(restrict_mask(p, lower), out);
  out.push_back(restrict_mask(p, p.all_mask() & ~lower));
}

Poset union_all(const std::vector<Poset>& parts) {
  Poset out;
  for (auto const& q : parts) out = disjoint_union(out, q);
  return out;
}

std::vector<Poset> components_of(const Poset& p) {
  std::vector<Poset> out;
  for (auto const& c : connected_components(p)) out.push_back(restrict(p, c));
  return out;
}

}  // namespace

Factorization wn_factorize(const Poset& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPoset, "nothing to factorize");
  if (!is_wn(p)) {
    throw Error(ErrorCode::NotWN, p.to_string() + " contains an induced N");
  }
  Factorization f;
  f.kind = Factorization::Kind::Ordinal;
  split_ordinal(p, f.factors);
  Poset re = f.factors.front();
  for (std::size_t k = 1; k < f.factors.size(); ++k) {
    re = ordinal_sum(re, f.factors[k]);
  }
  if (!(re == p)) {
    throw std::logic_error("ordinal factorization does not recompose");
  }
  return f;
}

Factorization br_split(const Poset& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPoset, "nothing to split");
  Bits const minima = p.minimal_mask();
  Bits b = 0;
  for (std::size_t y = 0; y < p.size(); ++y) {
    bool above_all = true;
    for (Bits rest = minima; rest; rest &= rest - 1) {
      auto x = static_cast<std::size_t>(std::countr_zero(rest));
      if (!p.less(x, y)) above_all = false;
    }
    if (above_all) b |= bit(y);
  }
  Factorization f;
  f.kind = Factorization::Kind::BR;
  f.factors = {restrict_mask(p, b), restrict_mask(p, p.all_mask() & ~b)};
  return f;
}

bool is_nabla_compatible(const Poset& p) {
  if (p.size() <= 1) return true;
  if (!is_connected(p)) {
    for (auto const& c : components_of(p)) {
      if (!is_nabla_compatible(c)) return false;
    }
    return true;
  }
  auto const f = br_split(p);
  Poset const& b = f.factors[0];
  Poset const& r = f.factors[1];
  if (b.empty()) return false;
  return is_nabla_compatible(b) && is_nabla_compatible(r) &&
         down_tri(b, r) == p;
}

namespace {

Poset theta_rec(const Poset& p) {
  if (p.size() <= 1) return p;
  if (!is_connected(p)) {
    std::vector<Poset> parts;
    for (auto const& c : components_of(p)) parts.push_back(theta_rec(c));
    return union_all(parts);
  }
  std::vector<Poset> factors;
  split_ordinal(p, factors);
  Poset head = factors.front();
  for (std::size_t k = 1; k + 1 < factors.size(); ++k) {
    head = ordinal_sum(head, factors[k]);
  }
  return down_tri(theta_rec(head), theta_rec(factors.back()));
}

Poset theta_inverse_rec(const Poset& p) {
  if (p.size() <= 1) return p;
  if (!is_connected(p)) {
    std::vector<Poset> parts;
    for (auto const& c : components_of(p)) parts.push_back(theta_inverse_rec(c));
    return union_all(parts);
  }
  auto const f = br_split(p);
  return ordinal_sum(theta_inverse_rec(f.factors[0]),
                     theta_inverse_rec(f.factors[1]));
}

}  // namespace

Poset theta(const Poset& p) {
  if (!is_wn(p)) {
    throw Error(ErrorCode::NotWN, p.to_string() + " contains an induced N");
  }
  return theta_rec(p);
}

Poset theta_inverse(const Poset& p) {
  if (!is_nabla_compatible(p)) {
    throw Error(ErrorCode::NotNablaCompatible,
                p.to_string() + " is not nabla-compatible");
  }
  return theta_inverse_rec(p);
}

Poset generator_m() { return antichain({"1", "2"}); }
Poset generator_down() { return chain({"1", "2"}); }
Poset generator_nabla() { return chain({"2", "1"}); }

std::vector<RelationCheck> verify_suboperad_relations() {
  std::vector<RelationCheck> out;
  auto record = [&](std::string name, const FormalSum& lhs,
                    const FormalSum& rhs) {
    out.push_back({std::move(name), lhs == rhs, lhs.to_string(), rhs.to_string()});
  };
  auto swap12 = [](const Poset& p) {
    return p.relabeled([](const Label& l) { return l == "1" ? Label("2") : Label("1"); });
  };
  auto at = [](Family f, const Poset& a, std::size_t i, const Poset& b) {
    return compose_indexed(f, a, i, b);
  };
  Poset const m = generator_m(), d = generator_down(), nab = generator_nabla();

  record("wn: m is symmetric", FormalSum(swap12(m)), FormalSum(m));
  record("wn: m o1 m = m o2 m", at(Family::Bullet, m, 1, m),
         at(Family::Bullet, m, 2, m));
  record("wn: down o1 down = down o2 down", at(Family::Bullet, d, 1, d),
         at(Family::Bullet, d, 2, d));
  record("wn: down o1 down = chain 1<2<3", at(Family::Bullet, d, 1, d),
         FormalSum(chain({"1", "2", "3"})));
  record("nabla: m is symmetric", FormalSum(swap12(m)), FormalSum(m));
  record("nabla: m o1 m = m o2 m", at(Family::Down, m, 1, m),
         at(Family::Down, m, 2, m));
  record("nabla: nabla o1 m = nabla o2 nabla", at(Family::Down, nab, 1, m),
         at(Family::Down, nab, 2, nab));
  record("nabla: nabla o1 m = 3<1, 3<2", at(Family::Down, nab, 1, m),
         FormalSum(Poset::build({"1", "2", "3"}, {{"3", "1"}, {"3", "2"}})));
  return out;
}

std::string_view to_string(ClosureFamily f) noexcept {
  switch (f) {
    case ClosureFamily::WN: return "wn";
    case ClosureFamily::Nabla: return "nabla";
    case ClosureFamily::Triple: return "triple";
  }
  return "?";
}

ClosureFamily parse_closure_family(std::string_view name) {
  if (name == "wn") return ClosureFamily::WN;
  if (name == "nabla") return ClosureFamily::Nabla;
  if (name == "triple") return ClosureFamily::Triple;
  throw Error(ErrorCode::ParseError,
              "unknown closure family '" + std::string(name) + "'");
}

std::vector<IsoClass> closure(ClosureFamily family, std::size_t n_max) {
  std::vector<Family> ops;
  std::vector<Poset> gens;
  switch (family) {
    case ClosureFamily::WN:
      ops = {Family::Bullet};
      gens = {generator_m(), generator_down()};
      break;
    case ClosureFamily::Nabla:
      ops = {Family::Down};
      gens = {generator_m(), generator_nabla()};
      break;
    case ClosureFamily::Triple:
      ops = {Family::Bullet, Family::Down, Family::Up};
      gens = {generator_down()};
      break;
  }
  // by_size[s]: classes with s elements, keyed for deduplication.
  std::vector<std::map<CanonKey, IsoClass>> by_size(n_max + 1);
  if (n_max >= 1) {
    auto c = canonicalize(singleton("1"));
    by_size[1].emplace(c.key, c);
  }
  if (n_max >= 2) {
    for (auto const& g : gens) {
      auto c = canonicalize(g);
      by_size[2].emplace(c.key, c);
    }
  }
  for (std::size_t s = 3; s <= n_max; ++s) {
    for (std::size_t i = 2; i < s; ++i) {
      std::size_t const j = s + 1 - i;
      for (auto const& [ka, outer] : by_size[i]) {
        for (auto const& [kb, inner0] : by_size[j]) {
          // Inner labels kept apart from the outer ones.
          Poset const inner = inner0.representative.relabeled(
              [](const Label& l) { return "i" + l; });
          for (auto const& v : outer.representative.labels()) {
            for (auto f : ops) {
              auto c = canonicalize(
                  compose_set(f, outer.representative, v, inner));
              by_size[s].try_emplace(c.key, std::move(c));
            }
          }
        }
      }
    }
  }
  std::vector<IsoClass> out;
  for (auto const& level : by_size) {
    for (auto const& [k, c] : level) out.push_back(c);
  }
  return out;
}

}  // namespace posetop
