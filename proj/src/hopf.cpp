#include "posetop/hopf.hpp"

#include <bit>
#include <mutex>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "posetop/enumeration.hpp"
#include "posetop/error.hpp"
#include "posetop/structure.hpp"
#include "posetop/suborders.hpp"

namespace posetop {

std::string_view to_string(Product p) noexcept {
  switch (p) {
    case Product::M: return "m";
    case Product::Down: return "down";
    case Product::Star: return "star";
    case Product::UpTri: return "uptri";
    case Product::DownTri: return "downtri";
  }
  return "?";
}

std::string_view to_string(Coproduct c) noexcept {
  return c == Coproduct::Delta ? "delta" : "dstar";
}

Product parse_product(std::string_view name) {
  if (name == "m") return Product::M;
  if (name == "down") return Product::Down;
  if (name == "star") return Product::Star;
  if (name == "uptri") return Product::UpTri;
  if (name == "downtri") return Product::DownTri;
  throw Error(ErrorCode::ParseError, "unknown product '" + std::string(name) + "'");
}

Coproduct parse_coproduct(std::string_view name) {
  if (name == "delta") return Coproduct::Delta;
  if (name == "dstar") return Coproduct::DeltaStar;
  throw Error(ErrorCode::ParseError,
              "unknown coproduct '" + std::string(name) + "'");
}

ClassSum class_of(const Poset& p) { return ClassSum(canonical_key(p)); }

FormalSum star_labeled(const Poset& a, const Poset& b) {
  Poset const host = ordinal_sum(a, b);
  std::size_t const n = a.size();
  SuborderConstraints cons;
  cons.rule = [n](std::size_t i, std::size_t j) {
    return (i < n) == (j < n) ? PairRule::Must : PairRule::Free;
  };
  FormalSum out;
  for_each_suborder(host, cons, [&](const std::vector<Bits>& rows) {
    out.add(Poset::from_order(host.labels(), rows));
  });
  if (out.empty()) out.add(host);  // both sides empty
  return out;
}

namespace {

// Memo tables shared by all callers.
struct Caches {
  std::mutex mu;
  std::map<std::tuple<int, CanonKey, CanonKey>, ClassSum> products;
  std::map<std::pair<int, CanonKey>, TensorSum> coproducts;
  std::unordered_map<CanonKey, std::uint64_t, CanonKeyHash> automorphisms;
};

Caches& caches() {
  static Caches c;
  return c;
}

Poset instance(const CanonKey& k, const char* prefix) {
  return poset_from_key(k).relabeled(
      [prefix](const Label& l) { return prefix + l; });
}

ClassSum product_of_keys(Product op, const CanonKey& ka, const CanonKey& kb) {
  auto const memo = std::make_tuple(static_cast<int>(op), ka, kb);
  {
    std::lock_guard lock(caches().mu);
    auto it = caches().products.find(memo);
    if (it != caches().products.end()) return it->second;
  }
  Poset const a = instance(ka, "a");
  Poset const b = instance(kb, "b");
  ClassSum out;
  switch (op) {
    case Product::M: out.add(canonical_key(disjoint_union(a, b))); break;
    case Product::Down: out.add(canonical_key(ordinal_sum(a, b))); break;
    case Product::UpTri: out.add(canonical_key(up_tri(a, b))); break;
    case Product::DownTri: out.add(canonical_key(down_tri(a, b))); break;
    case Product::Star:
      for (auto const& [p, c] : star_labeled(a, b).terms()) {
        out.add(canonical_key(p), c);
      }
      break;
  }
  std::lock_guard lock(caches().mu);
  caches().products.emplace(memo, out);
  return out;
}

TensorSum coproduct_of_key(Coproduct op, const CanonKey& k) {
  auto const memo = std::make_pair(static_cast<int>(op), k);
  {
    std::lock_guard lock(caches().mu);
    auto it = caches().coproducts.find(memo);
    if (it != caches().coproducts.end()) return it->second;
  }
  Poset const p = poset_from_key(k);
  Bits const all = p.all_mask();
  TensorSum out;
  auto emit = [&](Bits left) {
    out.add({canonical_key(restrict_mask(p, left)),
             canonical_key(restrict_mask(p, all & ~left))});
  };
  if (op == Coproduct::Delta) {
    auto const comps = component_masks(p);
    for (Bits s = 0; s < (Bits{1} << comps.size()); ++s) {
      Bits left = 0;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if ((s >> c) & 1U) left |= comps[c];
      }
      emit(left);
    }
  } else {
    // Every subset I closed upward gives (A \ I) (x) I.
    for (Bits upper = 0; upper <= all; ++upper) {
      bool closed = true;
      for (Bits rest = upper; rest && closed; rest &= rest - 1) {
        auto x = static_cast<std::size_t>(std::countr_zero(rest));
        if (p.up(x) & ~upper) closed = false;
      }
      if (closed) emit(all & ~upper);
      if (upper == all) break;
    }
  }
  std::lock_guard lock(caches().mu);
  caches().coproducts.emplace(memo, out);
  return out;
}

}  // namespace

ClassSum product(Product op, const ClassSum& x, const ClassSum& y) {
  ClassSum out;
  for (auto const& [ka, ca] : x) {
    for (auto const& [kb, cb] : y) {
      for (auto const& [k, c] : product_of_keys(op, ka, kb)) {
        out.add(k, ca * cb * c);
      }
    }
  }
  return out;
}

TensorSum coproduct(Coproduct op, const ClassSum& x) {
  TensorSum out;
  for (auto const& [k, c] : x) {
    for (auto const& [t, d] : coproduct_of_key(op, k)) out.add(t, c * d);
  }
  return out;
}

TensorSum tensor_product(Product op, const TensorSum& x, const TensorSum& y) {
  TensorSum out;
  for (auto const& [t1, c1] : x) {
    for (auto const& [t2, c2] : y) {
      auto const left = product_of_keys(op, t1.first, t2.first);
      auto const right = product_of_keys(op, t1.second, t2.second);
      for (auto const& [l, cl] : left) {
        for (auto const& [r, cr] : right) out.add({l, r}, c1 * c2 * cl * cr);
      }
    }
  }
  return out;
}

TensorSum tensor(const ClassSum& x, const ClassSum& y) {
  TensorSum out;
  for (auto const& [a, ca] : x) {
    for (auto const& [b, cb] : y) out.add({a, b}, ca * cb);
  }
  return out;
}

Tensor3Sum coproduct_left(Coproduct op, const TensorSum& t) {
  Tensor3Sum out;
  for (auto const& [k, c] : t) {
    for (auto const& [s, d] : coproduct_of_key(op, k.first)) {
      out.add({s.first, s.second, k.second}, c * d);
    }
  }
  return out;
}

Tensor3Sum coproduct_right(Coproduct op, const TensorSum& t) {
  Tensor3Sum out;
  for (auto const& [k, c] : t) {
    for (auto const& [s, d] : coproduct_of_key(op, k.second)) {
      out.add({k.first, s.first, s.second}, c * d);
    }
  }
  return out;
}

std::uint64_t automorphisms(const CanonKey& key) {
  {
    std::lock_guard lock(caches().mu);
    auto it = caches().automorphisms.find(key);
    if (it != caches().automorphisms.end()) return it->second;
  }
  std::uint64_t const s = canonicalize(poset_from_key(key)).automorphisms;
  std::lock_guard lock(caches().mu);
  caches().automorphisms.emplace(key, s);
  return s;
}

std::int64_t pairing(const ClassSum& x, const ClassSum& y) {
  std::int64_t total = 0;
  for (auto const& [k, c] : x) {
    std::int64_t const d = y.coefficient(k);
    if (d != 0) total += c * d * static_cast<std::int64_t>(automorphisms(k));
  }
  return total;
}

std::int64_t pairing(const TensorSum& x, const TensorSum& y) {
  std::int64_t total = 0;
  for (auto const& [k, c] : x) {
    std::int64_t const d = y.coefficient(k);
    if (d != 0) {
      total += c * d * static_cast<std::int64_t>(automorphisms(k.first)) *
               static_cast<std::int64_t>(automorphisms(k.second));
    }
  }
  return total;
}

namespace {

std::string class_name(const CanonKey& k) {
  return k.n == 0 ? std::string("1") : poset_from_key(k).to_string();
}

template <class Sum, class Name>
std::string render(const Sum& x, Name name) {
  if (x.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto const& [k, c] : x) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    std::int64_t const mag = c < 0 ? -c : c;
    if (mag != 1) out << mag << '*';
    out << name(k);
    first = false;
  }
  return out.str();
}

}  // namespace

std::string to_string(const ClassSum& x) { return render(x, class_name); }

std::string to_string(const TensorSum& x) {
  return render(x, [](const TensorKey& k) {
    return class_name(k.first) + " (x) " + class_name(k.second);
  });
}

std::string to_string(const Tensor3Sum& x) {
  return render(x, [](const Tensor3Key& k) {
    return class_name(k[0]) + " (x) " + class_name(k[1]) + " (x) " +
           class_name(k[2]);
  });
}

namespace {

// by_size[s]: keys of the classes with s elements, s = 1..n_max.
std::vector<std::vector<CanonKey>> class_grid(std::size_t n_max) {
  std::vector<std::vector<CanonKey>> by_size(n_max + 1);
  for (std::size_t s = 1; s <= n_max; ++s) {
    for (auto const& c : all_isoclasses(s)) by_size[s].push_back(c.key);
  }
  return by_size;
}

template <class Visit>
void for_pairs(const std::vector<std::vector<CanonKey>>& grid,
               std::size_t n_max, Visit visit) {
  for (std::size_t i = 1; i <= n_max; ++i) {
    for (std::size_t j = 1; i + j <= n_max; ++j) {
      for (auto const& x : grid[i]) {
        for (auto const& y : grid[j]) visit(x, y);
      }
    }
  }
}

template <class Visit>
void for_triples(const std::vector<std::vector<CanonKey>>& grid,
                 std::size_t n_max, Visit visit) {
  for_pairs(grid, n_max, [&](const CanonKey& x, const CanonKey& y) {
    for (std::size_t k = 1; x.n + y.n + k <= n_max; ++k) {
      for (auto const& z : grid[k]) visit(x, y, z);
    }
  });
}

std::string names(std::initializer_list<CanonKey> keys) {
  std::string out;
  for (auto const& k : keys) {
    if (!out.empty()) out += ", ";
    out += class_name(k);
  }
  return out;
}

}  // namespace

VerificationReport verify_products(std::size_t n_max) {
  VerificationReport r;
  r.suite = "hopf products";
  ReportTimer timer(r);
  auto const grid = class_grid(n_max);
  ClassSum const unit(kUnitKey);

  for (std::size_t s = 1; s <= n_max; ++s) {
    for (auto const& k : grid[s]) {
      ClassSum const x(k);
      for (Product op : {Product::M, Product::Down, Product::Star}) {
        ClassSum const l = product(op, unit, x), rr = product(op, x, unit);
        r.check(l == x && rr == x, [&] {
          return Failure{std::string("unit for ") + std::string(to_string(op)) +
                             ": " + class_name(k),
                         to_string(l), to_string(rr)};
        });
      }
    }
  }
  for_pairs(grid, n_max, [&](const CanonKey& a, const CanonKey& b) {
    ClassSum const x(a), y(b);
    ClassSum const xy = prod_m(x, y), yx = prod_m(y, x);
    r.check(xy == yx, [&] {
      return Failure{"m commutative: " + names({a, b}), to_string(xy),
                     to_string(yx)};
    });
  });
  for_triples(grid, n_max,
              [&](const CanonKey& a, const CanonKey& b, const CanonKey& c) {
                ClassSum const x(a), y(b), z(c);
                for (Product op : {Product::M, Product::Down, Product::Star}) {
                  ClassSum const l = product(op, product(op, x, y), z);
                  ClassSum const rr = product(op, x, product(op, y, z));
                  r.check(l == rr, [&] {
                    return Failure{std::string(to_string(op)) +
                                       " associative: " + names({a, b, c}),
                                   to_string(l), to_string(rr)};
                  });
                }
              });
  return r;
}

VerificationReport verify_coalgebra(std::size_t n_max) {
  VerificationReport r;
  r.suite = "hopf coalgebra";
  ReportTimer timer(r);
  auto const grid = class_grid(n_max);
  for (std::size_t s = 1; s <= n_max; ++s) {
    for (auto const& k : grid[s]) {
      ClassSum const x(k);
      for (Coproduct op : {Coproduct::Delta, Coproduct::DeltaStar}) {
        TensorSum const d = coproduct(op, x);
        Tensor3Sum const l = coproduct_left(op, d), rr = coproduct_right(op, d);
        r.check(l == rr, [&] {
          return Failure{std::string(to_string(op)) + " coassociative: " +
                             class_name(k),
                         to_string(l), to_string(rr)};
        });
        ClassSum left_counit, right_counit;
        bool graded = true;
        for (auto const& [t, c] : d) {
          if (t.first.n == 0) left_counit.add(t.second, c);
          if (t.second.n == 0) right_counit.add(t.first, c);
          if (t.first.n + t.second.n != k.n) graded = false;
        }
        r.check(left_counit == x && right_counit == x && graded, [&] {
          return Failure{std::string(to_string(op)) + " counit/grading: " +
                             class_name(k),
                         to_string(left_counit), to_string(right_counit)};
        });
      }
      TensorSum const d = coproduct_delta(x);
      TensorSum flipped;
      for (auto const& [t, c] : d) flipped.add({t.second, t.first}, c);
      r.check(d == flipped, [&] {
        return Failure{"delta cocommutative: " + class_name(k), to_string(d),
                       to_string(flipped)};
      });
    }
  }
  return r;
}

VerificationReport verify_bialgebra(std::size_t n_max) {
  VerificationReport r;
  r.suite = "hopf bialgebra";
  ReportTimer timer(r);
  auto const grid = class_grid(n_max);
  for_pairs(grid, n_max, [&](const CanonKey& a, const CanonKey& b) {
    ClassSum const x(a), y(b);
    {
      TensorSum const l = coproduct_delta_star(prod_m(x, y));
      TensorSum const rr = tensor_product(Product::M, coproduct_delta_star(x),
                                          coproduct_delta_star(y));
      r.check(l == rr, [&] {
        return Failure{"dstar(xy) = dstar(x)dstar(y): " + names({a, b}),
                       to_string(l), to_string(rr)};
      });
    }
    {
      TensorSum const l = coproduct_delta(prod_m(x, y));
      TensorSum const rr = tensor_product(Product::M, coproduct_delta(x),
                                          coproduct_delta(y));
      r.check(l == rr, [&] {
        return Failure{"delta(xy) = delta(x)delta(y): " + names({a, b}),
                       to_string(l), to_string(rr)};
      });
    }
    {
      TensorSum const l = coproduct_delta(prod_star(x, y));
      TensorSum const rr = tensor_product(Product::Star, coproduct_delta(x),
                                          coproduct_delta(y));
      r.check(l == rr, [&] {
        return Failure{"delta(x*y) = delta(x)*delta(y): " + names({a, b}),
                       to_string(l), to_string(rr)};
      });
    }
    TensorSum const xy = tensor(x, y);
    ClassSum const m = prod_m(x, y), st = prod_star(x, y);
    for (auto const& c : grid[a.n + b.n]) {
      ClassSum const z(c);
      std::int64_t const l1 = pairing(m, z);
      std::int64_t const r1 = pairing(xy, coproduct_delta(z));
      r.check(l1 == r1, [&] {
        return Failure{"<xy,z> = <x(x)y, delta z>: " + names({a, b, c}),
                       std::to_string(l1), std::to_string(r1)};
      });
      std::int64_t const l2 = pairing(st, z);
      std::int64_t const r2 = pairing(xy, coproduct_delta_star(z));
      r.check(l2 == r2, [&] {
        return Failure{"<x*y,z> = <x(x)y, dstar z>: " + names({a, b, c}),
                       std::to_string(l2), std::to_string(r2)};
      });
    }
  });
  return r;
}

VerificationReport verify_infinitesimal(std::size_t n_max) {
  VerificationReport r;
  r.suite = "hopf infinitesimal";
  ReportTimer timer(r);
  auto const grid = class_grid(n_max);
  ClassSum const unit(kUnitKey);
  for_pairs(grid, n_max, [&](const CanonKey& a, const CanonKey& b) {
    ClassSum const x(a), y(b);
    TensorSum const l = coproduct_delta_star(prod_ordinal(x, y));
    TensorSum rr = tensor_product(Product::Down, coproduct_delta_star(x),
                                  tensor(unit, y));
    rr += tensor_product(Product::Down, tensor(x, unit),
                         coproduct_delta_star(y));
    rr -= tensor(x, y);
    r.check(l == rr, [&] {
      return Failure{"dstar(x down y): " + names({a, b}), to_string(l),
                     to_string(rr)};
    });
  });
  return r;
}

VerificationReport verify_nap(std::size_t n_max) {
  VerificationReport r;
  r.suite = "hopf nap";
  ReportTimer timer(r);
  auto const grid = class_grid(n_max);
  for_triples(grid, n_max,
              [&](const CanonKey& a, const CanonKey& b, const CanonKey& c) {
                ClassSum const x(a), y(b), z(c);
                for (Product op : {Product::UpTri, Product::DownTri}) {
                  ClassSum const first = product(op, x, product(op, y, z));
                  ClassSum const second = product(op, prod_m(x, y), z);
                  ClassSum const third = product(op, y, product(op, x, z));
                  r.check(first == second && second == third, [&] {
                    return Failure{std::string(to_string(op)) +
                                       " nap: " + names({a, b, c}),
                                   to_string(first),
                                   to_string(second) + " / " + to_string(third)};
                  });
                }
              });
  return r;
}

}  // namespace posetop
