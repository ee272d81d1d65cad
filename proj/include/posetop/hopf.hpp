#ifndef POSETOP_HOPF_HPP_
#define POSETOP_HOPF_HPP_

// Products and coproducts on the span of isomorphism classes of posets.
//
// Classes are identified by canonical keys; the empty poset (key "0") is the
// unit 1. Class-level products instantiate representatives on fresh labels,
// combine them at the labeled level and canonicalize every resulting term.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "posetop/canon.hpp"
#include "posetop/formal_sum.hpp"
#include "posetop/poset.hpp"
#include "posetop/report.hpp"

namespace posetop {

template <class Key>
class KeyedSum {
 public:
  using Map = std::map<Key, std::int64_t>;

  KeyedSum() = default;
  explicit KeyedSum(const Key& k, std::int64_t c = 1) { add(k, c); }

  void add(const Key& k, std::int64_t c = 1) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  KeyedSum& operator+=(const KeyedSum& o) {
    for (auto const& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  KeyedSum& operator-=(const KeyedSum& o) {
    for (auto const& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  KeyedSum& operator*=(std::int64_t s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend KeyedSum operator+(KeyedSum a, const KeyedSum& b) { return a += b; }
  friend KeyedSum operator-(KeyedSum a, const KeyedSum& b) { return a -= b; }
  friend bool operator==(const KeyedSum& a, const KeyedSum& b) {
    return a.terms_ == b.terms_;
  }

  std::int64_t coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  Map terms_;
};

using ClassSum = KeyedSum<CanonKey>;
using TensorKey = std::pair<CanonKey, CanonKey>;
using TensorSum = KeyedSum<TensorKey>;
using Tensor3Key = std::array<CanonKey, 3>;
using Tensor3Sum = KeyedSum<Tensor3Key>;

// The class of a poset, with coefficient 1.
ClassSum class_of(const Poset& p);
inline const CanonKey kUnitKey{};

enum class Product { M, Down, Star, UpTri, DownTri };
enum class Coproduct { Delta, DeltaStar };

std::string_view to_string(Product p) noexcept;
std::string_view to_string(Coproduct c) noexcept;
// "m", "down", "star", "uptri", "downtri" / "delta", "dstar".
Product parse_product(std::string_view name);
Coproduct parse_coproduct(std::string_view name);

// Labeled sum over the orders on a and b (disjoint labels) that restrict to
// a and b and put no element of b below an element of a.
FormalSum star_labeled(const Poset& a, const Poset& b);

ClassSum product(Product op, const ClassSum& x, const ClassSum& y);
inline ClassSum prod_m(const ClassSum& x, const ClassSum& y) {
  return product(Product::M, x, y);
}
inline ClassSum prod_ordinal(const ClassSum& x, const ClassSum& y) {
  return product(Product::Down, x, y);
}
inline ClassSum prod_star(const ClassSum& x, const ClassSum& y) {
  return product(Product::Star, x, y);
}
inline ClassSum prod_up_tri(const ClassSum& x, const ClassSum& y) {
  return product(Product::UpTri, x, y);
}
inline ClassSum prod_down_tri(const ClassSum& x, const ClassSum& y) {
  return product(Product::DownTri, x, y);
}

TensorSum coproduct(Coproduct op, const ClassSum& x);
// Sum over subsets of connected components.
inline TensorSum coproduct_delta(const ClassSum& x) {
  return coproduct(Coproduct::Delta, x);
}
// Sum over upper sets I: (A \ I) (x) I.
inline TensorSum coproduct_delta_star(const ClassSum& x) {
  return coproduct(Coproduct::DeltaStar, x);
}

// Factorwise product of tensors: (a(x)b)(c(x)d) = ac (x) bd.
TensorSum tensor_product(Product op, const TensorSum& x, const TensorSum& y);
TensorSum tensor(const ClassSum& x, const ClassSum& y);

// (coproduct (x) id) and (id (x) coproduct) applied to a tensor.
Tensor3Sum coproduct_left(Coproduct op, const TensorSum& t);
Tensor3Sum coproduct_right(Coproduct op, const TensorSum& t);

std::uint64_t automorphisms(const CanonKey& key);
std::int64_t pairing(const ClassSum& x, const ClassSum& y);
std::int64_t pairing(const TensorSum& x, const TensorSum& y);

std::string to_string(const ClassSum& x);
std::string to_string(const TensorSum& x);
std::string to_string(const Tensor3Sum& x);

// Exhaustive law checks over classes; tuples range over nonempty classes
// whose sizes add up to at most n_max.
VerificationReport verify_products(std::size_t n_max);
VerificationReport verify_coalgebra(std::size_t n_max);
VerificationReport verify_bialgebra(std::size_t n_max);
VerificationReport verify_infinitesimal(std::size_t n_max);
VerificationReport verify_nap(std::size_t n_max);

}  // namespace posetop

#endif  // POSETOP_HOPF_HPP_
