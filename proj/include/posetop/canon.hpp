#ifndef POSETOP_CANON_HPP_
#define POSETOP_CANON_HPP_

// Canonical forms of posets up to isomorphism.
//
// The canonical encoding of a poset on n elements lists, for k = 1..n-1 and
// i < k, the bits (i <= k) and (k <= i) of the relation after relabeling; the
// canonical labeling is the one minimizing that bit string. Only labelings
// that sort elements by an isomorphism-invariant signature are explored, so
// the set of minimizers is exactly one coset of the automorphism group.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "posetop/poset.hpp"

namespace posetop {

struct CanonKey {
  std::uint8_t n = 0;
  std::uint64_t code = 0;

  auto operator<=>(const CanonKey&) const = default;

  // "0" for the empty poset, otherwise "<n>.<code>" in hex.
  std::string hex() const;
  static CanonKey from_hex(const std::string& text);
};

struct CanonKeyHash {
  std::size_t operator()(const CanonKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.code * 31 + k.n);
  }
};

struct IsoClass {
  Poset representative;  // labels "1".."n"
  CanonKey key;
  std::uint64_t automorphisms = 1;
};

inline constexpr std::size_t kDefaultCanonLimit = 8;

// Throws SizeLimitExceeded when p has more than `limit` elements (the
// encoding holds at most 8 elements).
IsoClass canonicalize(const Poset& p, std::size_t limit = kDefaultCanonLimit);
CanonKey canonical_key(const Poset& p, std::size_t limit = kDefaultCanonLimit);

// The canonical representative encoded by a key.
Poset poset_from_key(const CanonKey& key);

bool are_isomorphic(const Poset& p, const Poset& q);

// True when some subset of p induces a poset isomorphic to `pattern`.
bool contains_induced(const Poset& p, const Poset& pattern);

}  // namespace posetop

#endif  // POSETOP_CANON_HPP_
