#include "posetop/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <numeric>

#include "posetop/error.hpp"

namespace posetop {

std::string CanonKey::hex() const {
  if (n == 0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%x.%llx", static_cast<unsigned>(n),
                static_cast<unsigned long long>(code));
  return buf;
}

CanonKey CanonKey::from_hex(const std::string& text) {
  if (text == "0") return {};
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    throw Error(ErrorCode::ParseError, "malformed key '" + text + "'");
  }
  CanonKey k;
  try {
    k.n = static_cast<std::uint8_t>(std::stoul(text.substr(0, dot), nullptr, 16));
    k.code = std::stoull(text.substr(dot + 1), nullptr, 16);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "malformed key '" + text + "'");
  }
  if (k.n > kDefaultCanonLimit) {
    throw Error(ErrorCode::ParseError, "key size out of range '" + text + "'");
  }
  return k;
}

namespace {

// Stable colour refinement on (colour, colours strictly below, colours
// strictly above). Returns one colour per element; equal colours are
// interchangeable candidates during the labeling search.
std::vector<int> refine_colours(const Poset& p) {
  std::size_t const n = p.size();
  std::vector<int> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Signature> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<int> below, above;
      for (std::size_t y = 0; y < n; ++y) {
        if (p.less(y, x)) below.push_back(colour[y]);
        if (p.less(x, y)) above.push_back(colour[y]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[x] = {colour[x], std::move(below), std::move(above)};
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t x = 0; x < n; ++x) {
      colour[x] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[x]) -
          distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

struct Labeler {
  const Poset* p = nullptr;
  std::size_t n = 0;
  std::vector<int> slot_colour;      // colour required at each position
  std::vector<int> colour;           // colour of each element
  std::vector<std::size_t> placed;   // element at each position
  Bits used = 0;
  std::uint64_t best = 0;
  bool have_best = false;
  std::uint64_t best_count = 0;
  std::vector<std::size_t> best_order;
  unsigned total_bits = 0;

  void search(std::size_t k, std::uint64_t prefix, unsigned len) {
    if (k == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
        best_count = 1;
        best_order = placed;
      } else if (prefix == best) {
        ++best_count;
      }
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if ((used >> x) & 1U) continue;
      if (colour[x] != slot_colour[k]) continue;
      std::uint64_t code = prefix;
      for (std::size_t i = 0; i < k; ++i) {
        code = (code << 2) |
               (static_cast<std::uint64_t>(p->leq(placed[i], x)) << 1) |
               static_cast<std::uint64_t>(p->leq(x, placed[i]));
      }
      unsigned const next_len = len + 2 * static_cast<unsigned>(k);
      if (have_best && next_len > 0) {
        std::uint64_t const best_prefix = best >> (total_bits - next_len);
        if (code > best_prefix) continue;
      }
      placed[k] = x;
      used |= Bits{1} << x;
      search(k + 1, code, next_len);
      used &= ~(Bits{1} << x);
    }
  }
};

}  // namespace

IsoClass canonicalize(const Poset& p, std::size_t limit) {
  std::size_t const n = p.size();
  if (n > limit || n > kDefaultCanonLimit) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "canonical forms are limited to " +
                    std::to_string(std::min(limit, kDefaultCanonLimit)) +
                    " elements, got " + std::to_string(n));
  }
  IsoClass out;
  out.key.n = static_cast<std::uint8_t>(n);
  if (n == 0) return out;

  Labeler lab;
  lab.p = &p;
  lab.n = n;
  lab.colour = refine_colours(p);
  lab.slot_colour = lab.colour;
  std::sort(lab.slot_colour.begin(), lab.slot_colour.end());
  lab.placed.assign(n, 0);
  lab.total_bits = static_cast<unsigned>(n * (n - 1));
  lab.search(0, 0, 0);

  out.key.code = lab.best;
  out.automorphisms = lab.best_count;
  out.representative = poset_from_key(out.key);
  return out;
}

CanonKey canonical_key(const Poset& p, std::size_t limit) {
  return canonicalize(p, limit).key;
}

Poset poset_from_key(const CanonKey& key) {
  std::size_t const n = key.n;
  std::vector<Bits> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) up[i] = Bits{1} << i;
  unsigned shift = static_cast<unsigned>(n * (n == 0 ? 0 : n - 1));
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      shift -= 2;
      auto two = (key.code >> shift) & 3U;
      if (two & 2U) up[i] |= Bits{1} << k;
      if (two & 1U) up[k] |= Bits{1} << i;
    }
  }
  if (!Poset::is_partial_order(up)) {
    throw Error(ErrorCode::ParseError, "key " + key.hex() + " is not a poset");
  }
  return Poset::from_order(numeric_labels(n), std::move(up));
}

bool are_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() ||
      p.strict_pair_count() != q.strict_pair_count()) {
    return false;
  }
  return canonical_key(p) == canonical_key(q);
}

namespace {

std::vector<std::pair<int, int>> degree_profile(const Poset& p, Bits mask) {
  std::vector<std::pair<int, int>> out;
  for (Bits rest = mask; rest; rest &= rest - 1) {
    auto x = static_cast<std::size_t>(std::countr_zero(rest));
    out.emplace_back(std::popcount(p.down(x) & mask),
                     std::popcount(p.up(x) & mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool contains_induced(const Poset& p, const Poset& pattern) {
  std::size_t const k = pattern.size();
  std::size_t const n = p.size();
  if (k > n) return false;
  if (k == 0) return true;
  auto const want_profile = degree_profile(pattern, pattern.all_mask());
  auto const want_key = canonical_key(pattern);
  // Gosper's hack over k-subsets of n bits.
  Bits subset = (Bits{1} << k) - 1;
  Bits const limit = n >= 64 ? 0 : Bits{1} << n;
  while (true) {
    if (degree_profile(p, subset) == want_profile &&
        canonical_key(restrict_mask(p, subset)) == want_key) {
      return true;
    }
    Bits const c = subset & (~subset + 1);
    Bits const r = subset + c;
    if (r == 0 || (limit != 0 && r >= limit)) break;
    subset = (((r ^ subset) >> 2) / c) | r;
    if (limit != 0 && subset >= limit) break;
  }
  return false;
}

}  // namespace posetop
