#include "posetop/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "posetop/error.hpp"
#include "posetop/structure.hpp"

namespace posetop {

std::string_view to_string(ClassFilter f) noexcept {
  switch (f) {
    case ClassFilter::None: return "none";
    case ClassFilter::Connected: return "connected";
    case ClassFilter::WN: return "wn";
    case ClassFilter::Nabla: return "nabla";
  }
  return "?";
}

ClassFilter parse_filter(std::string_view name) {
  if (name == "none") return ClassFilter::None;
  if (name == "connected") return ClassFilter::Connected;
  if (name == "wn") return ClassFilter::WN;
  if (name == "nabla") return ClassFilter::Nabla;
  throw Error(ErrorCode::ParseError, "unknown filter '" + std::string(name) + "'");
}

bool passes(ClassFilter f, const Poset& p) {
  switch (f) {
    case ClassFilter::None: return true;
    case ClassFilter::Connected: return is_connected(p);
    case ClassFilter::WN: return is_wn(p);
    case ClassFilter::Nabla: return is_nabla_compatible(p);
  }
  return false;
}

namespace {

constexpr Bits bit(std::size_t i) { return Bits{1} << i; }

void check_cap(std::size_t n, std::size_t cap) {
  std::size_t const limit = std::min(cap, kEnumerationCap);
  if (n > limit) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "enumeration is limited to n <= " + std::to_string(limit) +
                    ", got " + std::to_string(n));
  }
}

// Down-sets of the relation `up` on n elements, as masks, in increasing order.
std::vector<Bits> down_sets(const std::vector<Bits>& up, std::size_t n) {
  std::vector<Bits> out;
  for (Bits s = 0; s < bit(n); ++s) {
    bool closed = true;
    for (Bits rest = s; rest && closed; rest &= rest - 1) {
      auto x = static_cast<std::size_t>(std::countr_zero(rest));
      for (std::size_t y = 0; y < n; ++y) {
        if (((up[y] >> x) & 1U) && !((s >> y) & 1U)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

// Calls emit(new_rows) for every one-point extension of `up` (n elements).
template <class Emit>
void extend(const std::vector<Bits>& up, std::size_t n, bool reversed,
            Emit emit) {
  auto downs = down_sets(up, n);
  if (reversed) std::reverse(downs.begin(), downs.end());
  Bits const all = bit(n) - 1;
  // Up-sets are complements of down-sets.
  std::vector<Bits> ups;
  ups.reserve(downs.size());
  for (Bits d : downs) ups.push_back(all & ~d);
  std::vector<Bits> next(up);
  next.push_back(bit(n));
  for (Bits d : downs) {
    // Common strict upper bounds of D (everything when D is empty).
    Bits bound = all & ~d;
    for (Bits rest = d; rest; rest &= rest - 1) {
      bound &= up[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    for (Bits u : ups) {
      if (u & ~bound) continue;
      for (std::size_t i = 0; i < n; ++i) {
        next[i] = up[i];
        if ((d >> i) & 1U) next[i] |= bit(n);
      }
      next[n] = bit(n) | u;
      emit(next);
    }
  }
}

void grow(std::vector<Bits>& up, std::size_t n, std::size_t target,
          bool reversed, const std::vector<Label>& labels,
          const std::function<void(const Poset&)>& visit) {
  if (n == target) {
    visit(Poset::from_order(labels, up));
    return;
  }
  extend(up, n, reversed, [&](std::vector<Bits>& next) {
    std::vector<Bits> copy = next;
    grow(copy, n + 1, target, reversed, labels, visit);
  });
}

}  // namespace

void all_posets(std::size_t n, const std::function<void(const Poset&)>& visit,
                bool reversed, std::size_t cap) {
  check_cap(n, cap);
  auto const labels = numeric_labels(n);
  std::vector<Bits> up;
  grow(up, 0, n, reversed, labels, visit);
}

std::uint64_t count_labeled(std::size_t n, ClassFilter filter) {
  std::uint64_t count = 0;
  all_posets(n, [&](const Poset& p) {
    if (passes(filter, p)) ++count;
  });
  return count;
}

std::vector<IsoClass> all_isoclasses(std::size_t n, ClassFilter filter,
                                     std::size_t cap) {
  check_cap(n, cap);
  std::map<CanonKey, IsoClass> level;
  {
    auto c = canonicalize(Poset());
    level.emplace(c.key, c);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::map<CanonKey, IsoClass> next;
    auto const labels = numeric_labels(k + 1);
    for (auto const& [key, cls] : level) {
      extend(cls.representative.up_rows(), k, false,
             [&](std::vector<Bits>& rows) {
               Poset const p = Poset::from_order(labels, rows);
               auto const ck = canonical_key(p);
               if (next.find(ck) == next.end()) {
                 next.emplace(ck, canonicalize(p));
               }
             });
    }
    level = std::move(next);
  }
  std::vector<IsoClass> out;
  for (auto const& [k, c] : level) {
    if (passes(filter, c.representative)) out.push_back(c);
  }
  return out;
}

bool CountTable::consistent() const {
  for (auto const& r : rows) {
    if (r.wn_labeled != r.nabla_labeled) return false;
    if (r.classes > r.labeled || r.connected_classes > r.classes) return false;
  }
  return true;
}

CountTable count_table(std::size_t n_max) {
  check_cap(n_max, kEnumerationCap);
  CountTable table;
  std::uint64_t factorial = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    factorial *= n;
    CountRow row;
    row.n = n;
    for (auto const& c : all_isoclasses(n)) {
      std::uint64_t const orbit = factorial / c.automorphisms;
      Poset const& p = c.representative;
      ++row.classes;
      row.labeled += orbit;
      if (is_connected(p)) ++row.connected_classes;
      if (is_wn(p)) {
        ++row.wn_classes;
        row.wn_labeled += orbit;
      }
      if (is_nabla_compatible(p)) {
        ++row.nabla_classes;
        row.nabla_labeled += orbit;
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace posetop
