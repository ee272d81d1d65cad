#ifndef POSETOP_ENUMERATION_HPP_
#define POSETOP_ENUMERATION_HPP_

// Exhaustive generation of posets and isomorphism classes.
//
// A poset on {1..n} is obtained from its restriction to {1..n-1} by choosing
// the set D of elements below n (a down-set) and the set U of elements above
// n (an up-set) with every element of D below every element of U. Each
// labeled poset is produced exactly once this way.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "posetop/canon.hpp"
#include "posetop/poset.hpp"

namespace posetop {

inline constexpr std::size_t kEnumerationCap = 7;

enum class ClassFilter { None, Connected, WN, Nabla };

std::string_view to_string(ClassFilter f) noexcept;
ClassFilter parse_filter(std::string_view name);
bool passes(ClassFilter f, const Poset& p);

// Visits every partial order on the labels "1".."n" exactly once. With
// `reversed` the search tree is explored in the opposite order. Throws
// SizeLimitExceeded for n above `cap` (at most kEnumerationCap).
void all_posets(std::size_t n, const std::function<void(const Poset&)>& visit,
                bool reversed = false, std::size_t cap = kEnumerationCap);

std::uint64_t count_labeled(std::size_t n, ClassFilter filter = ClassFilter::None);

// Isomorphism classes on n elements, sorted by key. Built size by size by
// one-point extension of the classes on n-1 elements.
std::vector<IsoClass> all_isoclasses(std::size_t n,
                                     ClassFilter filter = ClassFilter::None,
                                     std::size_t cap = kEnumerationCap);

struct CountRow {
  std::size_t n = 0;
  std::uint64_t labeled = 0;
  std::uint64_t classes = 0;
  std::uint64_t connected_classes = 0;
  std::uint64_t wn_labeled = 0;
  std::uint64_t wn_classes = 0;
  std::uint64_t nabla_labeled = 0;
  std::uint64_t nabla_classes = 0;
};

struct CountTable {
  std::vector<CountRow> rows;  // n = 1..n_max
  // wn_labeled == nabla_labeled and classes <= labeled on every row.
  bool consistent() const;
};

// Labeled columns are obtained as sums of n!/|Aut| over classes.
CountTable count_table(std::size_t n_max);

}  // namespace posetop

#endif  // POSETOP_ENUMERATION_HPP_
