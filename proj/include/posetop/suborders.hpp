#ifndef POSETOP_SUBORDERS_HPP_
#define POSETOP_SUBORDERS_HPP_

// Enumeration of the partial orders contained in a given poset.
//
// Strict pairs of the host poset are decided in order of increasing interval
// size. When a pair (i, j) is reached, every pair (i, k) and (k, j) with k
// strictly inside [i, j] has already been decided, so (i, j) is forced into
// the relation exactly when such a k links them. Every leaf of the search is
// therefore transitive and no leaf is produced twice.

#include <cstdint>
#include <functional>
#include <vector>

#include "posetop/poset.hpp"

namespace posetop {

enum class PairRule : std::uint8_t { Free, Must, Never };

struct SuborderConstraints {
  // rule(i, j) for each strict pair i < j of the host. Defaults to Free.
  std::function<PairRule(std::size_t, std::size_t)> rule;
  // Each group lists strict pairs of the host; at least one pair of every
  // group must be kept.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> at_least_one;
};

// Calls `visit(up_rows)` once for every reflexive transitive sub-relation of
// `host` that satisfies the constraints. The rows are indexed like the host.
void for_each_suborder(const Poset& host, const SuborderConstraints& constraints,
                       const std::function<void(const std::vector<Bits>&)>& visit);
// Same, for a host given by reflexive relation rows (at most 64 groups).
void for_each_suborder(const std::vector<Bits>& host_up,
                       const SuborderConstraints& constraints,
                       const std::function<void(const std::vector<Bits>&)>& visit);

}  // namespace posetop

#endif  // POSETOP_SUBORDERS_HPP_
