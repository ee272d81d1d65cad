#include "posetop/suborders.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>

namespace posetop {

namespace {

struct Search {
  struct Step {
    std::size_t i;
    std::size_t j;
    PairRule rule;
    Bits closing = 0;  // groups whose last pair this is
    Bits member = 0;   // groups containing this pair
  };

  std::vector<Step> steps;
  std::vector<int> group_hits;
  std::vector<Bits> rows;  // strict successors kept so far
  std::vector<Bits> cols;  // strict predecessors kept so far
  std::vector<Bits> out;
  const std::function<void(const std::vector<Bits>&)>* visit = nullptr;

  void run(std::size_t t) {
    if (t == steps.size()) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i] = rows[i] | (Bits{1} << i);
      }
      (*visit)(out);
      return;
    }
    Step const& s = steps[t];
    bool const forced = (rows[s.i] & cols[s.j]) != 0;
    if (forced) {
      if (s.rule == PairRule::Never) return;
      take(t, true);
      return;
    }
    switch (s.rule) {
      case PairRule::Must: take(t, true); break;
      case PairRule::Never: take(t, false); break;
      case PairRule::Free:
        take(t, false);
        take(t, true);
        break;
    }
  }

  void hit(Bits groups, int delta) {
    for (; groups; groups &= groups - 1) {
      group_hits[static_cast<std::size_t>(std::countr_zero(groups))] += delta;
    }
  }

  void take(std::size_t t, bool keep) {
    Step const& s = steps[t];
    if (keep) {
      rows[s.i] |= Bits{1} << s.j;
      cols[s.j] |= Bits{1} << s.i;
      hit(s.member, 1);
    }
    bool ok = true;
    for (Bits g = s.closing; g && ok; g &= g - 1) {
      if (group_hits[static_cast<std::size_t>(std::countr_zero(g))] == 0) {
        ok = false;
      }
    }
    if (ok) run(t + 1);
    if (keep) {
      rows[s.i] &= ~(Bits{1} << s.j);
      cols[s.j] &= ~(Bits{1} << s.i);
      hit(s.member, -1);
    }
  }
};

}  // namespace

void for_each_suborder(const Poset& host, const SuborderConstraints& constraints,
                       const std::function<void(const std::vector<Bits>&)>& visit) {
  for_each_suborder(host.up_rows(), constraints, visit);
}

namespace {

struct Scratch {
  Search search;
  std::vector<Bits> down;
  std::vector<int> position;
  struct Pending {
    std::size_t i, j;
    int width;
  };
  std::vector<Pending> pairs;
};

// One scratch per thread and nesting depth, so visitors may recurse.
Scratch& scratch_for(std::size_t depth) {
  thread_local std::vector<std::unique_ptr<Scratch>> pool;
  while (pool.size() <= depth) pool.push_back(std::make_unique<Scratch>());
  return *pool[depth];
}

thread_local std::size_t nesting = 0;

struct NestingGuard {
  NestingGuard() { ++nesting; }
  ~NestingGuard() { --nesting; }
};

}  // namespace

void for_each_suborder(const std::vector<Bits>& host_up,
                       const SuborderConstraints& constraints,
                       const std::function<void(const std::vector<Bits>&)>& visit) {
  std::size_t const n = host_up.size();
  Scratch& sc = scratch_for(nesting);
  NestingGuard guard;
  Search& search = sc.search;
  search.visit = &visit;
  search.rows.assign(n, 0);
  search.cols.assign(n, 0);
  search.out.assign(n, 0);
  search.steps.clear();

  sc.down.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (Bits rest = host_up[i]; rest; rest &= rest - 1) {
      sc.down[static_cast<std::size_t>(std::countr_zero(rest))] |= Bits{1} << i;
    }
  }
  auto& pairs = sc.pairs;
  pairs.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (Bits rest = host_up[i] & ~(Bits{1} << i); rest; rest &= rest - 1) {
      auto j = static_cast<std::size_t>(std::countr_zero(rest));
      pairs.push_back({i, j, std::popcount(host_up[i] & sc.down[j])});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](auto const& a, auto const& b) { return a.width < b.width; });

  sc.position.assign(n * n, -1);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    auto const& p = pairs[t];
    PairRule rule = constraints.rule ? constraints.rule(p.i, p.j) : PairRule::Free;
    search.steps.push_back({p.i, p.j, rule, 0, 0});
    sc.position[p.i * n + p.j] = static_cast<int>(t);
  }

  std::size_t const groups = constraints.at_least_one.size();
  if (groups > 64) {
    throw std::length_error("for_each_suborder: more than 64 groups");
  }
  search.group_hits.assign(groups, 0);
  for (std::size_t g = 0; g < groups; ++g) {
    int last = -1;
    for (auto const& [i, j] : constraints.at_least_one[g]) {
      int t = (i < n && j < n) ? sc.position[i * n + j] : -1;
      if (t < 0) continue;  // pair absent from the host, cannot be kept
      search.steps[static_cast<std::size_t>(t)].member |= Bits{1} << g;
      last = std::max(last, t);
    }
    if (last < 0) return;  // unsatisfiable group
    search.steps[static_cast<std::size_t>(last)].closing |= Bits{1} << g;
  }

  search.run(0);
}

}  // namespace posetop
