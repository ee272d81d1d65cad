#include "posetop/poset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "posetop/error.hpp"

namespace posetop {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::EmptyInner: return "EmptyInner";
    case ErrorCode::NotWN: return "NotWN";
    case ErrorCode::NotNablaCompatible: return "NotNablaCompatible";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {

constexpr Bits bit(std::size_t i) { return Bits{1} << i; }

Bits low_mask(std::size_t n) {
  return n >= 64 ? ~Bits{0} : bit(n) - 1;
}

void check_size(std::size_t n) {
  if (n > Poset::kMaxElements) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "posets are limited to " +
                    std::to_string(Poset::kMaxElements) + " elements");
  }
}

void check_distinct(const std::vector<Label>& labels) {
  std::unordered_set<std::string_view> seen;
  for (auto const& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + l + "' repeated");
    }
  }
}

void close_transitively(std::vector<Bits>& up) {
  std::size_t const n = up.size();
  for (std::size_t i = 0; i < n; ++i) up[i] |= bit(i);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i] & bit(k)) up[i] |= up[k];
    }
  }
}

// Generator path from `from` to `to` (indices), by BFS.
std::vector<std::size_t> generator_path(const std::vector<Bits>& gens,
                                        std::size_t from, std::size_t to) {
  std::size_t const n = gens.size();
  std::vector<int> parent(n, -1);
  std::deque<std::size_t> queue{from};
  parent[from] = static_cast<int>(from);
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (Bits rest = gens[v] & ~bit(v); rest; rest &= rest - 1) {
      auto w = static_cast<std::size_t>(std::countr_zero(rest));
      if (parent[w] < 0) {
        parent[w] = static_cast<int>(v);
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = to; v != from; v = static_cast<std::size_t>(parent[v])) {
    path.push_back(v);
  }
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Poset::Poset(std::vector<Label> labels, std::vector<Bits> up)
    : labels_(std::move(labels)), up_(std::move(up)), down_(labels_.size(), 0) {
  for (std::size_t i = 0; i < up_.size(); ++i) {
    for (Bits rest = up_[i]; rest; rest &= rest - 1) {
      down_[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(i);
    }
  }
}

Poset Poset::build(std::vector<Label> elements,
                   const std::vector<LabelPair>& generators) {
  check_size(elements.size());
  check_distinct(elements);
  std::vector<Bits> up(elements.size(), 0);
  auto find = [&](const Label& l) -> std::size_t {
    auto it = std::find(elements.begin(), elements.end(), l);
    if (it == elements.end()) {
      throw Error(ErrorCode::UnknownLabel, "relation mentions '" + l + "'");
    }
    return static_cast<std::size_t>(it - elements.begin());
  };
  for (auto const& [u, v] : generators) up[find(u)] |= bit(find(v));
  return from_generators(std::move(elements), std::move(up));
}

Poset Poset::from_generators(std::vector<Label> elements,
                             std::vector<Bits> up) {
  check_size(elements.size());
  assert(up.size() == elements.size());
  std::vector<Bits> const gens = up;
  close_transitively(up);
  std::size_t const n = up.size();
  for (std::size_t i = 0; i < n; ++i) {
    Bits const back = up[i] & ~bit(i);
    for (Bits rest = back; rest; rest &= rest - 1) {
      auto j = static_cast<std::size_t>(std::countr_zero(rest));
      if (up[j] & bit(i)) {
        auto forward = generator_path(gens, i, j);
        auto backward = generator_path(gens, j, i);
        std::string cycle;
        for (auto v : forward) cycle += elements[v] + " -> ";
        for (std::size_t k = 1; k < backward.size(); ++k) {
          cycle += elements[backward[k]];
          if (k + 1 < backward.size()) cycle += " -> ";
        }
        throw Error(ErrorCode::CycleDetected, "cycle " + cycle);
      }
    }
  }
  return Poset(std::move(elements), std::move(up));
}

Poset Poset::from_order(std::vector<Label> elements, std::vector<Bits> up) {
  assert(up.size() == elements.size());
  assert(is_partial_order(up));
  return Poset(std::move(elements), std::move(up));
}

bool Poset::is_partial_order(const std::vector<Bits>& up) {
  std::size_t const n = up.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(up[i] & bit(i))) return false;
    for (Bits rest = up[i] & ~bit(i); rest; rest &= rest - 1) {
      auto j = static_cast<std::size_t>(std::countr_zero(rest));
      if (up[j] & bit(i)) return false;
      if ((up[j] & up[i]) != up[j]) return false;
    }
  }
  return true;
}

int Poset::index_of(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::size_t Poset::require(std::string_view label) const {
  int i = index_of(label);
  if (i < 0) {
    throw Error(ErrorCode::UnknownLabel,
                "no element '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(i);
}

Bits Poset::all_mask() const noexcept { return low_mask(size()); }

Bits Poset::minimal_mask() const noexcept {
  Bits m = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i] == bit(i)) m |= bit(i);
  }
  return m;
}

Bits Poset::maximal_mask() const noexcept {
  Bits m = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i] == bit(i)) m |= bit(i);
  }
  return m;
}

std::size_t Poset::strict_pair_count() const noexcept {
  std::size_t c = 0;
  for (auto r : up_) c += static_cast<std::size_t>(std::popcount(r)) - 1;
  return c;
}

Poset Poset::sorted() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return labels_[a] < labels_[b]; });
  std::vector<Label> labels;
  labels.reserve(size());
  std::vector<Bits> up(size(), 0);
  for (std::size_t a = 0; a < size(); ++a) {
    labels.push_back(labels_[order[a]]);
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq(order[a], order[b])) up[a] |= bit(b);
    }
  }
  return Poset(std::move(labels), std::move(up));
}

Poset Poset::relabeled(const std::function<Label(const Label&)>& rename) const {
  std::vector<Label> labels;
  labels.reserve(size());
  for (auto const& l : labels_) labels.push_back(rename(l));
  return with_labels(std::move(labels));
}

Poset Poset::with_labels(std::vector<Label> labels) const {
  assert(labels.size() == size());
  check_distinct(labels);
  return Poset(std::move(labels), up_);
}

bool operator==(const Poset& lhs, const Poset& rhs) {
  if (lhs.size() != rhs.size()) return false;
  std::vector<std::size_t> map(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    int j = rhs.index_of(lhs.labels_[i]);
    if (j < 0) return false;
    map[i] = static_cast<std::size_t>(j);
  }
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      if (lhs.leq(i, j) != rhs.leq(map[i], map[j])) return false;
    }
  }
  return true;
}

std::string Poset::to_string() const {
  Poset const s = sorted();
  auto covers = hasse_covers(s);
  std::ostringstream out;
  out << '{';
  bool first = true;
  Bits touched = 0;
  for (auto const& [u, v] : covers) {
    out << (first ? "" : ", ") << u << '<' << v;
    first = false;
    touched |= bit(s.require(u)) | bit(s.require(v));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(touched & bit(i))) {
      out << (first ? "" : ", ") << s.label(i);
      first = false;
    }
  }
  out << '}';
  return out.str();
}

std::vector<LabelPair> hasse_covers(const Poset& p) {
  std::vector<LabelPair> covers;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      // Strictly between i and j.
      Bits between = (p.up(i) & p.down(j)) & ~(bit(i) | bit(j));
      if (between == 0) covers.emplace_back(p.label(i), p.label(j));
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

Bits mask_of(const Poset& p, const GroundSubset& subset) {
  Bits m = 0;
  for (auto const& l : subset.members) m |= bit(p.require(l));
  return m;
}

Poset restrict_mask(const Poset& p, Bits mask) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (mask & bit(i)) keep.push_back(i);
  }
  std::vector<Label> labels;
  std::vector<Bits> up(keep.size(), 0);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(p.label(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (p.leq(keep[a], keep[b])) up[a] |= bit(b);
    }
  }
  return Poset::from_order(std::move(labels), std::move(up));
}

Poset restrict(const Poset& p, const GroundSubset& subset) {
  check_distinct(subset.members);
  return restrict_mask(p, mask_of(p, subset));
}

Poset opposite(const Poset& p) {
  std::vector<Bits> up(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) up[i] = p.down(i);
  return Poset::from_order(p.labels(), std::move(up));
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  check_size(p.size() + q.size());
  for (auto const& l : q.labels()) {
    if (p.contains(l)) {
      throw Error(ErrorCode::LabelClash, "label '" + l + "' in both operands");
    }
  }
  std::vector<Label> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  std::vector<Bits> up = p.up_rows();
  for (auto r : q.up_rows()) up.push_back(r << p.size());
  return Poset::from_order(std::move(labels), std::move(up));
}

bool is_finer(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::GroundSetMismatch, "ground sets differ in size");
  }
  std::vector<std::size_t> map(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    int j = q.index_of(p.label(i));
    if (j < 0) {
      throw Error(ErrorCode::GroundSetMismatch,
                  "'" + p.label(i) + "' missing from the second poset");
    }
    map[i] = static_cast<std::size_t>(j);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) && !q.leq(map[i], map[j])) return false;
    }
  }
  return true;
}

std::vector<Bits> component_masks(const Poset& p) {
  std::vector<Bits> out;
  Bits seen = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen & bit(i)) continue;
    Bits comp = bit(i);
    Bits frontier = comp;
    while (frontier) {
      Bits next = 0;
      for (Bits rest = frontier; rest; rest &= rest - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(rest));
        next |= p.up(v) | p.down(v);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<GroundSubset> connected_components(const Poset& p) {
  std::vector<GroundSubset> out;
  for (Bits m : component_masks(p)) {
    GroundSubset s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (m & bit(i)) s.members.push_back(p.label(i));
    }
    std::sort(s.members.begin(), s.members.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

bool is_connected(const Poset& p) {
  return !p.empty() && component_masks(p).size() == 1;
}

std::pair<std::vector<Label>, std::vector<Label>> extrema(const Poset& p) {
  std::vector<Label> mins, maxs;
  Bits const lo = p.minimal_mask();
  Bits const hi = p.maximal_mask();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (lo & bit(i)) mins.push_back(p.label(i));
    if (hi & bit(i)) maxs.push_back(p.label(i));
  }
  std::sort(mins.begin(), mins.end());
  std::sort(maxs.begin(), maxs.end());
  return {mins, maxs};
}

bool is_convex(const Poset& p, const GroundSubset& subset) {
  Bits const b = mask_of(p, subset);
  for (Bits xs = b; xs; xs &= xs - 1) {
    auto x = static_cast<std::size_t>(std::countr_zero(xs));
    for (Bits ys = b; ys; ys &= ys - 1) {
      auto y = static_cast<std::size_t>(std::countr_zero(ys));
      Bits interval = p.up(x) & p.down(y);
      if (interval & ~b) return false;
    }
  }
  return true;
}

Poset quotient(const Poset& p, const GroundSubset& subset,
               const Label& new_label) {
  if (subset.members.empty()) {
    throw Error(ErrorCode::EmptySubset, "cannot collapse an empty subset");
  }
  check_distinct(subset.members);
  Bits const b = mask_of(p, subset);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(b & bit(i))) rest.push_back(i);
  }
  for (auto i : rest) {
    if (p.label(i) == new_label) {
      throw Error(ErrorCode::LabelClash,
                  "'" + new_label + "' is still an element of the quotient");
    }
  }
  // Collapsed point sits at position rest.size().
  std::size_t const n = rest.size() + 1;
  std::size_t const star = rest.size();
  Bits above_b = 0;  // elements y with b <= y for some b in B
  Bits below_b = 0;  // elements x with x <= b for some b in B
  for (Bits bs = b; bs; bs &= bs - 1) {
    auto k = static_cast<std::size_t>(std::countr_zero(bs));
    above_b |= p.up(k);
    below_b |= p.down(k);
  }
  std::vector<Bits> up(n, 0);
  up[star] |= bit(star);
  for (std::size_t a = 0; a < rest.size(); ++a) {
    std::size_t const x = rest[a];
    for (std::size_t c = 0; c < rest.size(); ++c) {
      std::size_t const y = rest[c];
      bool rel = p.leq(x, y) ||
                 ((below_b & bit(x)) && (above_b & bit(y)));
      if (rel) up[a] |= bit(c);
    }
    if (below_b & bit(x)) up[a] |= bit(star);
    if (above_b & bit(x)) up[star] |= bit(a);
  }
  if (!Poset::is_partial_order(up)) {
    throw Error(ErrorCode::NotConvex,
                "collapsing the subset does not yield a partial order");
  }
  std::vector<Label> labels;
  for (auto i : rest) labels.push_back(p.label(i));
  labels.push_back(new_label);
  return Poset::from_order(std::move(labels), std::move(up));
}

Poset chain(const std::vector<Label>& labels) {
  std::vector<LabelPair> gens;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    gens.emplace_back(labels[i], labels[i + 1]);
  }
  return Poset::build(labels, gens);
}

Poset antichain(const std::vector<Label>& labels) {
  return Poset::build(labels, {});
}

Poset singleton(const Label& label) { return Poset::build({label}, {}); }

Poset parse_poset(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') {
      throw Error(ErrorCode::ParseError, "unbalanced braces");
    }
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Label> elements;
  std::unordered_set<Label> seen;
  std::vector<LabelPair> gens;
  auto note = [&](std::string_view raw) {
    std::string_view l = trim(raw);
    if (l.empty() || l.find_first_of("{}<,") != std::string_view::npos) {
      throw Error(ErrorCode::ParseError,
                  "bad label '" + std::string(raw) + "'");
    }
    Label label(l);
    if (seen.insert(label).second) elements.push_back(label);
    return label;
  };
  if (text.empty()) return Poset();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    Label prev;
    std::size_t s = 0;
    for (bool first = true;; first = false) {
      std::size_t lt = item.find('<', s);
      Label cur = note(item.substr(s, lt == std::string_view::npos
                                          ? std::string_view::npos
                                          : lt - s));
      if (!first) gens.emplace_back(prev, cur);
      prev = cur;
      if (lt == std::string_view::npos) break;
      s = lt + 1;
    }
    start = comma + 1;
  }
  return Poset::build(std::move(elements), gens);
}

std::vector<Label> numeric_labels(std::size_t n) {
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace posetop
