#ifndef POSETOP_POSET_HPP_
#define POSETOP_POSET_HPP_

// Finite posets over opaque string labels.
//
// A Poset stores the full (reflexive, transitive) order relation as a dense
// bit matrix indexed by element position; labels are mapped to positions by
// the element list. Values are immutable once constructed.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetop {

using Label = std::string;
using LabelPair = std::pair<Label, Label>;
using Bits = std::uint64_t;

// A set of labels drawn from some parent poset.
struct GroundSubset {
  std::vector<Label> members;

  bool operator==(const GroundSubset&) const = default;
};

class Poset {
 public:
  static constexpr std::size_t kMaxElements = 64;

  // The empty poset.
  Poset() = default;

  // Closes the generator pairs (u <= v) reflexively and transitively.
  // Throws DuplicateLabel, UnknownLabel or CycleDetected.
  static Poset build(std::vector<Label> elements,
                     const std::vector<LabelPair>& generators);

  // Index-level constructor: up[i] has bit j set when i <= j is a generator.
  // The relation is closed; throws CycleDetected if antisymmetry fails.
  static Poset from_generators(std::vector<Label> elements,
                               std::vector<Bits> up);

  // Index-level constructor for a relation that is already a partial order
  // (reflexive, transitive, antisymmetric). Checked with assert only.
  static Poset from_order(std::vector<Label> elements, std::vector<Bits> up);

  // Checks the partial-order axioms of a raw relation without closing it.
  static bool is_partial_order(const std::vector<Bits>& up);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<Label>& labels() const noexcept { return labels_; }
  const Label& label(std::size_t i) const { return labels_[i]; }

  // Position of a label, or -1.
  int index_of(std::string_view label) const noexcept;
  bool contains(std::string_view label) const noexcept {
    return index_of(label) >= 0;
  }
  // Position of a label; throws UnknownLabel.
  std::size_t require(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const noexcept {
    return (up_[i] >> j) & 1U;
  }
  bool less(std::size_t i, std::size_t j) const noexcept {
    return i != j && leq(i, j);
  }
  bool comparable(std::size_t i, std::size_t j) const noexcept {
    return leq(i, j) || leq(j, i);
  }
  bool leq(std::string_view x, std::string_view y) const {
    return leq(require(x), require(y));
  }

  // Row i: the set of j with i <= j (includes i).
  Bits up(std::size_t i) const noexcept { return up_[i]; }
  // Column i: the set of j with j <= i (includes i).
  Bits down(std::size_t i) const noexcept { return down_[i]; }
  const std::vector<Bits>& up_rows() const noexcept { return up_; }

  Bits all_mask() const noexcept;
  Bits minimal_mask() const noexcept;
  Bits maximal_mask() const noexcept;

  // Number of strict pairs x < y.
  std::size_t strict_pair_count() const noexcept;

  // Same structure with elements listed in sorted label order.
  Poset sorted() const;

  // Applies `rename` to every label. Throws DuplicateLabel if it collides.
  Poset relabeled(const std::function<Label(const Label&)>& rename) const;
  // Replaces the labels positionally: element i becomes labels[i].
  Poset with_labels(std::vector<Label> labels) const;

  // Labeled equality: same label set and same relation, element order
  // irrelevant.
  friend bool operator==(const Poset& lhs, const Poset& rhs);

  // Compact human-readable rendering "{a<b, c}" of the covers.
  std::string to_string() const;

 private:
  Poset(std::vector<Label> labels, std::vector<Bits> up);

  std::vector<Label> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

// Poset-core operations.

std::vector<LabelPair> hasse_covers(const Poset& p);
Poset restrict(const Poset& p, const GroundSubset& subset);
Poset restrict_mask(const Poset& p, Bits mask);
Poset opposite(const Poset& p);
Poset disjoint_union(const Poset& p, const Poset& q);
bool is_finer(const Poset& p, const Poset& q);
std::vector<GroundSubset> connected_components(const Poset& p);
std::vector<Bits> component_masks(const Poset& p);
bool is_connected(const Poset& p);
std::pair<std::vector<Label>, std::vector<Label>> extrema(const Poset& p);
bool is_convex(const Poset& p, const GroundSubset& subset);
Poset quotient(const Poset& p, const GroundSubset& subset,
               const Label& new_label);

// Convenience constructors used throughout tests and examples.
Poset chain(const std::vector<Label>& labels);
Poset antichain(const std::vector<Label>& labels);
Poset singleton(const Label& label);

// Reads the to_string rendering back: "{a<b<c, d}" (braces optional, chains
// allowed, elements in order of first appearance). Throws ParseError and the
// build errors.
Poset parse_poset(std::string_view text);

// Labels "1".."n".
std::vector<Label> numeric_labels(std::size_t n);
Bits mask_of(const Poset& p, const GroundSubset& subset);

}  // namespace posetop

#endif  // POSETOP_POSET_HPP_
