#ifndef POSETOP_FORMAL_SUM_HPP_
#define POSETOP_FORMAL_SUM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posetop/poset.hpp"

namespace posetop {

// Integer linear combination of labeled posets on one ground set.
//
// Terms are keyed by the relation rows written in sorted-label order, so two
// sums compare equal exactly when they are equal as multisets of labeled
// posets. The zero sum has no ground set and equals every other zero sum.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(const Poset& p, std::int64_t coefficient = 1);

  void add(const Poset& p, std::int64_t coefficient = 1);
  // Adds a term given by its reflexive relation rows, indexed in the order of
  // `sorted_ground` (which must be sorted and equal to the sum's ground set
  // when the sum is nonzero).
  void add_rows(const std::vector<Label>& sorted_ground,
                const std::vector<Bits>& rows, std::int64_t coefficient = 1);

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  FormalSum& operator*=(std::int64_t scalar);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(std::int64_t s, FormalSum a) { return a *= s; }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Sum of coefficients.
  std::int64_t total() const noexcept;
  // Sorted labels of the ground set (empty for the zero sum).
  const std::vector<Label>& ground() const noexcept { return ground_; }

  std::int64_t coefficient(const Poset& p) const;

  // Terms as relation rows indexed in ground() order.
  using Rows = std::vector<Bits>;
  const std::map<Rows, std::int64_t>& raw_terms() const noexcept {
    return terms_;
  }

  // Terms in key order; each poset lists its elements in sorted order.
  std::vector<std::pair<Poset, std::int64_t>> terms() const;

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.ground_ == b.ground_);
  }

  std::string to_string() const;

 private:
  using Key = std::vector<Bits>;
  Key key_of(const Poset& p);
  Key key_of_const(const Poset& p, bool& ok) const;
  void add_key(const Key& key, std::int64_t coefficient);

  std::vector<Label> ground_;
  std::map<Key, std::int64_t> terms_;
};

}  // namespace posetop

#endif  // POSETOP_FORMAL_SUM_HPP_
