#include "posetop/formal_sum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "posetop/error.hpp"

namespace posetop {

namespace {

// Relation rows of p permuted into the order of `ground` (sorted labels).
bool rows_in_order(const Poset& p, const std::vector<Label>& ground,
                   std::vector<Bits>& out) {
  std::size_t const n = ground.size();
  if (p.size() != n) return false;
  std::vector<std::size_t> pos(n);  // position in ground of p's element i
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(ground.begin(), ground.end(), p.label(i));
    if (it == ground.end() || *it != p.label(i)) return false;
    pos[i] = static_cast<std::size_t>(it - ground.begin());
  }
  out.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(i, j)) out[pos[i]] |= Bits{1} << pos[j];
    }
  }
  return true;
}

}  // namespace

FormalSum::FormalSum(const Poset& p, std::int64_t coefficient) {
  add(p, coefficient);
}

FormalSum::Key FormalSum::key_of(const Poset& p) {
  if (terms_.empty()) {
    ground_ = p.labels();
    std::sort(ground_.begin(), ground_.end());
  }
  Key key;
  if (!rows_in_order(p, ground_, key)) {
    throw Error(ErrorCode::GroundSetMismatch,
                "formal sum terms must share one ground set");
  }
  return key;
}

FormalSum::Key FormalSum::key_of_const(const Poset& p, bool& ok) const {
  Key key;
  ok = rows_in_order(p, ground_, key);
  return key;
}

void FormalSum::add_key(const Key& key, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void FormalSum::add(const Poset& p, std::int64_t coefficient) {
  if (coefficient == 0) return;
  add_key(key_of(p), coefficient);
}

void FormalSum::add_rows(const std::vector<Label>& sorted_ground,
                         const std::vector<Bits>& rows,
                         std::int64_t coefficient) {
  if (coefficient == 0) return;
  if (terms_.empty()) {
    ground_ = sorted_ground;
  } else if (ground_ != sorted_ground) {
    throw Error(ErrorCode::GroundSetMismatch,
                "formal sum terms must share one ground set");
  }
  add_key(rows, coefficient);
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    ground_ = other.ground_;
  } else if (ground_ != other.ground_) {
    throw Error(ErrorCode::GroundSetMismatch,
                "cannot add formal sums over different ground sets");
  }
  for (auto const& [k, c] : other.terms_) add_key(k, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  FormalSum neg = other;
  neg *= -1;
  return *this += neg;
}

FormalSum& FormalSum::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

std::int64_t FormalSum::total() const noexcept {
  std::int64_t t = 0;
  for (auto const& [k, c] : terms_) t += c;
  return t;
}

std::int64_t FormalSum::coefficient(const Poset& p) const {
  if (terms_.empty()) return 0;
  bool ok = false;
  Key key = key_of_const(p, ok);
  if (!ok) return 0;
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<Poset, std::int64_t>> FormalSum::terms() const {
  std::vector<std::pair<Poset, std::int64_t>> out;
  out.reserve(terms_.size());
  for (auto const& [k, c] : terms_) {
    out.emplace_back(Poset::from_order(ground_, k), c);
  }
  return out;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto const& [p, c] : terms()) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    std::int64_t const mag = c < 0 ? -c : c;
    if (mag != 1) out << mag << '*';
    out << p.to_string();
    first = false;
  }
  return out.str();
}

}  // namespace posetop
