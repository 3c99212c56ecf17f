#pragma once

#include <compare>
#include <vector>

namespace hurwitz {

// Multiset of positive integers, kept sorted descending so that equality is
// multiset equality. The empty multiset is allowed (it is the irregular part
// of a regular family slot); ramification data itself never stores it.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  long long sum() const { return sum_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  // At least one entry >= 2. The all-ones partition is "trivial".
  bool nontrivial() const;
  bool contains(int e) const;
  int count(int e) const;
  long long lcm_entries() const;  // lcm of all entries; 1 for the empty multiset

  // Returns a copy with one occurrence of `from` replaced by `to`.
  Partition replace_one(int from, int to) const;
  Partition with_extra(int value, int copies) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.entries_ == b.entries_;
  }
  // Total order used for canonical family arrangements and table output.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  long long sum_ = 0;
};

}  // namespace hurwitz
