#pragma once

#include <compare>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// Bijection on {0..n-1}, immutable after construction.
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  // Points not mentioned in any cycle are fixed.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // Canonical representative of a cycle type: cycles laid out consecutively
  // in the stored (descending) entry order, e.g. [3,2] -> (0 1 2)(3 4).
  static Perm canonical_of_type(const Partition& type, int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  bool is_fixed_point_free_involution() const;

  // Cycles written from their minimal element, ordered by minimal element;
  // fixed points included.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;
  int cycle_count() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

// Fixed composition convention: (s o t)(x) = s(t(x)), i.e. t acts first.
Perm compose(const Perm& s, const Perm& t);
// z o g o z^-1.
Perm conjugate(const Perm& g, const Perm& z);

}  // namespace hurwitz
