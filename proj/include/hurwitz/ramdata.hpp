#pragma once

#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Ordered sequence of r >= 2 nontrivial partitions of a common degree n.
// Construction checks the shape constraints; whether the Riemann-Hurwitz
// value is a nonnegative integer is decided by genus().
class RamData {
 public:
  explicit RamData(std::vector<Partition> partitions);

  long long degree() const { return degree_; }
  int branch_points() const { return static_cast<int>(partitions_.size()); }
  const Partition& operator[](int i) const { return partitions_[i]; }
  const std::vector<Partition>& partitions() const { return partitions_; }

  friend bool operator==(const RamData& a, const RamData& b) {
    return a.partitions_ == b.partitions_;
  }

 private:
  long long degree_ = 0;
  std::vector<Partition> partitions_;
};

// Outcome of the Riemann-Hurwitz evaluation. `raw` always carries the exact
// value 1 - n + (1/2) * sum (e - 1); `ok` is true iff it is a nonnegative
// integer, in which case `g` holds it.
struct GenusValue {
  bool ok = false;
  long long g = 0;
  Rat raw;
};

GenusValue genus(const RamData& data);

}  // namespace hurwitz
