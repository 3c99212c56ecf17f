#include "hurwitz/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw std::invalid_argument("partition entries must be positive");
    sum_ += e;
  }
  std::sort(entries_.begin(), entries_.end(), std::greater<int>());
}

bool Partition::nontrivial() const {
  return !entries_.empty() && entries_.front() >= 2;
}

bool Partition::contains(int e) const {
  return std::find(entries_.begin(), entries_.end(), e) != entries_.end();
}

int Partition::count(int e) const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), e));
}

long long Partition::lcm_entries() const {
  long long l = 1;
  for (int e : entries_) l = std::lcm(l, static_cast<long long>(e));
  return l;
}

Partition Partition::replace_one(int from, int to) const {
  auto es = entries_;
  auto it = std::find(es.begin(), es.end(), from);
  if (it == es.end()) throw std::invalid_argument("entry not present in partition");
  *it = to;
  return Partition(std::move(es));
}

Partition Partition::with_extra(int value, int copies) const {
  auto es = entries_;
  es.insert(es.end(), copies, value);
  return Partition(std::move(es));
}

}  // namespace hurwitz
