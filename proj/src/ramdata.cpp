#include "hurwitz/ramdata.hpp"

#include <stdexcept>

namespace hurwitz {

RamData::RamData(std::vector<Partition> partitions) : partitions_(std::move(partitions)) {
  if (partitions_.size() < 2)
    throw std::invalid_argument("ramification data needs at least two partitions");
  degree_ = partitions_.front().sum();
  for (const auto& p : partitions_) {
    if (p.empty()) throw std::invalid_argument("ramification data partition is empty");
    if (p.sum() != degree_)
      throw std::invalid_argument("partition sums disagree: " + std::to_string(p.sum()) +
                                  " vs degree " + std::to_string(degree_));
    if (!p.nontrivial())
      throw std::invalid_argument("trivial (all-ones) partition rejected");
  }
}

GenusValue genus(const RamData& data) {
  long long deficiency = 0;  // sum over all entries of (e - 1)
  for (const auto& p : data.partitions()) deficiency += p.sum() - p.size();
  Rat raw = Rat(1) - Rat(data.degree()) + Rat(deficiency, 2);
  GenusValue out;
  out.raw = raw;
  if (raw.is_integer() && raw.num >= 0) {
    out.ok = true;
    out.g = raw.num;
  }
  return out;
}

}  // namespace hurwitz
