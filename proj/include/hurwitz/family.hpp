#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/ramdata.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

struct InvalidDegree : std::invalid_argument {
  InvalidDegree(const std::string& msg, int slot) : std::invalid_argument(msg), slot(slot) {}
  int slot;
};

// Base type [k_1..k_r] plus fixed irregular multisets A_1..A_r. A member of
// the family at degree n fills each slot j with A_j and (n - sum A_j)/k_j
// copies of k_j.
class FamilySpec {
 public:
  FamilySpec(std::vector<int> base, std::vector<Partition> irregular);

  const std::vector<int>& base() const { return base_; }
  const std::vector<Partition>& irregular() const { return irregular_; }
  int slots() const { return static_cast<int>(base_.size()); }
  // Error of the family: total sum of irregular entries over all slots.
  long long error() const;
  bool is_euclidean() const;
  bool is_regular() const;  // all irregular parts empty

  // Canonical representative under permutations of slots with equal k_j:
  // within each group of equal base entries, irregular parts sorted ascending.
  FamilySpec canonical() const;

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
    return a.base_ == b.base_ && a.irregular_ == b.irregular_;
  }
  friend bool operator<(const FamilySpec& a, const FamilySpec& b);

 private:
  std::vector<int> base_;
  std::vector<Partition> irregular_;
};

// 1 + (1/2) sum_j (s_j/k_j - |A_j|); requires a Euclidean base. The closed
// form agrees with the Riemann-Hurwitz value on every member (tested).
GenusValue family_genus(const FamilySpec& f);

// Arithmetic progression of degrees n for which member(f, n) is defined.
struct DegreeProgression {
  bool empty = true;
  long long start = 0;
  long long step = 0;

  bool contains(long long n) const {
    return !empty && n >= start && (n - start) % step == 0;
  }
  long long nth(int i) const { return start + step * i; }
};

DegreeProgression valid_degrees(const FamilySpec& f);

RamData member(const FamilySpec& f, long long n);

// All families with the given Euclidean base, error <= eps_max, the requested
// family genus, and a nonempty degree progression; deduplicated up to
// permuting slots with equal base entry and sorted canonically.
std::vector<FamilySpec> enumerate_families(const std::vector<int>& base, int target_genus,
                                           int eps_max);

// Read-only classifier for the generalized almost-regular view: per slot the
// majority entry becomes the base entry, ties broken toward the larger value.
struct AlmostRegularClass {
  std::vector<int> base;
  std::vector<Partition> irregular;
  long long error = 0;
};

AlmostRegularClass classify_almost_regular(const RamData& data);

}  // namespace hurwitz
