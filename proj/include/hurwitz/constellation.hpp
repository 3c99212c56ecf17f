#pragma once

#include <string>
#include <vector>

#include "hurwitz/perm.hpp"
#include "hurwitz/ramdata.hpp"

namespace hurwitz {

// Tuple of permutations; the composite sigma_1 o sigma_2 o ... o sigma_r
// (rightmost acting first) and transitivity of the generated group are
// computed once at construction.
class Constellation {
 public:
  explicit Constellation(std::vector<Perm> perms);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(perms_.size()); }
  const Perm& operator[](int i) const { return perms_[i]; }
  const std::vector<Perm>& perms() const { return perms_; }

  bool product_is_identity() const { return product_identity_; }
  bool transitive() const { return transitive_; }
  Perm product() const;

  Constellation conjugated(const Perm& z) const;

  friend bool operator==(const Constellation& a, const Constellation& b) {
    return a.perms_ == b.perms_;
  }

 private:
  int degree_ = 0;
  std::vector<Perm> perms_;
  bool product_identity_ = false;
  bool transitive_ = false;
};

struct VerifyReport {
  bool ok = false;
  // First violated condition, in the order: cycle types, identity product,
  // transitivity. Empty when ok.
  std::string violation;
};

VerifyReport verify(const Constellation& c, const RamData& data);

}  // namespace hurwitz
