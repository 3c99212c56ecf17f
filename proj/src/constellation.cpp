#include "hurwitz/constellation.hpp"

#include <numeric>
#include <stdexcept>

namespace hurwitz {

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Constellation::Constellation(std::vector<Perm> perms) : perms_(std::move(perms)) {
  if (perms_.empty()) throw std::invalid_argument("constellation needs at least one permutation");
  degree_ = perms_.front().degree();
  for (const auto& p : perms_)
    if (p.degree() != degree_) throw std::invalid_argument("constellation degrees disagree");

  product_identity_ = product().is_identity();

  std::vector<int> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : perms_)
    for (int x = 0; x < degree_; ++x) {
      int a = uf_find(parent, x), b = uf_find(parent, p[x]);
      if (a != b) parent[a] = b;
    }
  int roots = 0;
  for (int x = 0; x < degree_; ++x)
    if (uf_find(parent, x) == x) ++roots;
  transitive_ = (roots == 1);
}

Perm Constellation::product() const {
  Perm acc = perms_.back();
  for (int i = size() - 2; i >= 0; --i) acc = compose(perms_[i], acc);
  return acc;
}

Constellation Constellation::conjugated(const Perm& z) const {
  std::vector<Perm> out;
  out.reserve(perms_.size());
  for (const auto& p : perms_) out.push_back(conjugate(p, z));
  return Constellation(std::move(out));
}

VerifyReport verify(const Constellation& c, const RamData& data) {
  VerifyReport rep;
  if (c.degree() != data.degree()) {
    rep.violation = "degree mismatch";
    return rep;
  }
  if (c.size() != data.branch_points()) {
    rep.violation = "branch point count mismatch";
    return rep;
  }
  for (int i = 0; i < c.size(); ++i) {
    if (!(c[i].cycle_type() == data[i])) {
      rep.violation = "cycle type of permutation " + std::to_string(i + 1) +
                      " does not match partition " + std::to_string(i + 1);
      return rep;
    }
  }
  if (!c.product_is_identity()) {
    rep.violation = "product is not the identity";
    return rep;
  }
  if (!c.transitive()) {
    rep.violation = "generated group is not transitive";
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace hurwitz
