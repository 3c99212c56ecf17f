#include "hurwitz/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace hurwitz {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("cycle point out of range");
      if (used[from]) throw std::invalid_argument("point repeated across cycles");
      used[from] = 1;
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::canonical_of_type(const Partition& type, int n) {
  if (type.sum() != n) throw std::invalid_argument("cycle type does not sum to the degree");
  std::vector<int> img(n);
  int at = 0;
  for (int len : type.entries()) {
    for (int i = 0; i < len; ++i) img[at + i] = at + (i + 1) % len;
    at += len;
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) inv[img_[x]] = static_cast<int>(x);
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

bool Perm::is_fixed_point_free_involution() const {
  for (std::size_t x = 0; x < img_.size(); ++x) {
    int y = img_[x];
    if (y == static_cast<int>(x) || img_[y] != static_cast<int>(x)) return false;
  }
  return !img_.empty();
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    int x = static_cast<int>(s);
    do {
      c.push_back(x);
      seen[x] = 1;
      x = img_[x];
    } while (x != static_cast<int>(s));
    out.push_back(std::move(c));
  }
  return out;
}

Partition Perm::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lens));
}

int Perm::cycle_count() const {
  int count = 0;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    int x = static_cast<int>(s);
    do {
      seen[x] = 1;
      x = img_[x];
    } while (x != static_cast<int>(s));
  }
  return count;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> img(s.degree());
  for (int x = 0; x < s.degree(); ++x) img[x] = s[t[x]];
  return Perm(std::move(img));
}

Perm conjugate(const Perm& g, const Perm& z) {
  if (g.degree() != z.degree()) throw std::invalid_argument("degree mismatch in conjugation");
  std::vector<int> img(g.degree());
  for (int x = 0; x < g.degree(); ++x) img[z[x]] = z[g[x]];
  return Perm(std::move(img));
}

}  // namespace hurwitz
