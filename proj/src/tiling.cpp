#include "hurwitz/tiling.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

bool LatticeBasis::contains(long long x, long long y) const {
  // Solve (x, y) = i * (a, c) + j * (b, d) over the integers via the
  // adjugate: det * (i, j) = (d*x - b*y, -c*x + a*y).
  long long det_ = det();
  long long ti = d * x - b * y;
  long long tj = -c * x + a * y;
  return ti % det_ == 0 && tj % det_ == 0;
}

double LatticeBasis::column_length_min() const {
  double l1 = std::sqrt(static_cast<double>(a * a + c * c));
  double l2 = std::sqrt(static_cast<double>(b * b + d * d));
  return std::min(l1, l2);
}

double LatticeBasis::angle_cosine() const {
  double dot = static_cast<double>(a * b + c * d);
  return dot / (std::sqrt(static_cast<double>(a * a + c * c)) *
                std::sqrt(static_cast<double>(b * b + d * d)));
}

TorusTiling tile_torus(long long n, TileShape shape) {
  if (n < 1) throw std::invalid_argument("polygon count must be positive");
  TorusTiling t;
  t.shape = shape;
  t.polygons = n;
  long long a = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (a * a > n) --a;
  while ((a + 1) * (a + 1) <= n) ++a;
  if (a * a == n) {
    t.basis = {a, 0, 0, a};
  } else if (n >= a * a + a + 1) {
    // (a+1)^2 - n =: k <= a; columns (a+1, 1) and (k, a+1), determinant n.
    long long k = (a + 1) * (a + 1) - n;
    t.basis = {a + 1, k, 1, a + 1};
  } else {
    // n - a^2 =: k <= a. The matrix with determinant (a+1)^2 - k would not
    // have determinant n here; columns (a, 1) and (-k, a) give a^2 + k = n
    // and keep the angle away from zero.
    long long k = n - a * a;
    t.basis = {a, -k, 1, a};
  }
  return t;
}

namespace {

// Graph distance between polygon centers: hex (axial coordinates) or square.
long long polygon_norm(TileShape shape, long long x, long long y) {
  if (shape == TileShape::Square) return std::llabs(x) + std::llabs(y);
  return (std::llabs(x) + std::llabs(y) + std::llabs(x + y)) / 2;
}

// All centers at graph distance <= radius from the origin.
std::vector<std::pair<long long, long long>> disk(TileShape shape, long long radius) {
  std::vector<std::pair<long long, long long>> out;
  for (long long x = -radius; x <= radius; ++x)
    for (long long y = -radius; y <= radius; ++y)
      if (polygon_norm(shape, x, y) <= radius) out.emplace_back(x, y);
  return out;
}

bool disk_injects(const TorusTiling& t, long long radius) {
  // Injectivity of the radius-r disk is equivalent to the absence of a
  // nonzero lattice vector in the difference set, which is the radius-2r disk.
  for (auto [x, y] : disk(t.shape, 2 * radius)) {
    if (x == 0 && y == 0) continue;
    if (t.basis.contains(x, y)) return false;
  }
  return true;
}

}  // namespace

int max_disk_radius(const TorusTiling& t) {
  int r = 0;
  while (disk_injects(t, r + 1)) ++r;
  return r;
}

bool is_regular_spherical(const RamData& data, const std::vector<int>& base) {
  auto g = genus(data);
  if (!g.ok || g.g != 0) throw std::invalid_argument("regular-spherical test requires genus 0");
  if (static_cast<int>(base.size()) != data.branch_points())
    throw std::invalid_argument("base length does not match the number of partitions");
  Rat euclid;
  for (int k : base) {
    if (k < 2) throw std::invalid_argument("base entries must be >= 2");
    euclid += Rat(1) - Rat(1, k);
  }
  if (euclid != Rat(2)) throw std::domain_error("unsupported base: not Euclidean");
  for (int i = 0; i < data.branch_points(); ++i)
    if (data[i].lcm_entries() != base[i]) return false;
  return true;
}

std::string tiling_dot(const TorusTiling& t) {
  // Column-reduce the basis to upper triangular form (Hermite-like) so the
  // residue classes have canonical representatives.
  long long a = t.basis.a, b = t.basis.b, c = t.basis.c, d = t.basis.d;
  while (c != 0) {  // euclidean steps on the bottom row
    long long q = d / c;
    d -= q * c;
    b -= q * a;
    std::swap(c, d);
    std::swap(a, b);
  }
  if (d < 0) {
    d = -d;
    b = -b;
  }
  if (a < 0) a = -a;
  // Now the lattice is spanned by (a, 0) and (b, d); a * d == n.
  long long h11 = a, h12 = b, h22 = d;
  auto rep = [&](long long x, long long y) {
    long long j = ((y % h22) + h22) % h22;
    long long x2 = x - h12 * ((y - j) / h22);
    long long i = ((x2 % h11) + h11) % h11;
    return std::pair<long long, long long>(i, j);
  };
  std::vector<std::pair<long long, long long>> offsets;
  if (t.shape == TileShape::Square)
    offsets = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  else
    offsets = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  std::string out = "graph tiling {\n";
  for (long long j = 0; j < h22; ++j)
    for (long long i = 0; i < h11; ++i)
      out += "  p" + std::to_string(i) + "_" + std::to_string(j) + ";\n";
  for (long long j = 0; j < h22; ++j)
    for (long long i = 0; i < h11; ++i)
      for (auto [dx, dy] : offsets) {
        auto [ni, nj] = rep(i + dx, j + dy);
        // Emit each undirected edge once.
        if (std::pair(ni, nj) < std::pair(i, j)) continue;
        out += "  p" + std::to_string(i) + "_" + std::to_string(j) + " -- p" +
               std::to_string(ni) + "_" + std::to_string(nj) + ";\n";
      }
  out += "}\n";
  return out;
}

}  // namespace hurwitz
