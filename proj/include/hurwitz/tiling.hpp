#pragma once

#include <string>
#include <vector>

#include "hurwitz/ramdata.hpp"

namespace hurwitz {

enum class TileShape { Hexagon, Square };

// Integer 2x2 matrix whose columns generate the quotient lattice; the
// determinant is the number of polygons on the torus.
struct LatticeBasis {
  // Columns (a, c) and (b, d).
  long long a = 1, b = 0, c = 0, d = 1;

  long long det() const { return a * d - b * c; }
  // True iff v is an integer combination of the columns.
  bool contains(long long x, long long y) const;
  double column_length_min() const;
  double angle_cosine() const;
};

struct TorusTiling {
  TileShape shape = TileShape::Hexagon;
  LatticeBasis basis;
  long long polygons = 0;
};

// Quotient tiling of the plane by a lattice with determinant n, following the
// three-case construction (square / nearest square above / nearest square
// below).
TorusTiling tile_torus(long long n, TileShape shape = TileShape::Hexagon);

// Largest r such that the radius-r disk of polygons embeds injectively into
// the quotient: no two distinct disk polygons differ by a lattice vector.
int max_disk_radius(const TorusTiling& t);

// lcm of every partition's entries equals the corresponding base entry.
// Requires genus 0 and a Euclidean base.
bool is_regular_spherical(const RamData& data, const std::vector<int>& base);

// Deterministic DOT text of the quotient adjacency graph.
std::string tiling_dot(const TorusTiling& t);

}  // namespace hurwitz
