#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/constellation.hpp"
#include "hurwitz/ramdata.hpp"

namespace hurwitz {

// Bicolored-map view of a verified constellation: n central vertices (one per
// sheet), one color-j vertex per cycle of sigma_j for j < r, faces given by
// the cycles of sigma_r.
class Dessin {
 public:
  // Rejects constellations whose product is not the identity or that are not
  // transitive.
  static Dessin from_constellation(Constellation c);

  const Constellation& constellation() const { return c_; }
  long long vertices() const { return vertices_; }
  long long edges() const { return edges_; }
  long long faces() const { return faces_; }
  long long euler_characteristic() const { return vertices_ - edges_ + faces_; }
  // (2 - chi) / 2; integral for any verified constellation.
  long long genus() const { return (2 - euler_characteristic()) / 2; }

  RamData ram_type() const;

 private:
  explicit Dessin(Constellation c);

  Constellation c_;
  long long vertices_ = 0, edges_ = 0, faces_ = 0;
};

struct CanonicalForm {
  std::vector<int> relabeling;        // old point -> new label
  std::vector<int> encoding;          // image tables of the relabeled tuple
  std::uint64_t digest = 0;
};

// BFS relabeling seeded at every point; keeps the lexicographically least
// image-table encoding. The digest is invariant under simultaneous
// conjugation of the constellation.
CanonicalForm canonical_form(const Dessin& d);

// Bipartite incidence graph (sheets vs. cycle vertices of each color),
// deterministic ordering, face degrees as annotations.
std::string export_dot(const Dessin& d);

}  // namespace hurwitz
