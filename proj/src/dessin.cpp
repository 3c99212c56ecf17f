#include "hurwitz/dessin.hpp"

#include <stdexcept>

namespace hurwitz {

Dessin Dessin::from_constellation(Constellation c) {
  if (!c.product_is_identity())
    throw std::invalid_argument("dessin requires the product to be the identity");
  if (!c.transitive()) throw std::invalid_argument("dessin requires a transitive constellation");
  return Dessin(std::move(c));
}

Dessin::Dessin(Constellation c) : c_(std::move(c)) {
  const int r = c_.size();
  vertices_ = c_.degree();
  for (int j = 0; j + 1 < r; ++j) vertices_ += c_[j].cycle_count();
  edges_ = static_cast<long long>(r - 1) * c_.degree();
  faces_ = c_[r - 1].cycle_count();
}

RamData Dessin::ram_type() const {
  std::vector<Partition> parts;
  for (int i = 0; i < c_.size(); ++i) parts.push_back(c_[i].cycle_type());
  return RamData(std::move(parts));
}

CanonicalForm canonical_form(const Dessin& d) {
  const Constellation& c = d.constellation();
  const int n = c.degree();
  const int r = c.size();

  CanonicalForm best;
  std::vector<int> label(n), order(n);
  for (int seed = 0; seed < n; ++seed) {
    // BFS over forward images; transitivity guarantees full coverage.
    std::fill(label.begin(), label.end(), -1);
    label[seed] = 0;
    order[0] = seed;
    int next = 1;
    for (int at = 0; at < n; ++at) {
      int x = order[at];
      for (int j = 0; j < r; ++j) {
        int y = c[j][x];
        if (label[y] < 0) {
          label[y] = next;
          order[next] = y;
          ++next;
        }
      }
    }
    std::vector<int> enc;
    enc.reserve(static_cast<std::size_t>(n) * r);
    for (int j = 0; j < r; ++j)
      for (int at = 0; at < n; ++at) enc.push_back(label[c[j][order[at]]]);
    if (seed == 0 || enc < best.encoding) {
      best.encoding = std::move(enc);
      best.relabeling = label;
    }
  }

  // FNV-1a over the encoding, prefixed by the shape.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  mix(static_cast<std::uint64_t>(r));
  for (int v : best.encoding) mix(static_cast<std::uint64_t>(v));
  best.digest = h;
  return best;
}

std::string export_dot(const Dessin& d) {
  const Constellation& c = d.constellation();
  const int n = c.degree();
  const int r = c.size();
  std::string out = "graph dessin {\n";
  for (int x = 0; x < n; ++x)
    out += "  s" + std::to_string(x) + " [shape=point];\n";
  // One vertex per cycle of each color j < r; an edge per (sheet, color).
  for (int j = 0; j + 1 < r; ++j) {
    auto cycles = c[j].cycles();
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      std::string name = "c" + std::to_string(j + 1) + "_" + std::to_string(k);
      out += "  " + name + " [label=\"" + std::to_string(j + 1) + ":deg" +
             std::to_string(cycles[k].size()) + "\",shape=circle];\n";
      for (int x : cycles[k])
        out += "  s" + std::to_string(x) + " -- " + name + ";\n";
    }
  }
  auto faces = c[r - 1].cycles();
  for (std::size_t k = 0; k < faces.size(); ++k) {
    out += "  // face " + std::to_string(k) + " degree " + std::to_string(faces[k].size()) +
           ": sheets";
    for (int x : faces[k]) out += " " + std::to_string(x);
    out += "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hurwitz
