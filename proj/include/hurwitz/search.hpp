#pragma once

#include <optional>
#include <vector>

#include "hurwitz/constellation.hpp"
#include "hurwitz/family.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/ramdata.hpp"

namespace hurwitz {

struct SearchOptions {
  long long budget = 1'000'000'000;  // backtrack nodes
  int threads = 1;
  // Orbit reduction by the centralizer of sigma_1 kicks in above this order.
  long long centralizer_threshold = 24;
};

// Outcome of the exhaustive realizability search. `nodes` is the number of
// backtrack nodes consumed in sequential order (identical for any thread
// count); `space` is the product of the enumerated conjugacy class sizes,
// saturated at the maximum representable value.
struct RealizeResult {
  enum class Kind { Witness, Unsat, Unknown } kind = Kind::Unknown;
  std::optional<Constellation> witness;
  long long nodes = 0;
  unsigned long long space = 0;

  bool is_witness() const { return kind == Kind::Witness; }
  bool is_unsat() const { return kind == Kind::Unsat; }
  bool is_unknown() const { return kind == Kind::Unknown; }
};

// Riemann existence search: first witness in the deterministic search order,
// or proof of emptiness by exhaustion, or Unknown once the node budget is
// spent. Requires genus(data) to be accepted.
RealizeResult realize(const RamData& data, const SearchOptions& opts = {});

struct DegreeReport {
  long long degree;
  RealizeResult result;
};

// Runs realize on member(f, n) for every requested degree.
std::vector<DegreeReport> check_nonexistence(const FamilySpec& f,
                                             const std::vector<long long>& degrees,
                                             const SearchOptions& opts = {});

// Cycle-length multiset of x o y for fixed-point-free involutions x, y.
Partition involution_product_profile(const Perm& x, const Perm& y);

// Conjugacy class size of the given cycle type in S_n.
unsigned long long conjugacy_class_size(const Partition& type, int n);
// Order of the centralizer of a permutation with the given cycle type.
unsigned long long centralizer_order(const Partition& type, int n);

}  // namespace hurwitz
