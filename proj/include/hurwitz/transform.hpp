#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/constellation.hpp"
#include "hurwitz/family.hpp"
#include "hurwitz/ramdata.hpp"

namespace hurwitz {

// Ramification layout of a fixed base covering g of the sphere: every target
// point of interest with its full fiber of named preimages and multiplicities
// (summing to the degree). Branch points of an upstairs covering are placed
// at preimage points by name.
class BaseMap {
 public:
  struct PreimagePoint {
    std::string name;
    int multiplicity;
  };
  struct TargetPoint {
    std::string name;
    std::vector<PreimagePoint> fiber;
  };

  BaseMap(int degree, std::vector<TargetPoint> targets);

  static BaseMap identity(int points_of_interest);
  static BaseMap square();  // x^2: targets 0, 1, -1, inf
  static BaseMap cube();    // x^3: targets 0, 1, -1, inf

  int degree() const { return degree_; }
  const std::vector<TargetPoint>& targets() const { return targets_; }
  bool has_preimage(const std::string& name) const;

 private:
  int degree_;
  std::vector<TargetPoint> targets_;
};

// Ramification type of g o f for f of the given type with branch point i
// placed at the named preimage point of g. Unplaced preimages contribute
// regular fibers; targets whose composite partition is all-ones are dropped.
RamData compose(const RamData& f_type, const std::map<int, std::string>& placement,
                const BaseMap& g);

// Degree n+k edge-addition move: entry a of slot_a grows to a+k, entry b of
// slot_b to b+k, every other slot gains k ones. Slots are 0-based.
RamData add_edges(const RamData& t, int slot_a, int a, int slot_b, int b, int k);

// The same move performed on a witness by splicing k new points into a chosen
// a-cycle and the induced b-cycle; the result verifies against
// add_edges(type). Requires a verified constellation.
Constellation add_edges_witness(const Constellation& c, int slot_a, int a, int slot_b, int b,
                                int k);

// Slotwise multiset union of the irregular parts; bases must agree.
FamilySpec merge_families(const FamilySpec& f1, const FamilySpec& f2);

// Splitting of genus-1 families [1^{k_i},3^{m_i},2^*]_{i=1..4} with error
// above 10 into two genus-1 halves, following the parity case analysis; the
// twelve types that cannot be split this way are reported by their id.
struct SplitResult {
  enum class Kind { Halves, Exceptional, NotApplicable } kind = Kind::NotApplicable;
  std::optional<std::pair<FamilySpec, FamilySpec>> halves;
  int exceptional_id = 0;
  std::string reason;
};

SplitResult split_2222(const std::array<int, 4>& ones, const std::array<int, 4>& threes);

// The twelve exceptional (ones, threes) patterns, by id 1..12.
const std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>>& split_exceptions();

}  // namespace hurwitz
