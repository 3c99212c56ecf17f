#include "hurwitz/transform.hpp"

#include <algorithm>
#include <set>

namespace hurwitz {

BaseMap::BaseMap(int degree, std::vector<TargetPoint> targets)
    : degree_(degree), targets_(std::move(targets)) {
  if (degree_ < 1) throw std::invalid_argument("base map degree must be positive");
  std::set<std::string> seen;
  for (const auto& t : targets_) {
    int total = 0;
    for (const auto& p : t.fiber) {
      if (p.multiplicity < 1) throw std::invalid_argument("fiber multiplicity must be positive");
      if (!seen.insert(p.name).second)
        throw std::invalid_argument("preimage name repeated: " + p.name);
      total += p.multiplicity;
    }
    if (total != degree_)
      throw std::invalid_argument("fiber multiplicities over " + t.name +
                                  " do not sum to the degree");
  }
}

BaseMap BaseMap::identity(int points_of_interest) {
  std::vector<TargetPoint> targets;
  for (int i = 0; i < points_of_interest; ++i) {
    std::string name = "p" + std::to_string(i);
    targets.push_back({name, {{name, 1}}});
  }
  return BaseMap(1, std::move(targets));
}

BaseMap BaseMap::square() {
  return BaseMap(2, {{"0", {{"0", 2}}},
                     {"1", {{"1", 1}, {"-1", 1}}},
                     {"-1", {{"i", 1}, {"-i", 1}}},
                     {"inf", {{"inf", 2}}}});
}

BaseMap BaseMap::cube() {
  return BaseMap(3, {{"0", {{"0", 3}}},
                     {"1", {{"1", 1}, {"w", 1}, {"w2", 1}}},
                     {"-1", {{"-1", 1}, {"-w", 1}, {"-w2", 1}}},
                     {"inf", {{"inf", 3}}}});
}

bool BaseMap::has_preimage(const std::string& name) const {
  for (const auto& t : targets_)
    for (const auto& p : t.fiber)
      if (p.name == name) return true;
  return false;
}

RamData compose(const RamData& f_type, const std::map<int, std::string>& placement,
                const BaseMap& g) {
  const long long n = f_type.degree();
  // Every branch point placed, at an existing preimage, no collisions.
  std::set<std::string> used;
  for (int i = 0; i < f_type.branch_points(); ++i) {
    auto it = placement.find(i);
    if (it == placement.end())
      throw std::invalid_argument("branch point " + std::to_string(i + 1) + " is not placed");
    if (!g.has_preimage(it->second))
      throw std::invalid_argument("unknown preimage point: " + it->second);
    if (!used.insert(it->second).second)
      throw std::invalid_argument("two branch points placed at " + it->second);
  }
  std::map<std::string, int> branch_at;  // preimage name -> branch index
  for (const auto& [i, name] : placement) branch_at[name] = i;

  std::vector<Partition> parts;
  for (const auto& target : g.targets()) {
    std::vector<int> entries;
    bool all_ones = true;
    for (const auto& p : target.fiber) {
      auto it = branch_at.find(p.name);
      if (it != branch_at.end()) {
        for (int e : f_type[it->second].entries()) {
          entries.push_back(p.multiplicity * e);
          if (p.multiplicity * e > 1) all_ones = false;
        }
      } else {
        entries.insert(entries.end(), n, p.multiplicity);
        if (p.multiplicity > 1) all_ones = false;
      }
    }
    if (!all_ones) parts.emplace_back(std::move(entries));
  }
  return RamData(std::move(parts));
}

RamData add_edges(const RamData& t, int slot_a, int a, int slot_b, int b, int k) {
  if (t.branch_points() < 3) throw std::invalid_argument("edge addition needs r >= 3");
  if (slot_a == slot_b) throw std::invalid_argument("slots must differ");
  if (slot_a < 0 || slot_a >= t.branch_points() || slot_b < 0 || slot_b >= t.branch_points())
    throw std::invalid_argument("slot out of range");
  if (k < 0) throw std::invalid_argument("edge count must be nonnegative");
  std::vector<Partition> parts;
  for (int j = 0; j < t.branch_points(); ++j) {
    if (j == slot_a)
      parts.push_back(t[j].replace_one(a, a + k));
    else if (j == slot_b)
      parts.push_back(t[j].replace_one(b, b + k));
    else
      parts.push_back(t[j].with_extra(1, k));
  }
  return RamData(std::move(parts));
}

Constellation add_edges_witness(const Constellation& c, int slot_a, int a, int slot_b, int b,
                                int k) {
  if (!c.product_is_identity() || !c.transitive())
    throw std::invalid_argument("edge addition needs a verified constellation");
  if (c.size() < 3) throw std::invalid_argument("edge addition needs r >= 3");
  if (slot_a == slot_b) throw std::invalid_argument("slots must differ");
  if (k < 0) throw std::invalid_argument("edge count must be nonnegative");
  const int n = c.degree();
  const int A = std::min(slot_a, slot_b), B = std::max(slot_a, slot_b);
  const int ea = (slot_a < slot_b) ? a : b;
  const int eb = (slot_a < slot_b) ? b : a;

  // mid = sigma_{A+1} o ... o sigma_{B-1}.
  Perm mid = Perm::identity(n);
  for (int j = B - 1; j > A; --j) mid = compose(c[j], mid);
  Perm mid_inv = mid.inverse();

  auto cycle_len_through = [&](const Perm& p, int x) {
    int len = 1;
    for (int y = p[x]; y != x; y = p[y]) ++len;
    return len;
  };

  // A point x on an a-cycle of sigma_A whose mid-transport lies on a b-cycle
  // of sigma_B; this is the adjacency hypothesis of the move.
  int x = -1;
  for (int cand = 0; cand < n; ++cand) {
    if (cycle_len_through(c[A], cand) != ea) continue;
    if (cycle_len_through(c[B], mid_inv[cand]) != eb) continue;
    x = cand;
    break;
  }
  if (x < 0)
    throw std::domain_error("no vertex of degree " + std::to_string(ea) +
                            " adjacent to one of degree " + std::to_string(eb));
  if (k == 0) return c;

  const int xt = mid_inv[x];
  const int y0 = c[B].inverse()[xt];
  auto first_new = n;
  std::vector<Perm> out;
  for (int j = 0; j < c.size(); ++j) {
    std::vector<int> img(n + k);
    for (int p = 0; p < n; ++p) img[p] = c[j][p];
    for (int p = 0; p < k; ++p) img[n + p] = n + p;
    if (j == A) {
      // Splice the chain x -> m_1 -> ... -> m_k -> sigma_A(x).
      img[x] = first_new;
      for (int p = 0; p + 1 < k; ++p) img[n + p] = n + p + 1;
      img[n + k - 1] = c[A][x];
    } else if (j == B) {
      // Reroute y0 through the new points in reverse.
      img[y0] = n + k - 1;
      for (int p = k - 1; p > 0; --p) img[n + p] = n + p - 1;
      img[n] = xt;
    }
    out.emplace_back(std::move(img));
  }
  return Constellation(std::move(out));
}

FamilySpec merge_families(const FamilySpec& f1, const FamilySpec& f2) {
  if (f1.base() != f2.base()) throw std::invalid_argument("family bases disagree");
  std::vector<Partition> irr;
  for (int j = 0; j < f1.slots(); ++j) {
    auto es = f1.irregular()[j].entries();
    const auto& more = f2.irregular()[j].entries();
    es.insert(es.end(), more.begin(), more.end());
    irr.emplace_back(std::move(es));
  }
  return FamilySpec(f1.base(), std::move(irr));
}

namespace {

FamilySpec family_13(const std::array<int, 4>& ones, const std::array<int, 4>& threes) {
  std::vector<Partition> irr;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> es(ones[i], 1);
    es.insert(es.end(), threes[i], 3);
    irr.emplace_back(std::move(es));
  }
  return FamilySpec({2, 2, 2, 2}, std::move(irr));
}

using Pattern = std::pair<std::array<int, 4>, std::array<int, 4>>;

std::array<std::pair<int, int>, 4> sorted_pairs(const std::array<int, 4>& k,
                                                const std::array<int, 4>& m) {
  std::array<std::pair<int, int>, 4> ps;
  for (int i = 0; i < 4; ++i) ps[i] = {k[i], m[i]};
  std::sort(ps.begin(), ps.end());
  return ps;
}

// A half is unusable when it is the regular type or the nonrealizable type
// [1,3,2*][2*][2*][2*], up to slot permutation.
bool half_ok(const std::array<int, 4>& k, const std::array<int, 4>& m) {
  auto ps = sorted_pairs(k, m);
  std::array<std::pair<int, int>, 4> regular{{{0, 0}, {0, 0}, {0, 0}, {0, 0}}};
  std::array<std::pair<int, int>, 4> type_a{{{0, 0}, {0, 0}, {0, 0}, {1, 1}}};
  return ps != regular && ps != type_a;
}

int match_exception(const std::array<int, 4>& k, const std::array<int, 4>& m) {
  const auto& table = split_exceptions();
  auto ps = sorted_pairs(k, m);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (ps == sorted_pairs(table[i].first, table[i].second)) return static_cast<int>(i) + 1;
  return 0;
}

SplitResult halves_or_exception(const std::array<int, 4>& k, const std::array<int, 4>& m,
                                const std::array<int, 4>& a, const std::array<int, 4>& b) {
  std::array<int, 4> c, d;
  for (int i = 0; i < 4; ++i) {
    c[i] = k[i] - a[i];
    d[i] = m[i] - b[i];
    if (c[i] < 0 || d[i] < 0) throw std::logic_error("split assignment out of range");
  }
  SplitResult res;
  if (half_ok(a, b) && half_ok(c, d)) {
    res.kind = SplitResult::Kind::Halves;
    res.halves = {family_13(a, b), family_13(c, d)};
    return res;
  }
  int id = match_exception(k, m);
  if (id == 0) throw std::logic_error("split failed on a type outside the exception list");
  res.kind = SplitResult::Kind::Exceptional;
  res.exceptional_id = id;
  res.reason = "listed exceptional type " + std::to_string(id);
  return res;
}

}  // namespace

const std::vector<Pattern>& split_exceptions() {
  static const std::vector<Pattern> table = {
      {{3, 0, 0, 0}, {3, 0, 0, 0}},  // 1:  [1^3,3^3,2*][2*]^3
      {{2, 1, 0, 0}, {2, 1, 0, 0}},  // 2:  [1^2,3^2,2*][1,3,2*][2*]^2
      {{1, 2, 0, 0}, {3, 0, 0, 0}},  // 3:  [1,3^3,2*][1^2,2*][2*]^2
      {{0, 3, 0, 0}, {2, 1, 0, 0}},  // 4:  [3^2,2*][1^3,3,2*][2*]^2
      {{0, 2, 1, 0}, {2, 0, 1, 0}},  // 5:  [3^2,2*][1^2,2*][1,3,2*][2*]
      {{1, 1, 1, 0}, {1, 1, 1, 0}},  // 6:  [1,3,2*]^3[2*]
      {{2, 1, 0, 0}, {1, 0, 1, 1}},  // 7:  [1^2,3,2*][1,2*][3,2*]^2
      {{1, 1, 0, 1}, {0, 0, 1, 2}},  // 8:  [1,2*]^2[3,2*][1,3^2,2*]
      {{1, 1, 1, 0}, {0, 0, 0, 3}},  // 9:  [1,2*]^3[3^3,2*]
      {{1, 1, 1, 1}, {0, 0, 0, 4}},  // 10: [1,2*]^3[1,3^4,2*]
      {{0, 0, 0, 3}, {1, 1, 1, 0}},  // 11: [3,2*]^3[1^3,2*]
      {{0, 0, 0, 4}, {1, 1, 1, 1}},  // 12: [3,2*]^3[1^4,3,2*]
  };
  return table;
}

SplitResult split_2222(const std::array<int, 4>& ones, const std::array<int, 4>& threes) {
  for (int i = 0; i < 4; ++i)
    if (ones[i] < 0 || threes[i] < 0) throw std::invalid_argument("counts must be nonnegative");
  long long sk = 0, sm = 0;
  for (int i = 0; i < 4; ++i) {
    sk += ones[i];
    sm += threes[i];
  }
  if (sk != sm)
    throw std::invalid_argument("genus mismatch: the counts of 1s and 3s must agree");
  long long eps = sk + 3 * sm;
  SplitResult res;
  if (eps <= 10) {
    res.reason = "error at most 10";
    return res;
  }
  int parity = (ones[0] + threes[0]) & 1;
  for (int i = 1; i < 4; ++i)
    if (((ones[i] + threes[i]) & 1) != parity) {
      res.reason = "congruence conditions admit no degree";
      return res;
    }

  const auto& k = ones;
  const auto& m = threes;
  std::array<int, 4> a{0, 0, 0, 0}, b{0, 0, 0, 0};

  if (parity == 0) {
    // Case (a): some slot with at least two 1s and two 3s.
    for (int i = 0; i < 4; ++i)
      if (k[i] >= 2 && m[i] >= 2) {
        a[i] = b[i] = 2;
        return halves_or_exception(k, m, a, b);
      }
    // Case (b): a slot with two 3s (and at most one 1) plus another slot with
    // two 1s; even degree and genus 1 force the latter to exist.
    bool any_m2 = false;
    for (int i = 0; i < 4 && !any_m2; ++i) {
      if (m[i] < 2) continue;
      any_m2 = true;
      for (int j = 0; j < 4; ++j) {
        if (j == i || k[j] < 2) continue;
        b[i] = 2;
        a[j] = 2;
        return halves_or_exception(k, m, a, b);
      }
    }
    if (any_m2) throw std::logic_error("even-degree case (b) without a slot holding two 1s");
    // Case (c): every slot has at most one 3. Only [1,3,2*]^4 splits.
    auto ps = sorted_pairs(k, m);
    std::array<std::pair<int, int>, 4> all11{{{1, 1}, {1, 1}, {1, 1}, {1, 1}}};
    if (ps == all11) {
      a = {1, 1, 0, 0};
      b = {1, 1, 0, 0};
      return halves_or_exception(k, m, a, b);
    }
    int id = match_exception(k, m);
    if (id == 0) throw std::logic_error("unsplittable even-degree type outside the exceptions");
    res.kind = SplitResult::Kind::Exceptional;
    res.exceptional_id = id;
    res.reason = "listed exceptional type " + std::to_string(id);
    return res;
  }

  // Odd degree: every slot carries an odd number of irregular entries.
  std::vector<int> with_ones, with_threes;
  for (int i = 0; i < 4; ++i) {
    if (k[i] >= 1) with_ones.push_back(i);
    if (m[i] >= 1) with_threes.push_back(i);
  }
  if (with_ones.size() >= 2 && with_threes.size() >= 2) {
    // Case (d): two slots give a 1 each, two other slots give a 3 each.
    for (std::size_t p = 0; p < with_ones.size(); ++p)
      for (std::size_t q = p + 1; q < with_ones.size(); ++q) {
        int i1 = with_ones[p], i2 = with_ones[q];
        std::vector<int> rest;
        for (int j : with_threes)
          if (j != i1 && j != i2) rest.push_back(j);
        if (rest.size() < 2) continue;
        a[i1] = a[i2] = 1;
        b[rest[0]] = b[rest[1]] = 1;
        return halves_or_exception(k, m, a, b);
      }
    throw std::logic_error("case (d) admits no slot choice despite two slots of each kind");
  }
  if (with_threes.size() <= 1) {
    // Case (e): all 3s in one slot; that slot gives three 3s, the others one
    // 1 each.
    int i0 = with_threes.empty() ? -1 : with_threes[0];
    if (i0 < 0) throw std::logic_error("error above 10 with no 3s is impossible");
    b[i0] = 3;
    for (int j = 0; j < 4; ++j)
      if (j != i0) a[j] = 1;
    return halves_or_exception(k, m, a, b);
  }
  // Case (f): all 1s in one slot; mirror of case (e).
  int i0 = with_ones[0];
  a[i0] = 3;
  for (int j = 0; j < 4; ++j)
    if (j != i0) b[j] = 1;
  return halves_or_exception(k, m, a, b);
}

}  // namespace hurwitz
