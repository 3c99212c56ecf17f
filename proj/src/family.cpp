#include "hurwitz/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hurwitz {

FamilySpec::FamilySpec(std::vector<int> base, std::vector<Partition> irregular)
    : base_(std::move(base)), irregular_(std::move(irregular)) {
  if (base_.size() < 2) throw std::invalid_argument("family base needs at least two slots");
  if (base_.size() != irregular_.size())
    throw std::invalid_argument("family base and irregular parts disagree in length");
  for (std::size_t j = 0; j < base_.size(); ++j) {
    if (base_[j] < 2) throw std::invalid_argument("base entries must be >= 2");
    if (irregular_[j].contains(base_[j]))
      throw std::invalid_argument("irregular part of slot " + std::to_string(j + 1) +
                                  " contains the base entry " + std::to_string(base_[j]));
  }
}

long long FamilySpec::error() const {
  long long e = 0;
  for (const auto& a : irregular_) e += a.sum();
  return e;
}

bool FamilySpec::is_euclidean() const {
  Rat s;
  for (int k : base_) s += Rat(1) - Rat(1, k);
  return s == Rat(2);
}

bool FamilySpec::is_regular() const {
  return std::all_of(irregular_.begin(), irregular_.end(),
                     [](const Partition& a) { return a.empty(); });
}

FamilySpec FamilySpec::canonical() const {
  // Slots with equal base entry are interchangeable; sort their irregular
  // parts ascending so the representative is the lexicographically least
  // arrangement.
  std::map<int, std::vector<int>> positions;
  for (int j = 0; j < slots(); ++j) positions[base_[j]].push_back(j);
  auto irr = irregular_;
  for (auto& [k, pos] : positions) {
    std::vector<Partition> group;
    for (int j : pos) group.push_back(irr[j]);
    std::sort(group.begin(), group.end());
    for (std::size_t i = 0; i < pos.size(); ++i) irr[pos[i]] = group[i];
  }
  return FamilySpec(base_, std::move(irr));
}

bool operator<(const FamilySpec& a, const FamilySpec& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  long long ea = a.error(), eb = b.error();
  if (ea != eb) return ea < eb;
  return a.irregular_ < b.irregular_;
}

GenusValue family_genus(const FamilySpec& f) {
  if (!f.is_euclidean()) throw std::domain_error("unsupported base: not Euclidean");
  Rat acc;
  for (int j = 0; j < f.slots(); ++j) {
    const auto& a = f.irregular()[j];
    acc += Rat(a.sum(), f.base()[j]) - Rat(a.size());
  }
  Rat raw = Rat(1) + acc * Rat(1, 2);
  GenusValue out;
  out.raw = raw;
  if (raw.is_integer() && raw.num >= 0) {
    out.ok = true;
    out.g = raw.num;
  }
  return out;
}

namespace {

// Combine n == r1 (mod m1) with n == r2 (mod m2); returns false if the two
// congruences are inconsistent.
bool crt_combine(long long& r1, long long& m1, long long r2, long long m2) {
  long long g = std::gcd(m1, m2);
  if ((r2 - r1) % g != 0) return false;
  long long lcm = m1 / g * m2;
  long long step = m2 / g;
  // Walk r1 forward by m1 until it also satisfies the second congruence;
  // moduli here are tiny (<= 6), so the direct walk is fine.
  long long r = r1 % lcm;
  for (long long i = 0; i < step; ++i) {
    if (((r - r2) % m2 + m2) % m2 == 0) {
      r1 = r;
      m1 = lcm;
      return true;
    }
    r += m1;
    r %= lcm;
  }
  return false;
}

}  // namespace

DegreeProgression valid_degrees(const FamilySpec& f) {
  long long r = 0, m = 1;
  long long lo = 1;
  for (int j = 0; j < f.slots(); ++j) {
    const auto& a = f.irregular()[j];
    long long s = a.sum();
    long long k = f.base()[j];
    if (!crt_combine(r, m, s % k, k)) return {};
    // Slot minimum: all regular multiplicities >= 0, and at least one regular
    // entry when the irregular part alone would be an all-ones partition.
    long long slot_lo = a.nontrivial() ? s : s + k;
    lo = std::max(lo, slot_lo);
  }
  DegreeProgression out;
  out.empty = false;
  out.step = m;
  // Smallest n >= lo with n == r (mod m).
  long long n = r % m;
  if (n < lo) n += (lo - n + m - 1) / m * m;
  out.start = n;
  return out;
}

RamData member(const FamilySpec& f, long long n) {
  std::vector<Partition> parts;
  for (int j = 0; j < f.slots(); ++j) {
    const auto& a = f.irregular()[j];
    long long s = a.sum();
    long long k = f.base()[j];
    if (n < s)
      throw InvalidDegree("degree " + std::to_string(n) + " below irregular sum of slot " +
                              std::to_string(j + 1),
                          j);
    if ((n - s) % k != 0)
      throw InvalidDegree("degree " + std::to_string(n) + " violates congruence of slot " +
                              std::to_string(j + 1) + " (needs " + std::to_string(s % k) +
                              " mod " + std::to_string(k) + ")",
                          j);
    long long copies = (n - s) / k;
    if (copies == 0 && !a.nontrivial())
      throw InvalidDegree("degree " + std::to_string(n) + " makes slot " + std::to_string(j + 1) +
                              " trivial",
                          j);
    parts.push_back(a.with_extra(static_cast<int>(k), static_cast<int>(copies)));
  }
  return RamData(std::move(parts));
}

namespace {

void gen_irregular(int max_sum, int forbidden, int max_part, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  out.emplace_back(cur);  // the current multiset (possibly empty) is a candidate
  for (int p = std::min(max_part, max_sum); p >= 1; --p) {
    if (p == forbidden) continue;
    cur.push_back(p);
    gen_irregular(max_sum - p, forbidden, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FamilySpec> enumerate_families(const std::vector<int>& base, int target_genus,
                                           int eps_max) {
  FamilySpec probe(base, std::vector<Partition>(base.size()));
  if (!probe.is_euclidean()) throw std::domain_error("unsupported base: not Euclidean");

  const int r = static_cast<int>(base.size());
  std::vector<std::vector<Partition>> slot_candidates(r);
  for (int j = 0; j < r; ++j) {
    std::vector<int> cur;
    gen_irregular(eps_max, base[j], eps_max, cur, slot_candidates[j]);
  }

  std::set<FamilySpec> found;
  std::vector<Partition> chosen(r);
  auto rec = [&](auto&& self, int j, long long eps_used) -> void {
    if (j == r) {
      FamilySpec f(base, chosen);
      auto g = family_genus(f);
      if (!g.ok || g.g != target_genus) return;
      if (valid_degrees(f).empty) return;
      found.insert(f.canonical());
      return;
    }
    for (const auto& a : slot_candidates[j]) {
      if (eps_used + a.sum() > eps_max) continue;
      chosen[j] = a;
      self(self, j + 1, eps_used + a.sum());
    }
  };
  rec(rec, 0, 0);
  return std::vector<FamilySpec>(found.begin(), found.end());
}

AlmostRegularClass classify_almost_regular(const RamData& data) {
  AlmostRegularClass out;
  for (const auto& p : data.partitions()) {
    std::map<int, int> mult;
    for (int e : p.entries()) mult[e]++;
    int best = 0, best_count = -1;
    for (auto [value, count] : mult) {
      if (count > best_count || (count == best_count && value > best)) {
        best = value;
        best_count = count;
      }
    }
    out.base.push_back(best);
    std::vector<int> rest;
    for (int e : p.entries())
      if (e != best) rest.push_back(e);
    out.irregular.emplace_back(std::move(rest));
    out.error += out.irregular.back().sum();
  }
  return out;
}

}  // namespace hurwitz
