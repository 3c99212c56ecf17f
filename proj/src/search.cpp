#include "hurwitz/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <variant>

namespace hurwitz {

namespace {

constexpr unsigned long long kSaturated = std::numeric_limits<unsigned long long>::max();
// Orbit reduction materializes the class; keep that bounded.
constexpr unsigned long long kMaterializeCap = 1'000'000;

unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

}  // namespace

unsigned long long centralizer_order(const Partition& type, int n) {
  (void)n;
  unsigned long long order = 1;
  int prev = -1, mult = 0;
  auto flush = [&](int len, int m) {
    for (int i = 0; i < m; ++i) {
      order = saturating_mul(order, static_cast<unsigned long long>(len));
      order = saturating_mul(order, static_cast<unsigned long long>(i + 1));
    }
  };
  for (int e : type.entries()) {
    if (e == prev) {
      ++mult;
    } else {
      if (prev > 0) flush(prev, mult);
      prev = e;
      mult = 1;
    }
  }
  if (prev > 0) flush(prev, mult);
  return order;
}

unsigned long long conjugacy_class_size(const Partition& type, int n) {
  if (n > 20) return kSaturated;  // n! would overflow; callers treat this as "huge"
  unsigned long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<unsigned long long>(i);
  return fact / centralizer_order(type, n);
}

namespace {

// ---------------------------------------------------------------------------
// Class enumeration and orbit reduction under the centralizer of sigma_1.
// Permutations are packed 4 bits per point (degree <= 16).

std::uint64_t encode_perm(const std::vector<int>& img) {
  std::uint64_t key = 0;
  for (std::size_t x = 0; x < img.size(); ++x)
    key |= static_cast<std::uint64_t>(img[x]) << (4 * x);
  return key;
}

std::vector<int> decode_perm(std::uint64_t key, int n) {
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = static_cast<int>((key >> (4 * x)) & 0xF);
  return img;
}

void enumerate_class_rec(int n, std::vector<int>& cnt, const std::vector<int>& distinct,
                         std::vector<int>& img, std::vector<char>& used, int assigned,
                         std::vector<std::uint64_t>& out) {
  if (assigned == n) {
    out.push_back(encode_perm(img));
    return;
  }
  int s = 0;
  while (used[s]) ++s;
  used[s] = 1;
  for (int d : distinct) {
    if (cnt[d] == 0) continue;
    cnt[d]--;
    // Build the cycle (s ...) of length d; remaining points chosen ascending.
    std::vector<int> cyc{s};
    auto extend = [&](auto&& self, int need) -> void {
      if (need == 0) {
        img[cyc.back()] = s;
        if (assigned + d == n ||
            true) {  // close and recurse
          enumerate_class_rec(n, cnt, distinct, img, used, assigned + d, out);
        }
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        img[cyc.back()] = v;
        cyc.push_back(v);
        self(self, need - 1);
        cyc.pop_back();
        used[v] = 0;
      }
    };
    extend(extend, d - 1);
    cnt[d]++;
  }
  used[s] = 0;
}

std::vector<std::uint64_t> enumerate_class(const Partition& type, int n) {
  std::vector<int> cnt(n + 1, 0);
  for (int e : type.entries()) cnt[e]++;
  std::vector<int> distinct;
  for (int d = n; d >= 1; --d)
    if (cnt[d]) distinct.push_back(d);
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::uint64_t> out;
  enumerate_class_rec(n, cnt, distinct, img, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Generators of the centralizer of the canonical permutation of a cycle type:
// one rotation per cycle block plus a block swap per adjacent equal-length pair.
std::vector<Perm> centralizer_generators(const Partition& type, int n) {
  std::vector<Perm> gens;
  std::vector<std::pair<int, int>> blocks;  // (start, len)
  int at = 0;
  for (int len : type.entries()) {
    blocks.emplace_back(at, len);
    at += len;
  }
  for (auto [start, len] : blocks) {
    if (len == 1) continue;
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = x;
    for (int i = 0; i < len; ++i) img[start + i] = start + (i + 1) % len;
    gens.emplace_back(std::move(img));
  }
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
    if (blocks[b].second != blocks[b + 1].second) continue;
    int len = blocks[b].second;
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = x;
    for (int i = 0; i < len; ++i) {
      img[blocks[b].first + i] = blocks[b + 1].first + i;
      img[blocks[b + 1].first + i] = blocks[b].first + i;
    }
    gens.emplace_back(std::move(img));
  }
  return gens;
}

// Lexicographically least representative of each orbit of the class under
// conjugation by the centralizer of sigma_1, in ascending order.
std::vector<Perm> orbit_representatives(const Partition& cls, const Partition& type1, int n) {
  auto keys = enumerate_class(cls, n);
  auto gens = centralizer_generators(type1, n);
  std::vector<char> visited(keys.size(), 0);
  auto index_of = [&](std::uint64_t key) -> std::size_t {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    assert(it != keys.end() && *it == key);
    return static_cast<std::size_t>(it - keys.begin());
  };
  std::vector<Perm> reps;
  std::vector<std::uint64_t> queue;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (visited[i]) continue;
    reps.emplace_back(decode_perm(keys[i], n));
    visited[i] = 1;
    queue.clear();
    queue.push_back(keys[i]);
    while (!queue.empty()) {
      std::uint64_t key = queue.back();
      queue.pop_back();
      Perm g(decode_perm(key, n));
      for (const auto& z : gens) {
        std::uint64_t ck = encode_perm(conjugate(g, z).images());
        std::size_t j = index_of(ck);
        if (!visited[j]) {
          visited[j] = 1;
          queue.push_back(ck);
        }
      }
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Subtree exploration.

struct TopResult {
  enum class State { Exhausted, Capped, Witness } state = State::Exhausted;
  long long nodes = 0;
  long long found_at = 0;
  std::optional<Constellation> witness;
};

class Explorer {
 public:
  Explorer(const RamData& data, const Perm& sigma1, long long cap)
      : n_(static_cast<int>(data.degree())),
        r_(data.branch_points()),
        cap_(cap),
        sigma1_(sigma1) {
    sig_.assign(r_, std::vector<int>(n_, -1));
    sig_[0] = sigma1_.images();
    in_cycle_.assign(r_, std::vector<char>(n_, 0));
    q_.assign(r_, std::vector<int>());
    q_[1] = sigma1_.images();
    cnt_.assign(r_, std::vector<int>(n_ + 1, 0));
    distinct_.assign(r_, {});
    for (int i = 0; i < r_; ++i) {
      for (int e : data[i].entries()) cnt_[i][e]++;
      for (int d = n_; d >= 1; --d)
        if (cnt_[i][d]) distinct_[i].push_back(d);
    }
    // Reflection lengths n - #cycles, accumulated over suffixes of the tuple.
    suffix_refl_.assign(r_ + 1, 0);
    for (int i = r_ - 1; i >= 0; --i)
      suffix_refl_[i] = suffix_refl_[i + 1] + (n_ - data[i].size());
    cs_.resize(n_);
    ce_.resize(n_);
    clen_.resize(n_);
    for (int x = 0; x < n_; ++x) {
      cs_[x] = x;
      ce_[x] = x;
      clen_[x] = 1;
    }
    rem_ = cnt_[r_ - 1];
  }

  // Mode A: sigma_2 given as a full class element.
  TopResult run_from_rep(const Perm& rep) {
    tick();
    if (!capped_) {
      if (last_level() == 1) {
        check_leaf_with_sigma2(rep);
      } else {
        sig_[1] = rep.images();
        enter_completed_level(1);
      }
    }
    return result();
  }

  // Mode B: first cycle of sigma_2 pinned to length `len` with sigma_2(0)=v.
  TopResult run_from_first_cycle(int len, int v) {
    cnt_[1][len]--;
    in_cycle_[1][0] = 1;
    if (len == 1) {
      place_arc(1, 0, 0, [&] { next_cycle(1); });
    } else {
      place_arc(1, 0, v, [&] {
        in_cycle_[1][v] = 1;
        extend_cycle(1, 0, v, len - 2);
        in_cycle_[1][v] = 0;
      });
    }
    in_cycle_[1][0] = 0;
    cnt_[1][len]++;
    return result();
  }

 private:
  int last_level() const { return r_ - 2; }
  bool stop() const { return capped_ || found_.has_value(); }

  bool tick() {
    if (nodes_ >= cap_) {
      capped_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  TopResult result() const {
    TopResult res;
    res.nodes = nodes_;
    if (found_) {
      res.state = TopResult::State::Witness;
      res.found_at = found_at_;
      res.witness = found_;
    } else if (capped_) {
      res.state = TopResult::State::Capped;
    }
    return res;
  }

  // Places sigma_j(u) = v, maintaining the partial-product chain structure on
  // the last level, and runs `k` on success. Undoes everything afterwards.
  template <typename K>
  void place_arc(int j, int u, int v, K&& k) {
    if (!tick()) return;
    bool chained = false;
    int rec_su = -1, rec_u = -1, rec_w = -1, rec_ew = -1;
    bool rec_close = false;
    if (j == last_level()) {
      int w = q_[j][v];  // new arc of the partial product: u -> w
      int su = cs_[u];
      if (su == w) {
        int len = clen_[su];
        if (len > n_ || rem_[len] == 0) return;  // cycle length not available in E_r
        rem_[len]--;
        rec_close = true;
        rec_su = su;
      } else {
        int ew = ce_[w];
        rec_su = su;
        rec_u = u;
        rec_w = w;
        rec_ew = ew;
        clen_[su] += clen_[w];
        ce_[su] = ew;
        cs_[ew] = su;
      }
      chained = true;
    }
    sig_[j][u] = v;
    k();
    sig_[j][u] = -1;
    if (chained) {
      if (rec_close) {
        rem_[clen_[rec_su]]++;
      } else {
        clen_[rec_su] -= clen_[rec_w];
        ce_[rec_su] = rec_u;
        cs_[rec_ew] = rec_w;
      }
    }
  }

  void extend_cycle(int j, int first, int cur, int need) {
    if (stop()) return;
    if (need == 0) {
      place_arc(j, cur, first, [&] { next_cycle(j); });
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (in_cycle_[j][v]) continue;
      place_arc(j, cur, v, [&] {
        in_cycle_[j][v] = 1;
        extend_cycle(j, first, v, need - 1);
        in_cycle_[j][v] = 0;
      });
      if (stop()) return;
    }
  }

  void next_cycle(int j) {
    if (stop()) return;
    int s = 0;
    while (s < n_ && in_cycle_[j][s]) ++s;
    if (s == n_) {
      enter_completed_level(j);
      return;
    }
    for (int d : distinct_[j]) {
      if (cnt_[j][d] == 0) continue;
      cnt_[j][d]--;
      in_cycle_[j][s] = 1;
      if (d == 1) {
        place_arc(j, s, s, [&] { next_cycle(j); });
      } else {
        // Cycles start at the least unused point, so each class element is
        // generated exactly once.
        extend_cycle_from_start(j, s, d);
      }
      in_cycle_[j][s] = 0;
      cnt_[j][d]++;
      if (stop()) return;
    }
  }

  void extend_cycle_from_start(int j, int s, int d) {
    for (int v = s + 1; v < n_; ++v) {
      if (in_cycle_[j][v]) continue;
      place_arc(j, s, v, [&] {
        in_cycle_[j][v] = 1;
        extend_cycle(j, s, v, d - 2);
        in_cycle_[j][v] = 0;
      });
      if (stop()) return;
    }
  }

  // Level j has a complete sigma_j; either advance or finish.
  void enter_completed_level(int j) {
    if (j == last_level()) {
      finish();
      return;
    }
    // Partial product so far; the remaining levels must be able to multiply
    // it back to the identity, which bounds its reflection length.
    std::vector<int> qnext(n_);
    for (int x = 0; x < n_; ++x) qnext[x] = q_[j][sig_[j][x]];
    long long cycles = count_cycles(qnext);
    long long refl = n_ - cycles;
    long long budget_refl = suffix_refl_[j + 1];
    if (refl > budget_refl || ((budget_refl - refl) & 1)) return;
    q_[j + 1] = std::move(qnext);
    next_cycle(j + 1);
  }

  static long long count_cycles(const std::vector<int>& img) {
    long long cycles = 0;
    std::vector<char> seen(img.size(), 0);
    for (std::size_t s = 0; s < img.size(); ++s) {
      if (seen[s]) continue;
      ++cycles;
      int x = static_cast<int>(s);
      do {
        seen[x] = 1;
        x = img[x];
      } while (x != static_cast<int>(s));
    }
    return cycles;
  }

  // Mode A leaf for r = 3: sigma_2 fully given, no chain bookkeeping ran.
  void check_leaf_with_sigma2(const Perm& rep) {
    std::vector<int> prod(n_);
    for (int x = 0; x < n_; ++x) prod[x] = q_[1][rep[x]];
    std::vector<int> type_cnt(n_ + 1, 0);
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      int len = 0, x = s;
      do {
        seen[x] = 1;
        x = prod[x];
        ++len;
      } while (x != s);
      type_cnt[len]++;
    }
    if (type_cnt != cnt_[r_ - 1]) return;
    sig_[1] = rep.images();
    q_[2] = prod;
    finish_with_product(prod);
    sig_[1].assign(n_, -1);
  }

  void finish() {
    std::vector<int> prod(n_);
    int j = last_level();
    for (int x = 0; x < n_; ++x) prod[x] = q_[j][sig_[j][x]];
    finish_with_product(prod);
  }

  // `prod` is sigma_1 o ... o sigma_{r-1}; the last permutation is forced.
  void finish_with_product(const std::vector<int>& prod) {
    std::vector<int> last(n_);
    for (int x = 0; x < n_; ++x) last[prod[x]] = x;
    std::vector<Perm> perms;
    perms.reserve(r_);
    for (int i = 0; i + 1 < r_; ++i) perms.emplace_back(sig_[i]);
    perms.emplace_back(std::move(last));
    Constellation c(std::move(perms));
    if (!c.transitive()) return;
    found_ = std::move(c);
    found_at_ = nodes_;
  }

  int n_, r_;
  long long cap_;
  long long nodes_ = 0;
  bool capped_ = false;
  Perm sigma1_;
  std::vector<std::vector<int>> sig_;
  std::vector<std::vector<char>> in_cycle_;
  std::vector<std::vector<int>> q_;
  std::vector<std::vector<int>> cnt_;
  std::vector<std::vector<int>> distinct_;
  std::vector<long long> suffix_refl_;
  // Chain structure of the partial product on the last level: cs_ maps a
  // chain end to its start, ce_ a start to its end, clen_ (at starts) the
  // node count. rem_ holds the not-yet-closed cycle lengths of E_r.
  std::vector<int> cs_, ce_, clen_;
  std::vector<int> rem_;
  std::optional<Constellation> found_;
  long long found_at_ = 0;
};

struct FirstCycleTop {
  int len;
  int v;
};

using Top = std::variant<Perm, FirstCycleTop>;

TopResult run_top(const RamData& data, const Perm& sigma1, const Top& top, long long cap) {
  Explorer ex(data, sigma1, cap);
  if (std::holds_alternative<Perm>(top)) return ex.run_from_rep(std::get<Perm>(top));
  auto fc = std::get<FirstCycleTop>(top);
  return ex.run_from_first_cycle(fc.len, fc.v);
}

}  // namespace

RealizeResult realize(const RamData& data, const SearchOptions& opts) {
  if (opts.budget <= 0) throw std::invalid_argument("budget must be positive");
  if (opts.threads <= 0) throw std::invalid_argument("thread count must be positive");
  auto g = genus(data);
  if (!g.ok)
    throw std::invalid_argument("realize requires data with nonnegative integral genus (got " +
                                g.raw.str() + ")");

  const int n = static_cast<int>(data.degree());
  const int r = data.branch_points();

  RealizeResult out;
  out.space = 1;
  for (int i = 1; i + 1 < r; ++i)
    out.space = saturating_mul(out.space, conjugacy_class_size(data[i], n));

  Perm sigma1 = Perm::canonical_of_type(data[0], n);

  if (r == 2) {
    out.nodes = 1;
    Perm sigma2 = sigma1.inverse();
    Constellation c({sigma1, sigma2});
    if (sigma2.cycle_type() == data[1] && c.transitive()) {
      out.kind = RealizeResult::Kind::Witness;
      out.witness = std::move(c);
    } else {
      out.kind = RealizeResult::Kind::Unsat;
    }
    return out;
  }

  // Top-level candidates for sigma_2: orbit representatives when the
  // centralizer of sigma_1 is worth quotienting by, otherwise the choices of
  // sigma_2's first cycle.
  std::vector<Top> tops;
  unsigned long long zorder = centralizer_order(data[0], n);
  unsigned long long class2 = conjugacy_class_size(data[1], n);
  if (zorder > static_cast<unsigned long long>(opts.centralizer_threshold) &&
      class2 <= kMaterializeCap && n <= 16) {
    for (auto& rep : orbit_representatives(data[1], data[0], n)) tops.emplace_back(std::move(rep));
  } else {
    std::vector<int> cnt(n + 1, 0);
    for (int e : data[1].entries()) cnt[e]++;
    for (int d = n; d >= 1; --d) {
      if (!cnt[d]) continue;
      if (d == 1) {
        tops.emplace_back(FirstCycleTop{1, 0});
      } else {
        for (int v = 1; v < n; ++v) tops.emplace_back(FirstCycleTop{d, v});
      }
    }
  }

  const long long budget = opts.budget;
  const int num_tops = static_cast<int>(tops.size());
  std::vector<TopResult> results(num_tops);
  std::vector<char> done(num_tops, 0);
  std::atomic<long long> best_witness_top{std::numeric_limits<long long>::max()};

  auto worker = [&](int tid, int stride) {
    for (int i = tid; i < num_tops; i += stride) {
      if (i > best_witness_top.load(std::memory_order_relaxed)) continue;
      results[i] = run_top(data, sigma1, tops[i], budget);
      done[i] = 1;
      if (results[i].state == TopResult::State::Witness) {
        long long cur = best_witness_top.load(std::memory_order_relaxed);
        while (i < cur && !best_witness_top.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  if (opts.threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker, t, opts.threads);
    for (auto& th : pool) th.join();
  }

  // Sequential-order merge: identical outcome and node accounting for any
  // thread count.
  long long cum = 0;
  for (int i = 0; i < num_tops; ++i) {
    if (!done[i]) break;  // only possible beyond the first witness top
    const auto& res = results[i];
    if (res.state == TopResult::State::Capped) {
      out.kind = RealizeResult::Kind::Unknown;
      out.nodes = budget;
      return out;
    }
    if (res.state == TopResult::State::Witness) {
      if (cum + res.found_at <= budget) {
        out.kind = RealizeResult::Kind::Witness;
        out.witness = res.witness;
        out.nodes = cum + res.found_at;
      } else {
        out.kind = RealizeResult::Kind::Unknown;
        out.nodes = budget;
      }
      return out;
    }
    cum += res.nodes;
    if (cum > budget) {
      out.kind = RealizeResult::Kind::Unknown;
      out.nodes = budget;
      return out;
    }
  }
  out.kind = RealizeResult::Kind::Unsat;
  out.nodes = cum;
  return out;
}

std::vector<DegreeReport> check_nonexistence(const FamilySpec& f,
                                             const std::vector<long long>& degrees,
                                             const SearchOptions& opts) {
  std::vector<DegreeReport> out;
  for (long long n : degrees) out.push_back({n, realize(member(f, n), opts)});
  return out;
}

Partition involution_product_profile(const Perm& x, const Perm& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch");
  if (!x.is_fixed_point_free_involution() || !y.is_fixed_point_free_involution())
    throw std::invalid_argument("inputs must be fixed-point-free involutions");
  return compose(x, y).cycle_type();
}

}  // namespace hurwitz
