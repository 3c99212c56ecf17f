#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hurwitz/search.hpp"
#include "hurwitz/textio.hpp"

using namespace hurwitz;

namespace {

// Brute-force realizability oracle: iterates every tuple of the first r-1
// permutations over all of S_n and forces the last one. Independent of the
// search module's pruning and symmetry reductions.
bool naive_realizable(const RamData& data) {
  const int n = static_cast<int>(data.degree());
  const int r = data.branch_points();
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Perm> all;
  std::vector<int> images = base;
  do {
    all.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<int> pick(r - 1, 0);
  while (true) {
    std::vector<Perm> tuple;
    bool types_ok = true;
    for (int i = 0; i < r - 1 && types_ok; ++i) {
      tuple.push_back(all[pick[i]]);
      if (!(tuple.back().cycle_type() == data[i])) types_ok = false;
    }
    if (types_ok) {
      Perm prod = tuple.front();
      for (int i = 1; i < r - 1; ++i) prod = compose(prod, tuple[i]);
      Perm last = prod.inverse();
      if (last.cycle_type() == data[r - 1]) {
        tuple.push_back(last);
        if (Constellation(tuple).transitive()) return true;
      }
    }
    int i = r - 2;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(all.size())) pick[i--] = 0;
    if (i < 0) return false;
    pick[i]++;
  }
}

Perm random_fpf_involution(int n, std::mt19937& rng) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> img(n);
  for (int i = 0; i < n; i += 2) {
    img[pts[i]] = pts[i + 1];
    img[pts[i + 1]] = pts[i];
  }
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("cycle types") {
  CHECK(Perm::identity(4).cycle_type() == Partition({1, 1, 1, 1}));
  CHECK(Perm::from_cycles(5, {{0, 1, 2}, {3, 4}}).cycle_type() == Partition({3, 2}));

  // Squaring a [1,3,2,2] permutation keeps only the 3-cycle moving.
  auto p = Perm::canonical_of_type(Partition({1, 3, 2, 2}), 8);
  auto sq = compose(p, p);
  int moved = 0;
  for (int x = 0; x < 8; ++x)
    if (sq[x] != x) ++moved;
  CHECK(moved == 3);
}

TEST_CASE("degree-2 cover of the sphere") {
  auto res = realize(parse_ramdata("[2][2]"));
  REQUIRE(res.is_witness());
  CHECK(res.witness->size() == 2);
  CHECK((*res.witness)[0] == Perm::from_cycles(2, {{0, 1}}));
  CHECK((*res.witness)[1] == Perm::from_cycles(2, {{0, 1}}));
}

TEST_CASE("disconnected type is unsatisfiable at r = 2") {
  CHECK(realize(parse_ramdata("[2,2][2,2]")).is_unsat());
}

TEST_CASE("witness for [2,3][2,3][5] at degree 5") {
  auto data = parse_ramdata("[2,3][2,3][5]");
  auto res = realize(data);
  REQUIRE(res.is_witness());
  CHECK(verify(*res.witness, data).ok);
  CHECK(naive_realizable(data));
}

TEST_CASE("genus-0 entry (1) is realizable at degree 4") {
  auto data = parse_ramdata("[1,3][1,3][1,3]");
  auto res = realize(data);
  REQUIRE(res.is_witness());
  CHECK(verify(*res.witness, data).ok);
  CHECK(naive_realizable(data));
}

TEST_CASE("type (A) at degree 4 is exhausted, matching the naive oracle") {
  auto data = parse_ramdata("[1,3][2,2][2,2][2,2]");
  auto res = realize(data);
  CHECK(res.is_unsat());
  CHECK(res.nodes > 0);
  CHECK_FALSE(naive_realizable(data));
}

TEST_CASE("verify reports the first violated condition") {
  auto ok = parse_witness("(0 1) | (0 1)", 2);
  CHECK(verify(ok, parse_ramdata("[2][2]")).ok);

  auto triple = parse_witness("(0 1 2) | (0 1 2) | (0 1 2)", 3);
  CHECK(verify(triple, parse_ramdata("[3][3][3]")).ok);

  auto bad = parse_witness("(0 1) | (2 3)", 4);
  auto rep = verify(bad, parse_ramdata("[1,1,2][1,1,2]"));
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation == "product is not the identity");

  auto intransitive = parse_witness("(0 1) | (0 1) | (2 3) | (2 3)", 4);
  auto rep2 = verify(intransitive, parse_ramdata("[1,1,2][1,1,2][1,1,2][1,1,2]"));
  CHECK_FALSE(rep2.ok);
  CHECK(rep2.violation == "generated group is not transitive");
}

TEST_CASE("witnesses stay valid under conjugation") {
  auto data = parse_ramdata("[2,3][2,3][5]");
  auto res = realize(data);
  REQUIRE(res.is_witness());
  std::mt19937 rng(7);
  std::vector<int> img(5);
  std::iota(img.begin(), img.end(), 0);
  for (int t = 0; t < 50; ++t) {
    std::shuffle(img.begin(), img.end(), rng);
    CHECK(verify(res.witness->conjugated(Perm(img)), data).ok);
  }
}

TEST_CASE("involution product profile") {
  auto x = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  CHECK(involution_product_profile(x, x) == Partition({1, 1, 1, 1}));
  auto y = Perm::from_cycles(4, {{1, 2}, {0, 3}});
  CHECK(involution_product_profile(x, y) == Partition({2, 2}));
  CHECK_THROWS_AS(involution_product_profile(Perm::identity(4), x), std::invalid_argument);
  CHECK_THROWS_AS(involution_product_profile(Perm::from_cycles(4, {{0, 1, 2, 3}}), x),
                  std::invalid_argument);
}

TEST_CASE("every product cycle length appears an even number of times") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> half(1, 20);
  for (int t = 0; t < 1000; ++t) {
    int n = 2 * half(rng);
    auto profile =
        involution_product_profile(random_fpf_involution(n, rng), random_fpf_involution(n, rng));
    for (int len : profile.entries()) CHECK(profile.count(len) % 2 == 0);
  }
}

TEST_CASE("Euler count of a three-point witness matches the genus") {
  for (const char* text : {"[2,3][2,3][5]", "[1,3][1,3][1,3]", "[3,3][3,3][1,5]"}) {
    auto data = parse_ramdata(text);
    auto res = realize(data);
    REQUIRE(res.is_witness());
    const auto& c = *res.witness;
    long long n = c.degree();
    long long v = n + c[0].cycle_count() + c[1].cycle_count();
    long long e = 2 * n;
    long long f = c[2].cycle_count();
    CHECK(v - e + f == 2 - 2 * genus(data).g);
  }
}

TEST_CASE("results are deterministic across repeats and thread counts") {
  auto data = parse_ramdata("[3,3][3,3][1,5]");
  SearchOptions seq;
  auto a = realize(data, seq);
  auto b = realize(data, seq);
  SearchOptions par;
  par.threads = 4;
  auto c = realize(data, par);
  REQUIRE(a.is_witness());
  CHECK(*a.witness == *b.witness);
  CHECK(*a.witness == *c.witness);
  CHECK(a.nodes == b.nodes);
  CHECK(a.nodes == c.nodes);

  auto u1 = realize(parse_ramdata("[1,3][2,2][2,2][2,2]"), seq);
  auto u4 = realize(parse_ramdata("[1,3][2,2][2,2][2,2]"), par);
  CHECK(u1.is_unsat());
  CHECK(u4.is_unsat());
  CHECK(u1.nodes == u4.nodes);
}

TEST_CASE("tiny budgets produce Unknown, never a false claim") {
  auto data = parse_ramdata("[1,3][2,2][2,2][2,2]");
  SearchOptions opts;
  opts.budget = 3;
  auto res = realize(data, opts);
  CHECK(res.is_unknown());
  CHECK(res.nodes == 3);

  SearchOptions bad;
  bad.budget = 0;
  CHECK_THROWS_AS(realize(data, bad), std::invalid_argument);
}

TEST_CASE("check_nonexistence aggregates per degree") {
  auto f = parse_family("[1,3|2*][2*][2*][2*]");
  auto reports = check_nonexistence(f, {4, 6});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].degree == 4);
  CHECK(reports[0].result.is_unsat());
  CHECK(reports[1].result.is_unsat());
}
