#include <doctest.h>

#include <numeric>
#include <random>

#include "hurwitz/search.hpp"
#include "hurwitz/stability.hpp"
#include "hurwitz/textio.hpp"

using namespace hurwitz;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("hamming basics") {
  auto id = Perm::identity(2);
  CHECK(hamming(id, id) == Rat(0));
  CHECK(hamming(Perm::from_cycles(2, {{0, 1}}), id) == Rat(1));

  auto p = Perm::canonical_of_type(Partition({1, 3, 2, 2}), 8);
  CHECK(hamming(compose(p, p), Perm::identity(8)) == Rat(3, 8));

  CHECK_THROWS_AS(hamming(Perm::identity(2), Perm::identity(3)), std::invalid_argument);
}

TEST_CASE("hamming is a right-invariant metric") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> deg(2, 50);
  for (int t = 0; t < 1000; ++t) {
    int n = deg(rng);
    auto p = random_perm(n, rng), q = random_perm(n, rng), s = random_perm(n, rng);
    CHECK((hamming(p, q) == Rat(0)) == (p == q));
    CHECK(hamming(p, q) == hamming(q, p));
    CHECK(hamming(p, q) <= hamming(p, s) + hamming(s, q));
    CHECK(hamming(compose(p, s), compose(q, s)) == hamming(p, q));
  }
}

TEST_CASE("word parsing and evaluation") {
  CHECK(eval_word(parse_word(""), {Perm::identity(4)}).is_identity());
  CHECK(format_word(parse_word("a1^2")) == "a1^2");
  CHECK(format_word(parse_word("a1 a2 a3 a4")) == "a1 a2 a3 a4");
  CHECK(parse_word("a2^-1").letters()[0].exponent == -1);
  CHECK_THROWS_AS(parse_word("b1"), std::invalid_argument);

  // The product relator evaluates to the identity on a constellation.
  auto res = realize(parse_ramdata("[1,2,2][1,2,2][1,2,2][1,2,2]"));
  REQUIRE(res.is_witness());
  auto w = parse_word("a1 a2 a3 a4");
  CHECK(eval_word(w, res.witness->perms()).is_identity());

  // a1^2 on a [1,3,2*]-type first coordinate moves exactly the 3-cycle.
  auto p = Perm::canonical_of_type(Partition({1, 3, 2, 2}), 8);
  auto sq = eval_word(parse_word("a1^2"), {p});
  CHECK(hamming(sq, Perm::identity(8)) == Rat(3, 8));

  CHECK_THROWS_AS(eval_word(parse_word("a5"), {p}), std::invalid_argument);
}

TEST_CASE("triangle relator sets") {
  auto rels = triangle_relators({2, 2, 2, 2});
  REQUIRE(rels.size() == 5);
  CHECK(format_word(rels[0]) == "a1^2");
  CHECK(format_word(rels[4]) == "a1 a2 a3 a4");
  CHECK(parse_relators("a1^2, a2^2, a3^2, a4^2, a1 a2 a3 a4").size() == 5);
}

TEST_CASE("delta solutions") {
  auto rels = triangle_relators({2, 2, 2, 2});

  // Exact solutions have all-zero defects; delta = 0 rejects even those.
  auto exact = realize(parse_ramdata("[2,2][2,2][2,2][2,2]"));
  REQUIRE(exact.is_witness());
  auto rep = is_delta_solution(rels, exact.witness->perms(), Rat(1, 1000));
  CHECK(rep.ok);
  for (const auto& d : rep.defects) CHECK(d == Rat(0));
  CHECK_FALSE(is_delta_solution(rels, exact.witness->perms(), Rat(0)).ok);

  // Entries of the irregular part that divide the base order contribute no
  // defect, so [1,2*]^4 members are exact solutions of the power relators.
  auto ones = realize(parse_ramdata("[1,2,2][1,2,2][1,2,2][1,2,2]"));
  REQUIRE(ones.is_witness());
  auto rep2 = is_delta_solution(rels, ones.witness->perms(), Rat(1, 5));
  CHECK(rep2.ok);
  for (const auto& d : rep2.defects) CHECK(d == Rat(0));
}

TEST_CASE("defects of a family member against the base relators") {
  // Member of [1^2,3^2,2*][2*][2*][2*] at degree 8: a1^2 moves the six points
  // of the two 3-cycles and nothing else.
  auto fam = parse_family("[1,1,3,3|2*][2*][2*][2*]");
  auto data = member(fam, 8);
  auto res = realize(data);
  REQUIRE(res.is_witness());
  auto rep = is_delta_solution(triangle_relators({2, 2, 2, 2}), res.witness->perms(), Rat(1));
  CHECK(rep.defects[0] == Rat(6, 8));
  for (int i = 1; i < 5; ++i) CHECK(rep.defects[i] == Rat(0));
}

TEST_CASE("quasi-local change rates") {
  // Constant change counts: ratios decay.
  auto v = quasi_local_rate({{10, 3}, {20, 3}, {40, 3}, {80, 3}});
  CHECK(v.max_ratio == Rat(3, 10));
  CHECK(v.decreasing_tail);

  // Linear change counts: ratio stuck at 1.
  auto w = quasi_local_rate({{10, 10}, {20, 20}, {40, 40}});
  CHECK(w.max_ratio == Rat(1));
  CHECK_FALSE(w.decreasing_tail);

  // Square-root growth: still decaying.
  std::vector<std::pair<long long, long long>> samples;
  for (long long n = 10; n <= 1000; n += 90)
    samples.push_back({n, static_cast<long long>(std::ceil(std::sqrt(double(n))))});
  CHECK(quasi_local_rate(samples).decreasing_tail);

  CHECK_THROWS_AS(quasi_local_rate({{10, 1}, {10, 1}}), std::invalid_argument);
}
