#include <doctest.h>

#include <algorithm>

#include "hurwitz/family.hpp"
#include "hurwitz/ramdata.hpp"
#include "hurwitz/textio.hpp"

using namespace hurwitz;

TEST_CASE("genus of basic data") {
  CHECK(genus(parse_ramdata("[2][2]")).g == 0);
  CHECK(genus(parse_ramdata("[3][3][3]")).g == 1);
  CHECK(genus(parse_ramdata("[1,3][2,2][2,2][2,2]")).g == 1);

  auto rejected = genus(parse_ramdata("[1,1,2][2,2]"));  // 1 - 4 + 3/2 = -3/2
  CHECK_FALSE(rejected.ok);
  CHECK(rejected.raw == Rat(-3, 2));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(RamData({Partition({2}), Partition({3})}), std::invalid_argument);
  CHECK_THROWS_AS(RamData({Partition({2, 2}), Partition({1, 1, 1, 1})}), std::invalid_argument);
  CHECK_THROWS_AS(RamData({Partition({2})}), std::invalid_argument);
}

TEST_CASE("family genus closed form") {
  auto type_a = parse_family("[1,3|2*][2*][2*][2*]");
  CHECK(family_genus(type_a).g == 1);
  CHECK(type_a.error() == 4);

  CHECK(family_genus(parse_family("[3*][3*][3*]")).g == 1);
  CHECK(family_genus(parse_family("[1|2*][1|2*][1|2*][1|2*]")).g == 0);

  FamilySpec hyper({2, 3, 7}, std::vector<Partition>(3));
  CHECK_THROWS_AS(family_genus(hyper), std::domain_error);
}

TEST_CASE("members of a family") {
  auto type_a = parse_family("[1,3|2*][2*][2*][2*]");
  CHECK(member(type_a, 6) == parse_ramdata("[1,3,2][2,2,2][2,2,2][2,2,2]"));
  CHECK_THROWS_AS(member(type_a, 5), InvalidDegree);

  auto entry15 = parse_family("[2*][1,5|3*][6*]");
  CHECK(member(entry15, 6) == parse_ramdata("[2,2,2][1,5][6]"));
}

TEST_CASE("valid degree progressions") {
  auto type_a = parse_family("[1,3|2*][2*][2*][2*]");
  auto prog = valid_degrees(type_a);
  CHECK_FALSE(prog.empty);
  CHECK(prog.start == 4);
  CHECK(prog.step == 2);

  auto regular333 = parse_family("[3*][3*][3*]");
  auto prog333 = valid_degrees(regular333);
  CHECK(prog333.start == 3);
  CHECK(prog333.step == 3);

  // Slot 1 forces odd degrees, slots 2 and 3 force multiples of 6.
  auto inconsistent = parse_family("[1|2*][3*][6*]");
  CHECK(valid_degrees(inconsistent).empty);
}

TEST_CASE("valid_degrees matches direct member construction") {
  for (const char* text : {"[1,3|2*][2*][2*][2*]", "[2*][1,5|3*][6*]", "[1|2*][1|2*][1|2*][5|2*]",
                           "[1,1,4|2*][3*][6*]", "[3*][1,2|3*][6|3*]"}) {
    auto f = parse_family(text);
    auto prog = valid_degrees(f);
    for (long long n = 1; n <= 120; ++n) {
      bool definable = true;
      for (int j = 0; j < f.slots() && definable; ++j) {
        long long s = f.irregular()[j].sum();
        long long k = f.base()[j];
        if (n < s || (n - s) % k != 0) definable = false;
        // Trivial slots are rejected by member as well.
        if (definable && (n - s) / k == 0 && !f.irregular()[j].nontrivial()) definable = false;
      }
      CHECK(definable == prog.contains(n));
      if (definable) CHECK(member(f, n).degree() == n);
    }
  }
}

TEST_CASE("enumeration counts match the published tables") {
  CHECK(enumerate_families({3, 3, 3}, 1, 10).size() == 11);
  CHECK(enumerate_families({2, 2, 2, 2}, 1, 10).size() == 23);
  CHECK(enumerate_families({2, 4, 4}, 0, 6).size() == 7);
  CHECK(enumerate_families({2, 3, 6}, 1, 0).size() == 1);
}

TEST_CASE("family genus agrees with the Riemann-Hurwitz value on members") {
  for (auto base : std::vector<std::vector<int>>{{3, 3, 3}, {2, 3, 6}, {2, 4, 4}, {2, 2, 2, 2}}) {
    for (int target : {0, 1}) {
      for (const auto& f : enumerate_families(base, target, 8)) {
        auto prog = valid_degrees(f);
        REQUIRE_FALSE(prog.empty);
        for (int i = 0; i < 10; ++i) {
          auto g = genus(member(f, prog.nth(i)));
          CHECK(g.ok);
          CHECK(g.g == target);
        }
      }
    }
  }
}

TEST_CASE("enumeration is invariant under permuting equal base entries") {
  auto a = enumerate_families({2, 4, 4}, 0, 6);
  auto b = enumerate_families({4, 2, 4}, 0, 6);
  REQUIRE(a.size() == b.size());
  // Compare slot multisets (base entry, irregular part).
  auto key = [](const FamilySpec& f) {
    std::vector<std::pair<int, std::vector<int>>> slots;
    for (int j = 0; j < f.slots(); ++j)
      slots.emplace_back(f.base()[j], f.irregular()[j].entries());
    std::sort(slots.begin(), slots.end());
    return slots;
  };
  std::vector<decltype(key(a[0]))> ka, kb;
  for (const auto& f : a) ka.push_back(key(f));
  for (const auto& f : b) kb.push_back(key(f));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  CHECK(ka == kb);
}

TEST_CASE("no Euclidean genus-0 family is regular") {
  for (auto base : std::vector<std::vector<int>>{{3, 3, 3}, {2, 3, 6}, {2, 4, 4}, {2, 2, 2, 2}})
    for (const auto& f : enumerate_families(base, 0, 10)) CHECK(f.error() > 0);
}

TEST_CASE("members recover their family by stripping regular entries") {
  for (auto base : std::vector<std::vector<int>>{{3, 3, 3}, {2, 2, 2, 2}}) {
    for (const auto& f : enumerate_families(base, 1, 9)) {
      auto prog = valid_degrees(f);
      // Large enough that regular entries outnumber the irregular ones in
      // every slot, so the majority classifier sees the base.
      long long n = prog.start;
      while (true) {
        bool dominated = true;
        for (int j = 0; j < f.slots(); ++j)
          if ((n - f.irregular()[j].sum()) / f.base()[j] <= f.irregular()[j].size())
            dominated = false;
        if (dominated) break;
        n += prog.step;
      }
      auto cls = classify_almost_regular(member(f, n));
      CHECK(cls.base == f.base());
      CHECK(cls.irregular == f.irregular());
      CHECK(cls.error == f.error());
    }
  }
}

TEST_CASE("classifier breaks ties toward the larger entry") {
  auto cls = classify_almost_regular(parse_ramdata("[2,2,3,3][2,2,3,3][1,1,4,4]"));
  CHECK(cls.base == std::vector<int>{3, 3, 4});
}
