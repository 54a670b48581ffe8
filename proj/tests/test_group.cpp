#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zslab/group.hpp"

using namespace zslab;

TEST_CASE("canonicalization to invariant factors") {
  CHECK(Group({2, 3}).factors() == std::vector<long long>{6});
  CHECK(Group({2, 3}).exponent() == 6);
  CHECK(Group({2, 3}).rank() == 1);

  Group g({6, 2});
  CHECK(g.factors() == std::vector<long long>{2, 6});
  CHECK(g.rank() == 2);
  CHECK(g.cn_multiplicity() == 1);
  CHECK(g.dstar() == 8);

  Group e3({3, 3, 3, 3, 3});
  CHECK(e3.factors() == std::vector<long long>{3, 3, 3, 3, 3});
  CHECK(e3.exponent() == 3);
  CHECK(e3.rank() == 5);
  CHECK(e3.dstar() == 11);

  CHECK(Group({4, 6}).factors() == std::vector<long long>{2, 12});
  CHECK_THROWS_AS(Group({1}), std::invalid_argument);
  CHECK_THROWS_AS(Group({0, 4}), std::invalid_argument);
  CHECK(Group({}).order() == 1);
  CHECK(Group({}).rank() == 0);
}

TEST_CASE("group stats") {
  Group g({2, 2, 2, 2, 6});
  CHECK(g.order() == 96);
  CHECK(g.exponent() == 6);
  CHECK(g.rank() == 5);
  CHECK(g.cn_multiplicity() == 1);
  CHECK(g.dstar() == 10);

  Group c4({4});
  CHECK(c4.order() == 4);
  CHECK(c4.exponent() == 4);
  CHECK(c4.rank() == 1);
  CHECK(c4.cn_multiplicity() == 1);
  CHECK(c4.dstar() == 4);

  Group c33({3, 3});
  CHECK(c33.order() == 9);
  CHECK(c33.exponent() == 3);
  CHECK(c33.rank() == 2);
  CHECK(c33.cn_multiplicity() == 2);
  CHECK(c33.dstar() == 5);
}

TEST_CASE("literal parse and print") {
  CHECK(Group::parse("C2^4xC6").factors() == std::vector<long long>{2, 2, 2, 2, 6});
  CHECK(Group::parse("c2^4XC6").literal() == "C2^4xC6");
  CHECK(Group::parse("C6xC2").literal() == "C2xC6");
  CHECK(Group::parse("C4").literal() == "C4");
  CHECK(Group::parse("C1").order() == 1);
  CHECK(Group({2, 3}).literal() == "C6");
  CHECK_THROWS_AS(Group::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Group::parse("D4"), std::invalid_argument);
  CHECK_THROWS_AS(Group::parse("C2^"), std::invalid_argument);
  CHECK_THROWS_AS(Group::parse("C2x"), std::invalid_argument);
  CHECK_THROWS_AS(Group::parse("C1xC2"), std::invalid_argument);
}

TEST_CASE("element arithmetic and order") {
  Group c6({6});
  CHECK(c6.element_order(c6.index({2})) == 3);
  Group c24({2, 4});
  CHECK(c24.element_order(c24.index({1, 2})) == 2);
  CHECK(c24.element_order(0) == 1);
  CHECK(c24.add(c24.index({1, 3}), c24.index({1, 2})) == c24.index({0, 1}));
  CHECK(c24.negate(c24.index({1, 3})) == c24.index({1, 1}));

  // coordinates reduce modulo the factors
  CHECK(c24.index({3, 7}) == c24.index({1, 3}));
  CHECK(c24.index({-1, -1}) == c24.index({1, 3}));
}

TEST_CASE("element literals") {
  Group g({2, 2, 2, 2, 6});
  Coords c = g.parse_element("1,0,1,0,3");
  CHECK(Group::format_element(c) == "1,0,1,0,3");
  CHECK(g.parse_element("[1,0,1,0,3]") == c);
  CHECK_THROWS_AS(g.parse_element("1,0"), std::invalid_argument);
}

TEST_CASE("span closure") {
  Group c6({6});
  CHECK(c6.span({c6.index({2})}) == std::vector<int>{0, 2, 4});

  Group c222({2, 2, 2});
  auto s = c222.span({c222.index({1, 0, 0}), c222.index({0, 1, 0})});
  CHECK(s.size() == 4);

  CHECK(c6.span({}) == std::vector<int>{0});
}

TEST_CASE("group properties on the small-group sweep") {
  std::mt19937_64 rng(7);
  for (const Group& g : test::all_abelian_groups_up_to(16)) {
    if (g.order() < 2) continue;
    int n = g.size();
    for (int trial = 0; trial < 20; ++trial) {
      int a = static_cast<int>(rng() % n);
      CHECK(g.exponent() % g.element_order(a) == 0);
      CHECK(g.element_order(g.negate(a)) == g.element_order(a));
      CHECK(g.add(a, g.negate(a)) == 0);
    }
    // span is idempotent and Lagrange holds
    std::vector<int> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(static_cast<int>(rng() % n));
    auto s1 = g.span(gens);
    auto s2 = g.span(s1);
    CHECK(s1 == s2);
    CHECK(g.order() % s1.size() == 0);
  }
}

TEST_CASE("canonical form is presentation invariant") {
  std::mt19937_64 rng(11);
  std::vector<long long> raw{2, 4, 3, 9, 2};
  Group base(raw);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(raw.begin(), raw.end(), rng);
    CHECK(Group(raw) == base);
  }
  // C2 x C3 x C4 x C9 x C2 == C2 x C6 x C36
  CHECK(base.factors() == std::vector<long long>{2, 6, 36});
}

TEST_CASE("dstar sits between exponent and order") {
  for (const Group& g : test::all_abelian_groups_up_to(24)) {
    if (g.order() < 2) continue;
    CHECK(g.dstar() >= g.exponent());
    CHECK(g.dstar() <= g.order());
  }
}
