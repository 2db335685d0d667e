#include <doctest.h>

#include <random>

#include "ekrlab/sets.hpp"
#include "oracle.hpp"

using namespace ekrlab;

TEST_SUITE("sets") {

TEST_CASE("RSet validates its elements") {
  const RSet a(6, {1, 3, 5});
  CHECK(a.r() == 3);
  CHECK(a.at(1) == 1);
  CHECK(a.at(3) == 5);
  CHECK(a.back() == 5);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(4));
  CHECK(to_string(a) == "{1,3,5}");

  CHECK_THROWS_AS(RSet(6, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RSet(6, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RSet(6, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RSet(6, {2, 7}), std::invalid_argument);
}

TEST_CASE("compression order") {
  CHECK(leq_compression(std::vector{1, 2, 3}, std::vector{1, 2, 3}));
  CHECK(leq_compression(std::vector{1, 3, 5}, std::vector{2, 4, 6}));
  CHECK_FALSE(leq_compression(std::vector{2, 3, 4}, std::vector{1, 5, 6}));
  CHECK_THROWS(leq_compression(std::vector{1, 2}, std::vector{1, 2, 3}));
}

TEST_CASE("generalized order compares the first |C| positions") {
  CHECK(prec(std::vector{1, 2, 3}, std::vector{1, 2}));
  CHECK_FALSE(prec(std::vector{1, 2}, std::vector{1, 2, 3}));
  CHECK(prec(std::vector{2, 3, 9, 10, 11}, std::vector{2, 3}));
  CHECK_FALSE(prec(std::vector{2, 4, 9}, std::vector{2, 3}));
}

TEST_CASE("compression order is a partial order on C([6],3)") {
  const auto all = enumerate_rsets(6, 3);
  for (const auto& a : all) {
    CHECK(leq_compression(a, a));
    for (const auto& b : all) {
      if (leq_compression(a, b) && leq_compression(b, a)) CHECK(a == b);
      for (const auto& c : all)
        if (leq_compression(a, b) && leq_compression(b, c)) CHECK(leq_compression(a, c));
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, -1) == 0);
  CHECK(binomial(4 - 5, 4 - 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
  for (int m = 1; m <= 60; ++m)
    for (int k = 1; k <= m; ++k) CHECK(binomial(m, k) == binomial(m - 1, k - 1) + binomial(m - 1, k));
  for (int m = 0; m <= 30; ++m)
    for (int k = 0; k <= m; ++k) CHECK(binomial(m, k) == oracle::choose(m, k));
}

TEST_CASE("r-set enumeration") {
  const auto small = enumerate_rsets(3, 2);
  REQUIRE(small.size() == 3);
  CHECK(to_string(small[0]) == "{1,2}");
  CHECK(to_string(small[1]) == "{1,3}");
  CHECK(to_string(small[2]) == "{2,3}");
  CHECK(enumerate_rsets(4, 4).size() == 1);
  CHECK(enumerate_rsets(3, 4).empty());

  for (int n = 1; n <= 9; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto sets = enumerate_rsets(n, r);
      CHECK(sets.size() == oracle::choose(n, r));
      CHECK(std::is_sorted(sets.begin(), sets.end()));
      CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
    }
}

}  // TEST_SUITE
