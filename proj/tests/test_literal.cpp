#include <doctest.h>

#include <random>

#include "ekrlab/literal.hpp"

using namespace ekrlab;

TEST_SUITE("literal") {

TEST_CASE("sets") {
  CHECK(parse_set("{4,7}") == std::vector{4, 7});
  CHECK(parse_set(" { 2 , 4,9 } ") == std::vector{2, 4, 9});
  CHECK(parse_set("{}").empty());
  CHECK_THROWS_AS(parse_set("{4,4}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("{7,4}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("{0,1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("{1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("{1,2}x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("1,2"), std::invalid_argument);
}

TEST_CASE("families") {
  const auto f = parse_family("n=11 r=5 gens=[{2,3,4};{3,4,6,7}]");
  CHECK(f.n() == 11);
  CHECK(f.r() == 5);
  CHECK(format_family(f) == "n=11 r=5 gens=[{2,3,4,10,11};{3,4,6,7,11}]");
  CHECK_THROWS(parse_family("n=11 r=5 gens=[]"));
  CHECK_THROWS(parse_family("r=5 n=11 gens=[{2,3}]"));
  CHECK_THROWS(parse_family("n=11 r=5 gens=[{2,11}]"));
}

TEST_CASE("format and parse round-trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 20)(rng);
    const int r = std::uniform_int_distribution<int>(1, n / 2 + 1)(rng);
    std::vector<RSet> gens;
    const auto all = enumerate_rsets(std::min(n, 12), r);
    if (all.empty()) continue;
    for (int k = 0; k < 3; ++k) {
      const auto& g = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      gens.emplace_back(n, std::vector<int>(g.elems().begin(), g.elems().end()));
    }
    const GeneratorFamily f(n, r, gens);
    const auto text = format_family(f);
    CHECK(parse_family(text) == f);
    CHECK(format_family(parse_family(text)) == text);
  }
}

}  // TEST_SUITE
