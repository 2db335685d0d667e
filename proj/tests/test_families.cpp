#include <doctest.h>

#include <random>
#include <set>

#include "ekrlab/families.hpp"
#include "ekrlab/literal.hpp"
#include "oracle.hpp"

using namespace ekrlab;

namespace {

std::vector<oracle::Mask> masks(const GeneratorFamily& f) {
  std::vector<oracle::Mask> out;
  for_each_member(f, [&](std::span<const int> b) { out.push_back(oracle::mask_of({b.begin(), b.end()})); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> random_raw(std::mt19937& rng, int n, int r, int count) {
  std::vector<std::vector<int>> raw;
  std::uniform_int_distribution<int> len(1, r);
  for (int i = 0; i < count; ++i) {
    const int k = len(rng);
    // keep room for the padding above the generator
    raw.push_back(oracle::random_rset(rng, n - (r - k), k));
  }
  return raw;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("normalize_generator pads with the top of [n]") {
  CHECK(to_string(*normalize_generator(std::vector{2, 3}, 11, 5)) == "{2,3,9,10,11}");
  CHECK(to_string(*normalize_generator(std::vector{2, 3, 4}, 11, 5)) == "{2,3,4,10,11}");
  CHECK_FALSE(normalize_generator(std::vector{1, 2, 3, 4}, 6, 3).has_value());
  CHECK_THROWS_AS(normalize_generator(std::vector{2, 10}, 11, 5), std::invalid_argument);
  CHECK_THROWS_AS(normalize_generator(std::vector{3, 2}, 11, 5), std::invalid_argument);
}

TEST_CASE("normalized generator has the same down-set as the raw one") {
  for (int n = 4; n <= 9; ++n)
    for (int r = 1; r <= std::min(n, 4); ++r)
      for (int k = 1; k <= r; ++k)
        for (const auto& g : enumerate_rsets(n - (r - k), k)) {
          const auto norm = normalize_generator(g.elems(), n, r);
          REQUIRE(norm.has_value());
          const std::vector<int> raw(g.elems().begin(), g.elems().end());
          for (const auto& a : enumerate_rsets(n, r)) CHECK(prec(a, raw) == leq_compression(a, *norm));
        }
}

TEST_CASE("meet") {
  const RSet g(11, {2, 3, 4, 10, 11}), h(11, {3, 4, 6, 7, 11});
  CHECK(to_string(meet(g, h)) == "{2,3,4,7,11}");
  CHECK(meet(g, g) == g);
  CHECK(to_string(meet(RSet(4, {1, 2, 3}), RSet(4, {2, 3, 4}))) == "{1,2,3}");
  CHECK_THROWS(meet(RSet(11, {1, 2}), RSet(11, {1, 2, 3})));

  // F(meet) = F(G) ∩ F(H)
  const auto fg = oracle::family(11, 5, {{2, 3, 4, 10, 11}});
  const auto fh = oracle::family(11, 5, {{3, 4, 6, 7, 11}});
  std::vector<oracle::Mask> both;
  std::set_intersection(fg.begin(), fg.end(), fh.begin(), fh.end(), std::back_inserter(both));
  std::sort(both.begin(), both.end());
  CHECK(masks(GeneratorFamily(11, 5, {meet(g, h)})) == both);
}

TEST_CASE("reduce_antichain") {
  auto to_str = [](const std::vector<RSet>& v) { return format_generators(v); };
  CHECK(to_str(reduce_antichain({RSet(4, {1, 2}), RSet(4, {2, 3})})) == "[{2,3}]");
  CHECK(to_str(reduce_antichain({RSet(4, {2, 3}), RSet(4, {2, 3})})) == "[{2,3}]");
  CHECK(to_str(reduce_antichain({RSet(4, {2, 3}), RSet(4, {1, 4})})) == "[{1,4};{2,3}]");
  CHECK_THROWS(reduce_antichain({}));
  CHECK_THROWS(reduce_antichain({RSet(4, {1, 2}), RSet(5, {1, 2})}));
}

TEST_CASE("membership and enumeration") {
  const auto f = GeneratorFamily::from_raw(11, 5, {{2, 3, 4}});
  CHECK(member(f, RSet(11, {1, 2, 3, 4, 5})));
  const auto g = GeneratorFamily::from_raw(4, 2, {{2, 3}});
  CHECK_FALSE(member(g, RSet(4, {2, 4})));
  CHECK(format_generators(enumerate_members(g)) == "[{1,2};{1,3};{2,3}]");
  CHECK(format_generators(enumerate_members(GeneratorFamily::from_raw(4, 2, {{1, 4}}))) == "[{1,2};{1,3};{1,4}]");

  const auto star = GeneratorFamily::star(9, 4);
  for (const auto& b : enumerate_rsets(9, 4)) CHECK(member(star, b) == (b.at(1) == 1));
}

TEST_CASE("size") {
  CHECK(size(GeneratorFamily::from_raw(4, 2, {{2, 3}})) == 3);
  CHECK(size(GeneratorFamily::from_raw(9, 4, {{6, 7, 8, 9}})) == binomial(9, 4));
  CHECK(size(GeneratorFamily::from_raw(30, 10, {{21, 22, 23, 24, 25, 26, 27, 28, 29, 30}})) == binomial(30, 10));
  CHECK(size(GeneratorFamily::star(20, 6)) == binomial(19, 5));
}

TEST_CASE("random families agree with the oracle") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    const int r = std::uniform_int_distribution<int>(1, std::min(n, 5))(rng);
    const int count = std::uniform_int_distribution<int>(1, 4)(rng);
    const auto raw = random_raw(rng, n, r, count);
    const auto f = GeneratorFamily::from_raw(n, r, raw);
    const auto expected = oracle::family(n, r, raw);
    CAPTURE(format_family(f));
    CHECK(masks(f) == expected);
    CHECK(size(f) == expected.size());
    for (const auto& b : enumerate_rsets(n, r))
      CHECK(member(f, b) == std::binary_search(expected.begin(), expected.end(),
                                               oracle::mask_of({b.elems().begin(), b.elems().end()})));
    // generators form an antichain
    for (const auto& g : f.generators())
      for (const auto& h : f.generators())
        if (!(g == h)) CHECK_FALSE(leq_compression(g, h));
  }
}

TEST_CASE("enumeration order is lexicographic") {
  const auto f = GeneratorFamily::from_raw(11, 5, {{2, 3, 4}, {3, 4, 6, 7}});
  const auto members = enumerate_members(f);
  CHECK(std::is_sorted(members.begin(), members.end()));
  CHECK(members.size() == size(f));
}

TEST_CASE("for_each_meet visits every nonempty subset") {
  const std::vector<RSet> gens{RSet(9, {1, 5, 9}), RSet(9, {2, 3, 9}), RSet(9, {2, 4, 6})};
  int visits = 0, odd = 0;
  for_each_meet(gens, [&](const RSet& m, int k) {
    ++visits;
    odd += k % 2;
    CHECK(m.r() == 3);
  });
  CHECK(visits == 7);
  CHECK(odd == 4);
}

TEST_CASE("from_raw drops generators longer than r") {
  const auto f = GeneratorFamily::from_raw(6, 2, {{1, 2, 3}, {2, 3}});
  CHECK(f.generators().size() == 1);
  CHECK_THROWS(GeneratorFamily::from_raw(6, 2, {{1, 2, 3}}));
}

}  // TEST_SUITE
