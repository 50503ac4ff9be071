#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stanleychar/shapes.hpp"

using namespace stanleychar;

TEST_CASE("partition construction and parsing") {
  CHECK(Partition::parse("2,1") == Partition({2, 1}));
  CHECK(Partition::parse("(3,1,1)") == Partition({3, 1, 1}));
  CHECK(Partition::parse("()").empty());
  CHECK(Partition::parse("5").to_string() == "(5)");
  CHECK(Partition({4, 2, 2}).size() == 8);
  CHECK(Partition({4, 2, 2}).row(3) == 2);
  CHECK(Partition({4, 2, 2}).row(4) == 0);
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
  for (int n = 0; n <= 12; ++n) {
    const auto parts = partitions_of(n);
    CHECK(static_cast<long>(parts.size()) == oracle::partition_count(n));
    for (const auto& p : parts) CHECK(p.size() == n);
  }
  long total = 0;
  for (int n = 0; n <= 7; ++n) total += oracle::partition_count(n);
  CHECK(static_cast<long>(partitions_up_to(7).size()) == total);
}

TEST_CASE("multirectangular coordinates") {
  CHECK(to_diagram({{2, 3, 2}, {11, 8, 5}}) == Partition({11, 11, 8, 8, 8, 5, 5}));
  CHECK(to_diagram({{4}, {5}}) == Partition({5, 5, 5, 5}));
  CHECK(to_diagram({{0, 2}, {3, 1}}) == Partition({1, 1}));
  CHECK(to_diagram({{1, 1}, {2, 2}}) == Partition({2, 2}));
  CHECK(to_diagram({{0, 0}, {0, 0}}).empty());
  CHECK_THROWS_AS(to_diagram({{1, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(to_diagram({{1}, {-1}}), std::invalid_argument);

  CHECK(to_multirect(Partition({11, 11, 8, 8, 8, 5, 5})) == MultirectangularShape{{2, 3, 2}, {11, 8, 5}});
  CHECK(to_multirect(Partition({3, 1})) == MultirectangularShape{{1, 1}, {3, 1}});
  CHECK(to_multirect(Partition(std::vector<int>{})).rectangles() == 0);

  CHECK(MultirectangularShape{{1, 2}, {3, 3}}.is_diagram());
  CHECK_FALSE(MultirectangularShape{{1, 2}, {2, 3}}.is_diagram());
  CHECK_FALSE(MultirectangularShape{{1}, {2, 3}}.well_formed());

  for (const auto& lambda : partitions_up_to(9)) CHECK(to_diagram(to_multirect(lambda)) == lambda);
}

TEST_CASE("dilation and transposition") {
  CHECK(dilate(Partition({3, 1}), 2) == Partition({6, 6, 2, 2}));
  CHECK(dilate(Partition({2}), 3) == Partition({6, 6, 6}));
  CHECK(dilate(Partition({4, 1}), 1) == Partition({4, 1}));
  CHECK_THROWS_AS(dilate(Partition({1}), 0), std::invalid_argument);

  CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(transpose(Partition({4})) == Partition({1, 1, 1, 1}));

  std::mt19937 rng(7);
  const auto pool = partitions_up_to(12);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition& lambda = pool[pick(rng)];
    CHECK(transpose(transpose(lambda)) == lambda);
    CHECK(transpose(lambda).size() == lambda.size());
    CHECK(dilate(transpose(lambda), 2) == transpose(dilate(lambda, 2)));
  }
}
