#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "stanleychar/maps.hpp"

using namespace stanleychar;

namespace {

const Permutation torus_s1 = Permutation::parse("(1,5,4,2)(3)", 5);
const Permutation torus_s2 = Permutation::parse("(2,3,5)(1,4)", 5);

}  // namespace

TEST_CASE("map of the five-cycle factorization lives on the torus") {
  const BipartiteMap m = build_map(torus_s1, torus_s2);
  CHECK(m.edges() == 5);
  CHECK(m.white.count() == 2);
  CHECK(m.black.count() == 2);
  CHECK(m.faces.count() == 1);
  CHECK(euler_characteristic(m) == 0);
  CHECK(genus_per_component(m) == std::vector<int>{1});
}

TEST_CASE("planar and degenerate maps") {
  for (int k = 1; k <= 6; ++k) {
    const Permutation cyc = Permutation::from_one_line(oracle::long_cycle(k));
    const BipartiteMap star = build_map(Permutation::identity(k), cyc);
    CHECK(star.white.count() == static_cast<std::size_t>(k));
    CHECK(star.black.count() == 1);
    CHECK(star.faces.count() == 1);
    CHECK(euler_characteristic(star) == 2);
    CHECK(genus_per_component(star) == std::vector<int>{0});
  }
  const BipartiteMap two = build_map(Permutation::identity(2), Permutation::identity(2));
  const auto parts = components(two);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].edges == std::vector<int>{1});
  CHECK(parts[1].edges == std::vector<int>{2});
  CHECK(genus_per_component(two) == std::vector<int>{0, 0});
  CHECK(euler_characteristic(two) == 4);
  CHECK_THROWS_AS(build_map(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("genus zero exactly for minimal factorizations of a long cycle") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& f : enumerate_factorizations(Permutation::from_one_line(oracle::long_cycle(k)))) {
      const BipartiteMap m = build_map(f.sigma1, f.sigma2);
      const auto g = genus_per_component(m);
      REQUIRE(g.size() == 1);
      CHECK((g[0] == 0) == (num_cycles(f.sigma1) + num_cycles(f.sigma2) == k + 1));
    }
}

TEST_CASE("embedding counts") {
  const BipartiteMap edge = build_map(Permutation::identity(1), Permutation::identity(1));
  CHECK(count_embeddings(edge, Partition({1})) == 1);
  CHECK(count_embeddings(edge, Partition({3, 1})) == 4);
  CHECK(count_embeddings(edge, Partition(std::vector<int>{})) == 0);

  const BipartiteMap m = build_map(torus_s1, torus_s2);
  const Partition lambda({3, 1});
  CHECK(count_embeddings(m, lambda) == oracle::brute_force_embeddings(torus_s1.one_line(), torus_s2.one_line(), {3, 1}));

  // Black (1,4) to row 2, (2,3,5) to row 1; white (1,5,4,2) to column 1, (3) to column 3.
  const Embedding e{{1, 3}, {2, 1}, {{2, 1}, {1, 1}, {1, 3}, {2, 1}, {1, 1}}};
  CHECK(is_embedding(m, lambda, e));
  Embedding outside = e;
  outside.white_columns = {2, 3};
  outside.edge_boxes = {{2, 2}, {1, 2}, {1, 3}, {2, 2}, {1, 2}};
  CHECK_FALSE(is_embedding(m, lambda, outside));
  Embedding inconsistent = e;
  inconsistent.edge_boxes[2] = {1, 2};
  CHECK_FALSE(is_embedding(m, lambda, inconsistent));

  const auto all = enumerate_embeddings(m, lambda);
  CHECK(std::find(all.begin(), all.end(), e) != all.end());
}

TEST_CASE("embedding counts agree with brute force") {
  const auto diagrams = partitions_up_to(6);
  for (int k = 1; k <= 4; ++k)
    for (const Partition& pi : partitions_of(k))
      for (const auto& f : enumerate_factorizations(permutation_from_partition(pi))) {
        const BipartiteMap m = build_map(f.sigma1, f.sigma2);
        for (const Partition& lambda : diagrams) {
          const Integer expected =
              oracle::brute_force_embeddings(f.sigma1.one_line(), f.sigma2.one_line(), lambda.parts());
          CHECK(count_embeddings(m, lambda) == expected);
          const auto all = enumerate_embeddings(m, lambda);
          CHECK(Integer(static_cast<long>(all.size())) == expected);
          for (const auto& e : all) CHECK(is_embedding(m, lambda, e));
        }
      }
}

TEST_CASE("signed embedding sums are characters") {
  CHECK(signed_embedding_sum(Partition({3}), Partition({2, 1})) == -3);
  CHECK(signed_embedding_sum(Partition({4}), Partition({2, 1})) == 0);
  for (const Partition& lambda : partitions_up_to(7)) {
    CHECK(signed_embedding_sum(Partition({1}), lambda) == lambda.size());
    for (int k = 2; k <= 4; ++k)
      for (const Partition& pi : partitions_of(k)) {
        const Integer value = signed_embedding_sum(pi, lambda, 2);
        CHECK(value == oracle::normalized_character(pi.parts(), lambda.parts()));
        CHECK(value == signed_embedding_sum(pi, lambda, 1));
      }
  }
}

TEST_CASE("graphviz output") {
  const std::string dot = to_dot(build_map(torus_s1, torus_s2));
  CHECK(dot.rfind("graph map {", 0) == 0);
  CHECK(dot.find("w1 -- b1 [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("w2 -- b2 [label=\"3\"]") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
  CHECK(edges == 5);
}
