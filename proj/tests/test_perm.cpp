#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "stanleychar/perm.hpp"

using namespace stanleychar;

namespace {

Permutation from_oracle(const oracle::Perm& p) { return Permutation::from_one_line(p); }

}  // namespace

TEST_CASE("parse and print cycle notation") {
  const Permutation s = Permutation::parse("(1,5,4,2)(3)", 5);
  CHECK(s.one_line() == std::vector<int>{5, 1, 3, 2, 4});
  CHECK(s.to_string() == "(1,5,4,2)(3)");
  CHECK(Permutation::parse("(2,3)", 4).to_string() == "(1)(2,3)(4)");
  CHECK(Permutation::parse("", 3).is_identity());
  CHECK_THROWS_AS(Permutation::parse("(1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1,4)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1,2)(2,3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), std::invalid_argument);
}

TEST_CASE("composition acts right to left") {
  const Permutation s1 = Permutation::parse("(1,5,4,2)(3)", 5);
  const Permutation s2 = Permutation::parse("(2,3,5)(1,4)", 5);
  CHECK(compose(s1, s2) == Permutation::parse("(1,2,3,4,5)", 5));
  CHECK(compose(Permutation::identity(5), s1) == s1);
  const Permutation t = Permutation::parse("(1,2)", 2);
  CHECK(compose(t, t) == Permutation::identity(2));
  CHECK_THROWS_AS(compose(s1, Permutation::identity(4)), std::invalid_argument);

  for (const auto& a : oracle::all_perms(4))
    for (const auto& b : oracle::all_perms(4))
      CHECK(compose(from_oracle(a), from_oracle(b)) == from_oracle(oracle::compose(a, b)));
}

TEST_CASE("cycles, cycle type and sign") {
  const Permutation id4 = Permutation::identity(4);
  CHECK(num_cycles(id4) == 4);
  CHECK(cycle_type(id4) == Partition({1, 1, 1, 1}));
  CHECK(num_cycles(Permutation::parse("(1,2,3,4,5)", 5)) == 1);

  const Permutation s1 = Permutation::parse("(1,5,4,2)(3)", 5);
  const CycleDecomposition d = cycle_decomposition(s1);
  CHECK(d.cycles == std::vector<std::vector<int>>{{1, 5, 4, 2}, {3}});
  CHECK(d.cycle_type() == Partition({4, 1}));
  CHECK(d.cycle_of(4) == 0);
  CHECK(d.cycle_of(3) == 1);
  CHECK(sign(s1) == oracle::sign(s1.one_line()));
  CHECK(sign(Permutation::parse("(2,4)", 4)) == -1);
  CHECK(sign(id4) == 1);

  for (int k = 0; k <= 6; ++k)
    for (const auto& a : oracle::all_perms(k)) {
      const Permutation p = from_oracle(a);
      CHECK(num_cycles(p) == oracle::cycles(a));
      CHECK(sign(p) == oracle::sign(a));
      CHECK(compose(p, inverse(p)).is_identity());
      CHECK(cycle_type(p).size() == k);
    }
}

TEST_CASE("realizing a partition as a permutation") {
  CHECK(permutation_from_padded_partition(Partition({2}), 4) == Permutation::parse("(1,2)(3)(4)", 4));
  CHECK(permutation_from_padded_partition(Partition(std::vector<int>{}), 3).is_identity());
  CHECK(cycle_type(permutation_from_padded_partition(Partition({3, 2}), 6)) == Partition({3, 2, 1}));
  CHECK_THROWS_AS(permutation_from_padded_partition(Partition({3, 2}), 4), std::invalid_argument);
}

TEST_CASE("factorization stream") {
  SUBCASE("degree one") {
    const auto f = enumerate_factorizations(Permutation::identity(1));
    REQUIRE(f.size() == 1);
    CHECK(f[0].sigma1.is_identity());
    CHECK(f[0].sigma2.is_identity());
  }
  SUBCASE("three-cycle") {
    const Permutation pi = Permutation::parse("(1,2,3)", 3);
    const auto f = enumerate_factorizations(pi);
    CHECK(f.size() == 6);
    CHECK(std::any_of(f.begin(), f.end(), [&](const Factorization& x) { return x.sigma1.is_identity() && x.sigma2 == pi; }));

    int minimal = 0, expected = 0;
    for (const auto& x : f)
      if (num_cycles(x.sigma1) + num_cycles(x.sigma2) == 4) ++minimal;
    const oracle::Perm cyc = oracle::long_cycle(3);
    for (const auto& a : oracle::all_perms(3))
      if (oracle::cycles(a) + oracle::cycles(oracle::compose(oracle::inverse(a), cyc)) == 4) ++expected;
    CHECK(minimal == expected);
    CHECK(minimal == 5);
  }
  SUBCASE("every sigma1 once, lexicographic, product correct") {
    for (int k = 1; k <= 6; ++k) {
      const Permutation pi = Permutation::from_one_line(oracle::long_cycle(k));
      const auto f = enumerate_factorizations(pi);
      REQUIRE(f.size() == static_cast<std::size_t>(oracle::factorial(k)));
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(compose(f[i].sigma1, f[i].sigma2) == pi);
        if (i > 0) CHECK(f[i - 1].sigma1 < f[i].sigma1);
      }
    }
  }
  SUBCASE("parallel fold is independent of the thread count") {
    const Permutation pi = Permutation::parse("(1,2,3)(4,5)(6)", 6);
    auto run = [&](unsigned threads) {
      return reduce_factorizations(
          pi, threads, std::vector<Permutation>{},
          [](std::vector<Permutation>& acc, const Permutation& s1, const Permutation&) { acc.push_back(s1); },
          [](std::vector<Permutation> a, const std::vector<Permutation>& b) {
            a.insert(a.end(), b.begin(), b.end());
            return a;
          });
    };
    const auto serial = run(1);
    CHECK(serial.size() == 720);
    CHECK(std::set<Permutation>(serial.begin(), serial.end()).size() == 720);
    CHECK(run(4) == serial);
    CHECK(run(13) == serial);
  }
}
