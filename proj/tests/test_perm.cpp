#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihedrant/perm.hpp"

#include "oracles.hpp"

using namespace dihedrant;

TEST_CASE("identity composition")
{
  Perm p = Perm::from_cycles(5, {{0, 2, 4}});
  CHECK(compose(Perm(5), p) == p);
  CHECK(compose(p, Perm(5)) == p);
}

TEST_CASE("direct composition on 3 points")
{
  Perm c = Perm::from_cycles(3, {{0, 1, 2}});
  CHECK(compose(c, c) == Perm::from_cycles(3, {{0, 2, 1}}));
}

TEST_CASE("composition applies the left factor first")
{
  Perm p = Perm({1, 0, 2});   // (0 1)
  Perm q = Perm({0, 2, 1});   // (1 2)
  CHECK(compose(p, q)[0] == 2);  // 0 -> 1 -> 2
  CHECK(compose(q, p)[0] == 1);
}

TEST_CASE("inverse")
{
  Perm p = Perm::from_cycles(6, {{0, 3}, {1, 4, 5}});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
}

TEST_CASE("bijection validation")
{
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("orbit basics")
{
  CHECK(orbit_of({Perm(5)}, 3) == std::vector<int>{3});
  CHECK(orbit_of({Perm::from_cycles(4, {{0, 1}, {2, 3}})}, 0) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(orbit_of({Perm(4)}, 7), std::invalid_argument);
}

TEST_CASE("orbit of the regular dihedral representation is everything")
{
  // R(D_12) acting on the 12 group elements
  auto gens = std::vector<Perm>{
    Perm::from_cycles(12, {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}}),
    Perm::from_cycles(12, {{0, 6}, {1, 11}, {2, 10}, {3, 9}, {4, 8}, {5, 7}})};
  CHECK(orbit_of(gens, 0).size() == 12);
}

TEST_CASE("cycle string")
{
  CHECK(Perm(4).to_cycle_string() == "()");
  CHECK(Perm::from_cycles(4, {{0, 1, 2}}).to_cycle_string() == "(0 1 2)");
}

TEST_CASE("conjugation convention")
{
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    Perm a = oracle::random_perm(6, rng);
    Perm b = oracle::random_perm(6, rng);
    Perm c = conjugate(a, b);
    // (a^b)[x] = b[a[b^{-1}[x]]]
    for (int x = 0; x < 6; ++x)
      CHECK(c[x] == b[a[b.inverse()[x]]]);
  }
}
