#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihedrant/stabilizer_chain.hpp"

#include "dihedrant/cayley.hpp"
#include "oracles.hpp"

using namespace dihedrant;

namespace {

std::vector<Perm> s4_gens()
{
  return {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})};
}

} // namespace

TEST_CASE("order of S_4 from two generators")
{
  auto gens = s4_gens();
  StabilizerChain chain = StabilizerChain::build(4, gens);
  CHECK(chain.order() == oracle::group_closure(gens, 4).size());
  CHECK(chain.order() == 24);
}

TEST_CASE("order of the regular dihedral group")
{
  auto gens = right_regular_rep(GroupSpec::dihedral(4));
  StabilizerChain chain = StabilizerChain::build(8, gens);
  CHECK(chain.order() == 8);
}

TEST_CASE("order equals brute-force closure for assorted groups of degree <= 8")
{
  std::vector<std::vector<Perm>> groups = {
    s4_gens(),
    {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})},
    {Perm::from_cycles(7, {{0, 1, 2}}), Perm::from_cycles(7, {{2, 3, 4}, {5, 6}})},
    right_regular_rep(GroupSpec::dihedral(4)),
    {Perm::from_cycles(8, {{0, 1}, {2, 3}}), Perm::from_cycles(8, {{1, 2}, {4, 7}}),
     Perm::from_cycles(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})},
  };
  for (const auto& gens : groups) {
    int degree = gens.front().degree();
    StabilizerChain chain = StabilizerChain::build(degree, gens);
    CHECK(chain.order() == oracle::group_closure(gens, degree).size());
  }
}

TEST_CASE("order is the product of basic orbit lengths")
{
  StabilizerChain chain = StabilizerChain::build(4, s4_gens());
  GroupOrder product = 1;
  for (int i = 0; i < chain.depth(); ++i)
    product *= (int)chain.basic_orbit(i).size();
  CHECK(chain.order() == product);
}

TEST_CASE("membership of random words and rejection of non-members")
{
  std::mt19937 rng(11);
  auto gens = {Perm::from_cycles(6, {{0, 1, 2}}), Perm::from_cycles(6, {{3, 4, 5}})};
  std::vector<Perm> gen_list(gens);
  StabilizerChain chain = StabilizerChain::build(6, gen_list);

  for (int k = 0; k < 100; ++k)
    CHECK(chain.contains(oracle::random_word(gen_list, 6, rng)));

  // brute-force a non-member
  auto elements = oracle::group_closure(gen_list, 6);
  std::set<std::vector<int>> member_set;
  for (const auto& e : elements)
    member_set.insert(e.images());
  int rejected = 0;
  std::vector<int> images{0, 1, 2, 3, 4, 5};
  do {
    if (!member_set.count(images)) {
      CHECK_FALSE(chain.contains(Perm(images)));
      if (++rejected == 25)
        break;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(rejected == 25);
}

TEST_CASE("every strong generator sifts to identity")
{
  StabilizerChain chain = StabilizerChain::build(4, s4_gens());
  for (const Perm& g : chain.strong_generators()) {
    auto [res, level] = chain.sift(g);
    CHECK(level == chain.depth());
    CHECK(res.is_identity());
  }
}

TEST_CASE("base prefix is honored")
{
  StabilizerChain chain = StabilizerChain::build(4, s4_gens(), {2, 0});
  auto base = chain.base();
  REQUIRE(base.size() >= 2);
  CHECK(base[0] == 2);
  CHECK(base[1] == 0);
  CHECK(chain.order() == 24);
}

TEST_CASE("point stabilizer of S_4 has order 6")
{
  StabilizerChain chain = StabilizerChain::build(4, s4_gens());
  CHECK(chain.point_stabilizer(0).order() == 6);
  CHECK(chain.point_stabilizer(2).order() == 6);
}

TEST_CASE("point stabilizers of a regular group are trivial")
{
  for (int n : {3, 4, 5}) {
    auto gens = right_regular_rep(GroupSpec::dihedral(n));
    StabilizerChain chain = StabilizerChain::build(2 * n, gens);
    for (int v = 0; v < 2 * n; ++v)
      CHECK(chain.point_stabilizer(v).order() == 1);
  }
}

TEST_CASE("orbit-stabilizer relation")
{
  std::vector<std::vector<Perm>> groups = {
    s4_gens(),
    {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}), Perm::from_cycles(6, {{1, 5}, {2, 4}})},
    {Perm::from_cycles(7, {{0, 1, 2}}), Perm::from_cycles(7, {{2, 3, 4}, {5, 6}})},
  };
  for (const auto& gens : groups) {
    int degree = gens.front().degree();
    StabilizerChain chain = StabilizerChain::build(degree, gens);
    for (int u = 0; u < degree; ++u) {
      StabilizerChain stab = chain.point_stabilizer(u);
      CHECK(chain.order() == stab.order() * (int)orbit_of(gens, u).size());
    }
  }
}

TEST_CASE("transitive, regular, semiregular predicates")
{
  auto d12 = right_regular_rep(GroupSpec::dihedral(6));
  StabilizerChain d12_chain = StabilizerChain::build(12, d12);
  CHECK(is_transitive(d12, 12));
  CHECK(is_regular(d12_chain));
  CHECK(is_semiregular(d12_chain));

  StabilizerChain s4 = StabilizerChain::build(4, s4_gens());
  CHECK(is_transitive(s4.strong_generators(), 4));
  CHECK_FALSE(is_regular(s4));
  CHECK(s4.order() == 24);

  // fixed-point-free involution: semiregular but not transitive
  std::vector<Perm> inv{Perm::from_cycles(6, {{0, 1}, {2, 3}, {4, 5}})};
  StabilizerChain inv_chain = StabilizerChain::build(6, inv);
  CHECK(is_semiregular(inv_chain));
  CHECK_FALSE(is_transitive(inv, 6));
  CHECK_FALSE(is_regular(inv_chain));
}

TEST_CASE("extend grows the group incrementally")
{
  StabilizerChain chain = StabilizerChain::build(4, {Perm::from_cycles(4, {{0, 1}})});
  CHECK(chain.order() == 2);
  chain.extend(Perm::from_cycles(4, {{0, 1, 2, 3}}));
  CHECK(chain.order() == 24);
  CHECK(chain.contains(Perm::from_cycles(4, {{1, 3, 2}})));
}

TEST_CASE("element enumeration visits the whole group once")
{
  auto gens = right_regular_rep(GroupSpec::dihedral(5));
  StabilizerChain chain = StabilizerChain::build(10, gens);
  std::set<std::vector<int>> seen;
  bool complete = chain.for_each_element(
    [&](const Perm& p) { seen.insert(p.images()); }, 100);
  CHECK(complete);
  CHECK(seen.size() == 10);

  bool capped = chain.for_each_element([](const Perm&) {}, 5);
  CHECK_FALSE(capped);
}

TEST_CASE("trivial group edge cases")
{
  StabilizerChain chain = StabilizerChain::build(5, {});
  CHECK(chain.order() == 1);
  CHECK(chain.contains(Perm(5)));
  CHECK_FALSE(chain.contains(Perm::from_cycles(5, {{0, 1}})));
  CHECK(chain.point_stabilizer(3).order() == 1);
}
