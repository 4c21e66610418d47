#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihedrant/perm_group.hpp"

#include "dihedrant/cayley.hpp"
#include "oracles.hpp"

using namespace dihedrant;

namespace {

std::vector<Perm> s4_gens()
{
  return {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})};
}

std::vector<Perm> s5_gens()
{
  return {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})};
}

} // namespace

TEST_CASE("blocks of the regular Z_6 action seeded {0,3}")
{
  std::vector<Perm> gens{Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  BlockSystem bs = minimal_block_system(gens, 0, 3);
  CHECK(bs.cells == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});
}

TEST_CASE("2-transitive groups have only trivial blocks")
{
  auto gens = s5_gens();
  for (int j = 1; j < 5; ++j)
    CHECK(minimal_block_system(gens, 0, j).cells.size() == 1);
  CHECK(is_primitive(gens, 5));
}

TEST_CASE("blocks of the regular dihedral action seeded {identity, x}")
{
  // rotations occupy indices 0..5, reflections 6..11; the <x>-cosets are
  // exactly these two index ranges
  auto gens = right_regular_rep(GroupSpec::dihedral(6));
  BlockSystem bs = minimal_block_system(gens, 0, 1);
  REQUIRE(bs.cells.size() == 2);
  CHECK(bs.cells[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(bs.cells[1] == std::vector<int>{6, 7, 8, 9, 10, 11});
}

TEST_CASE("primitivity verdicts")
{
  CHECK(is_primitive(s5_gens(), 5));
  std::vector<Perm> z4{Perm::from_cycles(4, {{0, 1, 2, 3}})};
  CHECK_FALSE(is_primitive(z4, 4));
  CHECK_FALSE(is_primitive(right_regular_rep(GroupSpec::dihedral(6)), 12));
  CHECK_THROWS_AS(is_primitive({Perm(4)}, 4), std::invalid_argument);
}

TEST_CASE("normal subgroup checks")
{
  StabilizerChain s4 = StabilizerChain::build(4, s4_gens());
  StabilizerChain a4 = StabilizerChain::build(
    4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})});
  CHECK(a4.order() == 12);
  CHECK(is_normal_subgroup(s4, a4));

  StabilizerChain swap01 = StabilizerChain::build(4, {Perm::from_cycles(4, {{0, 1}})});
  CHECK_FALSE(is_normal_subgroup(s4, swap01));

  // Aut(C_6) is dihedral of order 12; its rotation subgroup is normal
  std::vector<Perm> aut_c6{Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                           Perm::from_cycles(6, {{1, 5}, {2, 4}})};
  StabilizerChain c6 = StabilizerChain::build(6, aut_c6);
  StabilizerChain rotations =
    StabilizerChain::build(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(c6.order() == 12);
  CHECK(is_normal_subgroup(c6, rotations));

  StabilizerChain not_inside = StabilizerChain::build(4, {Perm::from_cycles(4, {{0, 1, 2}})});
  CHECK_THROWS_AS(is_normal_subgroup(swap01, not_inside), std::invalid_argument);
}

TEST_CASE("normal closure of a 3-cycle in S_4 is A_4")
{
  StabilizerChain s4 = StabilizerChain::build(4, s4_gens());
  StabilizerChain ncl = normal_closure(s4, {Perm::from_cycles(4, {{0, 1, 2}})});
  CHECK(ncl.order() == 12);

  // brute-force conjugation closure agrees
  auto elements = oracle::group_closure(s4_gens(), 4);
  std::set<std::vector<int>> closure{Perm(4).images(),
                                     Perm::from_cycles(4, {{0, 1, 2}}).images()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(closure.begin(), closure.end());
    for (const auto& c : snapshot) {
      for (const auto& a : elements) {
        if (closure.insert(conjugate(Perm(c), a).images()).second)
          grew = true;
      }
      for (const auto& d : snapshot) {
        if (closure.insert(compose(Perm(c), Perm(d)).images()).second)
          grew = true;
      }
    }
  }
  CHECK(ncl.order() == closure.size());
}

TEST_CASE("normal closure of the central rotation of D_8 regular")
{
  GroupSpec d8 = GroupSpec::dihedral(4);
  auto gens = right_regular_rep(d8);
  StabilizerChain chain = StabilizerChain::build(8, gens);

  // R(x^2) is central in D_8
  std::vector<int> images(8);
  for (int v = 0; v < 8; ++v)
    images[v] = d8.mul(v, d8.index({2, false}));
  StabilizerChain ncl = normal_closure(chain, {Perm(images)});
  CHECK(ncl.order() == 2);
}

TEST_CASE("normal closure of identity seeds is trivial")
{
  StabilizerChain s4 = StabilizerChain::build(4, s4_gens());
  CHECK(normal_closure(s4, {Perm(4)}).order() == 1);
  CHECK(normal_closure(s4, {}).order() == 1);
  CHECK_THROWS_AS(normal_closure(StabilizerChain::build(4, {Perm::from_cycles(4, {{0, 1}})}),
                                 {Perm::from_cycles(4, {{0, 1, 2}})}),
                  std::invalid_argument);
}

TEST_CASE("quasiprimitivity of A_4, regular D_8, and S_3")
{
  StabilizerChain a4 = StabilizerChain::build(
    4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})});
  CHECK(is_quasiprimitive(a4).verdict == Quasiprimitivity::Yes);

  StabilizerChain d8 = StabilizerChain::build(8, right_regular_rep(GroupSpec::dihedral(4)));
  auto result = is_quasiprimitive(d8);
  CHECK(result.verdict == Quasiprimitivity::No);
  REQUIRE(result.witness);
  CHECK(result.witness->order() == 2);  // the central involution
  CHECK_FALSE(is_transitive(result.witness->strong_generators(), 8));

  StabilizerChain s3 = StabilizerChain::build(
    3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(is_quasiprimitive(s3).verdict == Quasiprimitivity::Yes);
}

TEST_CASE("quasiprimitivity cap yields Unknown")
{
  StabilizerChain s4 = StabilizerChain::build(4, s4_gens());
  CHECK(is_quasiprimitive(s4, 10).verdict == Quasiprimitivity::Unknown);
}

TEST_CASE("primitive implies quasiprimitive on small instances")
{
  std::vector<std::vector<Perm>> groups = {
    s4_gens(),
    s5_gens(),
    {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})},
    {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})},
    right_regular_rep(GroupSpec::dihedral(4)),
    {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}), Perm::from_cycles(6, {{1, 5}, {2, 4}})},
  };
  for (const auto& gens : groups) {
    int degree = gens.front().degree();
    StabilizerChain chain = StabilizerChain::build(degree, gens);
    if (is_primitive(gens, degree))
      CHECK(is_quasiprimitive(chain).verdict == Quasiprimitivity::Yes);
  }
}

TEST_CASE("normal closure is conjugation invariant")
{
  StabilizerChain s4 = StabilizerChain::build(4, s4_gens());
  StabilizerChain ncl = normal_closure(s4, {Perm::from_cycles(4, {{0, 1}, {2, 3}})});
  for (const Perm& c : ncl.strong_generators()) {
    for (const Perm& a : s4.strong_generators())
      CHECK(ncl.contains(conjugate(c, a)));
  }
}

TEST_CASE("kernel of S_4 acting on the three pair-partitions")
{
  // S_4 acting on the 6 unordered pairs; the 3 partitions-into-pairs form
  // a block system whose kernel is the Klein four-group
  std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto pair_id = [&](int a, int b) {
    if (a > b)
      std::swap(a, b);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (pairs[k] == std::make_pair(a, b))
        return (int)k;
    }
    return -1;
  };
  std::vector<Perm> pair_action;
  for (const Perm& g : s4_gens()) {
    std::vector<int> images(6);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      images[k] = pair_id(g[pairs[k].first], g[pairs[k].second]);
    pair_action.push_back(Perm(std::move(images)));
  }
  StabilizerChain chain = StabilizerChain::build(6, pair_action);
  CHECK(chain.order() == 24);

  // cells: {01,23}, {02,13}, {03,12}
  BlockSystem bs = BlockSystem::from_cells({{0, 5}, {1, 4}, {2, 3}}, 6);
  StabilizerChain kernel = kernel_of_block_action(chain, bs);
  CHECK(kernel.order() == 4);

  // oracle: count elements fixing each cell setwise
  auto elements = oracle::group_closure(pair_action, 6);
  int fixing = 0;
  for (const auto& e : elements) {
    bool ok = true;
    for (const auto& cell : bs.cells) {
      for (int v : cell)
        ok = ok && bs.cell_of[e[v]] == bs.cell_of[v];
    }
    fixing += ok;
  }
  CHECK(kernel.order() == fixing);
}

TEST_CASE("singleton blocks give a trivial kernel")
{
  StabilizerChain s4 = StabilizerChain::build(4, s4_gens());
  BlockSystem singletons = BlockSystem::from_cells({{0}, {1}, {2}, {3}}, 4);
  CHECK(kernel_of_block_action(s4, singletons).order() == 1);
}

TEST_CASE("kernel of R(Z_6) on the {0,3} coset blocks")
{
  std::vector<Perm> gens{Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  StabilizerChain chain = StabilizerChain::build(6, gens);
  BlockSystem bs = BlockSystem::from_cells({{0, 3}, {1, 4}, {2, 5}}, 6);
  StabilizerChain kernel = kernel_of_block_action(chain, bs);
  CHECK(kernel.order() == 2);
  CHECK(kernel.contains(Perm::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}})));
}

TEST_CASE("kernel rejects non-invariant partitions")
{
  StabilizerChain s4 = StabilizerChain::build(4, s4_gens());
  BlockSystem bad = BlockSystem::from_cells({{0, 1}, {2, 3}}, 4);
  CHECK_THROWS_AS(kernel_of_block_action(s4, bad), std::invalid_argument);
}
