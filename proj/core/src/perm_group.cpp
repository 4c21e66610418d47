#include "dihedrant/perm_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "dihedrant/util.hpp"

namespace dihedrant {

BlockSystem BlockSystem::from_cells(std::vector<std::vector<int>> cells, int n)
{
  BlockSystem bs;
  bs.cell_of.assign(n, -1);
  for (auto& cell : cells) {
    std::sort(cell.begin(), cell.end());
    if (cell.empty())
      throw std::invalid_argument("BlockSystem: empty cell");
    for (int v : cell) {
      if (v < 0 || v >= n || bs.cell_of[v] != -1)
        throw std::invalid_argument("BlockSystem: cells must partition the domain");
      bs.cell_of[v] = 0;  // placeholder until sorted
    }
  }
  for (int v = 0; v < n; ++v) {
    if (bs.cell_of[v] == -1)
      throw std::invalid_argument("BlockSystem: cells must cover the domain");
  }
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int v : cells[c])
      bs.cell_of[v] = (int)c;
  }
  bs.cells = std::move(cells);
  return bs;
}

BlockSystem minimal_block_system(const std::vector<Perm>& gens, int seed_a, int seed_b)
{
  if (gens.empty())
    throw std::invalid_argument("minimal_block_system: no generators");
  int n = gens.front().degree();
  if (!is_transitive(gens, n))
    throw std::invalid_argument("minimal_block_system: group is not transitive");
  if (seed_a == seed_b || seed_a < 0 || seed_b < 0 || seed_a >= n || seed_b >= n)
    throw std::invalid_argument("minimal_block_system: bad seed pair");

  UnionFind uf(n);
  std::vector<std::pair<int, int>> queue{{seed_a, seed_b}};
  uf.unite(seed_a, seed_b);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [u, v] = queue[k];
    for (const Perm& g : gens) {
      int gu = g[u];
      int gv = g[v];
      if (uf.unite(gu, gv))
        queue.emplace_back(gu, gv);
    }
  }

  std::vector<std::vector<int>> cells;
  std::vector<int> idx(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (idx[r] < 0) {
      idx[r] = (int)cells.size();
      cells.emplace_back();
    }
    cells[idx[r]].push_back(v);
  }
  auto bs = BlockSystem::from_cells(std::move(cells), n);
  for (const auto& cell : bs.cells) {
    if (cell.size() != bs.cells.front().size())
      throw std::logic_error("minimal_block_system: unequal block sizes");
  }
  return bs;
}

bool is_primitive(const std::vector<Perm>& gens, int domain_size)
{
  if (!is_transitive(gens, domain_size))
    throw std::invalid_argument("is_primitive: group is not transitive");
  for (int j = 1; j < domain_size; ++j) {
    if (!minimal_block_system(gens, 0, j).trivial())
      return false;
  }
  return true;
}

bool is_normal_subgroup(const StabilizerChain& group, const StabilizerChain& subgroup)
{
  auto sub_gens = subgroup.strong_generators();
  for (const Perm& s : sub_gens) {
    if (!group.contains(s))
      throw std::invalid_argument("is_normal_subgroup: subgroup not contained in group");
  }
  for (const Perm& s : sub_gens) {
    for (const Perm& a : group.strong_generators()) {
      if (!subgroup.contains(conjugate(s, a)))
        return false;
    }
  }
  return true;
}

StabilizerChain normal_closure(const StabilizerChain& group, const std::vector<Perm>& seeds)
{
  for (const Perm& s : seeds) {
    if (!group.contains(s))
      throw std::invalid_argument("normal_closure: seed is not a group member");
  }
  StabilizerChain closure = StabilizerChain::build(group.degree(), seeds);
  auto group_gens = group.strong_generators();
  std::vector<Perm> pending = closure.strong_generators();
  for (std::size_t k = 0; k < pending.size(); ++k) {
    for (const Perm& a : group_gens) {
      Perm c = conjugate(pending[k], a);
      if (!closure.contains(c)) {
        closure.extend(c);
        pending.push_back(c);
      }
    }
  }
  return closure;
}

StabilizerChain kernel_of_block_action(const StabilizerChain& group, const BlockSystem& blocks)
{
  int n = group.degree();
  if (blocks.domain_size() != n)
    throw std::invalid_argument("kernel_of_block_action: partition domain mismatch");
  int m = (int)blocks.cells.size();

  auto gens = group.strong_generators();
  // extend each generator to act on points + cell markers
  std::vector<Perm> extended;
  for (const Perm& g : gens) {
    std::vector<int> images(n + m);
    std::vector<int> cell_image(m, -1);
    for (int v = 0; v < n; ++v) {
      images[v] = g[v];
      int from = blocks.cell_of[v];
      int to = blocks.cell_of[g[v]];
      if (cell_image[from] == -1)
        cell_image[from] = to;
      else if (cell_image[from] != to)
        throw std::invalid_argument("kernel_of_block_action: partition is not invariant");
    }
    for (int c = 0; c < m; ++c)
      images[n + c] = n + cell_image[c];
    extended.push_back(Perm(std::move(images)));
  }

  std::vector<int> prefix(m);
  for (int c = 0; c < m; ++c)
    prefix[c] = n + c;
  StabilizerChain combined = StabilizerChain::build(n + m, extended, prefix);

  // strong generators fixing all cell markers form the kernel
  std::vector<Perm> kernel_gens;
  for (const Perm& g : combined.strong_generators(m)) {
    std::vector<int> images(g.images().begin(), g.images().begin() + n);
    kernel_gens.push_back(Perm(std::move(images)));
  }
  return StabilizerChain::build(n, kernel_gens);
}

QuasiprimitivityResult is_quasiprimitive(const StabilizerChain& group, std::uint64_t order_cap)
{
  int n = group.degree();
  auto gens = group.strong_generators();
  if (!is_transitive(gens, n))
    throw std::invalid_argument("is_quasiprimitive: group is not transitive");
  if (group.order() > GroupOrder(order_cap))
    return {Quasiprimitivity::Unknown, std::nullopt};

  std::unordered_set<Perm, PermHash> visited;
  QuasiprimitivityResult result{Quasiprimitivity::Yes, std::nullopt};

  bool complete = group.for_each_element(
    [&](const Perm& g) {
      if (result.verdict != Quasiprimitivity::Yes || g.is_identity())
        return;
      if (visited.count(g))
        return;
      // sweep the full conjugacy class of g
      std::vector<Perm> cls{g};
      visited.insert(g);
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (const Perm& a : gens) {
          Perm c = conjugate(cls[k], a);
          if (visited.insert(c).second)
            cls.push_back(c);
        }
      }
      StabilizerChain ncl = normal_closure(group, {g});
      if (!is_transitive(ncl.strong_generators(), n))
        result = {Quasiprimitivity::No, std::move(ncl)};
    },
    order_cap);

  if (!complete)
    return {Quasiprimitivity::Unknown, std::nullopt};
  return result;
}

} // namespace dihedrant
