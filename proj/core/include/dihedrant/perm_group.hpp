#ifndef DIHEDRANT_PERM_GROUP_HPP
#define DIHEDRANT_PERM_GROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dihedrant/perm.hpp"
#include "dihedrant/stabilizer_chain.hpp"

namespace dihedrant {

/// Partition of the domain into blocks of a group action. Cells are kept
/// sorted internally and ordered by their smallest element.
struct BlockSystem
{
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of;

  int domain_size() const { return (int)cell_of.size(); }
  bool trivial() const { return cells.size() == 1 || cells.size() == cell_of.size(); }

  static BlockSystem from_cells(std::vector<std::vector<int>> cells, int n);
};

/// Finest block system of the transitive group <gens> in which seed_a and
/// seed_b share a cell (union-find block closure).
BlockSystem minimal_block_system(const std::vector<Perm>& gens, int seed_a, int seed_b);

/// True iff every minimal block system over seeds {0, j} is trivial.
bool is_primitive(const std::vector<Perm>& gens, int domain_size);

/// Precondition: N's generators are members of G.
bool is_normal_subgroup(const StabilizerChain& group, const StabilizerChain& subgroup);

/// Smallest subgroup containing the seeds and closed under conjugation by
/// the group's generators.
StabilizerChain normal_closure(const StabilizerChain& group, const std::vector<Perm>& seeds);

/// Subgroup fixing every cell of an invariant partition setwise. Computed
/// through the action homomorphism onto cells: the chain is built over the
/// combined domain (points + cells) with the cell points forced to the
/// front of the base, so the strong generators that act trivially on cells
/// are exactly the kernel.
StabilizerChain kernel_of_block_action(const StabilizerChain& group, const BlockSystem& blocks);

enum class Quasiprimitivity { Yes, No, Unknown };

struct QuasiprimitivityResult
{
  Quasiprimitivity verdict;
  std::optional<StabilizerChain> witness;  // intransitive normal subgroup when No
};

/// Decides quasiprimitivity by testing the normal closure of one
/// representative per conjugacy class of nontrivial elements. Returns
/// Unknown when the group order exceeds order_cap.
QuasiprimitivityResult is_quasiprimitive(const StabilizerChain& group,
                                         std::uint64_t order_cap = 1000000);

} // namespace dihedrant

#endif
