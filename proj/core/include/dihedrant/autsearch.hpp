#ifndef DIHEDRANT_AUTSEARCH_HPP
#define DIHEDRANT_AUTSEARCH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dihedrant/graph.hpp"
#include "dihedrant/perm.hpp"
#include "dihedrant/stabilizer_chain.hpp"

namespace dihedrant {

/// Ordered partition of the vertex set; cell order is significant.
struct OrderedPartition
{
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of;

  static OrderedPartition unit(int n);
  static OrderedPartition from_cells(std::vector<std::vector<int>> cells, int n);

  bool discrete() const { return cells.size() == cell_of.size(); }
};

/// Coarsest equitable refinement of pi: repeated degree-count splitting to
/// a fixed point. Split cells are ordered by neighbor-count key ascending
/// and replace their parent in place.
OrderedPartition equitable_refinement(const Graph& g, const OrderedPartition& pi);

bool is_equitable(const Graph& g, const OrderedPartition& pi);

struct BudgetExceeded : std::runtime_error
{
  explicit BudgetExceeded(std::uint64_t nodes)
  : std::runtime_error("search node budget exceeded"), nodes(nodes)
  {}

  std::uint64_t nodes;
};

struct AutSearchOptions
{
  std::vector<Perm> seeds;                // known automorphisms (verified)
  std::uint64_t max_nodes = 10000000;     // refinement-node budget
  std::vector<int> chain_base_prefix;     // forced base prefix of the result chain
};

struct AutGroupResult
{
  std::vector<Perm> generators;
  StabilizerChain chain;
  std::uint64_t nodes = 0;
};

/// Full automorphism group via individualization-refinement backtracking
/// with root-level orbit pruning and first-leaf automorphism detection.
AutGroupResult automorphism_group(const Graph& g, const AutSearchOptions& options = {});

struct CanonicalResult
{
  std::vector<std::uint8_t> form;  // packed upper-triangle adjacency bits
  Perm labeling;                   // vertex -> canonical position
  std::uint64_t nodes = 0;
};

/// Isomorphism-invariant canonical form: the leaf maximizing the
/// (node-invariant sequence, adjacency bitstring) key over the search tree.
CanonicalResult canonical_labeling(const Graph& g, std::uint64_t max_nodes = 10000000);

std::vector<std::uint8_t> canonical_form(const Graph& g, std::uint64_t max_nodes = 10000000);

/// Witness isomorphism g1 -> g2 when one exists.
std::optional<Perm> are_isomorphic(const Graph& g1, const Graph& g2,
                                   std::uint64_t max_nodes = 10000000);

} // namespace dihedrant

#endif
