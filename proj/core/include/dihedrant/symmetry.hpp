#ifndef DIHEDRANT_SYMMETRY_HPP
#define DIHEDRANT_SYMMETRY_HPP

#include <vector>

#include "dihedrant/graph.hpp"
#include "dihedrant/perm.hpp"
#include "dihedrant/stabilizer_chain.hpp"
#include "dihedrant/util.hpp"

namespace dihedrant {

/// Transitivity flags of a graph under a group X <= Aut.
struct SymmetryProfile
{
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  bool two_arc_transitive = false;
  bool distance_transitive = false;
  bool two_geodesic_transitive = false;
  bool locally_two_distance_transitive = false;
  std::vector<bool> s_distance_transitive;  // index s-1, for s = 1..diameter
  GroupOrder group_order = 1;
  GroupOrder vertex_stabilizer_order = 1;
  int diameter = 0;

  /// Layers past the eccentricity are vacuously satisfied, so the flag is
  /// monotone in s beyond the diameter.
  bool s_distance(int s) const
  {
    if (s_distance_transitive.empty())
      return vertex_transitive;
    int idx = std::min(s, (int)s_distance_transitive.size()) - 1;
    return idx < 0 ? vertex_transitive : s_distance_transitive[idx];
  }

  bool two_distance_transitive() const { return s_distance(2); }
};

/// Every public operation checks that X's generators are automorphisms.
bool is_vertex_transitive(const Graph& g, const StabilizerChain& x);
bool is_edge_transitive(const Graph& g, const StabilizerChain& x);
bool is_arc_transitive(const Graph& g, const StabilizerChain& x);
bool is_s_arc_transitive(const Graph& g, const StabilizerChain& x, int s);
bool is_s_distance_transitive(const Graph& g, const StabilizerChain& x, int s);
bool is_locally_s_distance_transitive(const Graph& g, const StabilizerChain& x, int s);
bool is_distance_transitive(const Graph& g, const StabilizerChain& x);
bool is_two_geodesic_transitive(const Graph& g, const StabilizerChain& x);

/// Computes the whole profile in one pass (shares stabilizer chains).
SymmetryProfile compute_profile(const Graph& g, const StabilizerChain& x);

struct QuotientResult
{
  Graph quotient;
  std::vector<int> orbit_map;            // vertex -> orbit index
  std::vector<std::vector<int>> orbits;  // ordered by smallest vertex
  bool is_cover = false;
};

/// Quotient of g by the orbits of N, where N is normal in X <= Aut(g).
/// When the valency criterion certifies a cover, N must come out
/// semiregular; a violation raises an internal consistency error.
QuotientResult quotient(const Graph& g, const StabilizerChain& x, const StabilizerChain& n);

/// Generators of the induced action of X on the cells of a partition it
/// preserves (one image permutation per strong generator).
std::vector<Perm> induced_action(const std::vector<Perm>& gens,
                                 const std::vector<std::vector<int>>& cells);

} // namespace dihedrant

#endif
