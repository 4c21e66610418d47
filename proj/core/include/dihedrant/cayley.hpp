#ifndef DIHEDRANT_CAYLEY_HPP
#define DIHEDRANT_CAYLEY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dihedrant/dihedral.hpp"
#include "dihedrant/graph.hpp"
#include "dihedrant/perm.hpp"

namespace dihedrant {

/// Inverse-closed, identity-free generating subset S defining Cay(G, S).
/// Elements are stored as sorted group element indices.
struct ConnectionSet
{
  GroupSpec group;
  std::vector<int> elements;

  std::string tokens() const;  // normalized "x^1,x^5,y" form
};

struct ConnectionSetValidation
{
  bool ok = true;
  std::vector<std::string> reasons;
};

ConnectionSetValidation validate_connection_set(const ConnectionSet& s);

/// Parses the CLI token syntax: comma-separated "x^i", "x^i*y", "y".
ConnectionSet parse_connection_tokens(const GroupSpec& group, const std::string& tokens);

/// Vertex order is the element indexing of GroupSpec (rotations then
/// reflections), so <x>-cosets are index ranges.
Graph cayley_graph(const ConnectionSet& s);

/// Right multiplications R(g): x -> xg for the group's standard generators
/// (dihedral: R(x), R(y); cyclic: R(x)).
std::vector<Perm> right_regular_rep(const GroupSpec& group);

/// Generators of Aut(D_2n) acting on the 2n element-vertices. The group has
/// order n*phi(n) for n >= 3; n = 1, 2 are special (orders 1 and 6).
std::vector<Perm> dihedral_automorphisms(int n);

/// The full automorphism group of the group as permutations of elements
/// (used to deduplicate connection sets).
std::vector<Perm> group_automorphism_elements(const GroupSpec& group);

bool is_normal_cayley(const Graph& g, const GroupSpec& group);

enum class EnumerationMode { All, UpToEquivalence };

/// Atoms from which every inverse-closed identity-free subset is built:
/// rotation pairs {x^i, x^-i}, the half-turn x^{n/2} when n is even, and
/// reflections x^i y (dihedral only). Bit k of a subset mask selects atom k.
struct ConnectionAtoms
{
  GroupSpec group;
  std::vector<std::vector<int>> atoms;  // element indices per atom

  ConnectionSet realize(std::uint64_t mask) const;
  std::uint64_t mask_of(const ConnectionSet& s) const;
};

ConnectionAtoms connection_atoms(const GroupSpec& group);

/// Streams every valid connection set in ascending mask order. In
/// equivalence mode only the lexicographically-least mask of each
/// Aut-orbit is emitted.
void enumerate_connection_sets(const GroupSpec& group, EnumerationMode mode,
                               const std::function<void(const ConnectionSet&)>& sink);

std::vector<ConnectionSet> list_connection_sets(const GroupSpec& group, EnumerationMode mode);

/// Size of the Aut-orbit of the given subset mask.
std::uint64_t connection_set_orbit_size(const ConnectionAtoms& atoms, std::uint64_t mask);

} // namespace dihedrant

#endif
