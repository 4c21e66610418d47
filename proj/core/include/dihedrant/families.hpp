#ifndef DIHEDRANT_FAMILIES_HPP
#define DIHEDRANT_FAMILIES_HPP

#include <string>

#include "dihedrant/graph.hpp"

namespace dihedrant {

struct FamilyLabel
{
  enum class Tag
  {
    Complete,                        // K_n
    Cycle,                           // C_n
    CompleteBipartite,               // K_{a,b}
    CompleteBipartiteMinusMatching,  // K_{n,n} - nK_2
    CompleteMultipartite,            // K_{m[b]}, m >= 3, b >= 2
    Paley,                           // P(p)
    IncidenceH11,                    // B(H_11)
    NonIncidenceH11,                 // B'(H_11)
    Hypercube,                       // Q_d
    GeneralizedPetersen,             // P(n, k)
    Unrecognized
  };

  Tag tag = Tag::Unrecognized;
  int a = 0;
  int b = 0;

  bool operator==(const FamilyLabel& other) const = default;

  std::string to_string() const;
};

Graph complete(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
Graph complete_bipartite_minus_matching(int n);  // removes the identity matching
Graph complete_multipartite(int m, int b);
Graph hypercube(int d);
Graph generalized_petersen(int n, int k);

/// Quadratic-residue graph on Z_p; requires p prime, p = 1 (mod 4).
Graph paley(int p);

enum class Hadamard11Kind { Incidence, NonIncidence };

/// Incidence / non-incidence graph of the 2-(11,5,2) biplane realized by
/// the translates of the quadratic-residue set {1,3,4,5,9} mod 11.
/// Vertices: 11 points then 11 blocks.
Graph hadamard11(Hadamard11Kind kind);

/// Structural recognition with fixed precedence (most specific first):
/// Complete, Cycle, CompleteBipartite, CompleteMultipartite,
/// CompleteBipartiteMinusMatching, Paley, H11, Hypercube,
/// GeneralizedPetersen. Graphs falling in several families (e.g.
/// P(5) = C_5, Q_3 = K_{4,4} - 4K_2) get the earlier label.
FamilyLabel recognize(const Graph& g);

} // namespace dihedrant

#endif
