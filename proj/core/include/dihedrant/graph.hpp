#ifndef DIHEDRANT_GRAPH_HPP
#define DIHEDRANT_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dihedrant/bitset.hpp"
#include "dihedrant/perm.hpp"

namespace dihedrant {

/// Simple undirected loopless graph with bitset adjacency rows.
class Graph
{
public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return _n; }
  int edge_count() const;

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return _adj[u].test(v); }

  int degree(int v) const { return _adj[v].count(); }
  const Bitset& row(int v) const { return _adj[v]; }

  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  bool operator==(const Graph& other) const = default;

private:
  int _n = 0;
  std::vector<Bitset> _adj;
};

/// BFS layers from a source vertex.
struct DistancePartition
{
  int source = 0;
  std::vector<std::vector<int>> cells;  // cells[i] = vertices at distance i
  int eccentricity = 0;
  std::vector<int> unreachable;
  std::vector<int> dist;                // -1 when unreachable

  const std::vector<int>& layer(int i) const
  {
    static const std::vector<int> empty;
    return i < (int)cells.size() ? cells[i] : empty;
  }
};

DistancePartition distance_partition(const Graph& g, int source);

bool is_connected(const Graph& g);

/// nullopt encodes "infinite" for forests / disconnected graphs.
std::optional<int> diameter(const Graph& g);
std::optional<int> girth(const Graph& g);

/// Side assignment (0/1 per vertex) when bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Common degree when the graph is regular.
std::optional<int> valency(const Graph& g);

int triangles_through_edge(const Graph& g, int u, int v);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Keeps only edges between the two (disjoint) sets; vertex set is their union.
Graph bipartite_between(const Graph& g, const std::vector<int>& side_u,
                        const std::vector<int>& side_w);

Graph complement(const Graph& g);

Graph apply_permutation(const Graph& g, const Perm& p);

bool is_automorphism(const Graph& g, const Perm& p);

std::vector<std::vector<int>> connected_components(const Graph& g);

} // namespace dihedrant

#endif
