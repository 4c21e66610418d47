#include "dihedrant/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dihedrant {

Graph::Graph(int n) : _n(n), _adj(n, Bitset(n))
{
  if (n < 0)
    throw std::invalid_argument("Graph: negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v)
{
  if (u < 0 || v < 0 || u >= _n || v >= _n)
    throw std::invalid_argument("Graph::add_edge: vertex out of range");
  if (u == v)
    throw std::invalid_argument("Graph::add_edge: loops are not allowed");
  _adj[u].set(v);
  _adj[v].set(u);
}

int Graph::edge_count() const
{
  int total = 0;
  for (int v = 0; v < _n; ++v)
    total += _adj[v].count();
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < _n; ++u) {
    for (int v = _adj[u].next(u + 1); v != -1; v = _adj[u].next(v + 1))
      out.emplace_back(u, v);
  }
  return out;
}

DistancePartition distance_partition(const Graph& g, int source)
{
  int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("distance_partition: vertex out of range");

  DistancePartition dp;
  dp.source = source;
  dp.dist.assign(n, -1);
  dp.dist[source] = 0;
  dp.cells.push_back({source});

  std::vector<int> frontier{source};
  int d = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier) {
      const Bitset& row = g.row(u);
      for (int v = row.next(0); v != -1; v = row.next(v + 1)) {
        if (dp.dist[v] == -1) {
          dp.dist[v] = d + 1;
          next.push_back(v);
        }
      }
    }
    if (next.empty())
      break;
    std::sort(next.begin(), next.end());
    dp.cells.push_back(next);
    frontier = std::move(next);
    ++d;
  }
  dp.eccentricity = d;
  for (int v = 0; v < n; ++v) {
    if (dp.dist[v] == -1)
      dp.unreachable.push_back(v);
  }
  return dp;
}

bool is_connected(const Graph& g)
{
  if (g.vertex_count() == 0)
    return true;
  return distance_partition(g, 0).unreachable.empty();
}

std::optional<int> diameter(const Graph& g)
{
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dp = distance_partition(g, v);
    if (!dp.unreachable.empty())
      return std::nullopt;
    best = std::max(best, dp.eccentricity);
  }
  return best;
}

std::optional<int> girth(const Graph& g)
{
  // BFS from every vertex; a non-tree edge at depths (d(u), d(v)) closes a
  // cycle of length d(u) + d(v) + 1 through the root
  int n = g.vertex_count();
  int best = -1;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      int u = queue[k];
      const Bitset& row = g.row(u);
      for (int v = row.next(0); v != -1; v = row.next(v + 1)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best == -1 || len < best)
            best = len;
        }
      }
    }
  }
  if (best == -1)
    return std::nullopt;
  return best;
}

std::optional<std::vector<int>> bipartition(const Graph& g)
{
  int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1)
      continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      int u = queue[k];
      const Bitset& row = g.row(u);
      for (int v = row.next(0); v != -1; v = row.next(v + 1)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<int> valency(const Graph& g)
{
  if (g.vertex_count() == 0)
    return std::nullopt;
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d)
      return std::nullopt;
  }
  return d;
}

int triangles_through_edge(const Graph& g, int u, int v)
{
  if (!g.adjacent(u, v))
    throw std::invalid_argument("triangles_through_edge: not an edge");
  return g.row(u).intersect_count(g.row(v));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices)
{
  Graph sub((int)vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j]))
        sub.add_edge((int)i, (int)j);
    }
  }
  return sub;
}

Graph bipartite_between(const Graph& g, const std::vector<int>& side_u,
                        const std::vector<int>& side_w)
{
  std::vector<char> in_u(g.vertex_count(), 0);
  for (int v : side_u)
    in_u[v] = 1;
  for (int v : side_w) {
    if (in_u[v])
      throw std::invalid_argument("bipartite_between: sides overlap");
  }
  Graph sub((int)(side_u.size() + side_w.size()));
  for (std::size_t i = 0; i < side_u.size(); ++i) {
    for (std::size_t j = 0; j < side_w.size(); ++j) {
      if (g.adjacent(side_u[i], side_w[j]))
        sub.add_edge((int)i, (int)(side_u.size() + j));
    }
  }
  return sub;
}

Graph complement(const Graph& g)
{
  int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v))
        c.add_edge(u, v);
    }
  }
  return c;
}

Graph apply_permutation(const Graph& g, const Perm& p)
{
  if (p.degree() != g.vertex_count())
    throw std::invalid_argument("apply_permutation: degree mismatch");
  Graph h(g.vertex_count());
  for (auto [u, v] : g.edges())
    h.add_edge(p[u], p[v]);
  return h;
}

bool is_automorphism(const Graph& g, const Perm& p)
{
  if (p.degree() != g.vertex_count())
    throw std::invalid_argument("is_automorphism: degree mismatch");
  for (int u = 0; u < g.vertex_count(); ++u) {
    const Bitset& row = g.row(u);
    for (int v = row.next(u + 1); v != -1; v = row.next(v + 1)) {
      if (!g.adjacent(p[u], p[v]))
        return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g)
{
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Bitset& row = g.row(queue[k]);
      for (int v = row.next(0); v != -1; v = row.next(v + 1)) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(std::move(queue));
  }
  return comps;
}

} // namespace dihedrant
