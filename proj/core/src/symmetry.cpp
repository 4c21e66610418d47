#include "dihedrant/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

#include "dihedrant/perm_group.hpp"

namespace dihedrant {

namespace {

std::vector<Perm> checked_generators(const Graph& g, const StabilizerChain& x)
{
  auto gens = x.strong_generators();
  for (const Perm& p : gens) {
    if (!is_automorphism(g, p))
      throw std::invalid_argument("symmetry: group contains a non-automorphism");
  }
  return gens;
}

// Does the subgroup generated by `gens` act transitively on `target`?
// The target must be invariant under the subgroup.
bool transitive_on(const std::vector<Perm>& gens, const std::vector<int>& target)
{
  if (target.size() <= 1)
    return true;
  auto orb = orbit_of(gens, target.front());
  return std::includes(orb.begin(), orb.end(), target.begin(), target.end());
}

std::vector<int> two_geodesic_targets(const Graph& g, const DistancePartition& dp, int v)
{
  std::vector<int> targets;
  const Bitset& row = g.row(v);
  for (int w = row.next(0); w != -1; w = row.next(w + 1)) {
    if (dp.dist[w] == 2)
      targets.push_back(w);
  }
  return targets;
}

std::vector<int> arc_tail_targets(const Graph& g, int u, int v)
{
  std::vector<int> targets;
  const Bitset& row = g.row(v);
  for (int w = row.next(0); w != -1; w = row.next(w + 1)) {
    if (w != u)
      targets.push_back(w);
  }
  return targets;
}

} // namespace

bool is_vertex_transitive(const Graph& g, const StabilizerChain& x)
{
  auto gens = checked_generators(g, x);
  return is_transitive(gens, g.vertex_count());
}

bool is_edge_transitive(const Graph& g, const StabilizerChain& x)
{
  auto gens = checked_generators(g, x);
  auto edges = g.edges();  // sorted (u, v) pairs with u < v
  if (edges.empty())
    return true;

  auto edge_id = [&](int u, int v) {
    if (u > v)
      std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    return (int)(it - edges.begin());
  };
  UnionFind uf((int)edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    for (const Perm& p : gens)
      uf.unite((int)k, edge_id(p[edges[k].first], p[edges[k].second]));
  }
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (uf.find((int)k) != uf.find(0))
      return false;
  }
  return true;
}

bool is_arc_transitive(const Graph& g, const StabilizerChain& x)
{
  return is_s_arc_transitive(g, x, 1);
}

bool is_s_arc_transitive(const Graph& g, const StabilizerChain& x, int s)
{
  if (s != 1 && s != 2)
    throw std::invalid_argument("is_s_arc_transitive: only s in {1,2} supported");
  auto gens = checked_generators(g, x);
  int n = g.vertex_count();
  if (!is_transitive(gens, n))
    return false;

  int u = 0;
  if (g.degree(u) == 0)
    throw std::invalid_argument("is_s_arc_transitive: no s-arc exists");
  int v = g.row(u).next(0);

  StabilizerChain arc_chain = StabilizerChain::build(n, gens, {u, v});
  if (!transitive_on(arc_chain.strong_generators(1),
                     arc_tail_targets(g, -1, u)))  // X_u on the full neighborhood
    return false;
  if (s == 1)
    return true;

  // 2-arcs through the arc (u, v); the graph is vertex transitive, so a
  // 2-arc exists iff v has a neighbor besides u
  auto targets = arc_tail_targets(g, u, v);
  bool has_two_arc = false;
  for (int w = 0; w < n && !has_two_arc; ++w)
    has_two_arc = g.degree(w) >= 2;
  if (!has_two_arc)
    throw std::invalid_argument("is_s_arc_transitive: no s-arc exists");
  return transitive_on(arc_chain.strong_generators(2), targets);
}

bool is_s_distance_transitive(const Graph& g, const StabilizerChain& x, int s)
{
  if (!is_connected(g))
    throw std::invalid_argument("is_s_distance_transitive: graph must be connected");
  auto gens = checked_generators(g, x);
  int n = g.vertex_count();
  if (!is_transitive(gens, n))
    return false;

  int u = 0;
  StabilizerChain stab = StabilizerChain::build(n, gens, {u});
  auto stab_gens = stab.strong_generators(1);
  DistancePartition dp = distance_partition(g, u);
  for (int i = 1; i <= std::min(s, dp.eccentricity); ++i) {
    if (!transitive_on(stab_gens, dp.cells[i]))
      return false;
  }
  return true;
}

bool is_locally_s_distance_transitive(const Graph& g, const StabilizerChain& x, int s)
{
  auto gens = checked_generators(g, x);
  int n = g.vertex_count();
  for (const auto& orb : orbits_of(gens, n)) {
    int u = orb.front();
    StabilizerChain stab = StabilizerChain::build(n, gens, {u});
    auto stab_gens = stab.strong_generators(1);
    DistancePartition dp = distance_partition(g, u);
    for (int i = 1; i <= std::min(s, dp.eccentricity); ++i) {
      if (!transitive_on(stab_gens, dp.cells[i]))
        return false;
    }
  }
  return true;
}

bool is_distance_transitive(const Graph& g, const StabilizerChain& x)
{
  auto diam = diameter(g);
  if (!diam)
    throw std::invalid_argument("is_distance_transitive: graph must be connected");
  return is_s_distance_transitive(g, x, *diam);
}

bool is_two_geodesic_transitive(const Graph& g, const StabilizerChain& x)
{
  if (!is_s_arc_transitive(g, x, 1))
    return false;
  auto gens = x.strong_generators();
  int n = g.vertex_count();
  int u = 0;
  int v = g.row(u).next(0);
  StabilizerChain arc_chain = StabilizerChain::build(n, gens, {u, v});
  DistancePartition dp = distance_partition(g, u);
  return transitive_on(arc_chain.strong_generators(2), two_geodesic_targets(g, dp, v));
}

SymmetryProfile compute_profile(const Graph& g, const StabilizerChain& x)
{
  if (!is_connected(g))
    throw std::invalid_argument("compute_profile: graph must be connected");
  auto gens = checked_generators(g, x);
  int n = g.vertex_count();

  SymmetryProfile profile;
  profile.group_order = x.order();
  auto diam = diameter(g);
  profile.diameter = *diam;
  profile.vertex_transitive = is_transitive(gens, n);
  profile.edge_transitive = is_edge_transitive(g, x);

  if (profile.vertex_transitive) {
    int u = 0;
    DistancePartition dp = distance_partition(g, u);
    int v = g.row(u).next(0);

    StabilizerChain arc_chain =
      v >= 0 ? StabilizerChain::build(n, gens, {u, v}) : StabilizerChain::build(n, gens, {u});
    auto stab_gens = arc_chain.strong_generators(1);
    profile.vertex_stabilizer_order = profile.group_order / n;

    std::vector<bool> layer_ok(dp.eccentricity + 1, true);
    for (int i = 1; i <= dp.eccentricity; ++i)
      layer_ok[i] = transitive_on(stab_gens, dp.cells[i]);

    profile.s_distance_transitive.assign(std::max(profile.diameter, 0), false);
    bool all_ok = true;
    for (int s = 1; s <= profile.diameter; ++s) {
      if (s <= dp.eccentricity)
        all_ok = all_ok && layer_ok[s];
      profile.s_distance_transitive[s - 1] = all_ok;
    }
    profile.distance_transitive = profile.s_distance(std::max(profile.diameter, 1));
    profile.locally_two_distance_transitive = profile.s_distance(2);

    profile.arc_transitive = v >= 0 && layer_ok[1];
    if (profile.arc_transitive) {
      auto arc_gens = arc_chain.strong_generators(2);
      profile.two_arc_transitive = transitive_on(arc_gens, arc_tail_targets(g, u, v));
      profile.two_geodesic_transitive =
        transitive_on(arc_gens, two_geodesic_targets(g, dp, v));
    }
  } else {
    profile.locally_two_distance_transitive = is_locally_s_distance_transitive(g, x, 2);
    profile.s_distance_transitive.assign(std::max(profile.diameter, 0), false);
  }
  return profile;
}

std::vector<Perm> induced_action(const std::vector<Perm>& gens,
                                 const std::vector<std::vector<int>>& cells)
{
  int m = (int)cells.size();
  std::vector<int> cell_of;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int v : cells[c]) {
      if ((int)cell_of.size() <= v)
        cell_of.resize(v + 1, -1);
      cell_of[v] = (int)c;
    }
  }
  std::vector<Perm> induced;
  for (const Perm& p : gens) {
    std::vector<int> images(m, -1);
    for (int c = 0; c < m; ++c) {
      int img = cell_of[p[cells[c].front()]];
      for (int v : cells[c]) {
        if (cell_of[p[v]] != img)
          throw std::invalid_argument("induced_action: partition is not invariant");
      }
      images[c] = img;
    }
    induced.push_back(Perm(std::move(images)));
  }
  return induced;
}

QuotientResult quotient(const Graph& g, const StabilizerChain& x, const StabilizerChain& n)
{
  checked_generators(g, x);
  auto n_gens = n.strong_generators();
  for (const Perm& p : n_gens) {
    if (!x.contains(p))
      throw std::invalid_argument("quotient: N is not a subgroup of X");
  }
  if (!is_normal_subgroup(x, n))
    throw std::invalid_argument("quotient: N is not normal in X");

  QuotientResult result;
  result.orbits = orbits_of(n_gens, g.vertex_count());
  result.orbit_map.assign(g.vertex_count(), -1);
  for (std::size_t c = 0; c < result.orbits.size(); ++c) {
    for (int v : result.orbits[c])
      result.orbit_map[v] = (int)c;
  }

  result.quotient = Graph((int)result.orbits.size());
  for (auto [u, v] : g.edges()) {
    int cu = result.orbit_map[u];
    int cv = result.orbit_map[v];
    if (cu != cv && !result.quotient.adjacent(cu, cv))
      result.quotient.add_edge(cu, cv);
  }

  result.is_cover = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != result.quotient.degree(result.orbit_map[v])) {
      result.is_cover = false;
      break;
    }
  }
  if (result.is_cover && !is_semiregular(n))
    throw std::logic_error("quotient: cover with non-semiregular kernel group");
  return result;
}

} // namespace dihedrant
