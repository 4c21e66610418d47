#ifndef DIHEDRANT_TEST_ORACLES_HPP
#define DIHEDRANT_TEST_ORACLES_HPP

// Brute-force reference implementations, independent of the library's
// Schreier-Sims and individualization-refinement machinery.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dihedrant/graph.hpp"
#include "dihedrant/perm.hpp"

namespace oracle {

// Full closure of a generator set under composition.
inline std::vector<dihedrant::Perm> group_closure(const std::vector<dihedrant::Perm>& gens,
                                                  int degree)
{
  std::set<std::vector<int>> seen;
  std::vector<dihedrant::Perm> elements{dihedrant::Perm(degree)};
  seen.insert(elements.front().images());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : gens) {
      dihedrant::Perm p = compose(elements[k], g);
      if (seen.insert(p.images()).second)
        elements.push_back(p);
    }
  }
  return elements;
}

// Exhaustive automorphism enumeration over all n! bijections.
inline std::vector<dihedrant::Perm> automorphisms(const dihedrant::Graph& g)
{
  int n = g.vertex_count();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<dihedrant::Perm> result;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        if (g.adjacent(u, v) != g.adjacent(images[u], images[v]))
          ok = false;
      }
    }
    if (ok)
      result.push_back(dihedrant::Perm(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

// Backtracking automorphism count usable a bit past n = 8.
inline std::uint64_t automorphism_count_backtracking(const dihedrant::Graph& g)
{
  int n = g.vertex_count();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;

  auto compatible = [&](int v, int image) {
    for (int u = 0; u < v; ++u) {
      if (g.adjacent(u, v) != g.adjacent(map[u], image))
        return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int image = 0; image < n; ++image) {
      if (!used[image] && g.degree(image) == g.degree(v) && compatible(v, image)) {
        used[image] = 1;
        map[v] = image;
        self(self, v + 1);
        used[image] = 0;
        map[v] = -1;
      }
    }
  };
  rec(rec, 0);
  return count;
}

inline std::optional<dihedrant::Perm> isomorphism(const dihedrant::Graph& g1,
                                                  const dihedrant::Graph& g2)
{
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  int n = g1.vertex_count();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        if (g1.adjacent(u, v) != g2.adjacent(images[u], images[v]))
          ok = false;
      }
    }
    if (ok)
      return dihedrant::Perm(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

inline dihedrant::Graph random_graph(int n, std::uint32_t seed)
{
  std::mt19937 rng(seed);
  dihedrant::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1)
        g.add_edge(u, v);
    }
  }
  return g;
}

inline dihedrant::Perm random_perm(int n, std::mt19937& rng)
{
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return dihedrant::Perm(images);
}

// Random word in the generators.
inline dihedrant::Perm random_word(const std::vector<dihedrant::Perm>& gens, int degree,
                                   std::mt19937& rng, int length = 12)
{
  dihedrant::Perm p(degree);
  if (gens.empty())
    return p;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int k = 0; k < length; ++k)
    p = compose(p, gens[pick(rng)]);
  return p;
}

} // namespace oracle

#endif
