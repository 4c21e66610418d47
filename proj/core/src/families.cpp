#include "dihedrant/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "dihedrant/autsearch.hpp"
#include "dihedrant/util.hpp"

namespace dihedrant {

std::string FamilyLabel::to_string() const
{
  switch (tag) {
    case Tag::Complete: return "K_" + std::to_string(a);
    case Tag::Cycle: return "C_" + std::to_string(a);
    case Tag::CompleteBipartite:
      return "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case Tag::CompleteBipartiteMinusMatching:
      return "K_{" + std::to_string(a) + "," + std::to_string(a) + "}-" +
             std::to_string(a) + "K_2";
    case Tag::CompleteMultipartite:
      return "K_{" + std::to_string(a) + "[" + std::to_string(b) + "]}";
    case Tag::Paley: return "P(" + std::to_string(a) + ")";
    case Tag::IncidenceH11: return "B(H_11)";
    case Tag::NonIncidenceH11: return "B'(H_11)";
    case Tag::Hypercube: return "Q_" + std::to_string(a);
    case Tag::GeneralizedPetersen:
      return "GP(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Tag::Unrecognized: return "unrecognized";
  }
  return "unrecognized";
}

Graph complete(int n)
{
  if (n < 1)
    throw std::invalid_argument("complete: n >= 1 required");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  }
  return g;
}

Graph cycle(int n)
{
  if (n < 3)
    throw std::invalid_argument("cycle: n >= 3 required");
  Graph g(n);
  for (int v = 0; v < n; ++v)
    g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete_bipartite(int a, int b)
{
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete_bipartite: positive part sizes required");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v)
      g.add_edge(u, a + v);
  }
  return g;
}

Graph complete_bipartite_minus_matching(int n)
{
  if (n < 2)
    throw std::invalid_argument("complete_bipartite_minus_matching: n >= 2 required");
  Graph g(2 * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v)
        g.add_edge(u, n + v);
    }
  }
  return g;
}

Graph complete_multipartite(int m, int b)
{
  if (m < 1 || b < 1)
    throw std::invalid_argument("complete_multipartite: positive parameters required");
  int n = m * b;
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / b != v / b)
        g.add_edge(u, v);
    }
  }
  return g;
}

Graph hypercube(int d)
{
  if (d < 1)
    throw std::invalid_argument("hypercube: d >= 1 required");
  if (d > 20)
    throw std::invalid_argument("hypercube: dimension too large");
  int n = 1 << d;
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < d; ++bit) {
      int u = v ^ (1 << bit);
      if (u > v)
        g.add_edge(v, u);
    }
  }
  return g;
}

Graph generalized_petersen(int n, int k)
{
  if (n < 3 || k < 1 || 2 * k >= n)
    throw std::invalid_argument("generalized_petersen: need n >= 3 and 1 <= k < n/2");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);      // outer cycle
    g.add_edge(i, n + i);            // spokes
    int j = n + (i + k) % n;         // inner star polygon
    if (!g.adjacent(n + i, j))
      g.add_edge(n + i, j);
  }
  return g;
}

Graph paley(int p)
{
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("paley: p must be a prime congruent to 1 mod 4");
  std::vector<char> residue(p, 0);
  for (int x = 1; x < p; ++x)
    residue[(x * x) % p] = 1;
  Graph g(p);
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) {
      if (residue[(v - u) % p])
        g.add_edge(u, v);
    }
  }
  return g;
}

Graph hadamard11(Hadamard11Kind kind)
{
  const int qr[] = {1, 3, 4, 5, 9};  // quadratic residues mod 11
  std::vector<char> in_base(11, 0);
  for (int r : qr)
    in_base[r] = 1;

  Graph g(22);
  for (int block = 0; block < 11; ++block) {
    for (int point = 0; point < 11; ++point) {
      bool incident = in_base[mod(point - block, 11)];
      if ((kind == Hadamard11Kind::Incidence) == incident)
        g.add_edge(point, 11 + block);
    }
  }
  return g;
}

namespace {

bool is_complete(const Graph& g)
{
  int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle(const Graph& g)
{
  return g.vertex_count() >= 3 && valency(g) == 2 && is_connected(g);
}

// complement decomposes into m >= 3 equal cliques of size b >= 2
std::optional<std::pair<int, int>> multipartite_parameters(const Graph& g)
{
  Graph co = complement(g);
  auto comps = connected_components(co);
  int m = (int)comps.size();
  if (m < 3)
    return std::nullopt;
  int b = (int)comps.front().size();
  if (b < 2)
    return std::nullopt;
  for (const auto& comp : comps) {
    if ((int)comp.size() != b)
      return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        if (!co.adjacent(comp[i], comp[j]))
          return std::nullopt;
      }
    }
  }
  return std::make_pair(m, b);
}

std::optional<std::pair<int, int>> bipartite_parameters(const Graph& g)
{
  auto side = bipartition(g);
  if (!side)
    return std::nullopt;
  int a = 0;
  for (int s : *side)
    a += (s == 0);
  int b = g.vertex_count() - a;
  if (g.edge_count() != a * b)
    return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

bool is_cocktail_bipartite(const Graph& g, int half)
{
  // (half-1)-regular bipartite with exactly one non-neighbor across parts
  auto side = bipartition(g);
  if (!side)
    return false;
  int count0 = 0;
  for (int s : *side)
    count0 += (s == 0);
  if (count0 * 2 != g.vertex_count())
    return false;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != half - 1)
      return false;
    int missing = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v != u && (*side)[v] != (*side)[u] && !g.adjacent(u, v))
        ++missing;
    }
    if (missing != 1)
      return false;
  }
  return true;
}

} // namespace

FamilyLabel recognize(const Graph& g)
{
  if (!is_connected(g))
    throw std::invalid_argument("recognize: graph must be connected");
  int n = g.vertex_count();

  if (is_complete(g))
    return {FamilyLabel::Tag::Complete, n, 0};
  if (is_cycle(g))
    return {FamilyLabel::Tag::Cycle, n, 0};
  if (auto ab = bipartite_parameters(g))
    return {FamilyLabel::Tag::CompleteBipartite, ab->first, ab->second};
  if (auto mb = multipartite_parameters(g))
    return {FamilyLabel::Tag::CompleteMultipartite, mb->first, mb->second};
  if (n % 2 == 0 && n >= 6 && is_cocktail_bipartite(g, n / 2))
    return {FamilyLabel::Tag::CompleteBipartiteMinusMatching, n / 2, 0};

  auto val = valency(g);
  if (!val)
    return {FamilyLabel::Tag::Unrecognized, 0, 0};

  if (is_prime(n) && n % 4 == 1 && *val == (n - 1) / 2) {
    if (canonical_form(g) == canonical_form(paley(n)))
      return {FamilyLabel::Tag::Paley, n, 0};
  }
  if (n == 22 && *val == 5 &&
      canonical_form(g) == canonical_form(hadamard11(Hadamard11Kind::Incidence)))
    return {FamilyLabel::Tag::IncidenceH11, 0, 0};
  if (n == 22 && *val == 6 &&
      canonical_form(g) == canonical_form(hadamard11(Hadamard11Kind::NonIncidence)))
    return {FamilyLabel::Tag::NonIncidenceH11, 0, 0};

  if (*val >= 2 && n == (1 << *val) &&
      canonical_form(g) == canonical_form(hypercube(*val)))
    return {FamilyLabel::Tag::Hypercube, *val, 0};

  if (*val == 3 && n % 2 == 0 && n >= 6) {
    auto form = canonical_form(g);
    for (int k = 1; 2 * k < n / 2; ++k) {
      if (form == canonical_form(generalized_petersen(n / 2, k)))
        return {FamilyLabel::Tag::GeneralizedPetersen, n / 2, k};
    }
  }
  return {FamilyLabel::Tag::Unrecognized, 0, 0};
}

} // namespace dihedrant
