#include "dihedrant/perm.hpp"

#include <algorithm>
#include <stdexcept>

#include "dihedrant/util.hpp"

namespace dihedrant {

Perm::Perm(int degree) : _images(degree)
{
  for (int i = 0; i < degree; ++i)
    _images[i] = i;
}

Perm::Perm(std::vector<int> images) : _images(std::move(images))
{
  std::vector<char> seen(_images.size(), 0);
  for (int v : _images) {
    if (v < 0 || v >= (int)_images.size() || seen[v])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles)
{
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i)
    images[i] = i;
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 0 || from >= degree)
        throw std::invalid_argument("Perm::from_cycles: point out of range");
      images[from] = to;
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const
{
  for (int i = 0; i < degree(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Perm Perm::inverse() const
{
  std::vector<int> inv(_images.size());
  for (int i = 0; i < degree(); ++i)
    inv[_images[i]] = i;
  Perm p;
  p._images = std::move(inv);
  return p;
}

std::string Perm::to_cycle_string() const
{
  std::string out;
  std::vector<char> seen(_images.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first)
        out += ' ';
      out += std::to_string(j);
      first = false;
      j = _images[j];
    }
    out += ')';
  }
  if (out.empty())
    out = "()";
  return out;
}

std::uint64_t Perm::hash() const
{
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (int v : _images)
    h = hash_combine(h, (std::uint64_t)v);
  return h;
}

Perm compose(const Perm& lhs, const Perm& rhs)
{
  if (lhs.degree() != rhs.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(lhs.degree());
  for (int i = 0; i < lhs.degree(); ++i)
    images[i] = rhs[lhs[i]];
  return Perm(std::move(images));
}

Perm conjugate(const Perm& lhs, const Perm& rhs)
{
  return compose(compose(rhs.inverse(), lhs), rhs);
}

std::vector<int> orbit_of(const std::vector<Perm>& gens, int point)
{
  if (gens.empty())
    return {point};
  int n = gens.front().degree();
  if (point < 0 || point >= n)
    throw std::invalid_argument("orbit_of: point out of range");
  for (const Perm& g : gens) {
    if (g.degree() != n)
      throw std::invalid_argument("orbit_of: degree mismatch");
  }

  std::vector<char> seen(n, 0);
  std::vector<int> queue{point};
  seen[point] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const Perm& g : gens) {
      int img = g[queue[k]];
      if (!seen[img]) {
        seen[img] = 1;
        queue.push_back(img);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<int>> orbits_of(const std::vector<Perm>& gens, int n)
{
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> result;
  for (int v = 0; v < n; ++v) {
    if (seen[v])
      continue;
    auto orb = orbit_of(gens, v);
    for (int u : orb)
      seen[u] = 1;
    result.push_back(std::move(orb));
  }
  return result;
}

} // namespace dihedrant
