#ifndef DIHEDRANT_UTIL_HPP
#define DIHEDRANT_UTIL_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dihedrant {

// Group orders grow past 64 bits quickly (|Aut(K_34)| = 34!).
using GroupOrder = boost::multiprecision::cpp_int;

inline std::uint64_t mix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v)
{
  return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

inline bool is_prime(int n)
{
  if (n < 2)
    return false;
  for (int d = 2; (long long)d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

inline int mod(int a, int n)
{
  int r = a % n;
  return r < 0 ? r + n : r;
}

// Disjoint-set forest over 0..n-1.
class UnionFind
{
public:
  explicit UnionFind(int n) : _parent(n)
  {
    for (int i = 0; i < n; ++i)
      _parent[i] = i;
  }

  int find(int x) const
  {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  // Returns true if the two classes were distinct.
  bool unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    _parent[b] = a;  // keep the smallest element as representative
    return true;
  }

private:
  mutable std::vector<int> _parent;
};

} // namespace dihedrant

#endif
