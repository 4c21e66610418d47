#ifndef DIHEDRANT_PERM_HPP
#define DIHEDRANT_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dihedrant {

/// Permutation of {0, ..., degree-1}, stored as its image table.
/// Composition convention across the whole library: compose(p, q) applies
/// p first, then q.
class Perm
{
public:
  Perm() = default;

  explicit Perm(int degree);                       // identity
  explicit Perm(std::vector<int> images);          // validates bijection

  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return (int)_images.size(); }
  int operator[](int i) const { return _images[i]; }

  bool is_identity() const;

  Perm inverse() const;

  bool operator==(const Perm& other) const = default;

  const std::vector<int>& images() const { return _images; }

  std::string to_cycle_string() const;

  std::uint64_t hash() const;

private:
  std::vector<int> _images;
};

/// Applies lhs first, then rhs: result[i] = rhs[lhs[i]].
Perm compose(const Perm& lhs, const Perm& rhs);

/// rhs^{-1} * lhs * rhs in apply-left-first convention.
Perm conjugate(const Perm& lhs, const Perm& rhs);

/// Smallest set containing `point` closed under all generators, sorted.
std::vector<int> orbit_of(const std::vector<Perm>& gens, int point);

/// All orbits on {0, ..., n-1}, each sorted, ordered by smallest element.
std::vector<std::vector<int>> orbits_of(const std::vector<Perm>& gens, int n);

struct PermHash
{
  std::size_t operator()(const Perm& p) const { return (std::size_t)p.hash(); }
};

} // namespace dihedrant

#endif
