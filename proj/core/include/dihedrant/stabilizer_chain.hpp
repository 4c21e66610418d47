#ifndef DIHEDRANT_STABILIZER_CHAIN_HPP
#define DIHEDRANT_STABILIZER_CHAIN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dihedrant/perm.hpp"
#include "dihedrant/util.hpp"

namespace dihedrant {

/// Base and strong generating set computed with a deterministic
/// (non-randomized) Schreier-Sims procedure.
///
/// The base can be forced to start with given points via `base_prefix`,
/// which makes point and arc stabilizers directly extractable.
class StabilizerChain
{
public:
  StabilizerChain() = default;

  static StabilizerChain build(int degree, const std::vector<Perm>& gens,
                               const std::vector<int>& base_prefix = {});

  int degree() const { return _degree; }
  int depth() const { return (int)_levels.size(); }

  std::vector<int> base() const;

  /// Exact group order (product of basic orbit lengths).
  GroupOrder order() const;

  /// Strong generators fixing base[0..level-1] pointwise. Level 0 gives a
  /// generating set of the whole group.
  std::vector<Perm> strong_generators(int level = 0) const;

  /// Basic orbit of base[level].
  const std::vector<int>& basic_orbit(int level) const { return _levels[level].orbit; }

  bool contains(const Perm& g) const;

  /// Sifts g starting from `level`; returns the residue and the level at
  /// which sifting stopped (== depth() when it ran through).
  std::pair<Perm, int> sift(const Perm& g, int level = 0) const;

  /// Adds one more generator and re-closes the chain.
  void extend(const Perm& g);

  /// Chain for the subgroup fixing `point`. Rebuilds with a moved base
  /// unless `point` already heads the base.
  StabilizerChain point_stabilizer(int point) const;

  /// Visits every group element in a deterministic order. Stops and
  /// returns false once `cap` elements have been visited without
  /// exhausting the group.
  template <typename F>
  bool for_each_element(F&& f, std::uint64_t cap) const
  {
    std::uint64_t count = 0;
    Perm id(_degree);
    return enumerate(depth() - 1, id, f, count, cap);
  }

private:
  struct Level
  {
    int base_point = -1;
    std::vector<int> orbit;          // discovery order; orbit[0] == base_point
    std::vector<int> orbit_pos;      // point -> index into orbit, or -1
    std::vector<Perm> transversal;   // [k] maps base_point to orbit[k]
    std::vector<Perm> inv_transversal;
    std::vector<int> processed;      // per orbit index: prefix of effective gens done
  };

  int _degree = 0;
  std::vector<Perm> _gens;       // strong generator pool
  std::vector<int> _gen_level;   // level each pool entry is assigned to
  std::vector<Level> _levels;

  void add_level(int base_point);
  std::vector<int> effective_gen_ids(int level) const;
  void insert_residue(const Perm& g);
  void close();

  template <typename F>
  bool enumerate(int level, const Perm& suffix, F& f, std::uint64_t& count,
                 std::uint64_t cap) const
  {
    if (level < 0) {
      if (count++ >= cap)
        return false;
      f(suffix);
      return true;
    }
    for (const Perm& t : _levels[level].transversal) {
      if (!enumerate(level - 1, compose(suffix, t), f, count, cap))
        return false;
    }
    return true;
  }
};

/// True iff the generated group has a single orbit on {0,...,domain_size-1}.
bool is_transitive(const std::vector<Perm>& gens, int domain_size);

/// Transitive with order equal to the degree.
bool is_regular(const StabilizerChain& chain);

/// Every point stabilizer trivial (equivalently all orbits have full group size).
bool is_semiregular(const StabilizerChain& chain);

} // namespace dihedrant

#endif
