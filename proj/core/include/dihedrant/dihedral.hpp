#ifndef DIHEDRANT_DIHEDRAL_HPP
#define DIHEDRANT_DIHEDRAL_HPP

#include <string>
#include <vector>

namespace dihedrant {

/// Element x^rotation y^flip of D_2n = <x, y | x^n = y^2 = 1, x^y = x^{-1}>.
struct DihedralElem
{
  int rotation = 0;
  bool flip = false;

  bool operator==(const DihedralElem& other) const = default;
};

enum class GroupKind { Cyclic, Dihedral };

/// Z_n or D_2n with a fixed element indexing: cyclic i <-> x^i; dihedral
/// rotations x^0..x^{n-1} come first (indices 0..n-1), then reflections
/// x^0 y..x^{n-1} y (indices n..2n-1).
struct GroupSpec
{
  GroupKind kind = GroupKind::Cyclic;
  int n = 1;

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int n);

  int order() const { return kind == GroupKind::Cyclic ? n : 2 * n; }
  int identity() const { return 0; }

  int mul(int a, int b) const;
  int inv(int a) const;
  int element_order(int a) const;

  DihedralElem element(int index) const;
  int index(const DihedralElem& e) const;

  std::string element_name(int index) const;

  bool operator==(const GroupSpec& other) const = default;
};

} // namespace dihedrant

#endif
