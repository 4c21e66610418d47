#include "dihedrant/dihedral.hpp"

#include <stdexcept>

#include "dihedrant/util.hpp"

namespace dihedrant {

GroupSpec GroupSpec::cyclic(int n)
{
  if (n < 1)
    throw std::invalid_argument("GroupSpec: n must be positive");
  return {GroupKind::Cyclic, n};
}

GroupSpec GroupSpec::dihedral(int n)
{
  if (n < 1)
    throw std::invalid_argument("GroupSpec: n must be positive");
  return {GroupKind::Dihedral, n};
}

int GroupSpec::mul(int a, int b) const
{
  if (a < 0 || b < 0 || a >= order() || b >= order())
    throw std::invalid_argument("GroupSpec::mul: element out of range");
  if (kind == GroupKind::Cyclic)
    return mod(a + b, n);
  DihedralElem ea = element(a);
  DihedralElem eb = element(b);
  // (x^i y^e)(x^j y^d) = x^{i + (-1)^e j} y^{e+d}
  int rot = mod(ea.rotation + (ea.flip ? -eb.rotation : eb.rotation), n);
  return index({rot, ea.flip != eb.flip});
}

int GroupSpec::inv(int a) const
{
  if (a < 0 || a >= order())
    throw std::invalid_argument("GroupSpec::inv: element out of range");
  if (kind == GroupKind::Cyclic)
    return mod(-a, n);
  DihedralElem e = element(a);
  if (e.flip)
    return a;  // reflections are involutions
  return index({mod(-e.rotation, n), false});
}

int GroupSpec::element_order(int a) const
{
  int k = 1;
  int acc = a;
  while (acc != identity()) {
    acc = mul(acc, a);
    ++k;
  }
  return k;
}

DihedralElem GroupSpec::element(int index) const
{
  if (kind == GroupKind::Cyclic)
    return {index, false};
  return index < n ? DihedralElem{index, false} : DihedralElem{index - n, true};
}

int GroupSpec::index(const DihedralElem& e) const
{
  int r = mod(e.rotation, n);
  if (kind == GroupKind::Cyclic) {
    if (e.flip)
      throw std::invalid_argument("GroupSpec::index: cyclic group has no reflections");
    return r;
  }
  return e.flip ? n + r : r;
}

std::string GroupSpec::element_name(int idx) const
{
  DihedralElem e = element(idx);
  if (!e.flip)
    return "x^" + std::to_string(e.rotation);
  if (e.rotation == 0)
    return "y";
  return "x^" + std::to_string(e.rotation) + "*y";
}

} // namespace dihedrant
