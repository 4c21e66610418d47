#include "dihedrant/stabilizer_chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace dihedrant {

StabilizerChain StabilizerChain::build(int degree, const std::vector<Perm>& gens,
                                       const std::vector<int>& base_prefix)
{
  StabilizerChain chain;
  chain._degree = degree;

  std::vector<char> used(degree, 0);
  for (int b : base_prefix) {
    if (b < 0 || b >= degree)
      throw std::invalid_argument("StabilizerChain: base point out of range");
    if (used[b])
      throw std::invalid_argument("StabilizerChain: duplicate base point");
    used[b] = 1;
    chain.add_level(b);
  }

  for (const Perm& g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("StabilizerChain: generator degree mismatch");
    chain.insert_residue(g);
  }
  chain.close();
  return chain;
}

void StabilizerChain::add_level(int base_point)
{
  Level lvl;
  lvl.base_point = base_point;
  lvl.orbit = {base_point};
  lvl.orbit_pos.assign(_degree, -1);
  lvl.orbit_pos[base_point] = 0;
  lvl.transversal = {Perm(_degree)};
  lvl.inv_transversal = {Perm(_degree)};
  lvl.processed = {0};
  _levels.push_back(std::move(lvl));
}

std::vector<int> StabilizerChain::base() const
{
  std::vector<int> b;
  for (const Level& lvl : _levels)
    b.push_back(lvl.base_point);
  return b;
}

GroupOrder StabilizerChain::order() const
{
  GroupOrder n = 1;
  for (const Level& lvl : _levels)
    n *= (int)lvl.orbit.size();
  return n;
}

std::vector<Perm> StabilizerChain::strong_generators(int level) const
{
  std::vector<Perm> out;
  for (std::size_t id = 0; id < _gens.size(); ++id) {
    if (_gen_level[id] >= level)
      out.push_back(_gens[id]);
  }
  return out;
}

std::vector<int> StabilizerChain::effective_gen_ids(int level) const
{
  std::vector<int> ids;
  for (std::size_t id = 0; id < _gens.size(); ++id) {
    if (_gen_level[id] >= level)
      ids.push_back((int)id);
  }
  return ids;
}

std::pair<Perm, int> StabilizerChain::sift(const Perm& g, int level) const
{
  Perm h = g;
  for (int i = level; i < depth(); ++i) {
    const Level& lvl = _levels[i];
    int img = h[lvl.base_point];
    int pos = lvl.orbit_pos[img];
    if (pos < 0)
      return {h, i};
    h = compose(h, lvl.inv_transversal[pos]);
  }
  return {h, depth()};
}

bool StabilizerChain::contains(const Perm& g) const
{
  if (g.degree() != _degree)
    throw std::invalid_argument("StabilizerChain::contains: degree mismatch");
  auto [res, lvl] = sift(g);
  return lvl == depth() && res.is_identity();
}

void StabilizerChain::insert_residue(const Perm& g)
{
  auto [res, lvl] = sift(g);
  if (res.is_identity())
    return;
  if (lvl == depth()) {
    // residue fixes the whole base so far; open a new level at the first
    // point it moves
    int b = -1;
    for (int i = 0; i < _degree; ++i) {
      if (res[i] != i) {
        b = i;
        break;
      }
    }
    add_level(b);
  }
  _gens.push_back(res);
  _gen_level.push_back(lvl);
}

void StabilizerChain::close()
{
  // Incremental Schreier generator processing. Every (orbit point, gen)
  // pair is handled exactly once: it either grows the orbit or yields a
  // Schreier generator that must sift to identity further down.
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (int i = 0; i < depth(); ++i) {
      Level& lvl = _levels[i];
      for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
        for (;;) {
          std::vector<int> eff = effective_gen_ids(i);
          if (lvl.processed[k] >= (int)eff.size())
            break;
          const Perm& s = _gens[eff[lvl.processed[k]]];
          ++lvl.processed[k];
          int from = lvl.orbit[k];
          int img = s[from];
          int pos = lvl.orbit_pos[img];
          if (pos < 0) {
            lvl.orbit.push_back(img);
            lvl.orbit_pos[img] = (int)lvl.orbit.size() - 1;
            Perm t = compose(lvl.transversal[k], s);
            lvl.inv_transversal.push_back(t.inverse());
            lvl.transversal.push_back(std::move(t));
            lvl.processed.push_back(0);
            continue;
          }
          Perm sch = compose(compose(lvl.transversal[k], s), lvl.inv_transversal[pos]);
          if (sch.is_identity())
            continue;
          auto [res, at] = sift(sch, i + 1);
          if (res.is_identity())
            continue;
          if (at == depth()) {
            int b = -1;
            for (int v = 0; v < _degree; ++v) {
              if (res[v] != v) {
                b = v;
                break;
              }
            }
            add_level(b);
          }
          _gens.push_back(res);
          _gen_level.push_back(at);
          dirty = true;
        }
      }
    }
  }
}

void StabilizerChain::extend(const Perm& g)
{
  if (g.degree() != _degree)
    throw std::invalid_argument("StabilizerChain::extend: degree mismatch");
  insert_residue(g);
  close();
}

StabilizerChain StabilizerChain::point_stabilizer(int point) const
{
  if (point < 0 || point >= _degree)
    throw std::invalid_argument("point_stabilizer: point out of range");
  if (depth() == 0 || _levels[0].base_point == point) {
    std::vector<int> rest;
    for (int i = 1; i < depth(); ++i)
      rest.push_back(_levels[i].base_point);
    return build(_degree, strong_generators(depth() == 0 ? 0 : 1), rest);
  }
  StabilizerChain moved = build(_degree, strong_generators(), {point});
  return moved.point_stabilizer(point);
}

bool is_transitive(const std::vector<Perm>& gens, int domain_size)
{
  if (domain_size <= 0)
    throw std::invalid_argument("is_transitive: empty domain");
  return (int)orbit_of(gens, 0).size() == domain_size;
}

bool is_regular(const StabilizerChain& chain)
{
  return is_transitive(chain.strong_generators(), chain.degree()) &&
         chain.order() == chain.degree();
}

bool is_semiregular(const StabilizerChain& chain)
{
  GroupOrder n = chain.order();
  auto gens = chain.strong_generators();
  for (const auto& orb : orbits_of(gens, chain.degree())) {
    if (GroupOrder((int)orb.size()) != n)
      return false;
  }
  return true;
}

} // namespace dihedrant
