#include "dihedrant/cayley.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dihedrant/autsearch.hpp"
#include "dihedrant/perm_group.hpp"
#include "dihedrant/stabilizer_chain.hpp"
#include "dihedrant/util.hpp"

namespace dihedrant {

std::string ConnectionSet::tokens() const
{
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i)
      out += ',';
    out += group.element_name(elements[i]);
  }
  return out;
}

ConnectionSetValidation validate_connection_set(const ConnectionSet& s)
{
  ConnectionSetValidation v;
  if (s.elements.empty()) {
    v.ok = false;
    v.reasons.push_back("empty connection set");
    return v;
  }
  std::vector<char> member(s.group.order(), 0);
  for (int e : s.elements) {
    if (e < 0 || e >= s.group.order())
      throw std::invalid_argument("connection set element out of range");
    member[e] = 1;
  }
  if (member[s.group.identity()]) {
    v.ok = false;
    v.reasons.push_back("contains the identity");
  }
  for (int e : s.elements) {
    if (!member[s.group.inv(e)]) {
      v.ok = false;
      v.reasons.push_back("not inverse-closed: missing inverse of " +
                          s.group.element_name(e));
    }
  }
  // subgroup closure
  std::vector<char> reached(s.group.order(), 0);
  reached[s.group.identity()] = 1;
  std::vector<int> queue{s.group.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int e : s.elements) {
      int img = s.group.mul(queue[k], e);
      if (!reached[img]) {
        reached[img] = 1;
        queue.push_back(img);
      }
    }
  }
  if ((int)queue.size() != s.group.order()) {
    v.ok = false;
    v.reasons.push_back("does not generate the group");
  }
  return v;
}

ConnectionSet parse_connection_tokens(const GroupSpec& group, const std::string& tokens)
{
  ConnectionSet s{group, {}};
  std::stringstream in(tokens);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](char c) { return c == ' ' || c == '\t'; }),
              tok.end());
    if (tok.empty())
      throw std::invalid_argument("connection set: empty token");
    bool flip = false;
    int rot = 0;
    if (tok == "y") {
      flip = true;
    } else {
      if (tok.rfind("x^", 0) != 0)
        throw std::invalid_argument("connection set: bad token '" + tok + "'");
      std::string rest = tok.substr(2);
      std::size_t star = rest.find("*y");
      if (star != std::string::npos) {
        flip = true;
        if (star + 2 != rest.size())
          throw std::invalid_argument("connection set: bad token '" + tok + "'");
        rest = rest.substr(0, star);
      }
      std::size_t used = 0;
      rot = std::stoi(rest, &used);
      if (used != rest.size())
        throw std::invalid_argument("connection set: bad token '" + tok + "'");
    }
    if (flip && group.kind == GroupKind::Cyclic)
      throw std::invalid_argument("connection set: reflection token in cyclic group");
    s.elements.push_back(group.index({rot, flip}));
  }
  std::sort(s.elements.begin(), s.elements.end());
  s.elements.erase(std::unique(s.elements.begin(), s.elements.end()), s.elements.end());
  return s;
}

Graph cayley_graph(const ConnectionSet& s)
{
  auto v = validate_connection_set(s);
  if (!v.ok) {
    std::string msg = "cayley_graph: invalid connection set";
    for (const auto& r : v.reasons)
      msg += "; " + r;
    throw std::invalid_argument(msg);
  }
  int order = s.group.order();
  Graph g(order);
  for (int x = 0; x < order; ++x) {
    for (int e : s.elements) {
      int sg = s.group.mul(e, x);  // edge {g, sg}
      if (!g.adjacent(x, sg))
        g.add_edge(x, sg);
    }
  }
  return g;
}

std::vector<Perm> right_regular_rep(const GroupSpec& group)
{
  auto right_mul = [&](int g) {
    std::vector<int> images(group.order());
    for (int x = 0; x < group.order(); ++x)
      images[x] = group.mul(x, g);
    return Perm(std::move(images));
  };
  if (group.kind == GroupKind::Cyclic)
    return {right_mul(mod(1, group.n))};
  return {right_mul(group.index({1, false})), right_mul(group.index({0, true}))};
}

std::vector<Perm> dihedral_automorphisms(int n)
{
  if (n < 1)
    throw std::invalid_argument("dihedral_automorphisms: n must be positive");
  if (n == 1)
    return {};
  if (n == 2) {
    // D_4 = Z_2 x Z_2; Aut permutes the three involutions x, y, xy freely
    return {Perm({0, 2, 1, 3}), Perm({0, 1, 3, 2})};
  }
  GroupSpec group = GroupSpec::dihedral(n);
  std::vector<Perm> gens;
  auto sigma = [&](int a, int b) {
    // x -> x^a, y -> x^b y acting on elements: x^i y^e -> x^{a i + e b} y^e
    std::vector<int> images(2 * n);
    for (int i = 0; i < n; ++i) {
      images[i] = group.index({mod(a * i, n), false});
      images[n + i] = group.index({mod(a * i + b, n), true});
    }
    return Perm(std::move(images));
  };
  for (int a = 2; a < n; ++a) {
    if (std::gcd(a, n) == 1)
      gens.push_back(sigma(a, 0));
  }
  gens.push_back(sigma(1, 1));
  return gens;
}

std::vector<Perm> group_automorphism_elements(const GroupSpec& group)
{
  std::vector<Perm> gens;
  if (group.kind == GroupKind::Cyclic) {
    for (int a = 1; a < group.n; ++a) {
      if (std::gcd(a, group.n) == 1) {
        std::vector<int> images(group.n);
        for (int i = 0; i < group.n; ++i)
          images[i] = mod(a * i, group.n);
        gens.push_back(Perm(std::move(images)));
      }
    }
    if (gens.empty())
      gens.push_back(Perm(group.n));
    return gens;
  }
  gens = dihedral_automorphisms(group.n);

  // closure under composition
  std::vector<Perm> all{Perm(group.order())};
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (const Perm& g : gens) {
      Perm p = compose(all[k], g);
      if (std::find(all.begin(), all.end(), p) == all.end())
        all.push_back(p);
    }
  }
  return all;
}

bool is_normal_cayley(const Graph& g, const GroupSpec& group)
{
  if (g.vertex_count() != group.order())
    throw std::invalid_argument("is_normal_cayley: graph order mismatch");
  auto rrr = right_regular_rep(group);
  auto aut = automorphism_group(g, {.seeds = rrr});
  StabilizerChain reg = StabilizerChain::build(group.order(), rrr);
  return is_normal_subgroup(aut.chain, reg);
}

ConnectionSet ConnectionAtoms::realize(std::uint64_t mask) const
{
  ConnectionSet s{group, {}};
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if ((mask >> k) & 1)
      s.elements.insert(s.elements.end(), atoms[k].begin(), atoms[k].end());
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

std::uint64_t ConnectionAtoms::mask_of(const ConnectionSet& s) const
{
  std::vector<int> atom_of(group.order(), -1);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    for (int e : atoms[k])
      atom_of[e] = (int)k;
  }
  std::uint64_t mask = 0;
  for (int e : s.elements) {
    if (atom_of[e] < 0)
      throw std::invalid_argument("mask_of: element is not part of any atom");
    mask |= 1ULL << atom_of[e];
  }
  if (realize(mask).elements != s.elements)
    throw std::invalid_argument("mask_of: set is not a union of atoms");
  return mask;
}

ConnectionAtoms connection_atoms(const GroupSpec& group)
{
  ConnectionAtoms ca{group, {}};
  int n = group.n;
  for (int i = 1; 2 * i < n; ++i) {
    if (group.kind == GroupKind::Cyclic)
      ca.atoms.push_back({i, mod(-i, n)});
    else
      ca.atoms.push_back({group.index({i, false}), group.index({mod(-i, n), false})});
  }
  if (n % 2 == 0 && n >= 2)
    ca.atoms.push_back({group.kind == GroupKind::Cyclic ? n / 2
                                                        : group.index({n / 2, false})});
  if (group.kind == GroupKind::Dihedral) {
    for (int i = 0; i < n; ++i)
      ca.atoms.push_back({group.index({i, true})});
  }
  if (ca.atoms.size() > 63)
    throw std::invalid_argument("connection_atoms: group too large to enumerate");
  return ca;
}

namespace {

// atom permutations induced by the group automorphisms, as byte-sliced
// lookup tables so that a subset mask maps in a handful of ORs
struct AtomAction
{
  std::size_t atom_count = 0;
  std::vector<std::array<std::uint64_t, 256>> tables;  // auts * byte slices

  std::size_t slice_count() const { return (atom_count + 7) / 8; }
  std::size_t aut_count() const { return tables.size() / slice_count(); }

  std::uint64_t apply(std::size_t aut, std::uint64_t mask) const
  {
    const auto* t = &tables[aut * slice_count()];
    std::uint64_t img = 0;
    for (std::size_t s = 0; s < slice_count(); ++s)
      img |= t[s][(mask >> (8 * s)) & 0xff];
    return img;
  }
};

AtomAction build_atom_action(const ConnectionAtoms& ca)
{
  auto auts = group_automorphism_elements(ca.group);
  std::vector<int> atom_of(ca.group.order(), -1);
  for (std::size_t k = 0; k < ca.atoms.size(); ++k) {
    for (int e : ca.atoms[k])
      atom_of[e] = (int)k;
  }

  AtomAction action;
  action.atom_count = ca.atoms.size();
  for (const Perm& aut : auts) {
    std::vector<int> atom_perm(ca.atoms.size());
    for (std::size_t k = 0; k < ca.atoms.size(); ++k) {
      int img = atom_of[aut[ca.atoms[k].front()]];
      if (img < 0)
        throw std::logic_error("connection atom action: image is not an atom");
      atom_perm[k] = img;
    }
    for (std::size_t s = 0; s < action.slice_count(); ++s) {
      std::array<std::uint64_t, 256> table{};
      for (int byte = 0; byte < 256; ++byte) {
        std::uint64_t img = 0;
        for (int b = 0; b < 8; ++b) {
          std::size_t atom = 8 * s + b;
          if ((byte >> b) & 1 && atom < ca.atoms.size())
            img |= 1ULL << atom_perm[atom];
        }
        table[byte] = img;
      }
      action.tables.push_back(table);
    }
  }
  return action;
}

bool generates(const GroupSpec& group, const std::vector<int>& elements)
{
  if (elements.empty())
    return group.order() == 1;
  std::vector<char> reached(group.order(), 0);
  reached[group.identity()] = 1;
  std::vector<int> queue{group.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int e : elements) {
      int img = group.mul(queue[k], e);
      if (!reached[img]) {
        reached[img] = 1;
        queue.push_back(img);
      }
    }
  }
  return (int)queue.size() == group.order();
}

} // namespace

void enumerate_connection_sets(const GroupSpec& group, EnumerationMode mode,
                               const std::function<void(const ConnectionSet&)>& sink)
{
  if (group.kind == GroupKind::Dihedral && group.n < 2)
    throw std::invalid_argument("enumerate_connection_sets: dihedral n >= 2 required");
  if (group.kind == GroupKind::Cyclic && group.n < 3)
    throw std::invalid_argument("enumerate_connection_sets: cyclic n >= 3 required");

  ConnectionAtoms ca = connection_atoms(group);
  AtomAction action;
  if (mode == EnumerationMode::UpToEquivalence)
    action = build_atom_action(ca);

  std::uint64_t top = 1ULL << ca.atoms.size();
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    if (mode == EnumerationMode::UpToEquivalence) {
      // orbit representative = smallest mask value in the Aut-orbit
      bool least = true;
      for (std::size_t a = 0; a < action.aut_count() && least; ++a)
        least = action.apply(a, mask) >= mask;
      if (!least)
        continue;
    }
    ConnectionSet s = ca.realize(mask);
    if (!generates(group, s.elements))
      continue;
    sink(s);
  }
}

std::vector<ConnectionSet> list_connection_sets(const GroupSpec& group, EnumerationMode mode)
{
  std::vector<ConnectionSet> out;
  enumerate_connection_sets(group, mode, [&](const ConnectionSet& s) { out.push_back(s); });
  return out;
}

std::uint64_t connection_set_orbit_size(const ConnectionAtoms& ca, std::uint64_t mask)
{
  AtomAction action = build_atom_action(ca);
  std::vector<std::uint64_t> images;
  for (std::size_t a = 0; a < action.aut_count(); ++a)
    images.push_back(action.apply(a, mask));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images.size();
}

} // namespace dihedrant
