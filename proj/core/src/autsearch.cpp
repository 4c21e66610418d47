#include "dihedrant/autsearch.hpp"

#include <algorithm>
#include <stdexcept>

#include "dihedrant/bitset.hpp"
#include "dihedrant/util.hpp"

namespace dihedrant {

OrderedPartition OrderedPartition::unit(int n)
{
  OrderedPartition pi;
  pi.cell_of.assign(n, 0);
  pi.cells.emplace_back(n);
  for (int v = 0; v < n; ++v)
    pi.cells[0][v] = v;
  return pi;
}

OrderedPartition OrderedPartition::from_cells(std::vector<std::vector<int>> cells, int n)
{
  OrderedPartition pi;
  pi.cell_of.assign(n, -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty())
      throw std::invalid_argument("OrderedPartition: empty cell");
    for (int v : cells[c]) {
      if (v < 0 || v >= n || pi.cell_of[v] != -1)
        throw std::invalid_argument("OrderedPartition: cells must partition the vertex set");
      pi.cell_of[v] = (int)c;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (pi.cell_of[v] == -1)
      throw std::invalid_argument("OrderedPartition: cells must cover the vertex set");
  }
  pi.cells = std::move(cells);
  return pi;
}

namespace {

// Working partition: vertices grouped contiguously, a cell identified by
// its start position (stable under in-place splitting).
struct WorkPartition
{
  std::vector<int> elems;       // vertices in cell order
  std::vector<int> pos;         // pos[v] = index of v in elems
  std::vector<int> cell_start;  // per position: start of the containing cell
  std::vector<int> cell_len;    // valid at cell start positions
  int cell_count = 0;

  int n() const { return (int)elems.size(); }
  bool discrete() const { return cell_count == n(); }

  static WorkPartition from(const OrderedPartition& pi)
  {
    WorkPartition p;
    int n = (int)pi.cell_of.size();
    p.elems.reserve(n);
    p.pos.assign(n, -1);
    p.cell_start.assign(n, 0);
    p.cell_len.assign(n, 0);
    for (const auto& cell : pi.cells) {
      int start = (int)p.elems.size();
      for (int v : cell) {
        p.pos[v] = (int)p.elems.size();
        p.elems.push_back(v);
      }
      for (int q = start; q < (int)p.elems.size(); ++q)
        p.cell_start[q] = start;
      p.cell_len[start] = (int)cell.size();
    }
    p.cell_count = (int)pi.cells.size();
    return p;
  }

  OrderedPartition to_ordered() const
  {
    OrderedPartition pi;
    pi.cell_of.assign(n(), -1);
    for (int start = 0; start < n(); start += cell_len[start]) {
      std::vector<int> cell(elems.begin() + start, elems.begin() + start + cell_len[start]);
      for (int v : cell)
        pi.cell_of[v] = (int)pi.cells.size();
      pi.cells.push_back(std::move(cell));
    }
    return pi;
  }
};

class Refiner
{
public:
  explicit Refiner(const Graph& g) : _g(g) {}

  // Refines in place to the coarsest equitable partition; the trace hash
  // accumulates only label-invariant data (cell positions, counts, sizes).
  void refine(WorkPartition& p, std::vector<int> worklist, std::uint64_t& trace)
  {
    int n = p.n();
    std::vector<char> queued(n, 0);
    std::vector<int> queue = std::move(worklist);
    for (int s : queue)
      queued[s] = 1;

    std::vector<int> counts(n);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int splitter = queue[head];
      queued[splitter] = 0;
      if (p.cell_count == n)
        break;

      Bitset members(n);
      int slen = p.cell_len[splitter];
      for (int q = splitter; q < splitter + slen; ++q)
        members.set(p.elems[q]);

      // snapshot cell starts; fragments created below are already
      // count-homogeneous with respect to this splitter
      std::vector<int> targets;
      for (int start = 0; start < n; start += p.cell_len[start]) {
        if (p.cell_len[start] > 1)
          targets.push_back(start);
      }

      for (int t : targets) {
        int len = p.cell_len[t];
        int first = _g.row(p.elems[t]).intersect_count(members);
        bool uniform = true;
        for (int q = t; q < t + len; ++q) {
          counts[p.elems[q]] = _g.row(p.elems[q]).intersect_count(members);
          if (counts[p.elems[q]] != first)
            uniform = false;
        }
        if (uniform)
          continue;

        std::stable_sort(p.elems.begin() + t, p.elems.begin() + t + len,
                         [&](int a, int b) { return counts[a] < counts[b]; });

        trace = hash_combine(trace, (std::uint64_t)splitter);
        trace = hash_combine(trace, (std::uint64_t)t);

        int frag = t;
        for (int q = t; q < t + len; ++q) {
          p.pos[p.elems[q]] = q;
          if (q > t && counts[p.elems[q]] != counts[p.elems[q - 1]]) {
            p.cell_len[frag] = q - frag;
            trace = hash_combine(trace, (std::uint64_t)counts[p.elems[q - 1]]);
            trace = hash_combine(trace, (std::uint64_t)(q - frag));
            ++p.cell_count;
            frag = q;
          }
          p.cell_start[q] = frag;
        }
        p.cell_len[frag] = t + len - frag;
        trace = hash_combine(trace, (std::uint64_t)counts[p.elems[t + len - 1]]);
        trace = hash_combine(trace, (std::uint64_t)(t + len - frag));

        for (int q = t; q < t + len; q += p.cell_len[q]) {
          if (!queued[q]) {
            queued[q] = 1;
            queue.push_back(q);
          }
        }
      }
    }
  }

  // Splits v off the front of its cell and refines from the fragments.
  void individualize(WorkPartition& p, int v, std::uint64_t& trace)
  {
    int start = p.cell_start[p.pos[v]];
    int len = p.cell_len[start];
    if (len < 2)
      throw std::logic_error("individualize: vertex already in a singleton cell");

    int vq = p.pos[v];
    std::swap(p.elems[start], p.elems[vq]);
    p.pos[p.elems[vq]] = vq;
    p.pos[v] = start;

    p.cell_len[start] = 1;
    p.cell_len[start + 1] = len - 1;
    for (int q = start + 1; q < start + len; ++q)
      p.cell_start[q] = start + 1;
    ++p.cell_count;

    trace = hash_combine(trace, 0x1d1dULL);
    trace = hash_combine(trace, (std::uint64_t)start);
    refine(p, {start, start + 1}, trace);
  }

private:
  const Graph& _g;
};

// first smallest non-singleton cell, ties by lowest start
int target_cell(const WorkPartition& p)
{
  int best = -1, best_len = 0;
  for (int start = 0; start < p.n(); start += p.cell_len[start]) {
    int len = p.cell_len[start];
    if (len > 1 && (best == -1 || len < best_len)) {
      best = start;
      best_len = len;
    }
  }
  return best;
}

std::uint64_t node_invariant(const WorkPartition& p, std::uint64_t trace)
{
  std::uint64_t h = hash_combine(trace, (std::uint64_t)p.cell_count);
  for (int start = 0; start < p.n(); start += p.cell_len[start])
    h = hash_combine(h, (std::uint64_t)p.cell_len[start]);
  return h;
}

std::vector<std::uint8_t> leaf_bits(const Graph& g, const WorkPartition& p)
{
  int n = p.n();
  std::vector<std::uint8_t> bits((std::size_t)(n * (n - 1) / 2 + 7) / 8, 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (g.adjacent(p.elems[i], p.elems[j]))
        bits[k >> 3] |= (std::uint8_t)(1 << (7 - (k & 7)));
    }
  }
  return bits;
}

Perm leaf_labeling(const WorkPartition& p)
{
  std::vector<int> images(p.n());
  for (int q = 0; q < p.n(); ++q)
    images[p.elems[q]] = q;
  return Perm(std::move(images));
}

struct LeafData
{
  std::vector<std::uint64_t> invs;   // node invariant per depth (invs[0] = root)
  std::vector<int> choices;          // individualized vertices
  std::vector<std::uint8_t> bits;
  Perm labeling;
  bool known = false;
};

class Search
{
public:
  Search(const Graph& g, bool want_canonical, const AutSearchOptions& opt)
  : _g(g),
    _refiner(g),
    _want_canonical(want_canonical),
    _max_nodes(opt.max_nodes),
    _root_orbits(g.vertex_count()),
    _chain(StabilizerChain::build(g.vertex_count(), verify_seeds(g, opt.seeds),
                                  opt.chain_base_prefix))
  {
    _gens = opt.seeds;
    for (const Perm& s : opt.seeds)
      merge_orbits(s);
  }

  void run()
  {
    int n = _g.vertex_count();
    if (n == 0)
      throw std::invalid_argument("automorphism search: empty graph");

    WorkPartition root = WorkPartition::from(OrderedPartition::unit(n));
    std::uint64_t trace = 0x9e3779b97f4a7c15ULL;
    count_node();
    _refiner.refine(root, {0}, trace);
    _path_invs.push_back(node_invariant(root, trace));
    descend(root, 0);
  }

  const Graph& _g;
  Refiner _refiner;
  bool _want_canonical;
  std::uint64_t _max_nodes;
  std::uint64_t _nodes = 0;

  std::vector<Perm> _gens;
  UnionFind _root_orbits;
  StabilizerChain _chain;

  LeafData _first, _best;
  std::vector<std::uint64_t> _path_invs;
  std::vector<int> _path_choices;

private:
  static std::vector<Perm> verify_seeds(const Graph& g, const std::vector<Perm>& seeds)
  {
    for (const Perm& s : seeds) {
      if (!is_automorphism(g, s))
        throw std::invalid_argument("automorphism search: seed is not an automorphism");
    }
    return seeds;
  }

  void count_node()
  {
    if (++_nodes > _max_nodes)
      throw BudgetExceeded(_nodes);
  }

  void merge_orbits(const Perm& p)
  {
    for (int v = 0; v < p.degree(); ++v)
      _root_orbits.unite(v, p[v]);
  }

  void record_automorphism(const Perm& gamma)
  {
    if (!is_automorphism(_g, gamma))
      throw std::logic_error("automorphism search: derived map is not an automorphism");
    if (_chain.contains(gamma))
      return;
    _chain.extend(gamma);
    _gens.push_back(gamma);
    merge_orbits(gamma);
  }

  // -1 = lexicographically below the reference path, 0 = equal so far, +1 = above
  int compare_prefix(const LeafData& ref, int depth) const
  {
    if (!ref.known)
      return 0;
    for (int i = 0; i <= depth; ++i) {
      if (i >= (int)ref.invs.size())
        return 1;
      if (_path_invs[i] != ref.invs[i])
        return _path_invs[i] < ref.invs[i] ? -1 : 1;
    }
    return 0;
  }

  int deviation_level(const LeafData& ref) const
  {
    for (std::size_t i = 0; i < _path_choices.size(); ++i) {
      if (i >= ref.choices.size() || _path_choices[i] != ref.choices[i])
        return (int)i;
    }
    return (int)_path_choices.size();
  }

  // Returns the level at which the search should resume.
  int handle_leaf(const WorkPartition& p, int level)
  {
    LeafData leaf;
    leaf.invs = _path_invs;
    leaf.choices = _path_choices;
    leaf.bits = leaf_bits(_g, p);
    leaf.labeling = leaf_labeling(p);
    leaf.known = true;

    if (!_first.known) {
      _first = leaf;
      _best = std::move(leaf);
      return level - 1;
    }

    if (compare_prefix(_first, level) == 0 && leaf.bits == _first.bits) {
      // gamma maps the first leaf's labeling onto this one
      record_automorphism(compose(_first.labeling, leaf.labeling.inverse()));
      return deviation_level(_first);
    }

    if (_want_canonical) {
      int cmp = compare_prefix(_best, level);
      if (cmp > 0 || (cmp == 0 && leaf.bits > _best.bits)) {
        _best = std::move(leaf);
        return level - 1;
      }
      if (cmp == 0 && leaf.bits == _best.bits) {
        record_automorphism(compose(_best.labeling, leaf.labeling.inverse()));
        return deviation_level(_best);
      }
    }
    return level - 1;
  }

  // `level` counts individualizations done so far.
  int descend(const WorkPartition& p, int level)
  {
    if (p.discrete())
      return handle_leaf(p, level);

    int cell = target_cell(p);
    std::vector<int> candidates(p.elems.begin() + cell,
                                p.elems.begin() + cell + p.cell_len[cell]);

    std::vector<int> explored;
    for (int c : candidates) {
      if (level == 0) {
        // root-level orbit pruning under the discovered group
        bool skip = false;
        for (int e : explored) {
          if (_root_orbits.find(e) == _root_orbits.find(c)) {
            skip = true;
            break;
          }
        }
        if (skip)
          continue;
        explored.push_back(c);
      }

      WorkPartition child = p;
      std::uint64_t trace = _path_invs[level];
      count_node();
      _refiner.individualize(child, c, trace);

      _path_choices.push_back(c);
      _path_invs.push_back(node_invariant(child, trace));

      int resume = (int)_path_choices.size();  // proceed unless pruned
      bool prune = false;
      if (_first.known) {
        bool matches_first = compare_prefix(_first, level + 1) == 0;
        if (_want_canonical)
          prune = !matches_first && compare_prefix(_best, level + 1) < 0;
        else
          prune = !matches_first;
      }
      if (!prune)
        resume = descend(child, level + 1);

      _path_choices.pop_back();
      _path_invs.pop_back();

      if (!prune && resume < level)
        return resume;
    }
    return level - 1;
  }
};

} // namespace

OrderedPartition equitable_refinement(const Graph& g, const OrderedPartition& pi)
{
  if ((int)pi.cell_of.size() != g.vertex_count())
    throw std::invalid_argument("equitable_refinement: partition size mismatch");
  WorkPartition p = WorkPartition::from(pi);
  std::vector<int> worklist;
  for (int start = 0; start < p.n(); start += p.cell_len[start])
    worklist.push_back(start);
  std::uint64_t trace = 0;
  Refiner(g).refine(p, std::move(worklist), trace);
  return p.to_ordered();
}

bool is_equitable(const Graph& g, const OrderedPartition& pi)
{
  for (const auto& cell : pi.cells) {
    for (const auto& other : pi.cells) {
      Bitset members(g.vertex_count());
      for (int v : other)
        members.set(v);
      int expected = g.row(cell.front()).intersect_count(members);
      for (int v : cell) {
        if (g.row(v).intersect_count(members) != expected)
          return false;
      }
    }
  }
  return true;
}

AutGroupResult automorphism_group(const Graph& g, const AutSearchOptions& options)
{
  Search search(g, /*want_canonical=*/false, options);
  search.run();
  return {std::move(search._gens), std::move(search._chain), search._nodes};
}

CanonicalResult canonical_labeling(const Graph& g, std::uint64_t max_nodes)
{
  AutSearchOptions opt;
  opt.max_nodes = max_nodes;
  Search search(g, /*want_canonical=*/true, opt);
  search.run();
  return {std::move(search._best.bits), std::move(search._best.labeling), search._nodes};
}

std::vector<std::uint8_t> canonical_form(const Graph& g, std::uint64_t max_nodes)
{
  return canonical_labeling(g, max_nodes).form;
}

std::optional<Perm> are_isomorphic(const Graph& g1, const Graph& g2, std::uint64_t max_nodes)
{
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;

  CanonicalResult c1 = canonical_labeling(g1, max_nodes);
  CanonicalResult c2 = canonical_labeling(g2, max_nodes);
  if (c1.form != c2.form)
    return std::nullopt;

  Perm witness = compose(c1.labeling, c2.labeling.inverse());
  if (apply_permutation(g1, witness) != g2)
    throw std::logic_error("are_isomorphic: canonical forms matched but witness failed");
  return witness;
}

} // namespace dihedrant
