#include "dompack/recognition.hpp"

#include <algorithm>
#include <unordered_set>

#include "dompack/errors.hpp"
#include "dompack/rng.hpp"

namespace dompack {

std::vector<int> Ordering::positions() const {
  std::vector<int> pos(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
  return pos;
}

VertexSet Ordering::suffix(int i) const {
  VertexSet s;
  for (std::size_t k = i; k < perm.size(); ++k) s.insert(perm[k]);
  return s;
}

bool is_permutation_of(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) return false;
  VertexSet seen;
  for (Vertex v : perm) {
    if (v < 0 || v >= g.n() || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

bool is_tree(const Graph& g) { return g.m() == g.n() - 1 && is_connected(g); }

bool is_homogeneous_within(const Graph& g, const VertexSet& a, const VertexSet& within) {
  if (a.empty()) throw PreconditionError("homogeneous sets are nonempty");
  VertexSet outside = within - a;
  VertexSet reference = g.neighbors(a.first()) & outside;
  for (Vertex v : a)
    if ((g.neighbors(v) & outside) != reference) return false;
  return true;
}

bool is_homogeneous(const Graph& g, const VertexSet& a) { return is_homogeneous_within(g, a, g.vertices()); }

std::optional<HExtremalWitness> find_h_extremal_witness_within(const Graph& g, Vertex v, const VertexSet& within) {
  g.check_vertex(v);
  if (!within.contains(v)) throw PreconditionError("vertex outside the induced subgraph");
  const VertexSet closed = g.closed_neighbors(v) & within;
  if (closed.size() - 1 > kHExtremalDegreeCap)
    throw BudgetExceeded("h-extremal search: degree " + std::to_string(closed.size() - 1) + " exceeds cap " +
                         std::to_string(kHExtremalDegreeCap));
  VertexSet target;
  for (Vertex u : closed) target |= g.closed_neighbors(u);
  target &= within;

  const std::vector<Vertex> cand = closed.to_vector();
  const int k = static_cast<int>(cand.size());
  std::vector<int> idx;
  for (int size = 1; size <= k; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet d;
      VertexSet covered;
      for (int i : idx) {
        d.insert(cand[i]);
        covered |= g.closed_neighbors(cand[i]);
      }
      if (target.is_subset_of(covered) && is_homogeneous_within(g, d, within)) return HExtremalWitness{v, d};
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == k - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<HExtremalWitness> find_h_extremal_witness(const Graph& g, Vertex v) {
  return find_h_extremal_witness_within(g, v, g.vertices());
}

namespace {

class HomogeneousOrderingSearch {
 public:
  HomogeneousOrderingSearch(const Graph& g, std::uint64_t budget, std::vector<Vertex> priority)
      : g_(g), budget_(budget), priority_(std::move(priority)) {}

  bool run(const VertexSet& remaining) {
    if (remaining.empty()) return true;
    if (failed_.contains(remaining)) return false;
    if (++nodes_ > budget_) throw BudgetExceeded("homogeneous ordering search exceeded its node budget");
    for (Vertex v : priority_) {
      if (!remaining.contains(v) || !find_h_extremal_witness_within(g_, v, remaining)) continue;
      perm_.push_back(v);
      VertexSet rest = remaining;
      rest.erase(v);
      if (run(rest)) return true;
      perm_.pop_back();
    }
    failed_.insert(remaining);
    return false;
  }

  std::vector<Vertex> perm_;

 private:
  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> priority_;
  std::unordered_set<VertexSet, VertexSetHash> failed_;
};

}  // namespace

std::optional<Ordering> find_homogeneous_ordering(const Graph& g, std::uint64_t node_budget,
                                                  std::uint64_t priority_seed) {
  std::vector<Vertex> priority = g.vertices().to_vector();
  if (priority_seed != 0) Rng(priority_seed).shuffle(priority);
  HomogeneousOrderingSearch search(g, node_budget, std::move(priority));
  if (!search.run(g.vertices())) return std::nullopt;
  Ordering ord{std::move(search.perm_), OrderingKind::kHomogeneous};
  if (!is_homogeneous_ordering(g, ord.perm))
    throw ConstructionError("homogeneous ordering failed revalidation");
  return ord;
}

bool is_homogeneous_ordering(const Graph& g, const std::vector<Vertex>& perm) {
  if (!is_permutation_of(g, perm)) return false;
  VertexSet suffix = g.vertices();
  for (Vertex v : perm) {
    if (!find_h_extremal_witness_within(g, v, suffix)) return false;
    suffix.erase(v);
  }
  return true;
}

Graph split_clique(const Graph& g, const VertexSet& side) {
  if (!side.is_subset_of(g.vertices())) throw PreconditionError("split side contains non-vertices");
  if (!is_independent(g, side) || !is_independent(g, g.vertices() - side))
    throw PreconditionError("graph is not bipartite with the given side");
  std::vector<Edge> edges = g.edges();
  std::vector<Vertex> members = side.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.push_back({members[i], members[j]});
  return Graph(g.n(), edges);
}

bool is_simple_vertex(const Graph& g, Vertex v, const VertexSet& within) {
  std::vector<VertexSet> hoods;
  for (Vertex u : g.closed_neighbors(v) & within) hoods.push_back(g.closed_neighbors(u) & within);
  std::sort(hoods.begin(), hoods.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  for (std::size_t i = 1; i < hoods.size(); ++i)
    if (!hoods[i - 1].is_subset_of(hoods[i])) return false;
  return true;
}

std::optional<Ordering> find_simple_elimination_ordering(const Graph& g) {
  Ordering ord{{}, OrderingKind::kSimpleElimination};
  VertexSet remaining = g.vertices();
  while (!remaining.empty()) {
    Vertex pick = -1;
    for (Vertex v : remaining) {
      if (is_simple_vertex(g, v, remaining)) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    ord.perm.push_back(pick);
    remaining.erase(pick);
  }
  return ord;
}

bool is_simple_elimination_ordering(const Graph& g, const std::vector<Vertex>& perm) {
  if (!is_permutation_of(g, perm)) return false;
  VertexSet suffix = g.vertices();
  for (Vertex v : perm) {
    if (!is_simple_vertex(g, v, suffix)) return false;
    suffix.erase(v);
  }
  return true;
}

bool is_gamma_free(const Graph& g, const std::vector<Vertex>& rows, const std::vector<Vertex>& cols) {
  if (!is_permutation_of(g, rows) || !is_permutation_of(g, cols)) throw PreconditionError("orders must be permutations");
  const int n = g.n();
  std::vector<int> col_pos(n);
  for (int i = 0; i < n; ++i) col_pos[cols[i]] = i;
  std::vector<VertexSet> row_bits(n);
  for (int r = 0; r < n; ++r)
    for (Vertex u : g.closed_neighbors(rows[r])) row_bits[r].insert(col_pos[u]);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int c = (row_bits[a] & row_bits[b]).first();
      if (c < 0) continue;
      for (int d = row_bits[a].next(c); d >= 0; d = row_bits[a].next(d))
        if (!row_bits[b].contains(d)) return false;
    }
  }
  return true;
}

namespace {

// Stable sort of `order` by the row of each vertex read against `other`,
// compared as binary strings whose later positions are more significant.
bool lexical_sort(const Graph& g, std::vector<Vertex>& order, const std::vector<Vertex>& other) {
  const int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[other[i]] = i;
  std::vector<std::vector<int>> key(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.closed_neighbors(v)) key[v].push_back(pos[u]);
    std::sort(key[v].begin(), key[v].end(), std::greater<>());
  }
  std::vector<Vertex> sorted = order;
  std::stable_sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
  const bool changed = sorted != order;
  order = std::move(sorted);
  return changed;
}

}  // namespace

MatrixOrdering doubly_lexical_ordering(const Graph& g, const std::vector<Vertex>& start, int max_rounds) {
  if (!is_permutation_of(g, start)) throw PreconditionError("start order must be a permutation");
  MatrixOrdering mo{start, start};
  for (int round = 0; round < max_rounds; ++round) {
    const bool rows_moved = lexical_sort(g, mo.rows, mo.cols);
    const bool cols_moved = lexical_sort(g, mo.cols, mo.rows);
    if (!rows_moved && !cols_moved) return mo;
  }
  throw ConstructionError("doubly lexical ordering did not settle");
}

namespace {

VertexSet colour_class(const Graph& g) {
  auto side = bipartition(g);
  if (!side) throw PreconditionError("graph is not bipartite");
  return *side;
}

}  // namespace

bool is_chordal_bipartite(const Graph& g) {
  return find_simple_elimination_ordering(split_clique(g, colour_class(g))).has_value();
}

bool is_chordal_bipartite_via_other_side(const Graph& g) {
  return find_simple_elimination_ordering(split_clique(g, g.vertices() - colour_class(g))).has_value();
}

}  // namespace dompack
