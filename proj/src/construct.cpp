#include "dompack/construct.hpp"

#include <algorithm>
#include <numeric>

#include "dompack/errors.hpp"
#include "dompack/exact.hpp"
#include "dompack/rng.hpp"

namespace dompack {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kTree:
      return "tree";
    case GraphClass::kStronglyChordal:
      return "strongly-chordal";
    case GraphClass::kChordalBipartite:
      return "chordal-bipartite";
    case GraphClass::kHomogeneouslyOrderable:
      return "homogeneously-orderable";
  }
  return "unknown";
}

GraphClass parse_graph_class(std::string_view name) {
  for (GraphClass c : {GraphClass::kTree, GraphClass::kStronglyChordal, GraphClass::kChordalBipartite,
                       GraphClass::kHomogeneouslyOrderable})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown graph class '" + std::string(name) + "'");
}

nlohmann::json DomPackCertificate::to_json() const {
  return {{"class", to_string(graph_class)},
          {"D", d.to_vector()},
          {"P", p.to_vector()},
          {"bound", bound.to_fraction_string()},
          {"valid", valid}};
}

bool revalidate(const Graph& g, DomPackCertificate& cert) {
  cert.valid = is_dominating(g, cert.d) && is_packing(g, cert.p) && !cert.p.empty() &&
               Rational(cert.d.size()) <= cert.bound * Rational(cert.p.size());
  return cert.valid;
}

namespace {

constexpr std::uint64_t kIndexSumNodeBudget = 2000000;

DomPackCertificate checked(const Graph& g, DomPackCertificate cert, const char* what) {
  if (!revalidate(g, cert))
    throw ConstructionError(std::string(what) + ": certificate failed revalidation (|D|=" +
                            std::to_string(cert.d.size()) + ", |P|=" + std::to_string(cert.p.size()) + ")");
  return cert;
}

}  // namespace

DomPackCertificate tree_dompack(const Graph& t, Vertex root) {
  if (!is_tree(t)) throw PreconditionError("tree_dompack: input is not a tree");
  t.check_vertex(root);
  const std::vector<int> depth = bfs_distances(t, root);
  std::vector<Vertex> parent(t.n(), root);
  for (Vertex v = 0; v < t.n(); ++v)
    for (Vertex u : t.neighbors(v))
      if (depth[u] == depth[v] - 1) parent[v] = u;

  std::vector<Vertex> scan(t.n());
  std::iota(scan.begin(), scan.end(), 0);
  std::stable_sort(scan.begin(), scan.end(), [&](Vertex a, Vertex b) { return depth[a] > depth[b]; });

  DomPackCertificate cert;
  cert.graph_class = GraphClass::kTree;
  cert.bound = Rational(1);
  cert.p = complete_packing(t, {}, scan);
  for (Vertex p : cert.p) cert.d.insert(parent[p]);
  return checked(t, cert, "tree_dompack");
}

DomPackCertificate strongly_chordal_dompack(const Graph& g, const Ordering& ord) {
  if (!is_simple_elimination_ordering(g, ord.perm))
    throw PreconditionError("strongly_chordal_dompack: not a simple elimination ordering");
  // A simple elimination ordering alone does not make the greedy sound; it
  // needs a gamma-free ordering of the closed-neighborhood matrix.
  MatrixOrdering mo{ord.perm, ord.perm};
  if (!is_gamma_free(g, mo.rows, mo.cols)) mo = doubly_lexical_ordering(g, ord.perm);
  if (!is_gamma_free(g, mo.rows, mo.cols))
    throw ConstructionError("strongly_chordal_dompack: neighborhood matrix has no gamma-free ordering");
  std::vector<int> col_pos(g.n());
  for (int i = 0; i < g.n(); ++i) col_pos[mo.cols[i]] = i;

  DomPackCertificate cert;
  cert.graph_class = GraphClass::kStronglyChordal;
  cert.bound = Rational(1);
  VertexSet dominated;
  for (Vertex v : mo.rows) {
    if (dominated.contains(v)) continue;
    Vertex latest = v;
    for (Vertex u : g.closed_neighbors(v))
      if (col_pos[u] > col_pos[latest]) latest = u;
    cert.d.insert(latest);
    cert.p.insert(v);
    dominated |= g.closed_neighbors(latest);
  }
  return checked(g, cert, "strongly_chordal_dompack");
}

DomPackCertificate chordal_bipartite_dompack(const Graph& g) {
  auto side = bipartition(g);
  if (!side) throw PreconditionError("chordal_bipartite_dompack: graph is not bipartite");
  const VertexSet a = *side;
  const VertexSet b = g.vertices() - a;

  auto run = [&](const VertexSet& clique_side) {
    Graph split = split_clique(g, clique_side);
    auto ord = find_simple_elimination_ordering(split);
    if (!ord) throw PreconditionError("chordal_bipartite_dompack: graph is not chordal bipartite");
    return strongly_chordal_dompack(split, *ord);
  };
  DomPackCertificate cert_a = run(a);
  DomPackCertificate cert_b = run(b);

  DomPackCertificate cert;
  cert.graph_class = GraphClass::kChordalBipartite;
  cert.bound = Rational(2);
  cert.d = cert_a.d | cert_b.d;
  cert.p = cert_a.p.size() >= cert_b.p.size() ? cert_a.p : cert_b.p;
  return checked(g, cert, "chordal_bipartite_dompack");
}

DomPackCertificate homogeneously_orderable_dompack(const Graph& g, const Ordering& ord) {
  if (!is_homogeneous_ordering(g, ord.perm))
    throw PreconditionError("homogeneously_orderable_dompack: not a homogeneous ordering");
  const int n = g.n();
  const std::vector<int> pos = ord.positions();

  std::vector<Vertex> f(n, -1);
  auto dominator_of = [&](Vertex v) {
    if (f[v] < 0) {
      auto w = find_h_extremal_witness_within(g, v, ord.suffix(pos[v]));
      if (!w) throw ConstructionError("ordering position lost its h-extremal witness");
      f[v] = w->dominators.first();
    }
    return f[v];
  };

  auto build_d = [&](const VertexSet& p) {
    VertexSet d = p;
    for (Vertex v : p) d.insert(dominator_of(v));
    return d;
  };
  auto accept = [&](const VertexSet& p) { return is_dominating(g, build_d(p)); };

  VertexSet p;
  int exchanges = 0;
  try {
    auto found = min_index_sum_maximal_packing(g, ord.perm, kIndexSumNodeBudget, accept);
    if (!found)
      throw ConstructionError("homogeneously_orderable_dompack: no maximal packing P makes P ∪ f(P) dominating");
    p = found->packing;
    exchanges = found->exchanges;
  } catch (const BudgetExceeded&) {
    // Too large for the exact search: local search, then exchange steps that
    // trade the unique later packing member near an undominated vertex for it.
    KeyedPacking keyed = maximal_packing_keyed(g, PackingKey::kIndexSumMin, ord.perm);
    p = keyed.packing;
    exchanges = keyed.exchanges;
    for (int step = 0; !accept(p); ++step) {
      if (step >= n * n) throw ConstructionError("homogeneously_orderable_dompack: construction did not converge");
      bool moved = false;
      for (Vertex w : g.vertices() - closed_neighborhood(g, build_d(p))) {
        VertexSet near;
        for (Vertex z : p)
          if (g.closed_neighbors(z).intersects(g.closed_neighbors(w))) near.insert(z);
        if (near.size() != 1 || pos[w] > pos[near.first()]) continue;
        p.erase(near.first());
        p.insert(w);
        p = complete_packing(g, p, ord.perm);
        ++exchanges;
        moved = true;
        break;
      }
      if (!moved) throw ConstructionError("homogeneously_orderable_dompack: construction did not converge");
    }
  }
  const VertexSet d = build_d(p);

  DomPackCertificate cert;
  cert.graph_class = GraphClass::kHomogeneouslyOrderable;
  cert.bound = Rational(2);
  cert.d = d;
  cert.p = p;
  cert.exchanges = exchanges;
  return checked(g, cert, "homogeneously_orderable_dompack");
}

DomPackCertificate homogeneously_orderable_dompack_reordering(const Graph& g, const std::optional<Ordering>& first,
                                                              int extra_orderings) {
  std::optional<Ordering> ord = first ? first : find_homogeneous_ordering(g);
  if (!ord) throw PreconditionError("homogeneously_orderable_dompack: graph has no homogeneous ordering");
  for (int attempt = 0;; ++attempt) {
    try {
      DomPackCertificate cert = homogeneously_orderable_dompack(g, *ord);
      cert.orderings_tried = attempt + 1;
      return cert;
    } catch (const ConstructionError&) {
      if (attempt >= extra_orderings) throw;
    }
    ord = find_homogeneous_ordering(g, 200000, derive_seed(0x686f6d, static_cast<std::uint64_t>(attempt + 1)));
  }
}

}  // namespace dompack
