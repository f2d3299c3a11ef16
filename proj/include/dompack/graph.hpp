#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "dompack/vertex_set.hpp"

namespace dompack {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Same edge with u < v.
  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// Values are immutable once built; edits go through the free functions
/// below and return fresh copies. 1 <= n <= kMaxVertices.
class Graph {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws PreconditionError on self-loops, repeated edges, or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return n_; }
  int m() const { return m_; }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

  int max_degree() const;
  int min_degree() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  friend Graph add_edge(const Graph& g, Vertex u, Vertex v);
  friend Graph delete_edge(const Graph& g, Vertex u, Vertex v);
  void connect(Vertex u, Vertex v);

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Undirected multigraph without loops. Only produced by the planar
/// triangulation, where parallel edges are legitimate.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;

  int degree(Vertex v) const;
  int multiplicity(Vertex u, Vertex v) const;
  bool is_simple() const;
  /// Throws PreconditionError when parallel edges are present.
  Graph to_simple() const;
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// N[S] = union of N[s] over s in S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// All vertices at distance <= 2 from v.
VertexSet second_closed_neighborhood(const Graph& g, Vertex v);

/// BFS distance; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
/// Distances from src to every vertex, -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

/// N[d] ∪ x = V(g).
bool is_dominating(const Graph& g, const VertexSet& d, const VertexSet& x = {});
/// p ∩ x = ∅ and the closed neighborhoods of p are pairwise disjoint.
bool is_packing(const Graph& g, const VertexSet& p, const VertexSet& x = {});
bool is_independent(const Graph& g, const VertexSet& s);

struct VertexDeletion {
  Graph graph;
  /// old index -> new index, -1 for the deleted vertex.
  std::vector<Vertex> index_map;
};

VertexDeletion delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);

struct InducedSubgraph {
  Graph graph;
  /// new index -> old index.
  std::vector<Vertex> original;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// One colour class of a proper 2-colouring (colour 0 = lowest vertex of each
/// component), or nullopt when g has an odd cycle.
std::optional<VertexSet> bipartition(const Graph& g);

}  // namespace dompack
