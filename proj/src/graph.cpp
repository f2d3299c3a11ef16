#include "dompack/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string>

#include "dompack/errors.hpp"

namespace dompack {

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : *this) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw PreconditionError("graph order must lie in [1, " + std::to_string(kMaxVertices) + "], got " +
                            std::to_string(n));
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    if (adj_[e.u].contains(e.v))
      throw PreconditionError("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    connect(e.u, e.v);
  }
}

void Graph::connect(Vertex u, Vertex v) {
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n_));
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

int Graph::min_degree() const {
  int d = n_;
  for (const auto& a : adj_) d = std::min(d, a.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

int Multigraph::degree(Vertex v) const {
  int d = 0;
  for (const Edge& e : edges) d += (e.u == v) + (e.v == v);
  return d;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  Edge key = Edge{u, v}.normalized();
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [&](const Edge& e) { return e.normalized() == key; }));
}

bool Multigraph::is_simple() const {
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) sorted.push_back(e.normalized());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Graph Multigraph::to_simple() const {
  if (!is_simple()) throw PreconditionError("multigraph has parallel edges");
  return Graph(n, edges);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.closed_neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out |= g.closed_neighbors(v);
  return out;
}

VertexSet second_closed_neighborhood(const Graph& g, Vertex v) {
  return closed_neighborhood(g, g.closed_neighbors(v));
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  g.check_vertex(src);
  std::vector<int> dist(g.n(), -1);
  std::deque<Vertex> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_dominating(const Graph& g, const VertexSet& d, const VertexSet& x) {
  VertexSet covered = closed_neighborhood(g, d) | x;
  return g.vertices().is_subset_of(covered);
}

bool is_packing(const Graph& g, const VertexSet& p, const VertexSet& x) {
  if (p.intersects(x)) return false;
  VertexSet seen;
  for (Vertex v : p) {
    VertexSet nv = g.closed_neighbors(v);
    if (nv.intersects(seen)) return false;
    seen |= nv;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

VertexDeletion delete_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Vertex> map(g.n(), -1);
  Vertex next = 0;
  for (Vertex u = 0; u < g.n(); ++u)
    if (u != v) map[u] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back({map[e.u], map[e.v]});
  return {Graph(g.n() - 1, edges), std::move(map)};
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw PreconditionError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  Graph out = g;
  out.adj_[u].erase(v);
  out.adj_[v].erase(u);
  --out.m_;
  return out;
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (g.has_edge(u, v))
    throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
  Graph out = g;
  out.connect(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> original;
  std::vector<Vertex> map(g.n(), -1);
  for (Vertex v : keep) {
    g.check_vertex(v);
    map[v] = static_cast<Vertex>(original.size());
    original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (map[e.u] >= 0 && map[e.v] >= 0) edges.push_back({map[e.u], map[e.v]});
  return {Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp{unseen.first()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet grow = closed_neighborhood(g, frontier) - comp;
      comp |= grow;
      frontier = grow;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::optional<VertexSet> bipartition(const Graph& g) {
  std::vector<int> colour(g.n(), -1);
  VertexSet side;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (colour[u] == 0) side.insert(u);
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace dompack
