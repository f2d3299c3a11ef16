#include "dompack/planar.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "dompack/errors.hpp"
#include "dompack/rng.hpp"

namespace dompack {

class EmbeddingEditor {
 public:
  /// Adds edge u-v with its darts inserted at the given rotation indices.
  static void connect(PlanarEmbedding& e, Vertex u, int at_u, Vertex v, int at_v) {
    const int k = e.m();
    e.edges_.push_back({u, v});
    e.rot_[u].insert(e.rot_[u].begin() + at_u, 2 * k);
    e.rot_[v].insert(e.rot_[v].begin() + at_v, 2 * k + 1);
    e.pos_.resize(2 * (k + 1));
    e.reindex(u);
    e.reindex(v);
    e.rebuild_faces();
  }

  static void insert_chord(PlanarEmbedding& e, Dart in_u, Dart in_v) {
    Vertex u = e.head(in_u);
    Vertex v = e.head(in_v);
    if (u == v) throw PreconditionError("chord would be a self-loop");
    if (e.face_of(in_u) != e.face_of(in_v)) throw PreconditionError("chord corners lie on different faces");
    connect(e, u, e.pos_[PlanarEmbedding::twin(in_u)] + 1, v, e.pos_[PlanarEmbedding::twin(in_v)] + 1);
  }

  /// Joins the isolated vertex w to the corner entered by in_u.
  static void attach(PlanarEmbedding& e, Dart in_u, Vertex w) {
    if (!e.rot_[w].empty()) throw PreconditionError("attach target is not isolated");
    connect(e, e.head(in_u), e.pos_[PlanarEmbedding::twin(in_u)] + 1, w, 0);
  }

  /// Removes `edge`; the last edge takes over its index. Darts in `track`
  /// that belonged to the moved edge are renumbered in place.
  static void remove_edge(PlanarEmbedding& e, int edge, std::vector<Dart*> track = {}) {
    const int last = e.m() - 1;
    auto erase_dart = [&](Dart d) {
      auto& r = e.rot_[e.tail(d)];
      r.erase(std::find(r.begin(), r.end(), d));
    };
    erase_dart(2 * edge);
    erase_dart(2 * edge + 1);
    if (edge != last) {
      e.edges_[edge] = e.edges_[last];
      for (auto& r : e.rot_)
        for (Dart& d : r)
          if ((d >> 1) == last) d = 2 * edge + (d & 1);
      for (Dart* t : track)
        if ((*t >> 1) == last) *t = 2 * edge + (*t & 1);
    }
    e.edges_.pop_back();
    e.pos_.assign(2 * e.m(), 0);
    for (Vertex v = 0; v < e.n_; ++v) e.reindex(v);
    e.rebuild_faces();
  }
};

PlanarEmbedding::PlanarEmbedding(int n) : n_(n), rot_(n) {
  if (n < 1 || n > Graph::kMaxVertices) throw PreconditionError("embedding order out of range");
}

void PlanarEmbedding::reindex(Vertex v) {
  for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) pos_[rot_[v][i]] = i;
}

Dart PlanarEmbedding::face_successor(Dart d) const {
  Vertex h = head(d);
  const auto& r = rot_[h];
  return r[(pos_[twin(d)] + 1) % r.size()];
}

void PlanarEmbedding::rebuild_faces() {
  faces_.clear();
  face_index_.assign(2 * m(), -1);
  for (Dart start = 0; start < 2 * m(); ++start) {
    if (face_index_[start] >= 0) continue;
    std::vector<Dart> walk;
    Dart d = start;
    do {
      face_index_[d] = static_cast<int>(faces_.size());
      walk.push_back(d);
      d = face_successor(d);
    } while (d != start);
    faces_.push_back(std::move(walk));
  }
}

std::vector<std::vector<Vertex>> PlanarEmbedding::rotation_vertices() const {
  std::vector<std::vector<Vertex>> out(n_);
  for (Vertex v = 0; v < n_; ++v)
    for (Dart d : rot_[v]) out[v].push_back(head(d));
  return out;
}

Multigraph PlanarEmbedding::multigraph() const { return {n_, edges_}; }

Graph PlanarEmbedding::graph() const { return Graph(n_, edges_); }

bool PlanarEmbedding::is_triangulated() const {
  if (m() == 0) return false;
  return std::all_of(faces_.begin(), faces_.end(), [](const auto& f) { return f.size() == 3; });
}

bool PlanarEmbedding::satisfies_euler() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) parent[find(e.u)] = find(e.v);
  std::vector<long> count(n_, 0);
  for (Vertex v = 0; v < n_; ++v)
    if (!rot_[v].empty()) count[find(v)] += 1;
  for (const Edge& e : edges_) count[find(e.u)] -= 1;
  for (const auto& f : faces_) count[find(tail(f.front()))] += 1;
  std::size_t darts = 0;
  for (const auto& f : faces_) darts += f.size();
  if (darts != 2 * edges_.size()) return false;
  for (Vertex v = 0; v < n_; ++v)
    if (find(v) == v && !rot_[v].empty() && count[v] != 2) return false;
  return true;
}

PlanarEmbedding PlanarEmbedding::with_chord(Dart in_u, Dart in_v) const {
  PlanarEmbedding out = *this;
  EmbeddingEditor::insert_chord(out, in_u, in_v);
  return out;
}

PlanarEmbedding PlanarEmbedding::without_edge(int edge) const {
  if (edge < 0 || edge >= m()) throw std::out_of_range("edge index out of range");
  PlanarEmbedding out = *this;
  EmbeddingEditor::remove_edge(out, edge);
  return out;
}

std::optional<PlanarEmbedding> PlanarEmbedding::flipped(int edge) const {
  if (edge < 0 || edge >= m()) throw std::out_of_range("edge index out of range");
  Dart d = 2 * edge;
  if (faces_[face_of(d)].size() != 3 || faces_[face_of(twin(d))].size() != 3 || face_of(d) == face_of(twin(d)))
    return std::nullopt;
  Dart a = face_successor(d);
  Dart b = face_successor(twin(d));
  Vertex c = head(a);
  Vertex x = head(b);
  if (c == x) return std::nullopt;
  for (Dart r : rot_[c])
    if (head(r) == x) return std::nullopt;
  PlanarEmbedding out = *this;
  EmbeddingEditor::remove_edge(out, edge, {&a, &b});
  EmbeddingEditor::insert_chord(out, a, b);
  return out;
}

PlanarEmbedding PlanarEmbedding::from_rotation(int n, const std::vector<std::vector<Vertex>>& rotation) {
  if (static_cast<int>(rotation.size()) != n) throw FormatError("rotation: expected one list per vertex");
  PlanarEmbedding e(n);
  // occurrences[(u,v)] for u < v: indices in rotation[u] and rotation[v]
  struct Pair {
    Vertex u, v;
    std::vector<int> at_u, at_v;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
      Vertex u = rotation[v][i];
      if (u < 0 || u >= n) throw FormatError("rotation: neighbor out of range");
      if (u == v) throw FormatError("rotation: self-loop");
      Vertex a = std::min(u, v), b = std::max(u, v);
      if (pair_index[a][b] < 0) {
        pair_index[a][b] = static_cast<int>(pairs.size());
        pairs.push_back({a, b, {}, {}});
      }
      Pair& p = pairs[pair_index[a][b]];
      (v == a ? p.at_u : p.at_v).push_back(i);
    }
  }
  std::vector<int> radix;
  long combos = 1;
  for (const Pair& p : pairs) {
    if (p.at_u.size() != p.at_v.size()) throw FormatError("rotation: asymmetric adjacency");
    radix.push_back(static_cast<int>(p.at_u.size()));
    combos *= radix.back();
    if (combos > (1L << 16)) throw FormatError("rotation: too many parallel-edge pairings to resolve");
  }

  std::vector<int> offset(pairs.size(), 0);
  for (long attempt = 0; attempt < combos; ++attempt) {
    PlanarEmbedding cand(n);
    for (Vertex v = 0; v < n; ++v) cand.rot_[v].assign(rotation[v].size(), -1);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const Pair& p = pairs[pi];
      const int c = radix[pi];
      for (int k = 0; k < c; ++k) {
        int edge = cand.m();
        cand.edges_.push_back({p.u, p.v});
        cand.rot_[p.u][p.at_u[k]] = 2 * edge;
        cand.rot_[p.v][p.at_v[((offset[pi] - k) % c + c) % c]] = 2 * edge + 1;
      }
    }
    cand.pos_.assign(2 * cand.m(), 0);
    for (Vertex v = 0; v < n; ++v) cand.reindex(v);
    cand.rebuild_faces();
    if (cand.satisfies_euler()) return cand;
    for (std::size_t pi = 0; pi < offset.size(); ++pi) {
      if (++offset[pi] < radix[pi]) break;
      offset[pi] = 0;
    }
  }
  throw FormatError("rotation: not a planar rotation system");
}

nlohmann::json PlanarEmbedding::to_json() const { return {{"n", n_}, {"rotation", rotation_vertices()}}; }

PlanarEmbedding PlanarEmbedding::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rotation"))
    throw FormatError("embedding JSON: expected object with \"n\" and \"rotation\"");
  try {
    return from_rotation(j["n"].get<int>(), j["rotation"].get<std::vector<std::vector<Vertex>>>());
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(std::string("embedding JSON: ") + err.what());
  }
}

int max_planar_edges(int n) { return n < 3 ? n * (n - 1) / 2 : 3 * n - 6; }

PlanarEmbedding embed_maximal_planar(std::uint64_t seed, int n) {
  if (n < 3) throw PreconditionError("maximal planar generation needs n >= 3");
  Rng rng(seed);
  PlanarEmbedding e(n);
  EmbeddingEditor::connect(e, 0, 0, 1, 0);
  EmbeddingEditor::attach(e, 0, 2);  // dart 0 enters vertex 1
  EmbeddingEditor::insert_chord(e, 2, 1);  // 1→2 enters 2, 1→0 enters 0
  for (Vertex w = 3; w < n; ++w) {
    const auto face = e.faces()[rng.below(e.faces().size())];
    EmbeddingEditor::attach(e, face[0], w);
    Dart into_w = 2 * (e.m() - 1);
    EmbeddingEditor::insert_chord(e, into_w, face[1]);
    EmbeddingEditor::insert_chord(e, into_w, face[2]);
  }
  return e;
}

PlanarEmbedding random_planar_embedding(std::uint64_t seed, int n, int m) {
  if (m < 0 || m > max_planar_edges(n))
    throw PreconditionError("edge count " + std::to_string(m) + " outside [0, " + std::to_string(max_planar_edges(n)) +
                            "]");
  if (n < 3) {
    PlanarEmbedding e(n);
    if (m == 1) EmbeddingEditor::connect(e, 0, 0, 1, 0);
    return e;
  }
  PlanarEmbedding e = embed_maximal_planar(seed, n);
  Rng rng(derive_seed(seed, 1));
  for (int remove = e.m() - m; remove > 0; --remove)
    EmbeddingEditor::remove_edge(e, static_cast<int>(rng.below(e.m())));
  return e;
}

Graph random_planar(std::uint64_t seed, int n, int m) { return random_planar_embedding(seed, n, m).graph(); }

PlanarEmbedding randomize_by_flips(const PlanarEmbedding& e, std::uint64_t seed, int flips) {
  Rng rng(seed);
  PlanarEmbedding cur = e;
  for (int k = 0; k < flips && cur.m() > 0; ++k)
    if (auto f = cur.flipped(static_cast<int>(rng.below(cur.m())))) cur = std::move(*f);
  return cur;
}

PlanarEmbedding triangulate_preserving_independent(const PlanarEmbedding& e, const VertexSet& independent) {
  if (e.n() < 3) throw PreconditionError("triangulation needs at least 3 vertices");
  Graph g = e.graph();
  if (!is_connected(g)) throw PreconditionError("triangulation needs a connected embedding");
  for (Vertex v : independent) g.check_vertex(v);
  if (!is_independent(g, independent)) throw PreconditionError("vertex set is not independent");

  const int n = e.n();
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const Edge& ed : e.edge_list()) adjacent[ed.u][ed.v] = adjacent[ed.v][ed.u] = true;

  PlanarEmbedding cur = e;
  while (true) {
    const auto& faces = cur.faces();
    auto it = std::find_if(faces.begin(), faces.end(), [](const auto& f) { return f.size() > 3; });
    if (it == faces.end()) break;
    const std::vector<Dart>& face = *it;
    const int len = static_cast<int>(face.size());
    // (class, low endpoint, high endpoint, i, j)
    std::optional<std::tuple<int, Vertex, Vertex, int, int>> best;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 2; j <= i + len - 2 && j < len; ++j) {
        Vertex a = cur.head(face[i]);
        Vertex b = cur.head(face[j]);
        if (a == b || (independent.contains(a) && independent.contains(b))) continue;
        bool two_apart = (j - i == 2) || (j - i == len - 2);
        int cls = (two_apart ? 0 : 2) + (adjacent[a][b] ? 1 : 0);
        auto key = std::make_tuple(cls, std::min(a, b), std::max(a, b), i, j);
        if (!best || key < *best) best = key;
      }
    }
    if (!best)
      throw ConstructionError("face of length " + std::to_string(len) +
                              " admits no chord keeping the set independent");
    auto [cls, lo, hi, i, j] = *best;
    adjacent[lo][hi] = adjacent[hi][lo] = true;
    Dart in_a = face[i];
    Dart in_b = face[j];
    cur = cur.with_chord(in_a, in_b);
  }
  return cur;
}

std::optional<Edge> find_low_degree_edge(const Graph& g) {
  if (g.min_degree() < 4)
    throw PreconditionError("find_low_degree_edge requires minimum degree >= 4, got " +
                            std::to_string(g.min_degree()));
  for (const Edge& e : g.edges())
    if (g.degree(e.u) <= 7 && g.degree(e.v) <= 7) return e;
  return std::nullopt;
}

ChargeLedger charge_audit(const PlanarEmbedding& e, const VertexSet& independent) {
  if (!e.is_triangulated()) throw PreconditionError("charge audit needs a triangulated embedding");
  Multigraph mg = e.multigraph();
  for (Vertex v : independent) {
    if (v < 0 || v >= e.n()) throw std::out_of_range("independent set member out of range");
    if (e.degree(v) > 7) throw PreconditionError("independent set member of degree > 7");
    for (Dart d : e.rotation(v))
      if (independent.contains(e.head(d))) throw PreconditionError("designated set is not independent");
  }
  for (Vertex v = 0; v < e.n(); ++v)
    if (e.degree(v) == 0) throw PreconditionError("charge audit needs a connected triangulation");

  ChargeLedger ledger;
  for (Vertex v = 0; v < e.n(); ++v) ledger.initial.push_back(Rational(e.degree(v) - 6));
  ledger.final_charge = ledger.initial;
  const Rational half(1, 2);
  for (Vertex v = 0; v < e.n(); ++v) {
    if (e.degree(v) < 8) continue;
    for (Dart d : e.rotation(v)) {
      Vertex w = e.head(d);
      if (!independent.contains(w)) continue;
      ledger.transfers.push_back({v, w, half});
      ledger.final_charge[v] -= half;
      ledger.final_charge[w] += half;
    }
  }
  for (Vertex v = 0; v < e.n(); ++v) {
    ledger.total += ledger.final_charge[v];
    if (ledger.final_charge[v].sign() < 0) ledger.negative.push_back(v);
  }
  return ledger;
}

VertexSet low_degree_independent_set(const PlanarEmbedding& e) {
  VertexSet chosen;
  VertexSet blocked;
  for (Vertex v = 0; v < e.n(); ++v) {
    if (e.degree(v) > 7 || blocked.contains(v)) continue;
    chosen.insert(v);
    for (Dart d : e.rotation(v)) blocked.insert(e.head(d));
  }
  return chosen;
}

std::optional<Graph> planar_min_degree_four(std::uint64_t seed, int n, int attempts) {
  for (int a = 0; a < attempts; ++a) {
    std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(a));
    PlanarEmbedding e = randomize_by_flips(embed_maximal_planar(s, n), splitmix64(s), 4 * n);
    Graph g = e.graph();
    VertexSet alive = g.vertices();
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v : alive) {
        if (g.neighbors(v).intersection_size(alive) < 4) {
          alive.erase(v);
          changed = true;
        }
      }
    }
    if (alive.size() >= 6) return induced_subgraph(g, alive).graph;
  }
  return std::nullopt;
}

}  // namespace dompack
