#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dompack/graph.hpp"
#include "dompack/rational.hpp"

namespace dompack {

/// Directed edge-end. Edge e owns darts 2e (u→v) and 2e+1 (v→u).
using Dart = int;

/// Combinatorial planar embedding given by a rotation system.
///
/// Each vertex stores the cyclic order of its outgoing darts. The face to the
/// left of dart d continues with the dart following twin(d) in the rotation at
/// head(d). Parallel edges are allowed (triangulation output), self-loops are
/// not. Every instance produced by this module satisfies Euler's formula per
/// connected component.
class PlanarEmbedding {
 public:
  /// n isolated vertices.
  explicit PlanarEmbedding(int n);

  /// Rebuild from per-vertex cyclic neighbor lists. Parallel edges are paired
  /// by searching the cyclic-reversal offsets for one that satisfies Euler's
  /// formula; throws FormatError when none does.
  static PlanarEmbedding from_rotation(int n, const std::vector<std::vector<Vertex>>& rotation);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edge_list() const { return edges_; }

  static Dart twin(Dart d) { return d ^ 1; }
  Vertex tail(Dart d) const { return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u; }
  Vertex head(Dart d) const { return tail(twin(d)); }
  const std::vector<Dart>& rotation(Vertex v) const { return rot_.at(v); }
  /// Rotation as neighbor vertices (serialization form).
  std::vector<std::vector<Vertex>> rotation_vertices() const;
  /// Degree counting parallel edges.
  int degree(Vertex v) const { return static_cast<int>(rot_.at(v).size()); }

  Dart face_successor(Dart d) const;
  /// Face walks as dart sequences, in order of their lowest dart.
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  /// Index into faces() of the face containing d.
  int face_of(Dart d) const { return face_index_[d]; }

  Multigraph multigraph() const;
  /// Throws PreconditionError when parallel edges are present.
  Graph graph() const;

  bool is_triangulated() const;
  /// n_i - m_i + f_i = 2 for every component with at least one edge, and
  /// every dart lies in exactly one face.
  bool satisfies_euler() const;

  /// New edge between the corner entering head(in_u) along in_u and the corner
  /// entering head(in_v) along in_v; both darts must lie on the same face.
  PlanarEmbedding with_chord(Dart in_u, Dart in_v) const;
  PlanarEmbedding without_edge(int edge) const;
  /// Replace edge `edge` of a triangulation by the other diagonal of its two
  /// incident triangles; nullopt if that diagonal would be a loop or already present.
  std::optional<PlanarEmbedding> flipped(int edge) const;

  nlohmann::json to_json() const;
  static PlanarEmbedding from_json(const nlohmann::json& j);

 private:
  friend class EmbeddingEditor;
  void rebuild_faces();
  void reindex(Vertex v);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> rot_;
  std::vector<int> pos_;  // index of each dart within the rotation at its tail
  std::vector<std::vector<Dart>> faces_;
  std::vector<int> face_index_;
};

/// Random stacked triangulation: start from a triangle and repeatedly insert a
/// new vertex into a uniformly chosen face. Deterministic per seed. n >= 3.
PlanarEmbedding embed_maximal_planar(std::uint64_t seed, int n);

/// Largest edge count of a simple planar graph on n vertices.
int max_planar_edges(int n);

/// Maximal planar embedding with uniformly chosen edges deleted down to m.
PlanarEmbedding random_planar_embedding(std::uint64_t seed, int n, int m);
/// Graph of random_planar_embedding. 0 <= m <= max_planar_edges(n).
Graph random_planar(std::uint64_t seed, int n, int m);

/// Apply `flips` random diagonal flips to a triangulation.
PlanarEmbedding randomize_by_flips(const PlanarEmbedding& e, std::uint64_t seed, int flips);

/// Adds edges until every face is a triangle without joining two members of
/// `independent`. Chords are taken between face corners two steps apart when
/// possible, preferring endpoints that are not yet adjacent, lowest vertex
/// indices first. Requires a simple connected embedding with n >= 3 and an
/// independent set; throws PreconditionError otherwise and ConstructionError
/// when a face admits no admissible chord.
PlanarEmbedding triangulate_preserving_independent(const PlanarEmbedding& e, const VertexSet& independent);

/// An edge whose endpoints both have degree <= 7, lowest first. Throws
/// PreconditionError when min degree < 4. nullopt would contradict the
/// discharging lemma for simple planar inputs.
std::optional<Edge> find_low_degree_edge(const Graph& g);

struct ChargeTransfer {
  Vertex donor = 0;
  Vertex recipient = 0;
  Rational amount;
};

struct ChargeLedger {
  std::vector<Rational> initial;
  std::vector<Rational> final_charge;
  std::vector<ChargeTransfer> transfers;
  Rational total;
  std::vector<Vertex> negative;
};

/// Charge d(v) - 6 on a triangulated connected embedding, then every vertex of
/// degree >= 8 sends 1/2 along each edge-end to a member of `independent`.
/// Members of `independent` must have degree <= 7 and be pairwise non-adjacent.
ChargeLedger charge_audit(const PlanarEmbedding& e, const VertexSet& independent);

/// Greedy maximal independent subset of the vertices of degree <= 7
/// (multiplicity counted), lowest index first.
VertexSet low_degree_independent_set(const PlanarEmbedding& e);

/// Random simple planar graph with minimum degree >= 4: a flip-randomised
/// triangulation reduced to its 4-core, retried with fresh seeds when the core
/// is smaller than the octahedron. nullopt when `attempts` run out.
std::optional<Graph> planar_min_degree_four(std::uint64_t seed, int n, int attempts = 50);

}  // namespace dompack
