#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dompack/graph.hpp"

namespace dompack {

enum class OrderingKind { kSimpleElimination, kHomogeneous };

/// Vertex permutation witnessing class membership. perm[i] is the vertex at
/// position i; the defining property holds for every suffix.
struct Ordering {
  std::vector<Vertex> perm;
  OrderingKind kind = OrderingKind::kSimpleElimination;

  /// position[v] = index of v in perm.
  std::vector<int> positions() const;
  /// Vertices at positions >= i.
  VertexSet suffix(int i) const;
};

bool is_permutation_of(const Graph& g, const std::vector<Vertex>& perm);

bool is_tree(const Graph& g);

/// Nonempty `a` whose members all see the same vertices outside `a`.
/// Throws PreconditionError when a is empty.
bool is_homogeneous(const Graph& g, const VertexSet& a);
/// Same, inside the subgraph induced by `within`.
bool is_homogeneous_within(const Graph& g, const VertexSet& a, const VertexSet& within);

struct HExtremalWitness {
  Vertex vertex = 0;
  /// Homogeneous, contained in N[vertex], dominates N²[vertex].
  VertexSet dominators;
};

/// Degree cap for the witness search (2^(deg+1) subsets).
inline constexpr int kHExtremalDegreeCap = 20;

/// Smallest (then lexicographically first) homogeneous D ⊆ N[v] with
/// N[D] ⊇ N²[v]. Throws BudgetExceeded when deg(v) > kHExtremalDegreeCap.
std::optional<HExtremalWitness> find_h_extremal_witness(const Graph& g, Vertex v);
/// Same question in the subgraph induced by `within` (v ∈ within).
std::optional<HExtremalWitness> find_h_extremal_witness_within(const Graph& g, Vertex v, const VertexSet& within);

/// Backtracking search for a homogeneous ordering (each vertex h-extremal in
/// the subgraph induced by itself and all later vertices). nullopt when none
/// exists; BudgetExceeded when `node_budget` search nodes are used up.
/// Candidates are tried lowest index first, or in a seeded random priority
/// order when `priority_seed` is nonzero.
std::optional<Ordering> find_homogeneous_ordering(const Graph& g, std::uint64_t node_budget = 200000,
                                                  std::uint64_t priority_seed = 0);
/// Position-by-position revalidation.
bool is_homogeneous_ordering(const Graph& g, const std::vector<Vertex>& perm);

/// g with `side` completed to a clique. g must be bipartite with colour
/// classes `side` and its complement; PreconditionError otherwise.
Graph split_clique(const Graph& g, const VertexSet& side);

/// True when the closed neighborhoods (inside `within`) of the members of
/// N[v] ∩ within form a chain under inclusion.
bool is_simple_vertex(const Graph& g, Vertex v, const VertexSet& within);
/// Greedy simple-vertex elimination, lowest index first; nullopt exactly
/// when g is not strongly chordal.
std::optional<Ordering> find_simple_elimination_ordering(const Graph& g);
bool is_simple_elimination_ordering(const Graph& g, const std::vector<Vertex>& perm);

/// Row and column orders of the closed-neighborhood matrix.
struct MatrixOrdering {
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
};

/// No rows a < b and columns c < d with M[a][c] = M[a][d] = M[b][c] = 1 and
/// M[b][d] = 0, where M[r][c] = 1 iff c ∈ N[r].
bool is_gamma_free(const Graph& g, const std::vector<Vertex>& rows, const std::vector<Vertex>& cols);

/// Doubly lexical ordering of the closed-neighborhood matrix, obtained by
/// alternately stable-sorting rows and columns (ascending, later positions
/// more significant) starting from `start`. For strongly chordal graphs the
/// result is gamma-free. Throws ConstructionError if sorting has not settled
/// after `max_rounds` rounds.
MatrixOrdering doubly_lexical_ordering(const Graph& g, const std::vector<Vertex>& start, int max_rounds = 10000);

/// Bipartite g is chordal bipartite iff split_clique(g, A) is strongly
/// chordal, with A a colour class. Throws PreconditionError if g is not bipartite.
bool is_chordal_bipartite(const Graph& g);
/// Same test using the opposite colour class for the split.
bool is_chordal_bipartite_via_other_side(const Graph& g);

}  // namespace dompack
