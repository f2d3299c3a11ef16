#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dompack/graph.hpp"
#include "dompack/rational.hpp"
#include "dompack/recognition.hpp"

namespace dompack {

enum class GraphClass { kTree, kStronglyChordal, kChordalBipartite, kHomogeneouslyOrderable };

std::string to_string(GraphClass c);
/// "tree", "strongly-chordal", "chordal-bipartite", "homogeneously-orderable".
GraphClass parse_graph_class(std::string_view name);

/// A dominating set D and a packing P with |D| <= bound·|P|.
struct DomPackCertificate {
  VertexSet d;
  VertexSet p;
  GraphClass graph_class = GraphClass::kTree;
  Rational bound;
  /// Set only by revalidation against the graph-core predicates.
  bool valid = false;
  /// Packing exchanges performed while building (homogeneously orderable path).
  int exchanges = 0;
  /// Homogeneous orderings tried before one admitted a certificate.
  int orderings_tried = 1;

  nlohmann::json to_json() const;
};

/// Checks domination, packing and the ratio bound; sets `valid`.
bool revalidate(const Graph& g, DomPackCertificate& cert);

/// Deepest-first greedy packing from `root`, D = parent image of P.
/// Throws PreconditionError when t is not a tree.
DomPackCertificate tree_dompack(const Graph& t, Vertex root = 0);

/// One pass over the rows of a gamma-free ordering of the closed-neighborhood
/// matrix: an undominated vertex joins P and its closed neighbor in the latest
/// column joins D. `ord` is used directly when it is gamma-free, otherwise it
/// seeds doubly_lexical_ordering.
DomPackCertificate strongly_chordal_dompack(const Graph& g, const Ordering& ord);

/// D = D_A ∪ D_B from the strongly chordal runs on both split graphs; P is
/// the larger of P_A, P_B.
DomPackCertificate chordal_bipartite_dompack(const Graph& g);

/// D = P ∪ f(P), where f(v) is the lowest vertex of a homogeneous dominating
/// set of N²[v] inside N[v] in the suffix graph of v, and P is the maximal
/// packing of least index sum (1-based ordering positions) for which D
/// dominates g, found by branch and bound. Beyond the search budget, P comes
/// from the keyed local search plus exchange steps capped at n². Throws
/// ConstructionError when no packing works for this ordering or the exchanges
/// stall.
DomPackCertificate homogeneously_orderable_dompack(const Graph& g, const Ordering& ord);

/// Tries `first` (or the default ordering when absent), then up to
/// `extra_orderings` homogeneous orderings found with seeded priorities, and
/// returns the first certificate obtained. Rethrows the last ConstructionError
/// when every ordering fails; PreconditionError when g has no homogeneous
/// ordering.
DomPackCertificate homogeneously_orderable_dompack_reordering(const Graph& g, const std::optional<Ordering>& first,
                                                              int extra_orderings = 32);

}  // namespace dompack
