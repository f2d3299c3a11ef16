#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dompack/graph.hpp"
#include "dompack/rational.hpp"

namespace dompack {

struct SolveResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  bool optimal = true;
};

/// Minimum X-dominating set: smallest D with N[D] ∪ x = V(g). x = ∅ gives γ(g).
SolveResult exact_domination(const Graph& g, const VertexSet& x = {});
/// Maximum X-packing: largest P disjoint from x with pairwise disjoint closed
/// neighborhoods. x = ∅ gives ρ(g).
SolveResult exact_packing(const Graph& g, const VertexSet& x = {});

/// Classic greedy: repeatedly take the vertex covering the most uncovered
/// vertices (lowest index on ties). Not optimal in general.
SolveResult greedy_domination(const Graph& g);

/// γ(g) / ρ(g) as an exact rational.
Rational max_ratio(const Graph& g);

enum class PackingKey {
  kIndexSumMin,  ///< minimise the sum of ordering positions
  kDepthSumMax,  ///< maximise the sum of BFS depths from a root
};

struct KeyedPacking {
  VertexSet packing;
  /// Sum of positions (index key) or depths (depth key) of the members.
  long key = 0;
  int exchanges = 0;
  /// The n² exchange cap was hit; `packing` is the best found so far.
  bool capped = false;
};

/// Maximal packing that is locally optimal for `key` under single-vertex
/// exchange followed by greedy re-completion. For kIndexSumMin, `order` is the
/// vertex ordering (order[i] has position i); for kDepthSumMax, `root` selects
/// the BFS root. The greedy seed scans by increasing position / decreasing depth.
KeyedPacking maximal_packing_keyed(const Graph& g, PackingKey key, std::span<const Vertex> order, Vertex root = 0);

/// Maximal packing minimising the sum of 1-based ordering positions among
/// those accepted by `accept` (all, when empty), by branch and bound seeded
/// with the keyed local search. nullopt when no maximal packing is accepted.
/// When the node budget runs out, `capped` is set on the best packing found so
/// far; BudgetExceeded if none was found.
std::optional<KeyedPacking> min_index_sum_maximal_packing(const Graph& g, std::span<const Vertex> order,
                                                          std::uint64_t node_budget = 2000000,
                                                          const std::function<bool(const VertexSet&)>& accept = {});

/// Greedily extend a packing `p` (disjoint from x) to a maximal one, scanning
/// candidates in the given order.
VertexSet complete_packing(const Graph& g, VertexSet p, std::span<const Vertex> scan, const VertexSet& x = {});

}  // namespace dompack
