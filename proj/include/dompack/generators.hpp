#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dompack/graph.hpp"
#include "dompack/recognition.hpp"

namespace dompack {

/// Everything needed to regenerate one instance bit-exactly.
struct GenSpec {
  std::string family;
  int n = 1;
  std::uint64_t seed = 0;
  /// Integer family parameters (kept integral so records replay exactly).
  std::map<std::string, std::int64_t> params;

  std::int64_t param(const std::string& key, std::int64_t fallback) const;
  nlohmann::json to_json() const;
  static GenSpec from_json(const nlohmann::json& j);
  bool operator==(const GenSpec&) const = default;
};

/// Uniform labeled tree: Prüfer decode of n-2 uniform labels.
Graph gen_tree(const GenSpec& spec);

/// Intersection graph of n intervals [l, l+len] with l uniform in [0, span)
/// and len uniform in [0, max_len]. Params: span (default 4n), max_len
/// (default 8). Every output is checked for a simple elimination ordering.
Graph gen_interval(const GenSpec& spec);

struct ChordalBipartiteSample {
  Graph graph;
  int attempts = 0;
};
/// Rejection sampling of random bipartite graphs (side sizes uniform, edge
/// probability p_permille/1000, default 300) until recognised. n <= 16.
/// Param budget (default 10000) bounds attempts; BudgetExceeded beyond it.
ChordalBipartiteSample gen_chordal_bipartite_sample(const GenSpec& spec);
Graph gen_chordal_bipartite(const GenSpec& spec);

struct DistanceHereditarySample {
  Graph graph;
  Ordering ordering;
  int attempts = 0;
};
/// Grown from K_1 by pendant / true-twin / false-twin additions on a uniform
/// existing vertex, with integer weights pendant, true_twin, false_twin
/// (default 1 each). Each instance is kept only with a validated homogeneous
/// ordering; param budget (default 20) bounds regeneration attempts.
DistanceHereditarySample gen_distance_hereditary_sample(const GenSpec& spec);
Graph gen_distance_hereditary(const GenSpec& spec);

/// Rook's graph K_k □ K_l; vertex r*l + c is cell (r, c).
Graph gen_rook(int k, int l);

/// G(n, p) with p = p_permille/1000 (default 500).
Graph gen_gnp(const GenSpec& spec);

/// "C<n>", "P<n>", "K<n>", "K<a>,<b>", "star<k>" (K_{1,k}), "rook<k>x<l>",
/// "octahedron", "icosahedron". Throws std::invalid_argument otherwise.
Graph gen_named(const std::string& name);

/// Dispatch on spec.family: tree, interval, chordal-bipartite,
/// distance-hereditary, planar (param m, default uniform), rook (params k, l),
/// gnp, named (param-free; name in params is not supported, use gen_named).
Graph generate(const GenSpec& spec);

/// All pairwise non-isomorphic trees on n vertices (n <= 16), grown leaf by
/// leaf and deduplicated by a centre-rooted canonical string.
std::vector<Graph> enumerate_trees(int n);
/// Canonical form of a tree (equal iff isomorphic).
std::string tree_canonical_form(const Graph& t);

}  // namespace dompack
