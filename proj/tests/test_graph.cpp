#include <doctest.h>

#include "dompack/errors.hpp"
#include "dompack/graph.hpp"
#include "dompack/rng.hpp"
#include "support/bridge.hpp"
#include "support/fixtures.hpp"

using namespace dompack;
using fixtures::cycle;
using fixtures::path;

TEST_SUITE("graph") {

TEST_CASE("vertex set basics") {
  VertexSet s{3, 70, 511};
  CHECK(s.size() == 3);
  CHECK(s.first() == 3);
  CHECK(s.next(3) == 70);
  CHECK(s.next(70) == 511);
  CHECK(s.next(511) == -1);
  CHECK(s.to_vector() == std::vector<Vertex>{3, 70, 511});
  CHECK(s.to_string() == "{3,70,511}");
  CHECK(VertexSet::range(65).size() == 65);
  CHECK(VertexSet::range(0).empty());
  CHECK_THROWS_AS(s.insert(512), std::out_of_range);
  CHECK_FALSE(s.contains(-1));
  VertexSet t{70, 4};
  CHECK((s & t) == VertexSet{70});
  CHECK((s - t) == VertexSet{3, 511});
  CHECK((s | t).size() == 4);
  CHECK(s.intersection_size(t) == 1);
  CHECK(VertexSet{70}.is_subset_of(s));
}

TEST_CASE("construction rejects loops, repeats and bad endpoints") {
  CHECK_THROWS_AS(Graph(0), PreconditionError);
  CHECK_THROWS_AS(Graph(513), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(path(3).neighbors(3), std::out_of_range);
  Graph g(512);
  CHECK(g.n() == 512);
  CHECK(g.m() == 0);
}

TEST_CASE("closed neighborhoods") {
  CHECK(closed_neighborhood(cycle(4), 0) == VertexSet{3, 0, 1});
  CHECK(closed_neighborhood(Graph(1), 0) == VertexSet{0});
  CHECK(closed_neighborhood(fixtures::star(5), 0) == VertexSet::range(6));
  CHECK(closed_neighborhood(cycle(4), VertexSet{0, 2}) == VertexSet::range(4));
}

TEST_CASE("second closed neighborhoods") {
  CHECK(second_closed_neighborhood(cycle(6), 0) == VertexSet{4, 5, 0, 1, 2});
  CHECK(second_closed_neighborhood(cycle(4), 0) == VertexSet::range(4));
  CHECK(second_closed_neighborhood(path(5), 0) == VertexSet{0, 1, 2});
}

TEST_CASE("distances") {
  CHECK(distance(path(5), 0, 4) == 4);
  CHECK(distance(cycle(7), 3, 3) == 0);
  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(distance(two_edges, 0, 3).has_value());
  CHECK(bfs_distances(two_edges, 0) == std::vector<int>{0, 1, -1, -1});
}

TEST_CASE("domination predicate") {
  const Graph c4 = cycle(4);
  CHECK(is_dominating(c4, {0, 2}));
  CHECK_FALSE(is_dominating(c4, {0}));
  CHECK(is_dominating(c4, {}, VertexSet::range(4)));
  CHECK(is_dominating(c4, {0}, {2}));
}

TEST_CASE("packing predicate") {
  CHECK(is_packing(path(5), {0, 3}));
  CHECK_FALSE(is_packing(cycle(4), {0, 2}));
  CHECK(is_packing(cycle(4), {}));
  for (Vertex v = 0; v < 4; ++v) CHECK_FALSE(is_packing(cycle(4), {v}, {v}));
}

TEST_CASE("edits") {
  const auto del = delete_vertex(path(3), 1);
  CHECK(del.graph.n() == 2);
  CHECK(del.graph.m() == 0);
  CHECK(del.index_map == std::vector<Vertex>{0, -1, 1});
  CHECK(delete_edge(cycle(4), 0, 1) == Graph(4, {{1, 2}, {2, 3}, {3, 0}}));
  CHECK(add_edge(path(4), 0, 3) == cycle(4));
  CHECK_THROWS_AS(delete_edge(path(4), 0, 2), PreconditionError);
  CHECK_THROWS_AS(add_edge(path(4), 0, 1), PreconditionError);
  CHECK_THROWS_AS(add_edge(path(4), 2, 2), PreconditionError);
  // values are immutable: the source graph is unchanged
  const Graph p = path(4);
  (void)add_edge(p, 0, 3);
  CHECK(p.m() == 3);
}

TEST_CASE("induced subgraphs and components") {
  const auto sub = induced_subgraph(cycle(6), {0, 1, 2, 4});
  CHECK(sub.graph.n() == 4);
  CHECK(sub.graph.m() == 2);
  CHECK(sub.original == std::vector<Vertex>{0, 1, 2, 4});
  Graph two_edges(5, {{0, 1}, {2, 3}});
  CHECK(connected_components(two_edges).size() == 3);
  CHECK_FALSE(is_connected(two_edges));
  CHECK(is_connected(cycle(9)));
}

TEST_CASE("bipartition") {
  CHECK(bipartition(cycle(6)) == VertexSet{0, 2, 4});
  CHECK_FALSE(bipartition(cycle(5)).has_value());
  CHECK(bipartition(Graph(3)) == VertexSet{0, 1, 2});
}

TEST_CASE("predicates agree with the oracle on random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = rng.uniform(1, 9);
    const auto small = oracle::labeled_graph(n, rng.next() & ((std::uint64_t{1} << oracle::pair_count(n)) - 1));
    const Graph g = bridge::from_small(small);
    const oracle::Mask d = rng.next() & small.all();
    const oracle::Mask x = rng.next() & rng.next() & small.all();
    CHECK(is_dominating(g, bridge::to_set(d), bridge::to_set(x)) == oracle::dominates(small, d, x));
    CHECK(is_packing(g, bridge::to_set(d), bridge::to_set(x)) == oracle::packs(small, d, x));
    CHECK(is_connected(g) == oracle::is_connected(small));
    CHECK(bipartition(g).has_value() == oracle::is_bipartite(small));
  }
}

TEST_CASE("distance invariants on random graphs") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform(1, 14);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(1, 4)) edges.push_back({u, v});
    const Graph g(n, edges);
    for (Vertex v = 0; v < n; ++v) {
      CHECK(closed_neighborhood(g, v).contains(v));
      CHECK(closed_neighborhood(g, v).is_subset_of(second_closed_neighborhood(g, v)));
    }
    const Vertex a = rng.uniform(0, n - 1), b = rng.uniform(0, n - 1), c = rng.uniform(0, n - 1);
    CHECK(distance(g, a, b) == distance(g, b, a));
    if (distance(g, a, b) && distance(g, b, c)) {
      REQUIRE(distance(g, a, c).has_value());
      CHECK(*distance(g, a, c) <= *distance(g, a, b) + *distance(g, b, c));
    }
    // packing <=> pairwise distance >= 3
    VertexSet p;
    for (Vertex v = 0; v < n; ++v)
      if (rng.chance(1, 3)) p.insert(v);
    bool far_apart = true;
    for (Vertex u : p)
      for (Vertex v : p)
        if (u < v && distance(g, u, v) && *distance(g, u, v) < 3) far_apart = false;
    CHECK(is_packing(g, p) == far_apart);
  }
}

}
