#include <doctest.h>

#include <numeric>

#include "dompack/errors.hpp"
#include "dompack/generators.hpp"
#include "dompack/recognition.hpp"
#include "dompack/rng.hpp"
#include "support/bridge.hpp"
#include "support/fixtures.hpp"

using namespace dompack;
using fixtures::cycle;
using fixtures::path;

namespace {

// Direct check of the witness definition against oracle masks.
void check_witness(const Graph& g, const HExtremalWitness& w) {
  const auto small = bridge::to_small(g);
  const oracle::Mask d = bridge::to_mask(w.dominators);
  CHECK((d & ~small.closed(w.vertex)) == 0);
  const oracle::Mask second = oracle::cover(small, small.closed(w.vertex));
  CHECK((oracle::cover(small, d) & second) == second);
  CHECK(is_homogeneous(g, w.dominators));
}

}  // namespace

TEST_SUITE("recognition") {

TEST_CASE("trees") {
  CHECK(is_tree(path(5)));
  CHECK_FALSE(is_tree(cycle(4)));
  CHECK_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_tree(Graph(1)));
}

TEST_CASE("homogeneous sets") {
  CHECK(is_homogeneous(cycle(4), {0, 2}));
  CHECK_FALSE(is_homogeneous(cycle(4), {0, 1}));
  for (Vertex v = 0; v < 5; ++v) CHECK(is_homogeneous(cycle(5), {v}));
  CHECK_THROWS_AS(is_homogeneous(cycle(4), {}), PreconditionError);
}

TEST_CASE("h-extremal witnesses") {
  const auto c4 = find_h_extremal_witness(cycle(4), 0);
  REQUIRE(c4);
  CHECK(c4->dominators == VertexSet{1, 3});
  check_witness(cycle(4), *c4);
  const auto k1 = find_h_extremal_witness(Graph(1), 0);
  REQUIRE(k1);
  CHECK(k1->dominators == VertexSet{0});
  CHECK_FALSE(find_h_extremal_witness(path(5), 2).has_value());
  CHECK_THROWS_AS(find_h_extremal_witness(fixtures::star(21), 0), BudgetExceeded);
}

TEST_CASE("witnesses validate on random graphs") {
  Rng rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.uniform(1, 9);
    const Graph g = bridge::from_small(
        oracle::labeled_graph(n, rng.next() & ((std::uint64_t{1} << oracle::pair_count(n)) - 1)));
    for (Vertex v = 0; v < n; ++v)
      if (auto w = find_h_extremal_witness(g, v)) check_witness(g, *w);
  }
}

TEST_CASE("homogeneous orderings") {
  const auto c4 = find_homogeneous_ordering(cycle(4));
  REQUIRE(c4);
  CHECK(is_homogeneous_ordering(cycle(4), c4->perm));
  const auto k1 = find_homogeneous_ordering(Graph(1));
  REQUIRE(k1);
  CHECK(k1->perm == std::vector<Vertex>{0});
  // no vertex of C5 is h-extremal
  CHECK_FALSE(find_homogeneous_ordering(cycle(5)).has_value());
  CHECK_FALSE(is_homogeneous_ordering(cycle(4), {0, 1, 2}));
}

TEST_CASE("small trees are homogeneously orderable") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      const auto ord = find_homogeneous_ordering(t);
      REQUIRE(ord);
      CHECK(is_homogeneous_ordering(t, ord->perm));
    }
  }
}

TEST_CASE("seeded priorities give valid orderings") {
  const Graph g = gen_distance_hereditary(GenSpec{"distance-hereditary", 12, 4, {}});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto ord = find_homogeneous_ordering(g, 200000, seed);
    REQUIRE(ord);
    CHECK(is_homogeneous_ordering(g, ord->perm));
  }
}

TEST_CASE("split graphs") {
  CHECK(split_clique(cycle(4), {0, 2}) == Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}));
  const Graph claw_split = split_clique(fixtures::star(3), {1, 2, 3});
  CHECK(claw_split == fixtures::complete(4));
  const Graph c6 = split_clique(cycle(6), {0, 2, 4});
  CHECK(c6.m() == 9);
  CHECK(c6.has_edge(0, 4));
  CHECK_THROWS_AS(split_clique(cycle(4), {0, 1}), PreconditionError);
  CHECK_THROWS_AS(split_clique(cycle(5), {0, 2}), PreconditionError);
}

TEST_CASE("simple elimination orderings") {
  const auto p4 = find_simple_elimination_ordering(path(4));
  REQUIRE(p4);
  CHECK(p4->perm.front() == 0);
  CHECK(is_simple_elimination_ordering(path(4), {0, 3, 1, 2}));
  CHECK_FALSE(is_simple_elimination_ordering(path(4), {1, 0, 2, 3}));
  CHECK_FALSE(find_simple_elimination_ordering(cycle(6)).has_value());
  CHECK_FALSE(find_simple_elimination_ordering(cycle(4)).has_value());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gen_interval(GenSpec{"interval", 25, seed, {}});
    const auto ord = find_simple_elimination_ordering(g);
    REQUIRE(ord);
    CHECK(is_simple_elimination_ordering(g, ord->perm));
  }
}

TEST_CASE("chordal bipartite") {
  CHECK(is_chordal_bipartite(cycle(4)));
  CHECK_FALSE(is_chordal_bipartite(cycle(6)));
  CHECK(is_chordal_bipartite(fixtures::complete_bipartite(3, 3)));
  CHECK_FALSE(oracle::has_long_induced_cycle(bridge::to_small(fixtures::complete_bipartite(3, 3)), 6));
  CHECK_THROWS_AS(is_chordal_bipartite(cycle(5)), PreconditionError);
}

TEST_CASE("split recognition agrees with the long-cycle test on all bipartite graphs n <= 7") {
  int bipartite = 0;
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << oracle::pair_count(n)); ++code) {
      const auto small = oracle::labeled_graph(n, code);
      if (!oracle::is_bipartite(small)) continue;
      ++bipartite;
      const Graph g = bridge::from_small(small);
      const bool expected = !oracle::has_long_induced_cycle(small, 6);
      REQUIRE(is_chordal_bipartite(g) == expected);
      REQUIRE(is_chordal_bipartite_via_other_side(g) == expected);
    }
  }
  CHECK(bipartite > 10000);
}

TEST_CASE("split recognition agrees with the long-cycle test on random bipartite graphs n <= 10") {
  Rng rng(8);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = rng.uniform(6, 10);
    const int left = rng.uniform(1, n - 1);
    oracle::SmallGraph small(n);
    for (int u = 0; u < left; ++u)
      for (int v = left; v < n; ++v)
        if (rng.chance(1, 2)) small.connect(u, v);
    const Graph g = bridge::from_small(small);
    const bool expected = !oracle::has_long_induced_cycle(small, 6);
    REQUIRE(is_chordal_bipartite(g) == expected);
    REQUIRE(is_chordal_bipartite_via_other_side(g) == expected);
  }
}

TEST_CASE("gamma-free orderings") {
  // index order on C4: rows 0,1 and columns 0,3 form a Gamma
  std::vector<Vertex> id{0, 1, 2, 3};
  CHECK_FALSE(is_gamma_free(cycle(4), id, id));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen_interval(GenSpec{"interval", 5 + static_cast<int>(seed % 30), seed, {}});
    const auto seo = find_simple_elimination_ordering(g);
    REQUIRE(seo);
    const auto mo = doubly_lexical_ordering(g, seo->perm);
    CHECK(is_gamma_free(g, mo.rows, mo.cols));
  }
  CHECK_THROWS_AS(is_gamma_free(cycle(4), {0, 1, 2}, id), PreconditionError);
}

}
