#include <doctest.h>

#include <numeric>

#include "dompack/exact.hpp"
#include "dompack/rng.hpp"
#include "support/bridge.hpp"
#include "support/fixtures.hpp"

using namespace dompack;
using fixtures::cycle;
using fixtures::path;

namespace {

oracle::SmallGraph random_small(Rng& rng, int n, int permille) {
  oracle::SmallGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(1000) < static_cast<std::uint64_t>(permille)) g.connect(u, v);
  return g;
}

// Least sum of 1-based positions over the maximal packings accepted by `ok`.
template <typename Accept>
std::optional<long> brute_min_index_sum(const oracle::SmallGraph& g, const std::vector<Vertex>& order, Accept ok) {
  std::vector<long> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i + 1;
  std::optional<long> best;
  for (oracle::Mask p : oracle::maximal_packings(g)) {
    if (!ok(p)) continue;
    long key = 0;
    for (int v = 0; v < g.n; ++v)
      if ((p >> v) & 1) key += pos[v];
    if (!best || key < *best) best = key;
  }
  return best;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("domination numbers") {
  CHECK(exact_domination(cycle(4)).value == 2);
  CHECK(exact_domination(fixtures::rook(3)).value == 3);
  CHECK(oracle::gamma(bridge::to_small(fixtures::rook(3))) == 3);
  const auto all = exact_domination(cycle(5), VertexSet::range(5));
  CHECK(all.value == 0);
  CHECK(all.witness.empty());
  CHECK(exact_domination(Graph(1)).witness == VertexSet{0});
}

TEST_CASE("packing numbers") {
  CHECK(exact_packing(cycle(4)).value == 1);
  const auto p7 = exact_packing(path(7));
  CHECK(p7.value == 3);
  CHECK(oracle::rho(bridge::to_small(path(7))) == 3);
  CHECK(is_packing(path(7), p7.witness));
  CHECK(exact_packing(cycle(4), {0}).value == 1);
  CHECK(oracle::rho(bridge::to_small(cycle(4)), 1) == 1);
  CHECK(exact_packing(cycle(4), VertexSet::range(4)).value == 0);
}

TEST_CASE("greedy domination") {
  CHECK(greedy_domination(fixtures::star(5)).witness == VertexSet{0});
  CHECK(greedy_domination(cycle(4)).value == 2);
  for (int n = 1; n <= 7; ++n) CHECK(greedy_domination(fixtures::complete(n)).value == 1);
}

TEST_CASE("ratio") {
  CHECK(max_ratio(cycle(4)) == 2);
  CHECK(max_ratio(path(9)) == 1);
  CHECK(max_ratio(fixtures::rook(3)) == 3);
}

TEST_CASE("keyed packings") {
  const auto small_p5 = bridge::to_small(path(5));
  // depth-sum maximum over all maximal packings of P5 from root 0
  long best_depth = -1;
  for (oracle::Mask p : oracle::maximal_packings(small_p5)) {
    long depth = 0;
    for (int v = 0; v < 5; ++v)
      if ((p >> v) & 1) depth += v;
    best_depth = std::max(best_depth, depth);
  }
  const std::vector<Vertex> id5{0, 1, 2, 3, 4};
  const auto deep = maximal_packing_keyed(path(5), PackingKey::kDepthSumMax, id5, 0);
  CHECK(deep.packing.contains(4));
  CHECK(deep.key == best_depth);

  const std::vector<Vertex> one{0};
  CHECK(maximal_packing_keyed(Graph(1), PackingKey::kIndexSumMin, one).packing == VertexSet{0});

  const std::vector<Vertex> id6{0, 1, 2, 3, 4, 5};
  const auto c6 = maximal_packing_keyed(cycle(6), PackingKey::kIndexSumMin, id6);
  CHECK(c6.packing == VertexSet{0, 3});
  CHECK(c6.key == *brute_min_index_sum(bridge::to_small(cycle(6)), id6, [](oracle::Mask) { return true; }));
}

TEST_CASE("complete_packing") {
  const std::vector<Vertex> scan{4, 3, 2, 1, 0};
  const VertexSet p = complete_packing(path(5), {}, scan);
  CHECK(p == VertexSet{1, 4});
  CHECK(complete_packing(path(5), {}, scan, {4}) == VertexSet{0, 3});
}

TEST_CASE("branch and bound matches subset enumeration with random X") {
  Rng rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = rng.uniform(1, 11);
    const auto small = random_small(rng, n, rng.uniform(50, 700));
    const Graph g = bridge::from_small(small);
    const oracle::Mask x = rng.chance(1, 2) ? 0 : (rng.next() & rng.next() & small.all());
    const auto d = exact_domination(g, bridge::to_set(x));
    const auto p = exact_packing(g, bridge::to_set(x));
    REQUIRE(d.value == oracle::gamma(small, x));
    REQUIRE(p.value == oracle::rho(small, x));
    CHECK(d.value == d.witness.size());
    CHECK(p.value == p.witness.size());
    CHECK(is_dominating(g, d.witness, bridge::to_set(x)));
    CHECK(is_packing(g, p.witness, bridge::to_set(x)));
  }
}

TEST_CASE("monotone in X") {
  Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.uniform(2, 14);
    const Graph g = bridge::from_small(random_small(rng, n, 250));
    VertexSet small_x, big_x;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.chance(1, 5)) small_x.insert(v);
      if (small_x.contains(v) || rng.chance(1, 4)) big_x.insert(v);
    }
    CHECK(exact_domination(g, big_x).value <= exact_domination(g, small_x).value);
    CHECK(exact_packing(g, big_x).value <= exact_packing(g, small_x).value);
  }
}

TEST_CASE("packing never exceeds domination, Delta bound without isolated vertices") {
  Rng rng(6);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = rng.uniform(2, 16);
    const Graph g = bridge::from_small(random_small(rng, n, rng.uniform(100, 600)));
    const int gamma = exact_domination(g).value;
    const int rho = exact_packing(g).value;
    CHECK(rho <= gamma);
    CHECK(greedy_domination(g).value >= gamma);
    CHECK(is_dominating(g, greedy_domination(g).witness));
    if (g.min_degree() >= 1) {
      CHECK(gamma <= g.max_degree() * rho);
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("least index-sum maximal packing matches enumeration") {
  Rng rng(31);
  for (int trial = 0; trial < 800; ++trial) {
    const int n = rng.uniform(1, 11);
    const auto small = random_small(rng, n, rng.uniform(100, 500));
    const Graph g = bridge::from_small(small);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    const auto any = min_index_sum_maximal_packing(g, order);
    REQUIRE(any.has_value());
    CHECK(any->key == *brute_min_index_sum(small, order, [](oracle::Mask) { return true; }));
    CHECK(is_packing(g, any->packing));

    // accept only packings that avoid the first vertex of the order
    const oracle::Mask banned = oracle::Mask{1} << order[0];
    const auto expect = brute_min_index_sum(small, order, [&](oracle::Mask p) { return (p & banned) == 0; });
    const auto got = min_index_sum_maximal_packing(
        g, order, 2000000, [&](const VertexSet& p) { return !p.contains(order[0]); });
    REQUIRE(got.has_value() == expect.has_value());
    if (got) {
      CHECK(got->key == *expect);
      CHECK_FALSE(got->packing.contains(order[0]));
    }
  }
}

TEST_CASE("keyed local search returns maximal packings") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform(1, 20);
    const Graph g = bridge::from_small(random_small(rng, n, 200));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (PackingKey key : {PackingKey::kIndexSumMin, PackingKey::kDepthSumMax}) {
      const auto kp = maximal_packing_keyed(g, key, order, order[0]);
      REQUIRE(is_packing(g, kp.packing));
      for (Vertex v = 0; v < n; ++v) {
        if (kp.packing.contains(v)) continue;
        VertexSet bigger = kp.packing;
        bigger.insert(v);
        CHECK_FALSE(is_packing(g, bigger));
      }
    }
  }
}

TEST_CASE("deterministic witnesses") {
  const Graph g = fixtures::rook(4);
  CHECK(exact_domination(g).witness == exact_domination(g).witness);
  CHECK(exact_packing(g).witness == exact_packing(g).witness);
}

}
