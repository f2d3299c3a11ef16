#include <doctest.h>

#include "dompack/exact.hpp"
#include "dompack/fractional.hpp"
#include "dompack/generators.hpp"
#include "dompack/rng.hpp"
#include "support/bridge.hpp"
#include "support/fixtures.hpp"

using namespace dompack;

namespace {

// Row sums of the closed-neighborhood matrix, computed from oracle masks.
std::vector<Rational> row_sums(const oracle::SmallGraph& g, const std::vector<Rational>& w) {
  std::vector<Rational> out(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int u = 0; u < g.n; ++u)
      if ((g.closed(v) >> u) & 1) out[v] += w[u];
  return out;
}

// Weak duality: a feasible x and y with equal sums are both optimal.
void check_certificate(const Graph& g, const LpSolution& lp) {
  const auto small = bridge::to_small(g);
  Rational sx, sy;
  for (const auto& v : lp.primal) {
    CHECK(v >= 0);
    sx += v;
  }
  for (const auto& v : lp.dual) {
    CHECK(v >= 0);
    sy += v;
  }
  for (const auto& s : row_sums(small, lp.primal)) CHECK(s >= 1);
  for (const auto& s : row_sums(small, lp.dual)) CHECK(s <= 1);
  CHECK(sx == sy);
  CHECK(sx == lp.value);
}

}  // namespace

TEST_SUITE("fractional") {

TEST_CASE("complete graphs have value 1") {
  for (int n = 1; n <= 6; ++n) {
    const auto lp = fractional_domination(fixtures::complete(n));
    CHECK(lp.value == 1);
    check_certificate(fixtures::complete(n), lp);
  }
}

TEST_CASE("C4 has value 4/3") {
  const Graph c4 = fixtures::cycle(4);
  const auto lp = fractional_domination(c4);
  CHECK(lp.value == Rational(4, 3));
  check_certificate(c4, lp);
  // the uniform third is feasible on both sides and sums to 4/3
  const std::vector<Rational> third(4, Rational(1, 3));
  CHECK(is_fractional_dominating(c4, third));
  CHECK(is_fractional_packing(c4, third));
}

TEST_CASE("stars have value 1") {
  for (int k = 1; k <= 7; ++k) CHECK(fractional_domination(fixtures::star(k)).value == 1);
}

TEST_CASE("feasibility predicates") {
  const Graph p3 = fixtures::path(3);
  CHECK(is_fractional_dominating(p3, {0, 1, 0}));
  CHECK_FALSE(is_fractional_dominating(p3, {1, 0, 0}));
  CHECK_FALSE(is_fractional_dominating(p3, {0, 1}));
  CHECK(is_fractional_packing(p3, {Rational(1, 2), 0, Rational(1, 2)}));
  CHECK_FALSE(is_fractional_packing(p3, {1, 1, 0}));
  CHECK_FALSE(is_fractional_packing(p3, {-1, 0, 0}));
}

TEST_CASE("sandwich on named graphs") {
  const auto c4 = verify_sandwich(fixtures::cycle(4));
  CHECK(c4.holds);
  CHECK(c4.rho == 1);
  CHECK(c4.rho_f == Rational(4, 3));
  CHECK(c4.gamma_f == Rational(4, 3));
  CHECK(c4.gamma == 2);

  const auto rook = verify_sandwich(fixtures::rook(3));
  CHECK(rook.holds);
  CHECK(rook.rho == 1);
  CHECK(rook.gamma == 3);
  CHECK(rook.gamma_f >= 1);
  CHECK(rook.gamma_f <= 3);
}

TEST_CASE("trees collapse the chain") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph t = gen_tree(GenSpec{"tree", 2 + static_cast<int>(seed % 25), seed, {}});
    const auto r = verify_sandwich(t);
    CHECK(r.holds);
    CHECK(r.rho_f == r.rho);
    CHECK(r.gamma_f == r.gamma);
    CHECK(r.rho == r.gamma);
  }
}

TEST_CASE("vertex-transitive scaling") {
  std::vector<Graph> graphs;
  for (int n = 3; n <= 10; ++n) graphs.push_back(fixtures::cycle(n));
  for (int k = 2; k <= 4; ++k) graphs.push_back(fixtures::rook(k));
  graphs.push_back(gen_named("octahedron"));
  graphs.push_back(gen_named("icosahedron"));
  graphs.push_back(fixtures::complete_bipartite(3, 3));
  for (const Graph& g : graphs) {
    const int delta = g.min_degree();
    const std::vector<Rational> uniform(g.n(), Rational(1, delta + 1));
    CHECK(is_fractional_dominating(g, uniform));
    const auto lp = fractional_domination(g);
    CHECK(lp.value <= Rational(g.n(), delta + 1));
    check_certificate(g, lp);
  }
}

TEST_CASE("strong duality and agreement on random graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(1, 14);
    std::vector<Edge> edges;
    const int permille = rng.uniform(0, 800);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(1000) < static_cast<std::uint64_t>(permille)) edges.push_back({u, v});
    const Graph g(n, edges);
    const auto r = verify_sandwich(g);
    CHECK(r.duality_certified);
    CHECK(r.holds);
    check_certificate(g, r.lp);
    CHECK(Rational(oracle::rho(bridge::to_small(g))) <= r.gamma_f);
    CHECK(r.gamma_f <= Rational(oracle::gamma(bridge::to_small(g))));
  }
}

}
