#include "dompack/fractional.hpp"

#include "dompack/exact.hpp"

namespace dompack {

namespace {

struct ComponentLp {
  std::vector<mpq_class> x;
  std::vector<mpq_class> y;
  int pivots = 0;
};

// Solves max Σy s.t. A y <= 1, y >= 0 with A the closed-neighborhood matrix.
// The slack basis is feasible (rhs = 1), so no phase one is needed. At the
// optimum the reduced costs of the slack columns are the dominating weights x.
ComponentLp solve_packing_lp(const Graph& g) {
  const int n = g.n();
  const int cols = 2 * n;
  std::vector<std::vector<mpq_class>> tab(n, std::vector<mpq_class>(cols));
  std::vector<mpq_class> rhs(n, mpq_class(1));
  std::vector<mpq_class> cost(cols);
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) {
    for (Vertex u : g.closed_neighbors(i)) tab[i][u] = 1;
    tab[i][n + i] = 1;
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) cost[j] = -1;
  mpq_class objective = 0;

  ComponentLp out;
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    mpq_class best_ratio;
    for (int i = 0; i < n; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      mpq_class ratio = rhs[i] / tab[i][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // A y <= 1 with a positive diagonal bounds every column, so leave >= 0.

    mpq_class pivot = tab[leave][enter];
    for (int j = 0; j < cols; ++j)
      if (sgn(tab[leave][j]) != 0) tab[leave][j] /= pivot;
    rhs[leave] /= pivot;
    for (int i = 0; i < n; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      mpq_class factor = tab[i][enter];
      for (int j = 0; j < cols; ++j)
        if (sgn(tab[leave][j]) != 0) tab[i][j] -= factor * tab[leave][j];
      rhs[i] -= factor * rhs[leave];
    }
    mpq_class factor = cost[enter];
    for (int j = 0; j < cols; ++j)
      if (sgn(tab[leave][j]) != 0) cost[j] -= factor * tab[leave][j];
    objective -= factor * rhs[leave];
    basis[leave] = enter;
    ++out.pivots;
  }

  out.y.assign(n, mpq_class(0));
  for (int i = 0; i < n; ++i)
    if (basis[i] < n) out.y[basis[i]] = rhs[i];
  out.x.assign(n, mpq_class(0));
  for (int v = 0; v < n; ++v) out.x[v] = cost[n + v];
  return out;
}

}  // namespace

LpSolution fractional_domination(const Graph& g) {
  LpSolution sol;
  sol.primal.assign(g.n(), Rational(0));
  sol.dual.assign(g.n(), Rational(0));
  for (const VertexSet& comp : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    ComponentLp lp = solve_packing_lp(sub.graph);
    for (std::size_t i = 0; i < sub.original.size(); ++i) {
      sol.primal[sub.original[i]] = Rational(lp.x[i]);
      sol.dual[sub.original[i]] = Rational(lp.y[i]);
    }
    sol.pivots += lp.pivots;
  }
  for (const Rational& v : sol.dual) sol.value += v;
  return sol;
}

bool is_fractional_dominating(const Graph& g, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != g.n()) return false;
  for (const Rational& v : x)
    if (v.sign() < 0) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    Rational s;
    for (Vertex u : g.closed_neighbors(v)) s += x[u];
    if (s < Rational(1)) return false;
  }
  return true;
}

bool is_fractional_packing(const Graph& g, const std::vector<Rational>& y) {
  if (static_cast<int>(y.size()) != g.n()) return false;
  for (const Rational& v : y)
    if (v.sign() < 0) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    Rational s;
    for (Vertex u : g.closed_neighbors(v)) s += y[u];
    if (s > Rational(1)) return false;
  }
  return true;
}

SandwichReport verify_sandwich(const Graph& g, int gamma, int rho) {
  SandwichReport r;
  r.gamma = gamma;
  r.rho = rho;
  r.lp = fractional_domination(g);
  Rational sum_x;
  Rational sum_y;
  for (const Rational& v : r.lp.primal) sum_x += v;
  for (const Rational& v : r.lp.dual) sum_y += v;
  r.gamma_f = sum_x;
  r.rho_f = sum_y;
  r.duality_certified =
      sum_x == sum_y && is_fractional_dominating(g, r.lp.primal) && is_fractional_packing(g, r.lp.dual);
  r.holds = r.duality_certified && Rational(rho) <= r.rho_f && r.rho_f == r.gamma_f && r.gamma_f <= Rational(gamma);
  return r;
}

SandwichReport verify_sandwich(const Graph& g) {
  return verify_sandwich(g, exact_domination(g).value, exact_packing(g).value);
}

}  // namespace dompack
