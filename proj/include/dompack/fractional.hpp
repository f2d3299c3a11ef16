#pragma once

#include <vector>

#include "dompack/graph.hpp"
#include "dompack/rational.hpp"

namespace dompack {

/// Optimal solution of the fractional domination LP together with an optimal
/// solution of its dual, the fractional packing LP.
struct LpSolution {
  Rational value;
  /// Fractional dominating weights x_v (primal, minimisation).
  std::vector<Rational> primal;
  /// Fractional packing weights y_v (dual, maximisation).
  std::vector<Rational> dual;
  int pivots = 0;
};

/// Exact simplex (dense tableau, Bland's rule) over GMP rationals.
LpSolution fractional_domination(const Graph& g);

/// Σ_{u∈N[v]} x_u >= 1 for all v, x >= 0.
bool is_fractional_dominating(const Graph& g, const std::vector<Rational>& x);
/// Σ_{u∈N[v]} y_u <= 1 for all v, y >= 0.
bool is_fractional_packing(const Graph& g, const std::vector<Rational>& y);

struct SandwichReport {
  int rho = 0;
  Rational rho_f;
  Rational gamma_f;
  int gamma = 0;
  /// Σx = Σy with x primal-feasible and y dual-feasible.
  bool duality_certified = false;
  /// ρ <= ρ_f = γ_f <= γ with a valid duality certificate.
  bool holds = false;
  LpSolution lp;
};

/// Computes ρ, ρ_f, γ_f, γ exactly and checks the chain.
SandwichReport verify_sandwich(const Graph& g);
/// Same, reusing already computed integral values.
SandwichReport verify_sandwich(const Graph& g, int gamma, int rho);

}  // namespace dompack
