#pragma once

#include <vector>

#include "dompack/graph.hpp"

namespace fixtures {

using dompack::Edge;
using dompack::Graph;

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

// Centre 0, leaves 1..k.
inline Graph star(int k) {
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) e.push_back({0, i});
  return Graph(k + 1, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph(a + b, e);
}

// K_k □ K_k written out cell by cell.
inline Graph rook(int k) {
  std::vector<Edge> e;
  for (int a = 0; a < k * k; ++a)
    for (int b = a + 1; b < k * k; ++b)
      if (a / k == b / k || a % k == b % k) e.push_back({a, b});
  return Graph(k * k, e);
}

}  // namespace fixtures
