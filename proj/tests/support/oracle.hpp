#pragma once

// Brute-force reference values for small graphs. Nothing here calls into the
// library's algorithms: graphs are plain closed-neighborhood bitmasks and every
// answer comes from full subset enumeration.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

struct SmallGraph {
  int n = 0;
  std::vector<Mask> adj;  // open neighborhoods

  explicit SmallGraph(int order) : n(order), adj(order, 0) {
    if (order < 1 || order > 24) throw std::invalid_argument("oracle graphs have 1..24 vertices");
  }

  void connect(int u, int v) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1; }
  Mask closed(int v) const { return adj[v] | (Mask{1} << v); }
  Mask all() const { return (Mask{1} << n) - 1; }
  int edge_count() const {
    int m = 0;
    for (Mask a : adj) m += std::popcount(a);
    return m / 2;
  }
};

inline Mask cover(const SmallGraph& g, Mask d) {
  Mask c = 0;
  for (int v = 0; v < g.n; ++v)
    if ((d >> v) & 1) c |= g.closed(v);
  return c;
}

inline bool dominates(const SmallGraph& g, Mask d, Mask x = 0) { return (cover(g, d) | x) == g.all(); }

inline bool packs(const SmallGraph& g, Mask p, Mask x = 0) {
  if (p & x) return false;
  Mask seen = 0;
  for (int v = 0; v < g.n; ++v) {
    if (!((p >> v) & 1)) continue;
    if (seen & g.closed(v)) return false;
    seen |= g.closed(v);
  }
  return true;
}

/// Minimum |D| with N[D] ∪ x = V.
inline int gamma(const SmallGraph& g, Mask x = 0) {
  int best = g.n;
  for (Mask d = 0; d <= g.all(); ++d)
    if (std::popcount(d) < best && dominates(g, d, x)) best = std::popcount(d);
  return best;
}

/// Maximum |P| of an x-avoiding packing.
inline int rho(const SmallGraph& g, Mask x = 0) {
  int best = 0;
  for (Mask p = 0; p <= g.all(); ++p)
    if (std::popcount(p) > best && packs(g, p, x)) best = std::popcount(p);
  return best;
}

inline std::vector<Mask> maximal_packings(const SmallGraph& g) {
  std::vector<Mask> out;
  for (Mask p = 0; p <= g.all(); ++p) {
    if (!packs(g, p)) continue;
    bool maximal = true;
    for (int v = 0; v < g.n && maximal; ++v)
      if (!((p >> v) & 1) && packs(g, p | (Mask{1} << v))) maximal = false;
    if (maximal) out.push_back(p);
  }
  return out;
}

/// Number of minimum dominating sets.
inline int count_minimum_dominating_sets(const SmallGraph& g) {
  const int k = gamma(g);
  int count = 0;
  for (Mask d = 0; d <= g.all(); ++d)
    if (std::popcount(d) == k && dominates(g, d)) ++count;
  return count;
}

/// Every labeled graph on n vertices, indexed by a bitmask over the pairs
/// (0,1), (0,2), ..., (n-2,n-1).
inline int pair_count(int n) { return n * (n - 1) / 2; }

inline SmallGraph labeled_graph(int n, std::uint64_t code) {
  SmallGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1) g.connect(u, v);
  return g;
}

inline std::vector<std::pair<int, int>> edge_pairs(const SmallGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

/// graph6 decoder written straight from the format description: N(n) is one
/// byte 63+n for n <= 62, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each byte
/// offset by 63.
inline SmallGraph decode_graph6(std::string_view s) {
  if (s.empty() || s[0] < 63 || s[0] > 125) throw std::invalid_argument("bad graph6 size byte");
  const int n = s[0] - 63;
  SmallGraph g(n);
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int six = s[i] - 63;
    if (six < 0 || six > 63) throw std::invalid_argument("bad graph6 data byte");
    for (int b = 5; b >= 0; --b) bits.push_back((six >> b) & 1);
  }
  if (static_cast<int>(bits.size()) < pair_count(n)) throw std::invalid_argument("short graph6 data");
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (bits[k]) g.connect(u, v);
  return g;
}

/// True when some vertex subset of size >= min_len induces a chordless cycle.
inline bool has_long_induced_cycle(const SmallGraph& g, int min_len) {
  for (Mask s = 0; s <= g.all(); ++s) {
    const int k = std::popcount(s);
    if (k < min_len) continue;
    bool all_two = true;
    for (int v = 0; v < g.n && all_two; ++v)
      if (((s >> v) & 1) && std::popcount(g.adj[v] & s) != 2) all_two = false;
    if (!all_two) continue;
    // 2-regular and connected means a single cycle.
    Mask reach = s & (~s + 1);
    for (int step = 0; step < k; ++step) {
      Mask next = reach;
      for (int v = 0; v < g.n; ++v)
        if ((reach >> v) & 1) next |= g.adj[v] & s;
      reach = next;
    }
    if (reach == s) return true;
  }
  return false;
}

inline bool is_bipartite(const SmallGraph& g) {
  std::vector<int> colour(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < g.n; ++u) {
        if (!g.adjacent(v, u)) continue;
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_connected(const SmallGraph& g) {
  Mask reach = 1;
  for (int step = 0; step < g.n; ++step) reach = cover(g, reach);
  return reach == g.all();
}

}  // namespace oracle
