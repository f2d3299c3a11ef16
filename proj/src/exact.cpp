#include "dompack/exact.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>

#include "dompack/errors.hpp"

namespace dompack {

namespace {

std::vector<VertexSet> closed_neighborhoods(const Graph& g) {
  std::vector<VertexSet> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out[v] = g.closed_neighbors(v);
  return out;
}

/// Greedy set cover of `target` by closed neighborhoods.
VertexSet greedy_cover(const std::vector<VertexSet>& closed, VertexSet target) {
  VertexSet chosen;
  const int n = static_cast<int>(closed.size());
  while (!target.empty()) {
    Vertex best = -1;
    int best_gain = 0;
    for (Vertex c = 0; c < n; ++c) {
      int gain = closed[c].intersection_size(target);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    chosen.insert(best);
    target -= closed[best];
  }
  return chosen;
}

// Branches on the lowest-index undominated vertex; each closed neighbor is
// tried as its dominator, and earlier siblings are forbidden in later
// subtrees so every dominating set is enumerated at most once.
class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : closed_(closed_neighborhoods(g)) {}

  void solve_component(const VertexSet& uncovered) {
    if (uncovered.empty()) return;
    best_set_ = greedy_cover(closed_, uncovered);
    best_ = best_set_.size();
    chosen_ = {};
    search(uncovered, {});
    result_ |= best_set_;
  }

  const VertexSet& result() const { return result_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // -1 when some undominated vertex has no remaining candidate.
  int lower_bound(const VertexSet& uncovered, const VertexSet& forbidden) const {
    VertexSet used;
    int disjoint = 0;
    for (Vertex w : uncovered) {
      VertexSet cand = closed_[w] - forbidden;
      if (cand.empty()) return -1;
      if (!cand.intersects(used)) {
        used |= cand;
        ++disjoint;
      }
    }
    int max_cover = 0;
    VertexSet reach;
    for (Vertex w : uncovered) reach |= closed_[w];
    reach -= forbidden;
    for (Vertex c : reach) max_cover = std::max(max_cover, closed_[c].intersection_size(uncovered));
    int count = uncovered.size();
    return std::max(disjoint, (count + max_cover - 1) / max_cover);
  }

  void search(const VertexSet& uncovered, VertexSet forbidden) {
    ++nodes_;
    if (uncovered.empty()) {
      if (chosen_.size() < best_) {
        best_ = chosen_.size();
        best_set_ = chosen_;
      }
      return;
    }
    int lb = lower_bound(uncovered, forbidden);
    if (lb < 0 || chosen_.size() + lb >= best_) return;

    Vertex u = uncovered.first();
    std::vector<std::pair<int, Vertex>> candidates;
    for (Vertex c : closed_[u] - forbidden) candidates.push_back({-closed_[c].intersection_size(uncovered), c});
    std::sort(candidates.begin(), candidates.end());
    for (auto [neg_gain, c] : candidates) {
      chosen_.insert(c);
      search(uncovered - closed_[c], forbidden);
      chosen_.erase(c);
      forbidden.insert(c);
      if (chosen_.size() + 1 >= best_) break;
    }
  }

  std::vector<VertexSet> closed_;
  VertexSet chosen_;
  VertexSet best_set_;
  VertexSet result_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

// Include/exclude on the lowest-index eligible vertex; the bound counts how
// many closed neighborhoods (each a clique of the distance-2 conflict graph)
// greedily cover the eligible set.
class PackingSearch {
 public:
  explicit PackingSearch(const Graph& g) : closed_(closed_neighborhoods(g)), second_(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) second_[v] = closed_neighborhood(g, closed_[v]);
  }

  void solve_component(const VertexSet& eligible) {
    if (eligible.empty()) return;
    best_set_ = greedy(eligible);
    best_ = best_set_.size();
    chosen_ = {};
    search(eligible);
    result_ |= best_set_;
  }

  const VertexSet& result() const { return result_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  VertexSet greedy(VertexSet eligible) const {
    VertexSet p;
    while (!eligible.empty()) {
      Vertex pick = eligible.first();
      for (Vertex v : eligible)
        if (second_[v].intersection_size(eligible) < second_[pick].intersection_size(eligible)) pick = v;
      p.insert(pick);
      eligible -= second_[pick];
    }
    return p;
  }

  int upper_bound(VertexSet remaining) const {
    int count = 0;
    while (!remaining.empty()) {
      Vertex r = remaining.first();
      Vertex best = r;
      int best_cov = -1;
      for (Vertex w : closed_[r]) {
        int cov = closed_[w].intersection_size(remaining);
        if (cov > best_cov) {
          best_cov = cov;
          best = w;
        }
      }
      remaining -= closed_[best];
      ++count;
    }
    return count;
  }

  void search(const VertexSet& eligible) {
    ++nodes_;
    if (eligible.empty()) {
      if (chosen_.size() > best_) {
        best_ = chosen_.size();
        best_set_ = chosen_;
      }
      return;
    }
    if (chosen_.size() + upper_bound(eligible) <= best_) return;
    Vertex v = eligible.first();
    chosen_.insert(v);
    search(eligible - second_[v]);
    chosen_.erase(v);
    VertexSet rest = eligible;
    rest.erase(v);
    search(rest);
  }

  std::vector<VertexSet> closed_;
  std::vector<VertexSet> second_;
  VertexSet chosen_;
  VertexSet best_set_;
  VertexSet result_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult exact_domination(const Graph& g, const VertexSet& x) {
  DominationSearch search(g);
  for (const VertexSet& comp : connected_components(g)) search.solve_component(comp - x);
  return {search.result().size(), search.result(), search.nodes(), true};
}

SolveResult exact_packing(const Graph& g, const VertexSet& x) {
  PackingSearch search(g);
  for (const VertexSet& comp : connected_components(g)) search.solve_component(comp - x);
  return {search.result().size(), search.result(), search.nodes(), true};
}

SolveResult greedy_domination(const Graph& g) {
  VertexSet d = greedy_cover(closed_neighborhoods(g), g.vertices());
  return {d.size(), d, static_cast<std::uint64_t>(d.size()), false};
}

Rational max_ratio(const Graph& g) {
  return Rational(exact_domination(g).value, exact_packing(g).value);
}

VertexSet complete_packing(const Graph& g, VertexSet p, std::span<const Vertex> scan, const VertexSet& x) {
  VertexSet covered = closed_neighborhood(g, p);
  for (Vertex v : scan) {
    if (p.contains(v) || x.contains(v)) continue;
    VertexSet nv = g.closed_neighbors(v);
    if (nv.intersects(covered)) continue;
    p.insert(v);
    covered |= nv;
  }
  return p;
}

KeyedPacking maximal_packing_keyed(const Graph& g, PackingKey key, std::span<const Vertex> order, Vertex root) {
  const int n = g.n();
  std::vector<long> weight(n, 0);
  std::vector<Vertex> scan;
  if (key == PackingKey::kIndexSumMin) {
    if (static_cast<int>(order.size()) != n) throw PreconditionError("ordering must list every vertex exactly once");
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < order.size(); ++i) {
      g.check_vertex(order[i]);
      if (seen[order[i]]) throw PreconditionError("ordering repeats a vertex");
      seen[order[i]] = true;
      weight[order[i]] = static_cast<long>(i) + 1;
    }
    scan.assign(order.begin(), order.end());
  } else {
    std::vector<int> depth = bfs_distances(g, root);
    for (Vertex v = 0; v < n; ++v) weight[v] = std::max(depth[v], 0);
    scan.resize(n);
    std::iota(scan.begin(), scan.end(), 0);
    std::stable_sort(scan.begin(), scan.end(), [&](Vertex a, Vertex b) { return weight[a] > weight[b]; });
  }

  auto key_of = [&](const VertexSet& p) {
    long s = 0;
    for (Vertex v : p) s += weight[v];
    return s;
  };
  auto better = [&](long candidate, long incumbent) {
    return key == PackingKey::kIndexSumMin ? candidate < incumbent : candidate > incumbent;
  };

  KeyedPacking out;
  out.packing = complete_packing(g, {}, scan);
  out.key = key_of(out.packing);
  const int cap = n * n;
  bool improved = true;
  while (improved) {
    improved = false;
    // Exchange: insert w, evict every member within distance two of it, then
    // re-complete greedily.
    for (Vertex w = 0; w < n && !improved; ++w) {
      if (out.packing.contains(w)) continue;
      VertexSet trial;
      for (Vertex z : out.packing)
        if (!g.closed_neighbors(z).intersects(g.closed_neighbors(w))) trial.insert(z);
      trial.insert(w);
      trial = complete_packing(g, trial, scan);
      long k = key_of(trial);
      if (better(k, out.key)) {
        out.packing = trial;
        out.key = k;
        ++out.exchanges;
        improved = true;
      }
    }
    if (improved && out.exchanges >= cap) {
      out.capped = true;
      break;
    }
  }
  return out;
}

namespace {

class MinIndexSumSearch {
 public:
  MinIndexSumSearch(const Graph& g, std::span<const Vertex> order, std::uint64_t budget,
                    const std::function<bool(const VertexSet&)>& accept)
      : g_(g), order_(order.begin(), order.end()), budget_(budget), accept_(accept) {
    const int n = g.n();
    pos_.assign(n, 0);
    for (int i = 0; i < n; ++i) pos_[order_[i]] = i;
    ball_.resize(n);
    for (Vertex v = 0; v < n; ++v) ball_[v] = second_closed_neighborhood(g, v);
    later_.assign(n + 1, VertexSet{});
    for (int i = n - 1; i >= 0; --i) {
      later_[i] = later_[i + 1];
      later_[i].insert(order_[i]);
    }
  }

  void run(long incumbent_key, const std::optional<VertexSet>& incumbent) {
    best_key_ = incumbent_key;
    best_ = incumbent;
    recurse(0, {}, {}, {}, 0);
  }

  std::optional<VertexSet> best_;
  long best_key_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;

 private:
  // blocked: vertices within distance two of the packing; pending: skipped
  // vertices that some later member must still block.
  void recurse(int i, const VertexSet& p, const VertexSet& blocked, const VertexSet& pending, long key) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (key >= best_key_) return;
    const int n = g_.n();
    VertexSet open = pending - blocked;
    for (Vertex u : open)
      if (!ball_[u].intersects(later_[i] - blocked)) return;
    if (i == n) {
      if (!accept_ || accept_(p)) {
        best_key_ = key;
        best_ = p;
      }
      return;
    }
    const Vertex v = order_[i];
    if (blocked.contains(v)) {
      recurse(i + 1, p, blocked, pending, key);
      return;
    }
    VertexSet with = p;
    with.insert(v);
    recurse(i + 1, with, blocked | ball_[v], pending, key + i + 1);
    VertexSet skip = pending;
    skip.insert(v);
    recurse(i + 1, p, blocked, skip, key);
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::uint64_t budget_;
  std::vector<int> pos_;
  std::vector<VertexSet> ball_;
  std::vector<VertexSet> later_;
  const std::function<bool(const VertexSet&)>& accept_;
};

}  // namespace

std::optional<KeyedPacking> min_index_sum_maximal_packing(const Graph& g, std::span<const Vertex> order,
                                                          std::uint64_t node_budget,
                                                          const std::function<bool(const VertexSet&)>& accept) {
  KeyedPacking local = maximal_packing_keyed(g, PackingKey::kIndexSumMin, order);
  const bool local_ok = !accept || accept(local.packing);
  MinIndexSumSearch search(g, order, node_budget, accept);
  search.run(local_ok ? local.key : std::numeric_limits<long>::max(),
             local_ok ? std::optional<VertexSet>(local.packing) : std::nullopt);
  if (!search.best_) {
    if (search.exhausted_) throw BudgetExceeded("index-sum packing search exceeded its node budget");
    return std::nullopt;
  }
  KeyedPacking out = local;
  out.packing = *search.best_;
  out.key = search.best_key_;
  out.capped = search.exhausted_;
  return out;
}

}  // namespace dompack
