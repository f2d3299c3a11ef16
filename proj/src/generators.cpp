#include "dompack/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <regex>
#include <set>

#include "dompack/errors.hpp"
#include "dompack/planar.hpp"
#include "dompack/rng.hpp"

namespace dompack {

std::int64_t GenSpec::param(const std::string& key, std::int64_t fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

nlohmann::json GenSpec::to_json() const {
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [k, v] : params) p[k] = v;
  return {{"family", family}, {"n", n}, {"seed", seed}, {"params", p}};
}

GenSpec GenSpec::from_json(const nlohmann::json& j) {
  GenSpec s;
  s.family = j.at("family").get<std::string>();
  s.n = j.at("n").get<int>();
  s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("params"))
    for (const auto& [k, v] : j["params"].items()) s.params[k] = v.get<std::int64_t>();
  return s;
}

Graph gen_tree(const GenSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw PreconditionError("gen_tree: n >= 1 required");
  if (n == 1) return Graph(1);
  Rng rng(spec.seed);
  std::vector<Vertex> code(n - 2);
  for (Vertex& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<int> remaining_degree(n, 1);
  for (Vertex c : code) ++remaining_degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (remaining_degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--remaining_degree[c] == 1) leaves.push(c);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph(n, edges);
}

Graph gen_interval(const GenSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw PreconditionError("gen_interval: n >= 1 required");
  const std::int64_t span = std::max<std::int64_t>(1, spec.param("span", 4 * n));
  const std::int64_t max_len = std::max<std::int64_t>(0, spec.param("max_len", 8));
  Rng rng(spec.seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> iv(n);
  for (auto& [l, r] : iv) {
    l = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(span)));
    r = l + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) edges.push_back({i, j});
  Graph g(n, edges);
  if (!find_simple_elimination_ordering(g))
    throw ConstructionError("gen_interval: interval graph failed strongly chordal recognition");
  return g;
}

ChordalBipartiteSample gen_chordal_bipartite_sample(const GenSpec& spec) {
  const int n = spec.n;
  if (n < 1 || n > 16) throw PreconditionError("gen_chordal_bipartite: 1 <= n <= 16 required");
  if (n == 1) return {Graph(1), 1};
  const std::uint64_t p = static_cast<std::uint64_t>(spec.param("p_permille", 300));
  const std::int64_t budget = spec.param("budget", 10000);
  for (std::int64_t a = 0; a < budget; ++a) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(a)));
    const int left = rng.uniform(1, n - 1);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < left; ++i)
      for (Vertex j = left; j < n; ++j)
        if (rng.chance(p, 1000)) edges.push_back({i, j});
    Graph g(n, edges);
    if (is_chordal_bipartite(g)) return {g, static_cast<int>(a + 1)};
  }
  throw BudgetExceeded("gen_chordal_bipartite: rejection budget exhausted");
}

Graph gen_chordal_bipartite(const GenSpec& spec) { return gen_chordal_bipartite_sample(spec).graph; }

DistanceHereditarySample gen_distance_hereditary_sample(const GenSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw PreconditionError("gen_distance_hereditary: n >= 1 required");
  const std::uint64_t w_pendant = static_cast<std::uint64_t>(spec.param("pendant", 1));
  const std::uint64_t w_true = static_cast<std::uint64_t>(spec.param("true_twin", 1));
  const std::uint64_t w_false = static_cast<std::uint64_t>(spec.param("false_twin", 1));
  const std::uint64_t total = w_pendant + w_true + w_false;
  if (total == 0) throw PreconditionError("gen_distance_hereditary: all operation weights are zero");
  const std::int64_t budget = spec.param("budget", 20);

  for (std::int64_t a = 0; a < budget; ++a) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(a)));
    std::vector<VertexSet> adj(n);
    for (Vertex v = 1; v < n; ++v) {
      Vertex base = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
      std::uint64_t op = rng.below(total);
      VertexSet nb;
      if (op < w_pendant) {
        nb.insert(base);
      } else {
        nb = adj[base];
        if (op < w_pendant + w_true) nb.insert(base);
      }
      adj[v] = nb;
      for (Vertex u : nb) adj[u].insert(v);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : adj[u])
        if (u < v) edges.push_back({u, v});
    Graph g(n, edges);
    try {
      if (auto ord = find_homogeneous_ordering(g)) return {g, *ord, static_cast<int>(a + 1)};
    } catch (const BudgetExceeded&) {
      // discard and regenerate
    }
  }
  throw BudgetExceeded("gen_distance_hereditary: no certified instance within budget");
}

Graph gen_distance_hereditary(const GenSpec& spec) { return gen_distance_hereditary_sample(spec).graph; }

Graph gen_rook(int k, int l) {
  if (k < 1 || l < 1) throw PreconditionError("gen_rook: k, l >= 1 required");
  std::vector<Edge> edges;
  for (int a = 0; a < k * l; ++a)
    for (int b = a + 1; b < k * l; ++b)
      if (a / l == b / l || a % l == b % l) edges.push_back({a, b});
  return Graph(k * l, edges);
}

Graph gen_gnp(const GenSpec& spec) {
  const std::uint64_t p = static_cast<std::uint64_t>(spec.param("p_permille", 500));
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < spec.n; ++i)
    for (Vertex j = i + 1; j < spec.n; ++j)
      if (rng.chance(p, 1000)) edges.push_back({i, j});
  return Graph(spec.n, edges);
}

namespace {

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycles need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, edges);
}

Graph icosahedron() {
  std::vector<Edge> edges;
  for (int j = 0; j < 5; ++j) {
    int up = 1 + j;
    int low = 6 + j;
    edges.push_back({0, up});
    edges.push_back({up, 1 + (j + 1) % 5});
    edges.push_back({low, 6 + (j + 1) % 5});
    edges.push_back({up, low});
    edges.push_back({up, 6 + (j + 1) % 5});
    edges.push_back({low, 11});
  }
  return Graph(12, edges);
}

}  // namespace

Graph gen_named(const std::string& name) {
  std::smatch m;
  if (name == "octahedron") {
    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (j != i + 3) edges.push_back({i, j});
    return Graph(6, edges);
  }
  if (name == "icosahedron") return icosahedron();
  if (std::regex_match(name, m, std::regex(R"(C(\d+))"))) return cycle(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex(R"(P(\d+))"))) return path(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex(R"(K(\d+),(\d+))")))
    return complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(name, m, std::regex(R"(K(\d+))"))) {
    int n = std::stoi(m[1]);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
  }
  if (std::regex_match(name, m, std::regex(R"(star(\d+))"))) return complete_bipartite(1, std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex(R"(rook(\d+)x(\d+))"))) return gen_rook(std::stoi(m[1]), std::stoi(m[2]));
  throw std::invalid_argument("unknown named graph '" + name + "'");
}

Graph generate(const GenSpec& spec) {
  const std::string& f = spec.family;
  if (f == "tree") return gen_tree(spec);
  if (f == "interval") return gen_interval(spec);
  if (f == "chordal-bipartite") return gen_chordal_bipartite(spec);
  if (f == "distance-hereditary") return gen_distance_hereditary(spec);
  if (f == "gnp") return gen_gnp(spec);
  if (f == "rook") return gen_rook(static_cast<int>(spec.param("k", 2)), static_cast<int>(spec.param("l", spec.param("k", 2))));
  if (f == "planar") {
    std::int64_t m = spec.param("m", -1);
    if (m < 0) {
      Rng rng(derive_seed(spec.seed, 0x706c));
      m = rng.uniform(0, max_planar_edges(spec.n));
    }
    return random_planar(spec.seed, spec.n, static_cast<int>(m));
  }
  throw std::invalid_argument("unknown generator family '" + f + "'");
}

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex u : t.neighbors(v))
    if (u != parent) kids.push_back(rooted_code(t, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::string tree_canonical_form(const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("tree_canonical_form: not a tree");
  VertexSet alive = t.vertices();
  while (alive.size() > 2) {
    VertexSet leaves;
    for (Vertex v : alive)
      if (t.neighbors(v).intersection_size(alive) <= 1) leaves.insert(v);
    alive -= leaves;
  }
  std::string best;
  for (Vertex c : alive) {
    std::string code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 16) throw PreconditionError("enumerate_trees: 1 <= n <= 16 required");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.n(); ++v) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({v, k - 1});
        Graph grown(k, edges);
        if (seen.insert(tree_canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace dompack
