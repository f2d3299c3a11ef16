#include "dompack/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "dompack/errors.hpp"
#include "dompack/exact.hpp"
#include "dompack/fractional.hpp"
#include "dompack/graph_io.hpp"
#include "dompack/planar.hpp"
#include "dompack/recognition.hpp"
#include "dompack/rng.hpp"

namespace dompack {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

nlohmann::json CampaignRecord::to_json() const {
  nlohmann::json j;
  if (genspec) j["genspec"] = genspec->to_json();
  j["graph6"] = graph6;
  j["n"] = n;
  j["gamma"] = gamma;
  j["rho"] = rho;
  j["D"] = gamma_witness.to_vector();
  j["P"] = rho_witness.to_vector();
  if (x) j["x"] = x->to_vector();
  if (gamma_x) j["gamma_x"] = *gamma_x;
  if (rho_x) j["rho_x"] = *rho_x;
  if (gamma_f) j["gamma_f"] = gamma_f->to_fraction_string();
  if (sandwich) j["sandwich"] = *sandwich;
  j["ratio"] = ratio.to_fraction_string();
  if (bound) j["bound"] = bound->to_fraction_string();
  if (certificate) j["certificate"] = certificate->to_json();
  j["pass"] = pass;
  if (!note.empty()) j["note"] = note;
  j["wall_ms"] = wall_ms;
  return j;
}

nlohmann::json VerifySummary::to_json() const {
  return {{"summary", true},
          {"instances", records.size()},
          {"violations", violations},
          {"invalid_certificates", invalid_certificates},
          {"max_ratio", max_ratio.to_fraction_string()},
          {"ok", ok()},
          {"wall_ms", wall_ms}};
}

nlohmann::json LemmaSummary::to_json() const {
  return {{"instances", instances}, {"failures", failures}, {"messages", messages}};
}

CampaignRecord compute_record(const Graph& g, const ComputeOptions& opts) {
  const auto start = Clock::now();
  if (opts.x && !opts.x->is_subset_of(g.vertices())) throw PreconditionError("X is not a subset of the vertices");
  CampaignRecord rec;
  rec.graph6 = emit_graph6(g);
  rec.n = g.n();
  SolveResult dom = exact_domination(g);
  SolveResult pack = exact_packing(g);
  rec.gamma = dom.value;
  rec.rho = pack.value;
  rec.gamma_witness = dom.witness;
  rec.rho_witness = pack.witness;
  rec.ratio = Rational(rec.gamma, rec.rho);
  if (opts.x) {
    rec.x = opts.x;
    rec.gamma_x = exact_domination(g, *opts.x).value;
    rec.rho_x = exact_packing(g, *opts.x).value;
  }
  if (opts.fractional) {
    SandwichReport s = verify_sandwich(g, rec.gamma, rec.rho);
    rec.gamma_f = s.gamma_f;
    rec.sandwich = s.holds;
    if (!s.holds) {
      rec.pass = false;
      rec.note = "sandwich violated";
    }
  }
  rec.wall_ms = elapsed_ms(start);
  return rec;
}

GenSpec campaign_spec(const VerifyOptions& opts, int index) {
  if (opts.n_min < 1 || opts.n_max < opts.n_min) throw PreconditionError("invalid n range");
  GenSpec spec;
  spec.seed = derive_seed(opts.seed, static_cast<std::uint64_t>(index));
  Rng rng(derive_seed(spec.seed, 0x6e));
  spec.n = rng.uniform(opts.n_min, opts.n_max);
  const std::string& c = opts.graph_class;
  if (c == "tree") {
    spec.family = "tree";
  } else if (c == "strongly-chordal") {
    spec.family = "interval";
  } else if (c == "chordal-bipartite") {
    spec.family = "chordal-bipartite";
  } else if (c == "homogeneously-orderable") {
    spec.family = "distance-hereditary";
  } else if (c == "planar") {
    spec.family = "planar";
    const int hi = max_planar_edges(spec.n);
    spec.params["m"] = rng.uniform(std::min(spec.n - 1, hi), hi);
  } else if (c == "rook") {
    spec.family = "rook";
  } else if (c == "any") {
    spec.family = opts.family.empty() ? "gnp" : opts.family;
  } else {
    throw std::invalid_argument("unknown class '" + c + "'");
  }
  if (spec.family == "rook") {
    spec.params["k"] = spec.n;
    spec.params["l"] = spec.n;
  }
  return spec;
}

CampaignRecord verify_instance(const VerifyOptions& opts, const GenSpec& spec) {
  const auto start = Clock::now();
  std::optional<Ordering> ordering;
  Graph g(1);
  if (spec.family == "distance-hereditary") {
    auto sample = gen_distance_hereditary_sample(spec);
    g = sample.graph;
    ordering = sample.ordering;
  } else {
    g = generate(spec);
  }

  CampaignRecord rec = compute_record(g, {opts.fractional, std::nullopt});
  rec.genspec = spec;
  rec.bound = opts.bound;
  std::vector<std::string> notes;
  if (!rec.note.empty()) notes.push_back(rec.note);
  if (!(Rational(rec.gamma) <= opts.bound * Rational(rec.rho))) {
    rec.pass = false;
    notes.push_back("gamma > bound * rho");
  }

  if (spec.family == "planar") {
    Rng rng(derive_seed(spec.seed, 0x58));
    VertexSet x;
    for (Vertex v = 0; v < g.n(); ++v)
      if (rng.chance(static_cast<std::uint64_t>(opts.x_permille), 1000)) x.insert(v);
    rec.x = x;
    rec.gamma_x = exact_domination(g, x).value;
    rec.rho_x = exact_packing(g, x).value;
    if (!(Rational(*rec.gamma_x) <= opts.bound * Rational(*rec.rho_x))) {
      rec.pass = false;
      notes.push_back("gamma_X > bound * rho_X");
    }
  }

  std::optional<GraphClass> cls;
  const std::string& c = opts.graph_class;
  if (c == "tree" || c == "strongly-chordal" || c == "chordal-bipartite" || c == "homogeneously-orderable")
    cls = parse_graph_class(c);
  if (cls) {
    try {
      DomPackCertificate cert;
      switch (*cls) {
        case GraphClass::kTree:
          cert = tree_dompack(g, 0);
          break;
        case GraphClass::kStronglyChordal: {
          auto ord = find_simple_elimination_ordering(g);
          if (!ord) throw PreconditionError("generated instance has no simple elimination ordering");
          cert = strongly_chordal_dompack(g, *ord);
          break;
        }
        case GraphClass::kChordalBipartite:
          cert = chordal_bipartite_dompack(g);
          break;
        case GraphClass::kHomogeneouslyOrderable:
          cert = homogeneously_orderable_dompack_reordering(g, ordering);
          break;
      }
      bool consistent = static_cast<int>(cert.p.size()) <= rec.rho && static_cast<int>(cert.d.size()) >= rec.gamma;
      if (cert.bound == Rational(1))
        consistent = consistent && static_cast<int>(cert.d.size()) == rec.gamma &&
                     static_cast<int>(cert.p.size()) == rec.rho;
      if (!cert.valid || !consistent) {
        rec.pass = false;
        cert.valid = false;
        notes.push_back("certificate inconsistent with exact values");
      }
      rec.certificate = cert;
    } catch (const std::exception& e) {
      rec.pass = false;
      DomPackCertificate failed;
      failed.graph_class = *cls;
      rec.certificate = failed;
      notes.push_back(e.what());
    }
  }

  rec.note.clear();
  for (std::size_t i = 0; i < notes.size(); ++i) rec.note += (i ? "; " : "") + notes[i];
  rec.wall_ms = elapsed_ms(start);
  return rec;
}

VerifySummary run_verify(const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerifySummary summary;
  summary.records.resize(opts.count);
  int workers = opts.workers > 0 ? opts.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, opts.count));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int i = next++; i < opts.count; i = next++) {
      try {
        summary.records[i] = verify_instance(opts, campaign_spec(opts, i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = opts.count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& rec : summary.records) {
    if (!rec.pass) {
      if (rec.certificate && !rec.certificate->valid)
        ++summary.invalid_certificates;
      else
        ++summary.violations;
    }
    summary.max_ratio = std::max(summary.max_ratio, rec.ratio);
  }
  summary.wall_ms = elapsed_ms(start);
  return summary;
}

CampaignRecord construct_record(const Graph& g, GraphClass cls) {
  const auto start = Clock::now();
  DomPackCertificate cert;
  switch (cls) {
    case GraphClass::kTree:
      if (!is_tree(g)) throw PreconditionError("input is not a tree");
      cert = tree_dompack(g, 0);
      break;
    case GraphClass::kStronglyChordal: {
      auto ord = find_simple_elimination_ordering(g);
      if (!ord) throw PreconditionError("input is not strongly chordal");
      cert = strongly_chordal_dompack(g, *ord);
      break;
    }
    case GraphClass::kChordalBipartite:
      if (!bipartition(g) || !is_chordal_bipartite(g)) throw PreconditionError("input is not chordal bipartite");
      cert = chordal_bipartite_dompack(g);
      break;
    case GraphClass::kHomogeneouslyOrderable:
      cert = homogeneously_orderable_dompack_reordering(g, std::nullopt);
      break;
  }
  CampaignRecord rec = compute_record(g);
  rec.bound = cert.bound;
  rec.pass = cert.valid && static_cast<int>(cert.p.size()) <= rec.rho && static_cast<int>(cert.d.size()) >= rec.gamma;
  rec.certificate = cert;
  rec.wall_ms = elapsed_ms(start);
  return rec;
}

namespace {

// Ordered by ratio, then smaller ρ (ratio gains are easiest at ρ = 1), then
// fewer minimum dominating sets (closer to needing one more dominator).
struct SearchScore {
  Rational ratio;
  int rho = 0;
  long minimum_dominating_sets = 0;

  auto tie_key() const { return std::pair(-rho, -minimum_dominating_sets); }
  /// Numeric form of the same order, used for annealing acceptance.
  double energy() const {
    return ratio.to_double() * 1000 - 10.0 * rho - 5.0 * std::log2(1.0 + static_cast<double>(minimum_dominating_sets));
  }
  bool operator>=(const SearchScore& o) const {
    if (ratio != o.ratio) return ratio > o.ratio;
    return tie_key() >= o.tie_key();
  }
  bool operator>(const SearchScore& o) const {
    if (ratio != o.ratio) return ratio > o.ratio;
    return tie_key() > o.tie_key();
  }
};

// Number of dominating sets of size k (k <= 3), a tie-breaker that rewards
// instances close to needing one more dominator.
long count_dominating_sets(const Graph& g, int k) {
  const int n = g.n();
  const VertexSet all = g.vertices();
  long count = 0;
  for (Vertex a = 0; a < n; ++a) {
    const VertexSet na = g.closed_neighbors(a);
    if (k == 1) {
      count += na == all;
      continue;
    }
    for (Vertex b = a + 1; b < n; ++b) {
      const VertexSet nab = na | g.closed_neighbors(b);
      if (k == 2) {
        count += nab == all;
        continue;
      }
      for (Vertex c = b + 1; c < n; ++c) count += (nab | g.closed_neighbors(c)) == all;
    }
  }
  return count;
}

SearchScore score(const Graph& g, int gamma, int rho) {
  SearchScore s{Rational(gamma, rho), rho, 0};
  if (gamma <= 3) s.minimum_dominating_sets = count_dominating_sets(g, gamma);
  return s;
}

}  // namespace

SearchResult run_search(const SearchOptions& opts) {
  if (opts.n < 3 || opts.n > 30) throw PreconditionError("search requires 3 <= n <= 30");
  const auto start = Clock::now();
  SearchResult result;
  std::optional<Graph> best_graph;
  SearchScore best_score{Rational(0), 0, 0};

  int iteration = 0;
  for (int restart = 0; iteration < opts.iterations; ++restart) {
    result.restarts = restart;
    const std::uint64_t host_seed = derive_seed(opts.seed, static_cast<std::uint64_t>(restart));
    // Host sizes cycle downwards from n; diagonal flips reach triangulations
    // that are not stacked.
    const int n = opts.n - restart % (opts.n - 2);
    const PlanarEmbedding host =
        randomize_by_flips(embed_maximal_planar(host_seed, n), derive_seed(host_seed, 0x66), 4 * n);
    const std::vector<Edge>& host_edges = host.edge_list();
    Rng rng(derive_seed(host_seed, 0x73));
    std::vector<bool> present(host_edges.size());
    // Even restarts start from the whole triangulation, odd ones from a
    // random spanning subgraph keeping each edge with probability 3/5.
    for (std::size_t e = 0; e < present.size(); ++e) present[e] = restart % 2 == 0 || rng.chance(3, 5);

    auto build = [&] {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < present.size(); ++e)
        if (present[e]) edges.push_back(host_edges[e]);
      return Graph(n, edges);
    };
    auto evaluate = [&](const Graph& g) {
      return score(g, exact_domination(g).value, exact_packing(g).value);
    };

    Graph current = build();
    SearchScore current_score = evaluate(current);
    int stale = 0;
    double temperature = 2.0;
    while (iteration < opts.iterations && stale < opts.patience) {
      if (!best_graph || current_score > best_score) {
        best_graph = current;
        best_score = current_score;
        stale = 0;
      }
      if (best_score.ratio >= opts.target) break;
      ++iteration;
      // Toggle one host edge, or two at once (delete one, reinsert another).
      std::vector<std::size_t> toggled{rng.below(present.size())};
      if (rng.chance(1, 2)) toggled.push_back(rng.below(present.size()));
      for (std::size_t e : toggled) present[e] = !present[e];
      Graph candidate = build();
      SearchScore candidate_score = evaluate(candidate);
      const double delta = candidate_score.energy() - current_score.energy();
      const double u = static_cast<double>(rng.next() >> 11) * 0x1p-53;
      temperature = std::max(0.05, temperature * 0.999);
      if (candidate_score >= current_score || u < std::exp(delta / temperature)) {
        current = std::move(candidate);
        current_score = candidate_score;
      } else {
        for (std::size_t e : toggled) present[e] = !present[e];
      }
      ++stale;
    }
    if (!best_graph || current_score > best_score) {
      best_graph = current;
      best_score = current_score;
    }
    if (best_score.ratio >= opts.target) break;
  }

  result.best = compute_record(*best_graph);
  result.best.bound = opts.target;
  result.success = result.best.ratio >= opts.target;
  result.best.pass = result.success;
  result.best.note = "minimum dominating sets: " + std::to_string(best_score.minimum_dominating_sets);
  result.iterations_used = iteration;
  result.best.wall_ms = elapsed_ms(start);
  return result;
}

namespace {

bool check_triangulation(const PlanarEmbedding& before, const VertexSet& independent, const PlanarEmbedding& after,
                         std::string& why) {
  if (!after.is_triangulated()) return why = "face of length != 3", false;
  if (!after.satisfies_euler()) return why = "Euler formula fails", false;
  for (const Edge& e : after.edge_list())
    if (independent.contains(e.u) && independent.contains(e.v)) return why = "independent set broken", false;
  for (Vertex v = 0; v < before.n(); ++v)
    if (after.degree(v) < before.degree(v)) return why = "degree decreased", false;
  const Multigraph mb = before.multigraph();
  const Multigraph ma = after.multigraph();
  for (const Edge& e : mb.edges)
    if (ma.multiplicity(e.u, e.v) < mb.multiplicity(e.u, e.v)) return why = "original edge lost", false;
  return true;
}

}  // namespace

LemmaSummary run_lemmacheck(const LemmaOptions& opts) {
  if (opts.lemma != "triangulate" && opts.lemma != "discharge" && opts.lemma != "charge-audit")
    throw std::invalid_argument("unknown lemma '" + opts.lemma + "'");
  LemmaSummary summary;
  auto fail = [&](int i, const std::string& what) {
    ++summary.failures;
    if (summary.messages.size() < 20) summary.messages.push_back("instance " + std::to_string(i) + ": " + what);
  };

  for (int i = 0; i < opts.count; ++i) {
    ++summary.instances;
    const std::uint64_t seed = derive_seed(opts.seed, static_cast<std::uint64_t>(i));
    Rng rng(derive_seed(seed, 0x6e));
    try {
      if (opts.lemma == "triangulate") {
        const int n = rng.uniform(std::max(3, opts.n_min), std::max(3, opts.n_max));
        std::optional<PlanarEmbedding> e;
        for (std::uint64_t a = 1; !e; ++a) {
          const int m = rng.uniform(n - 1, max_planar_edges(n));
          PlanarEmbedding candidate = random_planar_embedding(derive_seed(seed, a), n, m);
          if (is_connected(candidate.graph())) e = candidate;
        }
        const Graph g = e->graph();
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        rng.shuffle(order);
        VertexSet independent;
        for (Vertex v : order)
          if (g.degree(v) >= 2 && !g.neighbors(v).intersects(independent) && rng.chance(1, 2)) independent.insert(v);
        PlanarEmbedding t = triangulate_preserving_independent(*e, independent);
        std::string why;
        if (!check_triangulation(*e, independent, t, why)) fail(i, why);
      } else if (opts.lemma == "discharge") {
        const int n = rng.uniform(std::max(8, opts.n_min), std::max(8, opts.n_max));
        auto g = planar_min_degree_four(seed, n);
        if (!g) {
          fail(i, "no minimum-degree-4 instance generated");
          continue;
        }
        if (g->min_degree() < 4) {
          fail(i, "generated instance has a vertex of degree < 4");
          continue;
        }
        auto edge = find_low_degree_edge(*g);
        if (!edge)
          fail(i, "no edge with both endpoint degrees <= 7 in " + emit_graph6(*g));
        else if (!g->has_edge(edge->u, edge->v) || g->degree(edge->u) > 7 || g->degree(edge->v) > 7)
          fail(i, "returned edge does not satisfy the degree condition");
      } else {
        const int n = rng.uniform(std::max(4, opts.n_min), std::max(4, opts.n_max));
        PlanarEmbedding e = embed_maximal_planar(seed, n);
        if (i % 2 == 1) e = randomize_by_flips(e, derive_seed(seed, 0x66), 2 * n);
        const VertexSet independent = low_degree_independent_set(e);
        ChargeLedger ledger = charge_audit(e, independent);
        Rational initial{0};
        Rational final_sum{0};
        for (const Rational& q : ledger.initial) initial += q;
        for (const Rational& q : ledger.final_charge) final_sum += q;
        if (initial != Rational(-12) || final_sum != Rational(-12) || ledger.total != Rational(-12))
          fail(i, "charge total " + final_sum.to_string() + " != -12");
        else if (ledger.negative.empty())
          fail(i, "no vertex with negative final charge");
      }
    } catch (const std::exception& ex) {
      fail(i, ex.what());
    }
  }
  return summary;
}

namespace {

std::string family_of(const CampaignRecord& r) { return r.genspec ? r.genspec->family : "-"; }
std::string seed_of(const CampaignRecord& r) { return r.genspec ? std::to_string(r.genspec->seed) : "-"; }
std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt_rat(const std::optional<Rational>& v) { return v ? v->to_fraction_string() : "-"; }
std::string cert_sizes(const CampaignRecord& r) {
  if (!r.certificate) return "-";
  return std::to_string(r.certificate->d.size()) + "/" + std::to_string(r.certificate->p.size());
}

}  // namespace

void write_table(std::ostream& os, const std::vector<CampaignRecord>& records) {
  const std::vector<std::string> head{"#", "family", "n", "gamma", "rho", "gamma_x", "rho_x", "gamma_f", "ratio",
                                      "bound", "D/P", "pass", "ms", "graph6"};
  std::vector<std::vector<std::string>> rows{head};
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << r.wall_ms;
    rows.push_back({std::to_string(i), family_of(r), std::to_string(r.n), std::to_string(r.gamma),
                    std::to_string(r.rho), opt_int(r.gamma_x), opt_int(r.rho_x), opt_rat(r.gamma_f),
                    r.ratio.to_fraction_string(), opt_rat(r.bound), cert_sizes(r), r.pass ? "yes" : "NO", ms.str(),
                    r.graph6});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 == row.size())
        os << row[c];
      else
        os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
    }
    os << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<CampaignRecord>& records) {
  os << "family,seed,n,gamma,rho,gamma_x,rho_x,gamma_f,ratio,bound,cert_d,cert_p,pass,wall_ms,graph6\n";
  for (const auto& r : records) {
    os << family_of(r) << ',' << seed_of(r) << ',' << r.n << ',' << r.gamma << ',' << r.rho << ','
       << (r.gamma_x ? std::to_string(*r.gamma_x) : "") << ',' << (r.rho_x ? std::to_string(*r.rho_x) : "") << ','
       << (r.gamma_f ? r.gamma_f->to_fraction_string() : "") << ',' << r.ratio.to_fraction_string() << ','
       << (r.bound ? r.bound->to_fraction_string() : "") << ','
       << (r.certificate ? std::to_string(r.certificate->d.size()) : "") << ','
       << (r.certificate ? std::to_string(r.certificate->p.size()) : "") << ',' << (r.pass ? 1 : 0) << ','
       << r.wall_ms << ',' << '"' << r.graph6 << '"' << '\n';
  }
}

}  // namespace dompack
