#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dompack/campaign.hpp"
#include "dompack/errors.hpp"
#include "dompack/graph_io.hpp"

using namespace dompack;

namespace {

struct Output {
  std::string format = "json";
  std::string path;
  std::ofstream file;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open " + path);
    }
    return file;
  }

  void records(const std::vector<CampaignRecord>& recs) {
    std::ostream& os = stream();
    if (format == "table")
      write_table(os, recs);
    else if (format == "csv")
      write_csv(os, recs);
    else
      for (const auto& r : recs) os << r.to_json().dump() << '\n';
  }
};

std::vector<Graph> read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_graphs(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graphs(in);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = std::stoi(item);
    if (v < 0 || v >= VertexSet::kCapacity) throw PreconditionError("vertex " + item + " out of range");
    s.insert(v);
  }
  return s;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("DOMPACK_SEED");
  return env ? std::stoull(env) : 0;
}

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
  cmd->add_option("--out", out.path, "Write records to FILE instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination and packing numbers: exact values, bounds and constructions"};
  app.require_subcommand(1);
  Output out;
  std::uint64_t seed = default_seed();

  std::string input;
  bool fractional = false;
  std::string x_set;
  auto* compute = app.add_subcommand("compute", "Exact gamma, rho (and gamma_X, rho_X, gamma_f) of input graphs");
  compute->add_option("input", input, "graph6 lines or JSON edge lists (default: standard input)");
  compute->add_flag("--fractional", fractional, "Also solve the LP relaxation and check the sandwich");
  compute->add_option("--x-set", x_set, "Comma-separated X for gamma_X and rho_X");
  add_output_flags(compute, out);

  VerifyOptions vopt;
  std::string bound_text = "1";
  std::string n_range = "1..10";
  double x_prob = 0.25;
  auto* verify = app.add_subcommand("verify", "Check gamma <= c*rho on generated instances of a class");
  verify->add_option("--class", vopt.graph_class, "Graph class")
      ->check(CLI::IsMember({"tree", "strongly-chordal", "chordal-bipartite", "homogeneously-orderable", "planar",
                             "rook", "any"}));
  verify->add_option("--family", vopt.family, "Generator family for --class any");
  verify->add_option("--bound", bound_text, "Constant c (integer or a/b)");
  verify->add_option("--count", vopt.count, "Number of instances");
  verify->add_option("--n", n_range, "Vertex count N or range LO..HI (k for rook graphs)");
  verify->add_option("--x-prob", x_prob, "Probability that a vertex joins X (planar)");
  verify->add_option("--seed", seed, "Base seed (default: DOMPACK_SEED or 0)");
  verify->add_option("--workers", vopt.workers, "Worker threads (0 = all cores)");
  add_output_flags(verify, out);

  std::string class_name;
  auto* construct = app.add_subcommand("construct", "Run the constructive algorithm of a class");
  construct->add_option("--class", class_name, "tree, strongly-chordal, chordal-bipartite or homogeneously-orderable")
      ->required();
  construct->add_option("input", input, "graph6 lines or JSON edge lists (default: standard input)");
  add_output_flags(construct, out);

  SearchOptions sopt;
  std::string target_text = "3";
  auto* search = app.add_subcommand("search", "Search planar graphs for a large gamma/rho");
  search->add_option("--target", target_text, "Target ratio (integer or a/b)");
  search->add_option("--n", sopt.n, "Largest vertex count (3..30)");
  search->add_option("--iterations", sopt.iterations, "Move budget");
  search->add_option("--patience", sopt.patience, "Moves without improvement before a restart");
  search->add_option("--seed", seed, "Base seed (default: DOMPACK_SEED or 0)");
  add_output_flags(search, out);

  LemmaOptions lopt;
  std::string lemma_range = "6..40";
  auto* lemma = app.add_subcommand("lemmacheck", "Run a planar lemma over generated instances");
  lemma->add_option("--lemma", lopt.lemma, "Lemma")
      ->required()
      ->check(CLI::IsMember({"triangulate", "discharge", "charge-audit"}));
  lemma->add_option("--count", lopt.count, "Number of instances");
  lemma->add_option("--n", lemma_range, "Vertex count N or range LO..HI");
  lemma->add_option("--seed", seed, "Base seed (default: DOMPACK_SEED or 0)");
  add_output_flags(lemma, out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      ComputeOptions opts;
      opts.fractional = fractional;
      if (!x_set.empty()) opts.x = parse_vertex_list(x_set);
      std::vector<CampaignRecord> recs;
      for (const Graph& g : read_input(input)) recs.push_back(compute_record(g, opts));
      out.records(recs);
      for (const auto& r : recs)
        if (!r.pass) return 1;
      return 0;
    }
    if (*verify) {
      vopt.bound = Rational::parse(bound_text);
      std::tie(vopt.n_min, vopt.n_max) = parse_range(n_range);
      vopt.seed = seed;
      vopt.x_permille = static_cast<int>(x_prob * 1000 + 0.5);
      VerifySummary summary = run_verify(vopt);
      out.records(summary.records);
      const nlohmann::json s = summary.to_json();
      if (out.format == "json")
        out.stream() << s.dump() << '\n';
      else
        std::cerr << "instances " << summary.records.size() << ", violations " << summary.violations
                  << ", invalid certificates " << summary.invalid_certificates << ", max ratio "
                  << summary.max_ratio.to_fraction_string() << '\n';
      return summary.ok() ? 0 : 1;
    }
    if (*construct) {
      const GraphClass cls = parse_graph_class(class_name);
      std::vector<CampaignRecord> recs;
      for (const Graph& g : read_input(input)) recs.push_back(construct_record(g, cls));
      out.records(recs);
      for (const auto& r : recs)
        if (!r.pass) return 1;
      return 0;
    }
    if (*search) {
      sopt.target = Rational::parse(target_text);
      sopt.seed = seed;
      SearchResult result = run_search(sopt);
      out.records({result.best});
      std::cerr << (result.success ? "target reached" : "target not reached") << ": best ratio "
                << result.best.ratio.to_fraction_string() << " after " << result.iterations_used << " moves, "
                << result.restarts + 1 << " host(s)\n";
      return 0;
    }
    if (*lemma) {
      std::tie(lopt.n_min, lopt.n_max) = parse_range(lemma_range);
      lopt.seed = seed;
      LemmaSummary summary = run_lemmacheck(lopt);
      if (out.format == "json") {
        out.stream() << summary.to_json().dump() << '\n';
      } else {
        out.stream() << lopt.lemma << ": " << summary.instances << " instances, " << summary.failures
                     << " failures\n";
        for (const auto& m : summary.messages) out.stream() << "  " << m << '\n';
      }
      return summary.failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
