#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dompack/construct.hpp"
#include "dompack/generators.hpp"
#include "dompack/graph.hpp"
#include "dompack/rational.hpp"

namespace dompack {

/// One evaluated instance. When `genspec` is present, generate(*genspec)
/// reproduces the graph whose graph6 is stored here.
struct CampaignRecord {
  std::optional<GenSpec> genspec;
  std::string graph6;
  int n = 0;
  int gamma = 0;
  int rho = 0;
  VertexSet gamma_witness;
  VertexSet rho_witness;
  std::optional<VertexSet> x;
  std::optional<int> gamma_x;
  std::optional<int> rho_x;
  std::optional<Rational> gamma_f;
  /// ρ <= ρ_f = γ_f <= γ with certified duality; only when gamma_f is set.
  std::optional<bool> sandwich;
  Rational ratio;
  std::optional<Rational> bound;
  std::optional<DomPackCertificate> certificate;
  bool pass = true;
  std::string note;
  double wall_ms = 0;

  nlohmann::json to_json() const;
};

struct ComputeOptions {
  bool fractional = false;
  std::optional<VertexSet> x;
};

/// Exact γ, ρ (and γ_X, ρ_X, γ_f on request). pass is false only when the
/// sandwich fails. Throws PreconditionError when x is not a vertex subset.
CampaignRecord compute_record(const Graph& g, const ComputeOptions& opts = {});

struct VerifyOptions {
  /// tree, strongly-chordal, chordal-bipartite, homogeneously-orderable,
  /// planar, rook or any.
  std::string graph_class = "any";
  /// Generator family for class "any" (gnp by default).
  std::string family;
  Rational bound{1};
  int count = 100;
  int n_min = 1;
  int n_max = 10;
  std::uint64_t seed = 0;
  /// Probability (per mille) that a vertex joins X on planar instances.
  int x_permille = 250;
  bool fractional = true;
  int workers = 0;  ///< 0 = hardware concurrency
};

struct VerifySummary {
  std::vector<CampaignRecord> records;
  int violations = 0;
  int invalid_certificates = 0;
  Rational max_ratio{0};
  double wall_ms = 0;

  bool ok() const { return violations == 0 && invalid_certificates == 0; }
  nlohmann::json to_json() const;
};

/// The GenSpec of instance i of a campaign (n drawn from [n_min, n_max]).
GenSpec campaign_spec(const VerifyOptions& opts, int index);

/// Evaluates one generated instance: exact γ, ρ, the bound γ <= c·ρ, the
/// class construction when one exists, and γ_X <= c·ρ_X for a random X on
/// planar instances.
CampaignRecord verify_instance(const VerifyOptions& opts, const GenSpec& spec);

/// Runs `count` instances (in parallel) and merges them in index order.
VerifySummary run_verify(const VerifyOptions& opts);

/// Recognises g in the class and runs the matching construction. Throws
/// PreconditionError when recognition fails.
CampaignRecord construct_record(const Graph& g, GraphClass cls);

struct SearchOptions {
  Rational target{3};
  /// Largest vertex count; restarts cycle host sizes n, n-1, ..., 3.
  int n = 10;
  int iterations = 20000;
  std::uint64_t seed = 0;
  /// Iterations without improvement before jumping to a fresh host.
  int patience = 1000;
};

struct SearchResult {
  CampaignRecord best;
  bool success = false;
  int iterations_used = 0;
  int restarts = 0;
};

/// Simulated annealing over spanning subgraphs of random triangulations (edge
/// deletions and reinsertions of host edges, so planarity holds throughout),
/// maximising γ/ρ, then smaller ρ, then fewer minimum dominating sets.
SearchResult run_search(const SearchOptions& opts);

struct LemmaOptions {
  std::string lemma;  ///< triangulate, discharge or charge-audit
  int count = 200;
  std::uint64_t seed = 0;
  int n_min = 6;
  int n_max = 40;
};

struct LemmaSummary {
  int instances = 0;
  int failures = 0;
  std::vector<std::string> messages;
  nlohmann::json to_json() const;
};

LemmaSummary run_lemmacheck(const LemmaOptions& opts);

/// Aligned human-readable table / flat csv of records.
void write_table(std::ostream& os, const std::vector<CampaignRecord>& records);
void write_csv(std::ostream& os, const std::vector<CampaignRecord>& records);

}  // namespace dompack
