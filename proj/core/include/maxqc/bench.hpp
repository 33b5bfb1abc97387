#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxqc/graph.hpp"
#include "maxqc/iterqc.hpp"

namespace maxqc {

enum class Variant { kIterQc, kNoPreprocess, kNoPseudoLb, kBasic };

std::string to_string(Variant v);
Variant parse_variant(std::string_view name);
SolveOptions options_for(Variant v);

/// One line of the benchmark CSV.
struct BenchRow {
  std::string graph;
  VertexId n = 0;
  std::uint64_t m = 0;
  std::string gamma;
  std::string variant;
  std::optional<double> scale;
  std::optional<std::int64_t> s_star;  // unset on timeout or error
  std::string status;                  // "optimal", "TIMEOUT" or "ERROR"
  std::int64_t lb = 0;
  std::int64_t ub = 0;
  double red_v_pct = 0.0;
  double red_e_pct = 0.0;
  std::size_t iters = 0;
  double elapsed_ms = 0.0;
  bool witness_ok = true;
  std::string error;

  bool optimal() const { return status == "optimal"; }
};

inline constexpr const char* kBenchCsvHeader =
    "graph,n,m,gamma,variant,scale,s_star,optimal,lb,ub,red_v_pct,red_e_pct,iters,elapsed_ms";

std::string to_csv(const BenchRow& row);

struct BenchConfig {
  std::vector<std::filesystem::path> graphs;
  GraphFormat format = GraphFormat::kAuto;
  std::vector<std::string> gammas{"0.75"};
  std::vector<Variant> variants{Variant::kIterQc, Variant::kNoPreprocess, Variant::kNoPseudoLb};
  double timeout_s = 10800.0;
  unsigned jobs = 1;
  std::vector<double> scales;  // empty: solve whole graphs
  std::uint64_t scale_seed = 1;
  std::optional<std::filesystem::path> csv;
};

/// Per-instance agreement failure: optimal variants reported different sizes.
struct Disagreement {
  std::string graph;
  std::string gamma;
  std::optional<double> scale;
  std::vector<std::pair<std::string, std::int64_t>> sizes;  // (variant, s_star)
};

struct BenchSummary {
  std::vector<BenchRow> rows;  // sorted by (graph, scale, gamma, variant order)
  std::vector<Disagreement> disagreements;
  std::size_t invalid_witnesses = 0;
  std::size_t errors = 0;

  /// Rows with status "optimal" for the given variant.
  std::size_t solved(const std::string& variant) const;
  bool consistent() const { return disagreements.empty() && invalid_witnesses == 0; }
};

/// QC_TIME_LIMIT if set and parseable, else 10800 seconds.
double default_timeout_seconds();

/// Expands directories into their regular files (sorted, hidden files
/// skipped); a path starting with '@' names a text file with one path per line.
std::vector<std::filesystem::path> expand_inputs(const std::vector<std::string>& args);

/// Runs every (graph, scale, gamma, variant) combination on up to `jobs`
/// threads. Rows are appended to the CSV as they finish, one locked write each.
BenchSummary run_bench(const BenchConfig& config, std::ostream* log = nullptr);

void print_summary(std::ostream& out, const BenchSummary& summary, const BenchConfig& config);

}  // namespace maxqc
