#include "maxqc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "maxqc/gen.hpp"

namespace maxqc {

namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string compact(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::uint64_t scale_seed(std::uint64_t base, double scale) {
  return base ^ (static_cast<std::uint64_t>(std::llround(scale * 1e6)) * 0x9E3779B97F4A7C15ULL);
}

struct Instance {
  std::string name;
  std::optional<double> scale;
  Graph graph;
  std::string error;
};

class CsvSink {
 public:
  explicit CsvSink(const std::optional<std::filesystem::path>& path) {
    if (!path) return;
    const bool fresh = !std::filesystem::exists(*path) || std::filesystem::file_size(*path) == 0;
    out_.open(*path, std::ios::app);
    if (!out_) throw std::runtime_error("cannot open " + path->string() + " for writing");
    if (fresh) out_ << kBenchCsvHeader << '\n' << std::flush;
  }

  void write(const BenchRow& row) {
    if (!out_.is_open()) return;
    const std::string line = to_csv(row) + '\n';
    std::lock_guard lock(mu_);
    out_ << line << std::flush;
  }

 private:
  std::ofstream out_;
  std::mutex mu_;
};

BenchRow run_one(const Instance& inst, const std::string& gamma_text, Variant variant, double timeout_s) {
  BenchRow row;
  row.graph = inst.name;
  row.scale = inst.scale;
  row.gamma = gamma_text;
  row.variant = to_string(variant);
  if (!inst.error.empty()) {
    row.status = "ERROR";
    row.error = inst.error;
    return row;
  }
  row.n = inst.graph.n();
  row.m = inst.graph.m();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Gamma gamma = Gamma::parse(gamma_text);
    SolveOptions opts = options_for(variant);
    opts.time_limit = timeout_s;
    const SolveResult r = solve(inst.graph, gamma, opts);
    row.status = r.optimal ? "optimal" : "TIMEOUT";
    if (r.optimal) row.s_star = r.s_star;
    row.lb = r.bounds.lb;
    row.ub = r.bounds.ub;
    row.red_v_pct = r.reduction.red_v_pct;
    row.red_e_pct = r.reduction.red_e_pct;
    row.iters = r.trace.size();
    row.witness_ok = inst.graph.empty() ||
                     (static_cast<std::int64_t>(r.witness.size()) == r.s_star && !r.witness.empty() &&
                      is_quasi_clique(inst.graph, r.witness, gamma));
  } catch (const std::exception& e) {
    row.status = "ERROR";
    row.error = e.what();
  }
  row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kIterQc: return "iterqc";
    case Variant::kNoPreprocess: return "no-pp";
    case Variant::kNoPseudoLb: return "no-plb";
    case Variant::kBasic: return "basic";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::kIterQc, Variant::kNoPreprocess, Variant::kNoPseudoLb, Variant::kBasic}) {
    if (name == to_string(v)) return v;
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (iterqc, no-pp, no-plb, basic)");
}

SolveOptions options_for(Variant v) {
  SolveOptions o;
  if (v == Variant::kNoPreprocess) o.use_preprocessing = false;
  if (v == Variant::kNoPseudoLb) o.use_pseudo_lb = false;
  if (v == Variant::kBasic) o.mode = SearchMode::kBasic;
  return o;
}

std::string to_csv(const BenchRow& r) {
  std::string out;
  out += csv_field(r.graph) + ',';
  out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',';
  out += r.gamma + ',' + r.variant + ',';
  out += (r.scale ? compact(*r.scale) : std::string()) + ',';
  out += (r.s_star ? std::to_string(*r.s_star) : std::string()) + ',';
  out += (r.optimal() ? std::string("true") : r.status) + ',';
  out += std::to_string(r.lb) + ',' + std::to_string(r.ub) + ',';
  out += fixed(r.red_v_pct, 2) + ',' + fixed(r.red_e_pct, 2) + ',';
  out += std::to_string(r.iters) + ',' + fixed(r.elapsed_ms, 3);
  return out;
}

std::size_t BenchSummary::solved(const std::string& variant) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const BenchRow& r) { return r.variant == variant && r.optimal(); }));
}

double default_timeout_seconds() {
  if (const char* env = std::getenv("QC_TIME_LIMIT")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10800.0;
}

std::vector<std::filesystem::path> expand_inputs(const std::vector<std::string>& args) {
  namespace fs = std::filesystem;
  std::vector<fs::path> out;
  for (const auto& arg : args) {
    if (!arg.empty() && arg[0] == '@') {
      std::ifstream list(arg.substr(1));
      if (!list) throw std::runtime_error("cannot read list file " + arg.substr(1));
      std::string line;
      while (std::getline(list, line)) {
        if (!line.empty() && line[0] != '#') out.emplace_back(line);
      }
    } else if (fs::is_directory(arg)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(arg)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && !name.empty() && name[0] != '.') files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.emplace_back(arg);
    }
  }
  return out;
}

BenchSummary run_bench(const BenchConfig& config, std::ostream* log) {
  for (const auto& g : config.gammas) {
    if (!Gamma::parse(g).in_solver_range()) throw std::invalid_argument("gamma " + g + " outside [0.5, 1]");
  }

  std::vector<Instance> instances;
  for (const auto& path : config.graphs) {
    Graph g;
    std::string error;
    try {
      g = load_graph(path, config.format);
    } catch (const std::exception& e) {
      error = e.what();
      if (log) *log << "ERROR " << path.string() << ": " << error << '\n';
    }
    if (config.scales.empty() || !error.empty()) {
      instances.push_back({path.string(), std::nullopt, std::move(g), error});
      continue;
    }
    for (double s : config.scales) {
      instances.push_back({path.string(), s, sample_subgraph(g, s, scale_seed(config.scale_seed, s)), ""});
    }
  }

  struct Task {
    std::size_t instance;
    std::size_t gamma;
    std::size_t variant;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!instances[i].error.empty()) {
      tasks.push_back({i, 0, 0});  // a single ERROR row per unreadable graph
      continue;
    }
    for (std::size_t gi = 0; gi < config.gammas.size(); ++gi) {
      for (std::size_t vi = 0; vi < config.variants.size(); ++vi) tasks.push_back({i, gi, vi});
    }
  }

  CsvSink sink(config.csv);
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mu;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      rows[t] = run_one(instances[task.instance], config.gammas[task.gamma], config.variants[task.variant],
                        config.timeout_s);
      sink.write(rows[t]);
      if (log) {
        std::lock_guard lock(log_mu);
        *log << to_csv(rows[t]) << '\n';
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  BenchSummary summary;
  std::map<std::tuple<std::string, double, std::string>, Disagreement> groups;
  for (const auto& r : rows) {
    if (r.status == "ERROR") ++summary.errors;
    if (!r.witness_ok) ++summary.invalid_witnesses;
    if (!r.optimal()) continue;
    auto& d = groups[{r.graph, r.scale.value_or(-1.0), r.gamma}];
    d.graph = r.graph;
    d.gamma = r.gamma;
    d.scale = r.scale;
    d.sizes.emplace_back(r.variant, *r.s_star);
  }
  for (auto& [key, d] : groups) {
    const bool agree = std::all_of(d.sizes.begin(), d.sizes.end(),
                                   [&](const auto& p) { return p.second == d.sizes.front().second; });
    if (!agree) summary.disagreements.push_back(std::move(d));
  }
  summary.rows = std::move(rows);
  return summary;
}

void print_summary(std::ostream& out, const BenchSummary& summary, const BenchConfig& config) {
  const std::size_t per_variant = summary.rows.size() == 0 ? 0 : [&] {
    std::size_t runs = 0;
    for (const auto& r : summary.rows) runs += r.variant == to_string(config.variants.front());
    return runs;
  }();
  out << "solved within " << compact(config.timeout_s) << " s:\n";
  for (Variant v : config.variants) {
    out << "  " << to_string(v) << ": " << summary.solved(to_string(v)) << " / " << per_variant << '\n';
  }
  if (summary.errors) out << "errors: " << summary.errors << '\n';
  if (summary.invalid_witnesses) out << "invalid witnesses: " << summary.invalid_witnesses << '\n';
  for (const auto& d : summary.disagreements) {
    out << "DISAGREEMENT " << d.graph << " gamma=" << d.gamma;
    if (d.scale) out << " scale=" << compact(*d.scale);
    for (const auto& [variant, s] : d.sizes) out << ' ' << variant << '=' << s;
    out << '\n';
  }
  if (summary.consistent()) out << "all optimal variants agree\n";
}

}  // namespace maxqc
