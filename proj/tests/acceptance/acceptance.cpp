// Acceptance suite: one PASS/FAIL/SKIP line per criterion, exit status 1 if
// any required criterion fails.
//
// Criterion 9 runs only when MAXQC_DIMACS_DIR names a directory holding at
// least five graph files.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "maxqc/bench.hpp"
#include "maxqc/bounds.hpp"
#include "maxqc/gen.hpp"
#include "maxqc/iterqc.hpp"
#include "maxqc/kplex.hpp"
#include "maxqc/oracle.hpp"

using namespace maxqc;
using maxqc::testing::CorpusGraph;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  enum Status { kPass, kFail, kSkip } status = kPass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects the first few failure messages for a criterion.
class Failures {
 public:
  void add(const std::string& msg) {
    if (count_++ < 5) first_ += "\n      " + msg;
  }
  bool any() const { return count_ > 0; }
  std::string text() const { return std::to_string(count_) + " failure(s):" + first_; }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

const std::vector<CorpusGraph>& corpus() {
  static const auto c = maxqc::testing::er_corpus();
  return c;
}

// Oracle s* per (graph, gamma index), computed once.
const std::vector<std::vector<std::int64_t>>& oracle_sizes() {
  static const auto table = [] {
    std::vector<std::vector<std::int64_t>> t;
    for (const auto& cg : corpus()) {
      std::vector<std::int64_t> row;
      for (const auto& gs : maxqc::testing::corpus_gammas()) row.push_back(brute_max_qc(cg.graph, Gamma::parse(gs)).size);
      t.push_back(std::move(row));
    }
    return t;
  }();
  return table;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  const auto& oracle = oracle_sizes();
  Failures f;
  std::size_t runs = 0;
  for (std::size_t gi = 0; gi < corpus().size(); ++gi) {
    const auto& cg = corpus()[gi];
    for (std::size_t yi = 0; yi < maxqc::testing::corpus_gammas().size(); ++yi) {
      const Gamma gamma = Gamma::parse(maxqc::testing::corpus_gammas()[yi]);
      const SolveResult r = solve(cg.graph, gamma);
      ++runs;
      const std::string where = cg.name + " gamma=" + gamma.str();
      if (!r.optimal) f.add(where + ": not optimal");
      if (r.s_star != oracle[gi][yi]) {
        f.add(where + ": s*=" + std::to_string(r.s_star) + " oracle=" + std::to_string(oracle[gi][yi]));
      }
      if (cg.graph.n() > 0 && (static_cast<std::int64_t>(r.witness.size()) != r.s_star ||
                               !is_quasi_clique(cg.graph, r.witness, gamma))) {
        f.add(where + ": invalid witness");
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 60) f.add("took " + std::to_string(secs) + " s, budget 60 s");
  std::ostringstream d;
  d << corpus().size() << " graphs x " << maxqc::testing::corpus_gammas().size() << " gammas = " << runs
    << " solves, " << secs << " s";
  return {f.any() ? Outcome::kFail : Outcome::kPass, f.any() ? d.str() + "; " + f.text() : d.str()};
}

Outcome criterion2() {
  const auto t0 = Clock::now();
  Failures f;
  std::size_t calls = 0;
  for (const auto& cg : corpus()) {
    for (int k = 1; k <= 4; ++k) {
      const std::int64_t best = brute_max_kplex(cg.graph, k).size;
      const std::string where = cg.name + " k=" + std::to_string(k);
      for (std::int64_t floor = 1; floor <= best + 2; ++floor) {
        const VertexSet s = plex_brb(cg.graph, k, floor);
        ++calls;
        const auto size = static_cast<std::int64_t>(s.size());
        if (floor <= best && size != best) {
          f.add(where + " floor=" + std::to_string(floor) + ": size " + std::to_string(size) + ", oracle " +
                std::to_string(best));
        }
        if (floor > best && size != 0) f.add(where + " floor=" + std::to_string(floor) + ": expected empty");
        if (size > 0 && !is_kplex(cg.graph, s, k)) f.add(where + ": result is not a k-plex");
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 60) f.add("took " + std::to_string(secs) + " s, budget 60 s");
  std::ostringstream d;
  d << calls << " branch-and-bound calls over k=1..4 and all floors, " << secs << " s";
  return {f.any() ? Outcome::kFail : Outcome::kPass, f.any() ? d.str() + "; " + f.text() : d.str()};
}

std::vector<std::pair<std::string, SolveOptions>> all_configurations() {
  std::vector<std::pair<std::string, SolveOptions>> out;
  for (SearchMode mode : {SearchMode::kImproved, SearchMode::kBasic}) {
    for (bool pp : {true, false}) {
      for (bool plb : {true, false}) {
        SolveOptions o;
        o.mode = mode;
        o.use_preprocessing = pp;
        o.use_pseudo_lb = plb;
        o.time_limit = 120.0;
        out.emplace_back(to_string(mode) + (pp ? "/pp" : "/no-pp") + (plb ? "/plb" : "/no-plb"), o);
      }
    }
  }
  return out;
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  Failures f;
  const auto configs = all_configurations();
  std::vector<CorpusGraph> graphs = corpus();
  for (auto& g : maxqc::testing::generated_corpus()) graphs.push_back(std::move(g));
  std::size_t runs = 0;
  for (const auto& cg : graphs) {
    for (const auto& gs : maxqc::testing::corpus_gammas()) {
      const Gamma gamma = Gamma::parse(gs);
      std::optional<std::int64_t> agreed;
      for (const auto& [name, opts] : configs) {
        const SolveResult r = solve(cg.graph, gamma, opts);
        ++runs;
        const std::string where = cg.name + " gamma=" + gs + " " + name;
        if (!r.optimal) {
          f.add(where + ": timed out");
          continue;
        }
        if (!agreed) agreed = r.s_star;
        if (r.s_star != *agreed) {
          f.add(where + ": s*=" + std::to_string(r.s_star) + " but first configuration gave " +
                std::to_string(*agreed));
        }
        if (cg.graph.n() > 0 && !is_quasi_clique(cg.graph, r.witness, gamma)) f.add(where + ": invalid witness");
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 300) f.add("took " + std::to_string(secs) + " s, budget 300 s");
  std::ostringstream d;
  d << graphs.size() << " graphs x " << maxqc::testing::corpus_gammas().size() << " gammas x " << configs.size()
    << " configurations = " << runs << " solves, " << secs << " s";
  return {f.any() ? Outcome::kFail : Outcome::kPass, f.any() ? d.str() + "; " + f.text() : d.str()};
}

void check_trace(const std::vector<IterTraceEntry>& trace, std::int64_t s0, const Gamma& gamma, std::int64_t s_star,
                 bool basic, VertexId n, const std::string& where, Failures& f) {
  if (trace.empty()) {
    f.add(where + ": empty trace");
    return;
  }
  std::int64_t prev = s0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& e = trace[i];
    if (e.k != get_k(prev, gamma)) f.add(where + ": k_" + std::to_string(i + 1) + " != get_k(s_" + std::to_string(i) + ")");
    if (e.s < s_star) f.add(where + ": s_" + std::to_string(i + 1) + "=" + std::to_string(e.s) + " below s*");
    const bool last = i + 1 == trace.size();
    if (basic && !last && e.s >= prev) f.add(where + ": basic sequence not strictly decreasing");
    prev = e.s;
  }
  if (basic && trace.size() > n) f.add(where + ": basic trace longer than n");
  if (trace.back().s != s_star) f.add(where + ": final s differs from s*");
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  const auto& oracle = oracle_sizes();
  Failures f;
  std::size_t traces = 0;
  for (std::size_t gi = 0; gi < corpus().size(); ++gi) {
    const auto& cg = corpus()[gi];
    const Graph& g = cg.graph;
    for (std::size_t yi = 0; yi < maxqc::testing::corpus_gammas().size(); ++yi) {
      const Gamma gamma = Gamma::parse(maxqc::testing::corpus_gammas()[yi]);
      const std::int64_t s_star = oracle[gi][yi];
      const std::string where = cg.name + " gamma=" + gamma.str();

      const BoundsResult b = get_bounds(g, gamma);
      if (!(b.lb <= s_star && s_star <= b.ub)) {
        f.add(where + ": bounds " + std::to_string(b.lb) + ".." + std::to_string(b.ub) + " miss s*=" +
              std::to_string(s_star));
      }
      if (b.ub > 1 + gamma.ceil_divided(b.max_core)) f.add(where + ": ub exceeds 1 + ceil(max_core / gamma)");
      if (b.lb > 0 && !is_quasi_clique(g, b.lb_witness, gamma)) f.add(where + ": lb witness invalid");

      const IterationResult basic = basic_iterate(g, gamma);
      check_trace(basic.trace, g.n(), gamma, s_star, true, g.n(), where + " basic", f);
      const IterationResult improved = improved_iter_search(g, gamma, b.ub);
      check_trace(improved.trace, b.ub, gamma, s_star, false, g.n(), where + " improved", f);
      const IterationResult improved_n = improved_iter_search(g, gamma, g.n());
      check_trace(improved_n.trace, g.n(), gamma, s_star, false, g.n(), where + " improved from n", f);
      traces += 3;
    }
  }
  std::ostringstream d;
  d << traces << " traces and " << traces / 3 << " bound checks, " << seconds_since(t0) << " s";
  return {f.any() ? Outcome::kFail : Outcome::kPass, f.any() ? d.str() + "; " + f.text() : d.str()};
}

Outcome criterion5() {
  Failures f;
  const Gamma g55 = Gamma::parse("0.55");
  if (get_k(8, g55) != 4) f.add("get_k(8) at 0.55 != 4");
  if (get_k(7, g55) != 3) f.add("get_k(7) at 0.55 != 3");
  if (get_k(6, g55) != 3) f.add("get_k(6) at 0.55 != 3");
  if (pseudo_lower_bound(3, 7) != 5) f.add("pseudo_lb(3, 7) != 5");
  if (pseudo_lower_bound(5, 3) != 4) f.add("pseudo_lb(5, 3) != 4");
  return {f.any() ? Outcome::kFail : Outcome::kPass, f.any() ? f.text() : "get_k and pseudo lower bound anchors"};
}

Outcome criterion6() {
  Failures f;
  const Graph g = maxqc::testing::clique_with_paths(6, 4, 5);
  const Gamma gamma = Gamma::parse("0.75");
  const SolveResult r = solve(g, gamma);
  if (r.bounds.lb != r.bounds.ub) f.add("lb != ub");
  if (!r.short_circuit) f.add("driver did not short-circuit");
  if (r.plex_stats.brb_calls != 0 || r.plex_stats.heuristic_calls != 0) f.add("k-plex search was called");
  if (r.s_star != 6 || brute_max_qc(g, gamma, {26}).size != 6) f.add("s* != 6");
  if (!is_quasi_clique(g, r.witness, gamma)) f.add("invalid witness");
  std::ostringstream d;
  d << "K6 + 4 paths (n=" << g.n() << "): lb=ub=" << r.bounds.ub << ", s*=" << r.s_star
    << ", branch-and-bound calls=" << r.plex_stats.brb_calls;
  return {f.any() ? Outcome::kFail : Outcome::kPass, f.any() ? d.str() + "; " + f.text() : d.str()};
}

Outcome criterion7() {
  const auto t0 = Clock::now();
  Failures f;
  const Graph sf = gen_sf(1000, 10, 42);
  if (sf.m() != 9909) f.add("gen_sf(1000, 10) has m=" + std::to_string(sf.m()));
  for (double p : {0.0, 0.2}) {
    const Graph sw = gen_sw(1000, 10, p, 7);
    if (sw.m() != 5000) f.add("gen_sw(1000, 10, " + std::to_string(p) + ") has m=" + std::to_string(sw.m()));
  }
  if (!(gen_sf(1000, 10, 42) == sf) || gen_sf(1000, 10, 42).edges().size() != sf.edges().size()) {
    f.add("gen_sf not deterministic");
  }
  if (!(gen_sw(1000, 10, 0.2, 7) == gen_sw(1000, 10, 0.2, 7))) f.add("gen_sw not deterministic");
  if (gen_sf(1000, 10, 42) == gen_sf(1000, 10, 43)) f.add("gen_sf ignores its seed");
  const double secs = seconds_since(t0);
  if (secs >= 5) f.add("took " + std::to_string(secs) + " s, budget 5 s");
  std::ostringstream d;
  d << "m(SF)=" << sf.m() << ", m(SW)=5000 for p in {0, 0.2}, identical seeds reproduce, " << secs << " s";
  return {f.any() ? Outcome::kFail : Outcome::kPass, f.any() ? d.str() + "; " + f.text() : d.str()};
}

Outcome criterion8() {
  Failures f;
  const Gamma gamma = Gamma::parse("0.75");
  std::ostringstream d;
  auto timed = [&](const Graph& g, SolveOptions opts) {
    const auto t0 = Clock::now();
    SolveResult r = solve(g, gamma, opts);
    return std::make_pair(r, seconds_since(t0));
  };
  SolveOptions def;
  def.time_limit = 60.0;

  const Graph sf = gen_sf(100000, 10, 42);
  const auto [sf_res, sf_secs] = timed(sf, def);
  if (!sf_res.optimal) f.add("SF not solved within 60 s");
  if (!is_quasi_clique(sf, sf_res.witness, gamma)) f.add("SF witness invalid");
  d << "SF n=1e5: s*=" << sf_res.s_star << " in " << sf_secs << " s";

  const Graph sw = gen_sw(100000, 10, 0.2, 7);
  const auto [sw_res, sw_secs] = timed(sw, def);
  if (!sw_res.optimal) f.add("SW not solved within 60 s");
  if (!is_quasi_clique(sw, sw_res.witness, gamma)) f.add("SW witness invalid");
  d << "; SW n=1e5: s*=" << sw_res.s_star << " in " << sw_secs << " s";

  SolveOptions nopp = options_for(Variant::kNoPreprocess);
  nopp.time_limit = 300.0;
  const auto [np_res, np_secs] = timed(sf, nopp);
  if (np_res.optimal && np_res.s_star != sf_res.s_star) f.add("no-pp disagrees on SF");
  if (sf_secs > 1.1 * np_secs) f.add("default slower than no-pp on SF");
  d << "; SF no-pp: " << (np_res.optimal ? "" : "timed out after ") << np_secs << " s (ratio "
    << sf_secs / np_secs << ")";
  return {f.any() ? Outcome::kFail : Outcome::kPass, f.any() ? d.str() + "; " + f.text() : d.str()};
}

Outcome criterion9() {
  const char* dir = std::getenv("MAXQC_DIMACS_DIR");
  if (!dir || !std::filesystem::is_directory(dir)) {
    return {Outcome::kSkip, "set MAXQC_DIMACS_DIR to a directory with at least 5 DIMACS graphs to run"};
  }
  BenchConfig config;
  config.graphs = expand_inputs({dir});
  if (config.graphs.size() < 5) return {Outcome::kSkip, std::string("fewer than 5 graphs in ") + dir};
  config.graphs.resize(5);
  config.gammas = {"0.75"};
  config.variants = {Variant::kIterQc, Variant::kNoPreprocess, Variant::kNoPseudoLb};
  config.timeout_s = default_timeout_seconds();
  const BenchSummary summary = run_bench(config);
  std::ostringstream d;
  d << summary.rows.size() << " runs, solved";
  for (Variant v : config.variants) d << ' ' << to_string(v) << '=' << summary.solved(to_string(v));
  d << ", errors=" << summary.errors << ", disagreements=" << summary.disagreements.size()
    << ", invalid witnesses=" << summary.invalid_witnesses;
  const bool ok = summary.consistent() && summary.errors == 0;
  return {ok ? Outcome::kPass : Outcome::kFail, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 oracle equivalence, max quasi-clique", criterion1},
      {"2 oracle equivalence, max k-plex", criterion2},
      {"3 variant agreement", criterion3},
      {"4 trace and bound invariants", criterion4},
      {"5 worked-example arithmetic", criterion5},
      {"6 preprocessing short-circuit", criterion6},
      {"7 generator identities", criterion7},
      {"8 desk-scale performance", criterion8},
      {"9 DIMACS self-consistency (optional)", criterion9},
  };
  bool all_ok = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {Outcome::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Outcome::kPass ? "PASS" : o.status == Outcome::kFail ? "FAIL" : "SKIP";
    std::cout << '[' << tag << "] criterion " << name << ": " << o.detail << std::endl;
    if (o.status == Outcome::kFail) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
