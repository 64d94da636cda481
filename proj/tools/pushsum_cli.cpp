// pushsum: graph generation, convergence-rate bounds and Monte-Carlo sweeps
// for synchronous-gossip push-sum.
//
//   pushsum graph ba --n 24 --m 2 --seed 7 --out ba24.graph
//   pushsum bounds ba24.graph --q 0.5
//   pushsum sweep regular --n 24 --d 4 --reps 10 --out fig2a.csv
//   pushsum probe-conjecture regular --n 24 --d 4 --out probe.csv
//
// A graph source is either a generator family (ba, regular, cayley, complete,
// cycle, ring) configured by flags, or the path of an edge-list file.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pushsum/error.hpp"
#include "pushsum/experiment.hpp"
#include "pushsum/graphgen.hpp"
#include "pushsum/report.hpp"
#include "pushsum/row_stochastic.hpp"

namespace {

using namespace pushsum;

struct SourceArgs {
  std::string source;
  GraphSource spec;
  std::optional<std::uint64_t> graph_seed;
};

struct UnitArgs {
  bool log2 = false;
  bool log10 = false;

  double divisor() const {
    if (log2) return std::log(2.0);
    if (log10) return std::log(10.0);
    return 1.0;
  }
  const char* name() const { return log2 ? "log2" : log10 ? "log10" : "ln"; }
};

const std::map<std::string, Family> kFamilies = {
    {"ba", Family::BarabasiAlbert}, {"regular", Family::RandomRegular},
    {"cayley", Family::Cayley},     {"complete", Family::Complete},
    {"cycle", Family::Cycle},       {"ring", Family::DirectedRing},
};

void add_source_options(CLI::App* cmd, SourceArgs& a, bool seed_is_graph_seed) {
  cmd->add_option("source", a.source, "generator family (ba|regular|cayley|complete|cycle|ring) or graph file")
      ->required();
  cmd->add_option("--n", a.spec.n, "vertex count");
  cmd->add_option("--m", a.spec.m, "Barabasi-Albert edges per new vertex")->capture_default_str();
  cmd->add_option("--d", a.spec.d, "random regular degree")->capture_default_str();
  cmd->add_option("--k", a.spec.k, "Cayley graph of S_k")->capture_default_str();
  cmd->add_option("--gens", a.spec.gens, "Cayley generator count")->capture_default_str();
  cmd->add_flag("--self-loops", a.spec.self_loops, "complete graph includes self-loops (P = J)");
  cmd->add_flag("--assert-transitive", a.spec.assert_transitive,
                "treat the graph as vertex-transitive (unchecked)");
  if (seed_is_graph_seed) {
    cmd->add_option("--seed", a.spec.seed, "generator seed")->capture_default_str();
  } else {
    cmd->add_option("--graph-seed", a.graph_seed, "generator seed (default: --seed)");
  }
}

NamedGraph resolve(SourceArgs& a, std::optional<std::uint64_t> fallback_seed = std::nullopt) {
  if (auto it = kFamilies.find(a.source); it != kFamilies.end()) {
    a.spec.family = it->second;
    if (a.graph_seed) a.spec.seed = *a.graph_seed;
    else if (fallback_seed) a.spec.seed = *fallback_seed;
  } else {
    a.spec.family = Family::File;
    a.spec.path = a.source;
  }
  return build_graph(a.spec);
}

void add_sweep_options(CLI::App* cmd, SweepConfig& c, std::string& out, UnitArgs& units) {
  cmd->add_option("--q-start", c.q_start, "first q of the grid")->capture_default_str();
  cmd->add_option("--q-end", c.q_end, "last q of the grid")->capture_default_str();
  cmd->add_option("--q-steps", c.q_steps, "number of evenly spaced q values")->capture_default_str();
  cmd->add_option("--t", c.steps, "steps per run (default 500 for N <= 120, else 1000)");
  cmd->add_option("--m-rows", c.m_rows, "use the reduced estimator with M rows");
  cmd->add_option("--reps", c.reps, "repetitions per q (median reported)")->capture_default_str();
  cmd->add_option("--seed", c.seed, "simulation seed; run (i, r) uses stream i * reps + r")->capture_default_str();
  cmd->add_option("--slack", c.slack, "tolerance before flagging a bound violation")->capture_default_str();
  cmd->add_option("--eta-max-n", c.eta_max_n, "largest N for which eta is computed")->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads (0: all cores)")->capture_default_str();
  cmd->add_option("--out", out, "CSV output path (default stdout)");
  auto* l2 = cmd->add_flag("--log2", units.log2, "report rates in log2 units");
  cmd->add_flag("--log10", units.log10, "report rates in log10 units")->excludes(l2);
}

std::string describe(const RateBound& b, const UnitArgs& units) {
  std::ostringstream os;
  os << format_value(b.value / units.divisor());
  if (!b.applicable) os << "  (" << b.reason << ")";
  return os.str();
}

int cmd_graph(SourceArgs& a, const std::string& out) {
  const NamedGraph g = resolve(a);
  std::ostream* report = &std::cout;
  if (out.empty()) {
    write_graph(std::cout, g.graph);
    report = &std::cerr;
  } else {
    save_graph(out, g.graph);
  }
  const RowStochastic p = uniform_transition(g.graph);
  *report << "graph " << g.id << ": N = " << g.graph.n() << ", edges = " << g.graph.edges().size()
          << ", degree min/max = " << g.graph.min_degree() << "/" << g.graph.max_degree()
          << ", uniform P symmetric = " << (p.is_symmetric() ? "yes" : "no") << '\n';
  return 0;
}

int cmd_bounds(SourceArgs& a, double q, std::size_t eta_max_n, const UnitArgs& units) {
  const NamedGraph g = resolve(a);
  const BoundSet b = compute_bounds(g, q, eta_max_n);
  std::cout << "graph " << g.id << "  N = " << b.n << "  q = " << format_value(q)
            << "  units = " << units.name() << '\n';
  std::cout << "general     " << describe(b.general, units) << '\n';
  std::cout << "symmetric   " << (b.symmetric_bound ? describe(*b.symmetric_bound, units) : "n/a") << '\n';
  std::cout << "transitive  " << (b.transitive_bound ? describe(*b.transitive_bound, units) : "n/a") << '\n';
  std::cout << "eta         " << (b.eta ? describe(*b.eta, units) : "n/a") << '\n';
  if (b.lambda2) std::cout << "lambda2     " << format_value(*b.lambda2) << '\n';
  for (const auto& note : b.notes) std::cout << "note: " << note << '\n';
  return 0;
}

void emit_csv(const std::vector<RateReport>& rows, const std::string& out, const UnitArgs& units) {
  if (out.empty()) {
    write_reports(std::cout, rows, units.divisor());
    return;
  }
  std::ofstream file(out);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot open '" + out + "' for writing");
  write_reports(file, rows, units.divisor());
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NumericalFailure:
    case ErrorKind::WeightUnderflow:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"push-sum convergence-rate bounds and simulations"};
  app.require_subcommand(1);

  SourceArgs graph_src;
  std::string graph_out;
  auto* graph_cmd = app.add_subcommand("graph", "generate a graph and write its edge list");
  add_source_options(graph_cmd, graph_src, true);
  graph_cmd->add_option("--out", graph_out, "edge-list output path (default stdout)");

  SourceArgs bounds_src;
  double bounds_q = 0.5;
  std::size_t bounds_eta_max = kDefaultEtaMaxN;
  UnitArgs bounds_units;
  auto* bounds_cmd = app.add_subcommand("bounds", "print every applicable rate bound");
  add_source_options(bounds_cmd, bounds_src, true);
  bounds_cmd->add_option("--q", bounds_q)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  bounds_cmd->add_option("--eta-max-n", bounds_eta_max)->capture_default_str();
  auto* bl2 = bounds_cmd->add_flag("--log2", bounds_units.log2);
  bounds_cmd->add_flag("--log10", bounds_units.log10)->excludes(bl2);

  SourceArgs sweep_src;
  SweepConfig sweep_cfg;
  std::string sweep_out;
  UnitArgs sweep_units;
  auto* sweep_cmd = app.add_subcommand("sweep", "simulate and bound over a q grid, CSV output");
  add_source_options(sweep_cmd, sweep_src, false);
  add_sweep_options(sweep_cmd, sweep_cfg, sweep_out, sweep_units);

  SourceArgs probe_src;
  SweepConfig probe_cfg;
  std::string probe_out;
  UnitArgs probe_units;
  auto* probe_cmd = app.add_subcommand(
      "probe-conjecture", "apply the transitive bound to symmetric non-transitive graphs");
  add_source_options(probe_cmd, probe_src, false);
  add_sweep_options(probe_cmd, probe_cfg, probe_out, probe_units);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*graph_cmd) return cmd_graph(graph_src, graph_out);
    if (*bounds_cmd) return cmd_bounds(bounds_src, bounds_q, bounds_eta_max, bounds_units);
    if (*sweep_cmd) {
      const NamedGraph g = resolve(sweep_src, sweep_cfg.seed);
      emit_csv(run_sweep(g, sweep_cfg), sweep_out, sweep_units);
      return 0;
    }
    if (*probe_cmd) {
      const NamedGraph g = resolve(probe_src, probe_cfg.seed);
      ProbeSummary summary;
      const auto rows = run_probe(g, probe_cfg, summary);
      emit_csv(rows, probe_out, probe_units);
      std::ostream& os = probe_out.empty() ? std::cerr : std::cout;
      os << (g.transitive ? "transitive input: formula within its hypothesis" : kProbeLabel) << '\n'
         << "graph " << g.id << ": " << summary.violations << " violation(s) of empirical <= formula + "
         << format_value(probe_cfg.slack) << " over " << summary.compared << " compared q point(s)\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
