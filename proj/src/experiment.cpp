#include "pushsum/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>

#include "pushsum/error.hpp"
#include "pushsum/graphgen.hpp"
#include "pushsum/rng.hpp"
#include "pushsum/simulate.hpp"
#include "pushsum/spectral.hpp"

namespace pushsum {

namespace {

struct BoundContext {
  const NamedGraph& graph;
  RowStochastic p;
  bool symmetric;
  std::optional<Spectrum> spectrum;
};

BoundContext make_context(const NamedGraph& g) {
  RowStochastic p = uniform_transition(g.graph);
  const bool symmetric = p.is_symmetric();
  std::optional<Spectrum> spectrum;
  if (symmetric) spectrum = sym_eigenvalues(p.matrix());
  return BoundContext{g, std::move(p), symmetric, std::move(spectrum)};
}

BoundSet bounds_in_context(const BoundContext& ctx, double q, std::size_t eta_max_n, bool probe) {
  BoundSet out;
  out.n = ctx.p.n();
  out.symmetric = ctx.symmetric;
  out.general = bound_general(ctx.p, q);
  if (ctx.symmetric) {
    out.lambda2 = (*ctx.spectrum)[1];
    out.symmetric_bound = bound_symmetric(std::clamp(*out.lambda2, -1.0, 1.0), q);
    if (ctx.graph.transitive || probe) {
      out.transitive_bound = bound_transitive(*ctx.spectrum, q);
    } else {
      out.notes.emplace_back("transitive: transitivity not known (use --assert-transitive)");
    }
  } else {
    out.notes.emplace_back("symmetric: P is not symmetric");
    out.notes.emplace_back("transitive: P is not symmetric");
  }
  if (out.n <= eta_max_n) {
    out.eta = bound_eta(ctx.p, q);
  } else {
    out.notes.emplace_back("eta: N = " + std::to_string(out.n) + " exceeds eta cap " +
                           std::to_string(eta_max_n));
  }
  return out;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double sample_stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

bool can_simulate(const RowStochastic& p, double q) {
  return (q > 0.0 && q < 1.0) || (q == 1.0 && p.has_positive_diagonal());
}

void note_bound(RateReport& row, std::optional<double>& column, const std::optional<RateBound>& bound,
                double slack) {
  if (!bound) return;
  column = bound->value;
  if (!bound->applicable) row.flags.push_back(bound->reason + ":" + to_string(bound->kind));
  if (row.emp_rate && *row.emp_rate > bound->value + slack) {
    row.flags.push_back(std::string("violation:") + to_string(bound->kind));
  }
}

}  // namespace

NamedGraph build_graph(const GraphSource& s) {
  NamedGraph out;
  const std::string seed = "-s" + std::to_string(s.seed);
  switch (s.family) {
    case Family::BarabasiAlbert:
      out.graph = gen_barabasi_albert(s.n, s.m, s.seed);
      out.id = "ba-n" + std::to_string(s.n) + "-m" + std::to_string(s.m) + seed;
      break;
    case Family::RandomRegular:
      out.graph = gen_random_regular(s.n, s.d, s.seed);
      out.id = "regular-n" + std::to_string(s.n) + "-d" + std::to_string(s.d) + seed;
      break;
    case Family::Cayley:
      out.graph = gen_cayley_sym(s.k, s.gens, s.seed);
      out.id = "cayley-k" + std::to_string(s.k) + "-g" + std::to_string(s.gens) + seed;
      out.transitive = true;
      break;
    case Family::Complete:
      out.graph = gen_complete(s.n, s.self_loops);
      out.id = "complete-n" + std::to_string(s.n) + (s.self_loops ? "-loops" : "");
      out.transitive = true;
      break;
    case Family::Cycle:
      out.graph = gen_cycle(s.n);
      out.id = "cycle-n" + std::to_string(s.n);
      out.transitive = true;
      break;
    case Family::DirectedRing:
      out.graph = gen_directed_ring(s.n);
      out.id = "ring-n" + std::to_string(s.n);
      out.transitive = true;
      break;
    case Family::File:
      out.graph = load_graph(s.path);
      out.id = std::filesystem::path(s.path).stem().string();
      out.transitive = recognizably_transitive(out.graph);
      break;
  }
  out.transitive = out.transitive || s.assert_transitive;
  // CSV ids must not break the column structure.
  std::replace(out.id.begin(), out.id.end(), ',', '_');
  return out;
}

bool recognizably_transitive(const Graph& g) {
  const std::size_t n = g.n();
  const std::size_t m = g.edges().size();
  const bool loops = std::any_of(g.edges().begin(), g.edges().end(),
                                 [](const Edge& e) { return e.first == e.second; });
  if (g.directed()) {
    // Edges are distinct, so these counts pin down the complete relation.
    return (loops && m == n * n) || (!loops && m == n * (n - 1));
  }
  if (loops) return false;
  if (m == n * (n - 1) / 2) return true;
  return n >= 3 && g.min_degree() == 2 && g.max_degree() == 2 && g.is_connected();
}

BoundSet compute_bounds(const NamedGraph& g, double q, std::size_t eta_max_n, bool probe) {
  const BoundContext ctx = make_context(g);
  return bounds_in_context(ctx, q, eta_max_n, probe);
}

std::vector<double> q_grid(double start, double end, int steps) {
  if (steps < 1) throw Error(ErrorKind::InvalidParameters, "q grid needs at least one point");
  if (!(start >= 0.0 && end <= 1.0 && start <= end)) {
    throw Error(ErrorKind::InvalidParameters, "q grid must satisfy 0 <= start <= end <= 1");
  }
  if (steps == 1) return {start};
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] = start + (end - start) * i / (steps - 1);
  }
  return grid;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<RateReport> run_sweep(const NamedGraph& g, const SweepConfig& config) {
  if (config.reps < 1) throw Error(ErrorKind::InvalidParameters, "need at least one repetition");
  const BoundContext ctx = make_context(g);
  if (config.probe && !ctx.symmetric) {
    throw Error(ErrorKind::InvalidInput, "conjecture probe needs a symmetric transition matrix");
  }
  const auto grid = q_grid(config.q_start, config.q_end, config.q_steps);
  const std::size_t n = ctx.p.n();
  const int steps = config.steps.value_or(default_steps(n));
  const bool reduced = config.m_rows.has_value() || n > 120;
  const auto reps = static_cast<std::size_t>(config.reps);

  std::vector<BoundSet> bounds(grid.size());
  std::vector<std::optional<double>> rates(grid.size() * reps);
  std::vector<char> underflow(grid.size() * reps, 0);

  parallel_for(grid.size() * (1 + reps), config.threads, [&](std::size_t task) {
    if (task < grid.size()) {
      bounds[task] = bounds_in_context(ctx, grid[task], config.eta_max_n, config.probe);
      return;
    }
    const std::size_t run = task - grid.size();
    const double q = grid[run / reps];
    if (!can_simulate(ctx.p, q)) return;
    Rng rng(config.seed, run);
    try {
      rates[run] = reduced ? empirical_rate_reduced(ctx.p, q, steps, config.m_rows, rng)
                           : empirical_rate_full(ctx.p, q, steps, rng);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WeightUnderflow) throw;
      underflow[run] = 1;
    }
  });

  std::vector<RateReport> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    RateReport row;
    row.graph = g.id;
    row.n = n;
    row.q = grid[i];
    std::vector<double> samples;
    bool any_underflow = false;
    for (std::size_t r = 0; r < reps; ++r) {
      if (rates[i * reps + r]) samples.push_back(*rates[i * reps + r]);
      any_underflow = any_underflow || underflow[i * reps + r];
    }
    if (any_underflow) row.flags.emplace_back("weight-underflow");
    if (!samples.empty()) {
      row.emp_rate = median(samples);
      row.emp_std = sample_stddev(samples);
    }
    const BoundSet& b = bounds[i];
    note_bound(row, row.b_general, b.general, config.slack);
    note_bound(row, row.b_symmetric, b.symmetric_bound, config.slack);
    note_bound(row, row.b_transitive, b.transitive_bound, config.slack);
    note_bound(row, row.b_eta, b.eta, config.slack);
    if (config.probe && !g.transitive) row.flags.emplace_back("conjecture-probe");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RateReport> run_probe(const NamedGraph& g, SweepConfig config, ProbeSummary& summary) {
  config.probe = true;
  auto rows = run_sweep(g, config);
  summary = ProbeSummary{};
  summary.points = rows.size();
  for (const auto& row : rows) {
    if (!row.emp_rate || !row.b_transitive) continue;
    ++summary.compared;
    if (*row.emp_rate > *row.b_transitive + config.slack) ++summary.violations;
  }
  return rows;
}

}  // namespace pushsum
