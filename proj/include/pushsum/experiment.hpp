#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pushsum/bounds.hpp"
#include "pushsum/graph.hpp"
#include "pushsum/report.hpp"

namespace pushsum {

enum class Family { BarabasiAlbert, RandomRegular, Cayley, Complete, Cycle, DirectedRing, File };

// Where an experiment's graph comes from: a generator with its parameters, or
// an edge-list file.
struct GraphSource {
  Family family = Family::Complete;
  std::size_t n = 0;
  std::size_t m = 2;      // Barabasi-Albert edges per new vertex
  std::size_t d = 3;      // random regular degree
  std::size_t k = 4;      // Cayley: S_k
  std::size_t gens = 2;   // Cayley: generator count
  bool self_loops = false;
  std::uint64_t seed = 1;
  std::string path;
  bool assert_transitive = false;
};

struct NamedGraph {
  Graph graph;
  std::string id;
  // Known by construction (Cayley, cycle, complete) or asserted by the user.
  bool transitive = false;
};

NamedGraph build_graph(const GraphSource& source);

// Complete graphs (with or without self-loops) and undirected cycles.
bool recognizably_transitive(const Graph& g);

struct BoundSet {
  std::size_t n = 0;
  bool symmetric = false;
  std::optional<double> lambda2;
  RateBound general;
  std::optional<RateBound> symmetric_bound;
  std::optional<RateBound> transitive_bound;
  std::optional<RateBound> eta;
  std::vector<std::string> notes;  // why a bound was skipped
};

inline constexpr std::size_t kDefaultEtaMaxN = 32;

// Every bound whose hypotheses hold for the graph's uniform transition matrix.
// With probe set, the transitive formula is applied to any symmetric P.
BoundSet compute_bounds(const NamedGraph& g, double q, std::size_t eta_max_n = kDefaultEtaMaxN,
                        bool probe = false);

struct SweepConfig {
  double q_start = 0.05;
  double q_end = 0.95;
  int q_steps = 19;
  std::optional<int> steps;           // default: 500 for N <= 120, else 1000
  std::optional<std::size_t> m_rows;  // forces the reduced estimator
  int reps = 10;
  std::uint64_t seed = 1;
  std::size_t eta_max_n = kDefaultEtaMaxN;
  double slack = 0.02;
  unsigned threads = 0;  // 0: hardware concurrency
  bool probe = false;
};

std::vector<double> q_grid(double start, double end, int steps);

// One row per grid point in ascending q. Run (q index i, repetition r) uses
// RNG stream i * reps + r, so output does not depend on thread count.
std::vector<RateReport> run_sweep(const NamedGraph& g, const SweepConfig& config);

struct ProbeSummary {
  std::size_t points = 0;
  std::size_t compared = 0;
  std::size_t violations = 0;
};

inline constexpr const char* kProbeLabel =
    "conjecture probe — formula applied outside its hypothesis";

// Requires symmetric P. Sweeps with the transitive formula applied to the
// spectrum regardless of transitivity and counts empirical > formula + slack.
std::vector<RateReport> run_probe(const NamedGraph& g, SweepConfig config, ProbeSummary& summary);

// Runs body(0..count-1) on up to threads workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace pushsum
