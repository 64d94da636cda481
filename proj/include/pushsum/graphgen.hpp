#pragma once

#include <cstdint>
#include <vector>

#include "pushsum/graph.hpp"

namespace pushsum {

// Generators for the experiment families. All randomized generators are pure
// functions of (parameters, seed) and resample until the graph is connected.

// Preferential attachment seeded by a clique on m + 1 vertices; each later
// vertex attaches to m distinct existing vertices with probability
// proportional to degree.
Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

inline constexpr std::size_t kRegularRetryCap = 100000;

// Pairing (configuration) model; the whole pairing is redrawn whenever it has
// a self-loop, a multi-edge, or is disconnected.
Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                         std::size_t max_retries = kRegularRetryCap);

inline constexpr std::size_t kCayleyRetryCap = 1000;

// Cayley graph of S_k over g random non-identity generators, closed under
// inversion. Vertex i is the i-th permutation in lexicographic order.
Graph gen_cayley_sym(std::size_t k, std::size_t g, std::uint64_t seed,
                     std::size_t max_retries = kCayleyRetryCap);

// Cayley graph for an explicit generator list (inverses are added). Edges join
// pi and sigma * pi, where (sigma * pi)(i) = sigma(pi(i)). May be disconnected.
Graph cayley_graph(std::size_t k, const std::vector<std::vector<int>>& generators);

// With self-loops the graph is directed and contains all n^2 ordered pairs,
// so the uniform transition matrix is J.
Graph gen_complete(std::size_t n, bool include_self_loops);

Graph gen_cycle(std::size_t n);
Graph gen_directed_ring(std::size_t n);

// Permutation helpers for S_k, exposed for tests.
std::size_t permutation_rank(const std::vector<int>& perm);
std::vector<int> permutation_unrank(std::size_t k, std::size_t rank);
std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner);
std::vector<int> inverse(const std::vector<int>& perm);

}  // namespace pushsum
