#include "pushsum/graphgen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pushsum/error.hpp"
#include "pushsum/rng.hpp"

namespace pushsum {

namespace {

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

bool is_identity(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != static_cast<int>(i)) return false;
  }
  return true;
}

}  // namespace

Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || n <= m) {
    throw Error(ErrorKind::InvalidParameters, "Barabasi-Albert needs n > m >= 1");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  // Each vertex appears once per incident edge, so a uniform pick from the
  // pool is a degree-proportional pick.
  std::vector<int> pool;
  for (std::size_t u = 0; u <= m; ++u) {
    for (std::size_t v = u + 1; v <= m; ++v) {
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      pool.push_back(static_cast<int>(u));
      pool.push_back(static_cast<int>(v));
    }
  }
  std::vector<int> chosen;
  for (std::size_t v = m + 1; v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m) {
      int target = pool[rng.below(pool.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) {
        chosen.push_back(target);
      }
    }
    for (int target : chosen) {
      edges.emplace_back(target, static_cast<int>(v));
      pool.push_back(target);
      pool.push_back(static_cast<int>(v));
    }
  }
  return Graph(n, false, std::move(edges));
}

Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                         std::size_t max_retries) {
  if (d < 1 || d >= n || (n * d) % 2 != 0) {
    throw Error(ErrorKind::InvalidParameters, "random regular graph needs 1 <= d < n and n*d even");
  }
  Rng rng(seed);
  std::vector<int> points(n * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i / d);

  std::set<Edge> seen;
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[rng.below(i + 1)]);
    }
    seen.clear();
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      int u = std::min(points[i], points[i + 1]);
      int v = std::max(points[i], points[i + 1]);
      if (u == v || !seen.emplace(u, v).second) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;
    Graph g(n, false, std::vector<Edge>(seen.begin(), seen.end()));
    if (g.is_connected()) return g;
  }
  throw Error(ErrorKind::GenerationFailure, "no simple connected " + std::to_string(d) +
                                                "-regular pairing on " + std::to_string(n) +
                                                " vertices within " +
                                                std::to_string(max_retries) + " attempts");
}

std::size_t permutation_rank(const std::vector<int>& perm) {
  // Lehmer code; matches lexicographic order.
  const std::size_t k = perm.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    rank = rank * (k - i) + smaller;
  }
  return rank;
}

std::vector<int> permutation_unrank(std::size_t k, std::size_t rank) {
  std::vector<int> remaining(k);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> perm;
  perm.reserve(k);
  std::size_t f = factorial(k);
  for (std::size_t i = 0; i < k; ++i) {
    f /= (k - i);
    std::size_t idx = rank / f;
    rank %= f;
    perm.push_back(remaining[idx]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return perm;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[static_cast<std::size_t>(inner[i])];
  }
  return out;
}

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return out;
}

Graph cayley_graph(std::size_t k, const std::vector<std::vector<int>>& generators) {
  std::set<std::vector<int>> closed;
  for (const auto& s : generators) {
    if (s.size() != k) throw Error(ErrorKind::InvalidParameters, "generator has wrong length");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < k; ++i) {
      if (sorted[i] != static_cast<int>(i)) {
        throw Error(ErrorKind::InvalidParameters, "generator is not a permutation");
      }
    }
    if (is_identity(s)) throw Error(ErrorKind::InvalidParameters, "identity generator");
    closed.insert(s);
    closed.insert(inverse(s));
  }
  const std::size_t n = factorial(k);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    const auto pi = permutation_unrank(k, v);
    for (const auto& sigma : closed) {
      const std::size_t u = permutation_rank(compose(sigma, pi));
      // Inverse-closed generators make the relation symmetric; keep one copy.
      if (v < u) edges.emplace_back(static_cast<int>(v), static_cast<int>(u));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, false, std::move(edges));
}

Graph gen_cayley_sym(std::size_t k, std::size_t g, std::uint64_t seed, std::size_t max_retries) {
  if (k < 3 || g < 1) throw Error(ErrorKind::InvalidParameters, "Cayley graph needs k >= 3, g >= 1");
  if (k > 10) throw Error(ErrorKind::InvalidParameters, "k! vertices is too many for k > 10");
  const std::size_t order = factorial(k);
  if (g > order - 1) throw Error(ErrorKind::InvalidParameters, "more generators than group elements");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    std::set<std::size_t> ranks;
    while (ranks.size() < g) ranks.insert(1 + rng.below(order - 1));  // rank 0 is the identity
    std::vector<std::vector<int>> gens;
    for (std::size_t r : ranks) gens.push_back(permutation_unrank(k, r));
    Graph graph = cayley_graph(k, gens);
    if (graph.is_connected()) return graph;
  }
  throw Error(ErrorKind::GenerationFailure, "no generating set of size " + std::to_string(g) +
                                                " for S_" + std::to_string(k) + " within " +
                                                std::to_string(max_retries) + " attempts");
}

Graph gen_complete(std::size_t n, bool include_self_loops) {
  if (n < 2) throw Error(ErrorKind::InvalidParameters, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = include_self_loops ? 0 : u + 1; v < n; ++v) {
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return Graph(n, include_self_loops, std::move(edges));
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameters, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(static_cast<int>(v), static_cast<int>((v + 1) % n));
  return Graph(n, false, std::move(edges));
}

Graph gen_directed_ring(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameters, "ring needs n >= 2");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(static_cast<int>(v), static_cast<int>((v + 1) % n));
  return Graph(n, true, std::move(edges));
}

}  // namespace pushsum
