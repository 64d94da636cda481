#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "pushsum/error.hpp"
#include "pushsum/graphgen.hpp"
#include "pushsum/row_stochastic.hpp"
#include "pushsum/rng.hpp"

using namespace pushsum;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected pushsum::Error");
  return ErrorKind::InvalidInput;
}

Graph star4() { return Graph(4, false, {{0, 1}, {0, 2}, {0, 3}}); }

std::vector<Graph> sample_graphs() {
  return {gen_barabasi_albert(24, 2, 7), gen_barabasi_albert(100, 2, 3), gen_random_regular(24, 4, 5),
          gen_cayley_sym(4, 2, 3),       gen_complete(6, false),         gen_complete(5, true),
          gen_cycle(8),                  gen_directed_ring(4),           star4()};
}

}  // namespace

TEST_CASE("Barabasi-Albert") {
  SUBCASE("seed clique consumes every vertex") {
    CHECK(gen_barabasi_albert(4, 3, 11) == gen_complete(4, false));
  }
  SUBCASE("edge count is m(m+1)/2 + m(n-m-1)") {
    const Graph g = gen_barabasi_albert(24, 2, 7);
    CHECK(g.n() == 24);
    CHECK(g.edges().size() == 45);
    CHECK(g.is_connected());
    CHECK_FALSE(g.directed());
  }
  SUBCASE("N = 100, m = 2") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const Graph g = gen_barabasi_albert(100, 2, seed);
      CHECK(g.min_degree() >= 2);
      CHECK(g.is_connected());
      CHECK(g.edges().size() == 3 + 2 * 97);
    }
  }
  SUBCASE("n <= m is rejected") {
    CHECK(kind_of([] { gen_barabasi_albert(3, 3, 1); }) == ErrorKind::InvalidParameters);
    CHECK(kind_of([] { gen_barabasi_albert(5, 0, 1); }) == ErrorKind::InvalidParameters);
  }
}

TEST_CASE("random regular") {
  SUBCASE("K4 is the only 3-regular graph on 4 vertices") {
    CHECK(gen_random_regular(4, 3, 9) == gen_complete(4, false));
  }
  SUBCASE("degree histogram") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = gen_random_regular(24, 4, seed);
      CHECK(g.min_degree() == 4);
      CHECK(g.max_degree() == 4);
      CHECK(g.is_connected());
    }
  }
  SUBCASE("2-regular on 6 vertices is resampled to a single hexagon") {
    // Labelled 2-regular graphs on 6 vertices: 60 hexagons and 10 pairs of
    // triangles. Only the hexagon is connected.
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Graph g = gen_random_regular(6, 2, seed);
      CHECK(g.edges().size() == 6);
      CHECK(g.is_connected());
    }
  }
  SUBCASE("odd n*d") {
    CHECK(kind_of([] { gen_random_regular(5, 3, 1); }) == ErrorKind::InvalidParameters);
  }
  SUBCASE("retry cap") {
    CHECK(kind_of([] { gen_random_regular(24, 4, 1, 0); }) == ErrorKind::GenerationFailure);
  }
}

TEST_CASE("permutation ranking") {
  for (std::size_t r = 0; r < 120; ++r) CHECK(permutation_rank(permutation_unrank(5, r)) == r);
  CHECK(permutation_unrank(3, 0) == std::vector<int>{0, 1, 2});
  CHECK(permutation_unrank(3, 5) == std::vector<int>{2, 1, 0});
  const std::vector<int> p{2, 0, 3, 1};
  CHECK(compose(p, inverse(p)) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("Cayley graphs of S_k") {
  SUBCASE("a single transposition does not generate S_3") {
    const Graph g = cayley_graph(3, {{1, 0, 2}});
    CHECK(g.n() == 6);
    CHECK_FALSE(g.is_connected());
    CHECK(g.edges().size() == 3);
    // No single generator (and its inverse) generates S_3, so sampling runs
    // into the retry cap.
    CHECK(kind_of([] { gen_cayley_sym(3, 1, 4); }) == ErrorKind::GenerationFailure);
  }
  SUBCASE("S_4 with two generators") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = gen_cayley_sym(4, 2, seed);
      CHECK(g.n() == 24);
      CHECK(g.is_connected());
      CHECK(g.min_degree() == g.max_degree());
      CHECK(g.min_degree() >= 2);
      CHECK(g.min_degree() <= 4);
    }
  }
  SUBCASE("S_5 with three generators") {
    const Graph g = gen_cayley_sym(5, 3, 2);
    CHECK(g.n() == 120);
    CHECK(g.is_connected());
    CHECK(g.min_degree() == g.max_degree());
  }
  SUBCASE("right multiplication is an automorphism") {
    const std::size_t k = 4;
    const Graph g = gen_cayley_sym(k, 2, 3);
    Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
      const auto tau = permutation_unrank(k, rng.below(24));
      auto image = [&](int v) {
        return static_cast<int>(permutation_rank(compose(permutation_unrank(k, static_cast<std::size_t>(v)), tau)));
      };
      std::set<Edge> mapped;
      for (const auto& [u, v] : g.edges()) {
        int a = image(u), b = image(v);
        mapped.emplace(std::min(a, b), std::max(a, b));
      }
      CHECK(std::vector<Edge>(mapped.begin(), mapped.end()) == g.edges());
    }
  }
  SUBCASE("identity generator is rejected") {
    CHECK(kind_of([] { cayley_graph(3, {{0, 1, 2}}); }) == ErrorKind::InvalidParameters);
  }
}

TEST_CASE("complete graphs") {
  const Graph k3 = gen_complete(3, false);
  CHECK(k3.degrees() == std::vector<std::size_t>{2, 2, 2});
  CHECK(gen_complete(2, false).edges() == std::vector<Edge>{{0, 1}});
  const Graph k5 = gen_complete(5, true);
  CHECK(k5.edges().size() == 25);
  for (std::size_t v = 0; v < 5; ++v) CHECK(k5.degree(v) == 5);
}

TEST_CASE("uniform transition") {
  SUBCASE("triangle") {
    const auto p = uniform_transition(gen_complete(3, false));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(p(i, j) == doctest::Approx(i == j ? 0.0 : 0.5));
  }
  SUBCASE("complete with self-loops is J") {
    const auto p = uniform_transition(gen_complete(5, true));
    CHECK((p.matrix().array() - 0.2).abs().maxCoeff() < 1e-15);
  }
  SUBCASE("star") {
    const auto p = uniform_transition(star4());
    CHECK(p(0, 0) == 0.0);
    for (std::size_t j = 1; j < 4; ++j) CHECK(p(0, j) == doctest::Approx(1.0 / 3.0));
    for (std::size_t i = 1; i < 4; ++i) {
      CHECK(p(i, 0) == 1.0);
      CHECK(p.matrix().row(static_cast<Eigen::Index>(i)).sum() == 1.0);
    }
    CHECK(p.supported_on(star4()));
  }
  SUBCASE("isolated vertex") {
    CHECK(kind_of([] { uniform_transition(Graph(3, false, {{0, 1}})); }) == ErrorKind::InvalidGraph);
  }
}

TEST_CASE("gamma diagonal") {
  SUBCASE("symmetric P has unit column sums") {
    const Vector g = gamma_diag(uniform_transition(gen_random_regular(24, 4, 3)));
    CHECK((g.array() - 1.0).abs().maxCoeff() < 1e-12);
  }
  SUBCASE("star") {
    // Gamma_ii = sum over in-neighbours j of 1 / d_j
    const Vector g = gamma_diag(uniform_transition(star4()));
    CHECK(g[0] == doctest::Approx(3.0));
    for (int i = 1; i < 4; ++i) CHECK(g[i] == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("J") {
    const Vector g = gamma_diag(uniform_transition(gen_complete(7, true)));
    CHECK((g.array() - 1.0).abs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("invariants over generated families") {
  for (const Graph& g : sample_graphs()) {
    const auto p = uniform_transition(g);
    CHECK((p.matrix().rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-12);
    CHECK(std::abs(gamma_diag(p).sum() - static_cast<double>(g.n())) <= 1e-12);
    CHECK(p.supported_on(g));
  }
}

TEST_CASE("determinism") {
  CHECK(gen_barabasi_albert(50, 2, 17) == gen_barabasi_albert(50, 2, 17));
  CHECK(gen_random_regular(30, 3, 17) == gen_random_regular(30, 3, 17));
  CHECK(gen_cayley_sym(5, 2, 17) == gen_cayley_sym(5, 2, 17));
  CHECK_FALSE(gen_barabasi_albert(50, 2, 17) == gen_barabasi_albert(50, 2, 18));
}

TEST_CASE("graph validation and edge-list format") {
  CHECK(kind_of([] { Graph(3, false, {{0, 1}, {1, 0}}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { Graph(3, false, {{0, 3}}); }) == ErrorKind::InvalidGraph);
  CHECK_NOTHROW(Graph(3, true, {{0, 1}, {1, 0}}));

  SUBCASE("sorted output, reread identical") {
    const Graph g(12, false, {{10, 2}, {3, 1}, {0, 11}, {2, 3}});
    std::ostringstream os;
    write_graph(os, g);
    CHECK(os.str() == "n 12 directed 0\n0 11\n1 3\n2 3\n2 10\n");
    std::istringstream is(os.str());
    CHECK(read_graph(is) == g);
  }
  SUBCASE("directed flag survives") {
    const Graph ring = gen_directed_ring(4);
    std::stringstream ss;
    write_graph(ss, ring);
    CHECK(read_graph(ss) == ring);
  }
  SUBCASE("malformed input") {
    std::istringstream bad_header("nodes 3\n");
    CHECK(kind_of([&] { read_graph(bad_header); }) == ErrorKind::Parse);
    std::istringstream bad_row("n 3 directed 0\n0 x\n");
    CHECK(kind_of([&] { read_graph(bad_row); }) == ErrorKind::Parse);
    std::istringstream out_of_range("n 2 directed 0\n0 5\n");
    CHECK(kind_of([&] { read_graph(out_of_range); }) == ErrorKind::InvalidGraph);
  }
}
