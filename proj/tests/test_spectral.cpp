#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "pushsum/error.hpp"
#include "pushsum/graphgen.hpp"
#include "pushsum/row_stochastic.hpp"
#include "pushsum/spectral.hpp"

using namespace pushsum;

namespace {

void check_spectrum(const Spectrum& s, const std::vector<double>& expected, double tol) {
  REQUIRE(s.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(s[i] - expected[i]) <= tol);
}

}  // namespace

TEST_CASE("symmetric eigenvalues of small transition matrices") {
  SUBCASE("triangle") {
    const Matrix p = uniform_transition(gen_complete(3, false)).matrix();
    check_spectrum(sym_eigenvalues(p), {1.0, -0.5, -0.5}, 1e-12);
    check_spectrum(sym_eigenvalues(p), oracle::jacobi_eigenvalues(p), 1e-12);
  }
  SUBCASE("4-cycle") {
    check_spectrum(sym_eigenvalues(uniform_transition(gen_cycle(4)).matrix()), {1.0, 0.0, 0.0, -1.0}, 1e-12);
  }
  SUBCASE("identity") {
    check_spectrum(sym_eigenvalues(Matrix::Identity(5, 5)), {1, 1, 1, 1, 1}, 1e-14);
  }
  SUBCASE("lazy spectrum") {
    const Spectrum s(Vector{{1.0, 0.0, -1.0}});
    const Vector l = s.lazy(0.5);
    CHECK(l[0] == 1.0);
    CHECK(l[1] == 0.5);
    CHECK(l[2] == 0.0);
  }
}

TEST_CASE("symmetric eigensolver agrees with Jacobi and traces") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = oracle::random_symmetric(7, rng);
    const Spectrum s = sym_eigenvalues(a);
    check_spectrum(s, oracle::jacobi_eigenvalues(a), 1e-10);
    CHECK(std::abs(s.lambdas().sum() - a.trace()) <= kDecompositionResidual);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] >= s[i]);
  }
}

TEST_CASE("stochastic spectra lead with 1") {
  for (const Graph& g : {gen_random_regular(24, 4, 2), gen_cayley_sym(4, 2, 1), gen_cycle(9)}) {
    const auto p = uniform_transition(g);
    CHECK(std::abs(sym_eigenvalues(p.matrix())[0] - 1.0) <= 1e-10);
    const Vector ones = Vector::Ones(static_cast<Eigen::Index>(g.n()));
    CHECK((p.matrix() * ones - ones).norm() == 0.0);
  }
}

TEST_CASE("input validation") {
  Matrix bad = Matrix::Identity(3, 3);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(sym_eigenvalues(bad), Error);
  try {
    sym_eigenvalues(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
  Matrix asym = Matrix::Identity(3, 3);
  asym(0, 2) = 1e-6;
  CHECK_THROWS_AS(sym_eigenvalues(asym), Error);
  Matrix nearly = Matrix::Identity(3, 3);
  nearly(0, 2) = 1e-12;
  CHECK_NOTHROW(sym_eigenvalues(nearly));
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(Matrix::Identity(6, 6) - averaging_projector(6)) == doctest::Approx(1.0));
  CHECK(spectral_radius(Matrix::Zero(4, 4)) == 0.0);
  CHECK(spectral_radius(averaging_projector(5)) == doctest::Approx(1.0));

  SUBCASE("non-symmetric: lazy directed ring") {
    // eigenvalues 1/2 + 1/2 i^k; the centered part has modulus sqrt(2)/2
    const auto p = uniform_transition(gen_directed_ring(4));
    CHECK(spectral_radius(p.lazy(0.5)) == doctest::Approx(1.0));
    CHECK(spectral_radius(center(p.lazy(0.5))) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  }
  SUBCASE("bounded by the max row-sum norm") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix a = oracle::random_gaussian(6, 6, rng);
      CHECK(spectral_radius(a) <= a.cwiseAbs().rowwise().sum().maxCoeff() + 1e-12);
    }
  }
}

TEST_CASE("centering") {
  const std::size_t n = 5;
  const Matrix eye = Matrix::Identity(5, 5);
  const Matrix j = averaging_projector(n);
  CHECK(center(j).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((center(eye) - (eye - j)).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((center(eye - j) - (eye - j)).cwiseAbs().maxCoeff() <= 1e-15);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = oracle::random_gaussian(5, 5, rng);
    const Matrix c = center(m);
    CHECK((center(c) - c).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(((eye - j) * m * (eye - j) - c).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("Kronecker product") {
  CHECK(kron(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) == Matrix::Identity(4, 4));
  CHECK((kron(averaging_projector(2), averaging_projector(2)).array() - 0.25).abs().maxCoeff() == 0.0);

  SUBCASE("block layout") {
    Matrix a(2, 2);
    a << 1, 2, 3, 4;
    const Matrix b = Matrix::Identity(2, 2);
    const Matrix k = kron(a, b);
    CHECK(k(0, 2) == 2.0);
    CHECK(k(1, 3) == 2.0);
    CHECK(k(2, 0) == 3.0);
    CHECK(k(0, 1) == 0.0);
  }
  SUBCASE("spectrum is the product set") {
    std::mt19937_64 rng(12);
    const Matrix a = oracle::random_symmetric(3, rng);
    const Matrix b = oracle::random_symmetric(3, rng);
    const auto ea = oracle::jacobi_eigenvalues(a);
    const auto eb = oracle::jacobi_eigenvalues(b);
    std::vector<double> products;
    for (double x : ea)
      for (double y : eb) products.push_back(x * y);
    std::sort(products.begin(), products.end(), std::greater<>());
    check_spectrum(sym_eigenvalues(kron(a, b)), products, 1e-10);
  }
  SUBCASE("dimension cap") {
    try {
      kron(Matrix::Identity(10, 10), Matrix::Identity(10, 10), 99);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooLarge);
    }
  }
}
