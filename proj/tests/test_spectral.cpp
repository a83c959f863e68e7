#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "hypermaj/errors.hpp"
#include "hypermaj/rng.hpp"
#include "hypermaj/spectral.hpp"
#include "test_util.hpp"

using namespace hypermaj;
using testutil::check_close;
using testutil::mat;
using testutil::sym;

namespace {

SymmetricMatrix random_symmetric(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.gauss();
  return SymmetricMatrix(m);
}

double esym(const Vec& lam, std::size_t k) {
  // Elementary symmetric function via the one-row recurrence.
  Vec e(k + 1, 0.0);
  e[0] = 1.0;
  for (double v : lam)
    for (std::size_t j = std::min(k, e.size() - 1); j >= 1; --j) e[j] += v * e[j - 1];
  return e[k];
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("symmetric matrix gate") {
  CHECK_NOTHROW(SymmetricMatrix(mat({{2, 1}, {1, 2}})));
  CHECK_THROWS_AS(SymmetricMatrix(mat({{0, 1}, {0, 0}})), SymmetryError);
  CHECK_THROWS_AS(SymmetricMatrix(mat({{1, 2, 3}, {4, 5, 6}})), SymmetryError);

  // A defect within the gate is averaged away exactly.
  Matrix m = mat({{1.0, 0.5 + 4e-13}, {0.5 - 4e-13, 1.0}});
  const SymmetricMatrix s(m);
  CHECK(s(0, 1) == s(1, 0));
  CHECK(s(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("eigenvalue anchors") {
  check_close(eigenvalues_sym(sym({{2, 1}, {1, 2}})), Vec{3, 1}, 1e-12);
  check_close(eigenvalues_sym(sym({{0, 1}, {1, 0}})), Vec{1, -1}, 1e-12);
  // Block diagonal: the 2x2 block {{3,4},{4,9}} has eigenvalues 11 and 1.
  check_close(eigenvalues_sym(sym({{2, 0, 0}, {0, 3, 4}, {0, 4, 9}})), Vec{11, 2, 1},
              1e-11);
  check_close(eigenvalues_sym(sym({{5}})), Vec{5}, 1e-14);
}

TEST_CASE("decomposition reconstructs the matrix") {
  Rng rng(11);
  for (std::size_t n : {2, 3, 5, 8}) {
    const SymmetricMatrix a = random_symmetric(rng, n);
    const EigenDecomposition ed = eigen_sym(a);

    CHECK(std::is_sorted(ed.eigenvalues.rbegin(), ed.eigenvalues.rend()));

    Matrix recon(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          s += ed.vectors(i, k) * ed.eigenvalues[k] * ed.vectors(j, k);
        recon(i, j) = s;
      }
    const double tol = 1e-10 * (1.0 + frobenius_norm(a.entries()));
    CHECK(max_abs(recon - a.entries()) <= tol);

    // Columns are orthonormal.
    const Matrix vtv = transpose(ed.vectors) * ed.vectors;
    CHECK(max_abs(vtv - Matrix::identity(n)) <= 1e-12);
  }
}

TEST_CASE("trace and determinant match the spectrum") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const SymmetricMatrix a = random_symmetric(rng, 4);
    const Vec lam = eigenvalues_sym(a);

    double tr = 0.0;
    for (std::size_t i = 0; i < 4; ++i) tr += a(i, i);
    double sum = 0.0, prod = 1.0;
    for (double v : lam) {
      sum += v;
      prod *= v;
    }
    CHECK(sum == doctest::Approx(tr).epsilon(1e-11));
    CHECK(prod == doctest::Approx(lu_determinant(a.entries())).epsilon(1e-9));
  }
}

TEST_CASE("spectrum is invariant under orthogonal conjugation") {
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(rng.below(4));
    const SymmetricMatrix a = random_symmetric(rng, n);
    const Matrix u = random_orthogonal(n, rng.bits());
    const SymmetricMatrix b = symmetric_part(u * a.entries() * transpose(u));
    check_close(eigenvalues_sym(b), eigenvalues_sym(a), 1e-9);
  }
}

TEST_CASE("diagonal is majorized by the spectrum") {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
    CHECK(schur_horn_check(random_symmetric(rng, n)));
  }
}

TEST_CASE("characteristic coefficients anchor") {
  // det(tI + A) for A = {{2,1},{1,2}}: (t+2)^2 - 1 = t^2 + 4t + 3.
  const CharPolyCoefficients c = char_poly_coefficients(sym({{2, 1}, {1, 2}}));
  check_close(c.values, Vec{1, 4, 3}, 1e-12);
}

TEST_CASE("characteristic coefficients equal spectral symmetric functions") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(5));
    const SymmetricMatrix a = random_symmetric(rng, n);
    const CharPolyCoefficients c = char_poly_coefficients(a);
    const Vec lam = eigenvalues_sym(a);
    REQUIRE(c.values.size() == n + 1);
    CHECK(c.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t k = 1; k <= n; ++k)
      CHECK(c.values[k] == doctest::Approx(esym(lam, k)).epsilon(1e-9));
  }
}

TEST_CASE("k-positivity anchors") {
  // Spectrum (3,2,1): every S_j positive.
  const SymmetricMatrix pos = sym({{3, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(k_positive(pos, 1));
  CHECK(k_positive(pos, 3));

  // Spectrum (3,-1): S_1 = 2 > 0 but S_2 = -3.
  const SymmetricMatrix mixed = sym({{3, 0}, {0, -1}});
  CHECK(k_positive(mixed, 1));
  CHECK_FALSE(k_positive(mixed, 2));

  // A boundary S_k reads as not strictly inside.
  const SymmetricMatrix edge = sym({{1, 0}, {0, 0}});
  CHECK(k_positive(edge, 1));
  CHECK_FALSE(k_positive(edge, 2));
  CHECK(k_positive(edge, 2, -1.0));  // explicit eps can admit it

  CHECK_THROWS_AS(k_positive(pos, 0), DomainError);
  CHECK_THROWS_AS(k_positive(pos, 4), DomainError);
}

TEST_CASE("random orthogonal matrices") {
  for (std::size_t n : {1, 2, 5, 9}) {
    const Matrix u = random_orthogonal(n, 77);
    CHECK(max_abs(transpose(u) * u - Matrix::identity(n)) <= 1e-12);
    CHECK(std::abs(std::abs(lu_determinant(u)) - 1.0) <= 1e-12);
  }
  // Seeded: same seed, same matrix; different seed, different matrix.
  CHECK(max_abs(random_orthogonal(4, 5) - random_orthogonal(4, 5)) == 0.0);
  CHECK(max_abs(random_orthogonal(4, 5) - random_orthogonal(4, 6)) > 1e-3);
  CHECK_THROWS_AS(random_orthogonal(0, 1), DomainError);
}

TEST_CASE("diagonal extraction") {
  check_close(diagonal_of(sym({{2, 1}, {1, 7}})), Vec{2, 7}, 0.0);
}

TEST_CASE("block extraction follows the partition") {
  const SymmetricMatrix a =
      sym({{1, 2, 3, 4}, {2, 5, 6, 7}, {3, 6, 8, 9}, {4, 7, 9, 10}});
  const Partition p(4, {{0, 2}, {1, 3}});
  const std::vector<SymmetricMatrix> blocks = block_extract(a, p);
  REQUIRE(blocks.size() == 2);
  CHECK(max_abs(blocks[0].entries() - mat({{1, 3}, {3, 8}})) == 0.0);
  CHECK(max_abs(blocks[1].entries() - mat({{5, 7}, {7, 10}})) == 0.0);

  CHECK_THROWS_AS(block_extract(a, Partition::singletons(3)), DomainError);
}

TEST_CASE("symmetric part") {
  const SymmetricMatrix s = symmetric_part(mat({{1, 4}, {2, 3}}));
  CHECK(max_abs(s.entries() - mat({{1, 3}, {3, 3}})) == 0.0);
  CHECK_THROWS_AS(symmetric_part(mat({{1, 2, 3}, {4, 5, 6}})), DimensionError);
}

}  // TEST_SUITE
