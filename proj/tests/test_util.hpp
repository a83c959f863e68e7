#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <doctest.h>

#include "hypermaj/linalg.hpp"
#include "hypermaj/spectral.hpp"

namespace testutil {

// Mixed absolute/relative comparison |a - b| < eps * (1 + max|.|),
// the same shape of tolerance the library itself uses. eps = 0 demands
// bitwise equality.
inline void check_close(double got, double want, double eps = 1e-9) {
  if (eps == 0.0)
    CHECK(got == want);
  else
    CHECK(got == doctest::Approx(want).epsilon(eps));
}

inline void check_close(const hypermaj::Vec& got, const hypermaj::Vec& want,
                        double eps = 1e-9) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) check_close(got[i], want[i], eps);
}

inline void check_close(const hypermaj::Matrix& got, const hypermaj::Matrix& want,
                        double eps = 1e-9) {
  REQUIRE(got.rows() == want.rows());
  REQUIRE(got.cols() == want.cols());
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j) check_close(got(i, j), want(i, j), eps);
}

inline hypermaj::Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  hypermaj::Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline hypermaj::SymmetricMatrix sym(
    std::initializer_list<std::initializer_list<double>> rows) {
  return hypermaj::SymmetricMatrix(mat(rows));
}

// Monic coefficients (ascending) of prod (t - r), by plain convolution.
// Used as an oracle independent of the root-finding code under test.
inline hypermaj::Vec coeffs_from_roots(const hypermaj::Vec& roots) {
  hypermaj::Vec c{1.0};
  for (double r : roots) {
    hypermaj::Vec next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace testutil
