#pragma once

#include <cstdint>
#include <vector>

#include "hypermaj/linalg.hpp"
#include "hypermaj/partition.hpp"

namespace hypermaj {

// Real symmetric matrix. Construction checks the defect against
// 1e-12 * (1 + max|entry|) (SymmetryError beyond that) and stores the
// exactly symmetrized average, so downstream code never sees asymmetry.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(const Matrix& entries);

  const Matrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  Matrix entries_;
};

struct EigenDecomposition {
  Vec eigenvalues;  // sorted descending
  Matrix vectors;   // columns are eigenvectors, A = V diag(eigenvalues) V^T
};

// Coefficients of det(tI + A) ordered as values[k] = coefficient of
// t^(n-k), so values[0] = 1, values[1] = trace, values[n] = det.
struct CharPolyCoefficients {
  Vec values;
};

// Cyclic Jacobi with eigenvector accumulation. Sweeps until every
// off-diagonal entry is below 1e-12 * ||A||_F, comfortably inside the
// 1e-10 * ||A||_F residual contract.
EigenDecomposition eigen_sym(const SymmetricMatrix& a);
Vec eigenvalues_sym(const SymmetricMatrix& a);

Vec diagonal_of(const SymmetricMatrix& a);

// True iff diag(A) is majorized by the spectrum of A; holds for every
// symmetric matrix, so a false return means a numerical defect worth
// investigating.
bool schur_horn_check(const SymmetricMatrix& a);

// Spectrum-side elementary symmetric functions, values[k] = S_k(lambda).
CharPolyCoefficients char_poly_coefficients(const SymmetricMatrix& a);

// True iff S_j(lambda(A)) > eps for every j = 1..k. The two-argument
// overload uses eps = 1e-10 * (1 + max|lambda_i|): a near-zero S_j is a
// genuine cone boundary and should read as not strictly inside.
bool k_positive(const SymmetricMatrix& a, std::size_t k, double eps);
bool k_positive(const SymmetricMatrix& a, std::size_t k);

// Haar-distributed orthogonal matrix: Householder QR of a seeded
// Gaussian matrix with the R diagonal signs folded into Q.
Matrix random_orthogonal(std::size_t n, std::uint64_t seed);

SymmetricMatrix symmetric_part(const Matrix& m);

// Principal submatrices A_S for each block S, in block order.
std::vector<SymmetricMatrix> block_extract(const SymmetricMatrix& a, const Partition& p);

}  // namespace hypermaj
