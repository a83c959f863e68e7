#pragma once

#include <vector>

#include "hypermaj/linalg.hpp"

namespace hypermaj {

// Square nonnegative matrix whose rows and columns each sum to 1. The
// constructor enforces that (entries >= -1e-12, sums within 1e-10 of 1)
// and throws NotDoublyStochastic on violation, so holding the type means
// holding the invariant.
class DoublyStochasticMatrix {
 public:
  explicit DoublyStochasticMatrix(Matrix entries);

  const Matrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  Matrix entries_;
};

struct BirkhoffDecomposition {
  Vec weights;                            // positive, summing to 1 within 1e-10
  std::vector<Permutation> permutations;  // same length as weights
};

// True iff x is majorized by y (x <| y): every prefix sum of the
// descending sort of x is at most the matching prefix of y within tol,
// and the totals agree within tol. The two-argument overload uses
// tol = 1e-9 * (1 + max|y_i|).
bool majorizes(const Vec& x, const Vec& y, double tol);
bool majorizes(const Vec& x, const Vec& y);

// For x majorized by y, builds a doubly stochastic D with Dy = x (within
// 1e-9 * (1 + max|y_i|)) as a chain of at most n-1 pairwise-averaging
// transforms on descending-sorted copies, conjugated by the sorting
// permutations. Throws MajorizationError when x is not majorized by y or
// the residual check fails.
DoublyStochasticMatrix doubly_stochastic_witness(const Vec& x, const Vec& y);

// Greedy Birkhoff peeling: repeatedly subtract alpha * (permutation
// matrix) where the permutation is a perfect matching on entries > tol
// chosen to maximize its minimum entry, and alpha is that minimum. Stops
// when the residual is <= tol entrywise. At most (n-1)^2 + 1 terms are
// produced; exceeding that budget, or finding no perfect matching on the
// positive support, throws NotDoublyStochastic.
BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& d, double tol = 1e-12);

// The constant vector with the same total as y.
Vec mean_vector(const Vec& y);

}  // namespace hypermaj
