#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypermaj/cone.hpp"
#include "hypermaj/partition.hpp"
#include "hypermaj/spectral.hpp"

namespace hypermaj {

struct LpmTerm {
  IndexSet indices;  // 0-based, distinct; empty set means the constant term
  double coefficient = 0.0;
};

// Linear combination of principal minors, sum of c_J det(A_J) over index
// subsets J. Subsets are stored as bitmasks, which caps n at 20; the
// constructor validates indices, finiteness, nonzero coefficients, and
// rejects duplicate subsets. A polynomial is homogeneous of degree k when
// every subset has size k; hyperbolicity-dependent operations reject
// inhomogeneous input.
class LpmPolynomial {
 public:
  LpmPolynomial(std::size_t n, const std::vector<LpmTerm>& terms);

  std::size_t n() const { return n_; }
  bool homogeneous() const { return homogeneous_; }
  int degree() const;  // DomainError when inhomogeneous
  const std::map<std::uint32_t, double>& terms() const { return terms_; }

 private:
  std::size_t n_ = 0;
  bool homogeneous_ = true;
  int degree_ = 0;
  std::map<std::uint32_t, double> terms_;
};

// Length-n vector over {-1,+1}.
struct SignVector {
  explicit SignVector(std::vector<int> s);
  std::vector<int> signs;
};

// Signs constant on each block of p: block b gets -1 iff bit b of
// pattern is set, so patterns 0..2^m-1 enumerate the blockwise group.
SignVector blockwise_signs(const Partition& p, std::uint32_t pattern);

// det(A_J) with the det(A_empty) = 1 convention, via LU.
double principal_minor(const SymmetricMatrix& a, const IndexSet& j);

double lpm_eval(const LpmPolynomial& p, const SymmetricMatrix& a);

// Conjugation by the diagonal sign matrix: entries become s_i s_j a_ij.
SymmetricMatrix sign_conjugate(const SymmetricMatrix& a, const SignVector& s);

// Zeroes every entry whose indices lie in different blocks.
SymmetricMatrix block_pinch(const SymmetricMatrix& a, const Partition& p);

// Exact average of DAD over all 2^m blockwise sign vectors; equals
// block_pinch entrywise. Throws GroupTooLarge for more than 20 blocks.
SymmetricMatrix reynolds_sign_average(const SymmetricMatrix& a, const Partition& p);

// Eigenvalues of A relative to the identity direction, through the lpm
// polynomial: negated roots of t -> lpm_eval(p, tI + A), sorted
// descending. The restriction is recovered by evaluation at Chebyshev
// nodes and Newton interpolation, with the exact leading coefficient
// lpm_eval(p, I) patched in. Requires homogeneous p of degree >= 1 with
// lpm_eval(p, I) > 0.
struct LpmSpectrum {
  Vec eigenvalues;
  bool certified = true;
};
LpmSpectrum lpm_identity_spectrum(const LpmPolynomial& p, const SymmetricMatrix& a,
                                  double tol_imag = 1e-7);

struct LpmProbeReport {
  bool passed = true;
  std::vector<Matrix> failures;
};

// Samples random symmetric X and checks each restriction t -> P(tI + X)
// is real-rooted of full degree. Passing is evidence, not proof, that p
// is hyperbolic with respect to the identity.
LpmProbeReport psd_stable_probe(const LpmPolynomial& p, int trials, std::uint64_t seed);

// Cone membership through the identity-direction eigenvalues, with the
// same open/closed semantics as the vector-space cone. The overload
// without eps uses 1e-8 * (1 + max|a_ij|).
ConeMembership lpm_cone_member(const LpmPolynomial& p, const SymmetricMatrix& a,
                               ConeMode mode, double eps);
ConeMembership lpm_cone_member(const LpmPolynomial& p, const SymmetricMatrix& a,
                               ConeMode mode);

struct FischerReport {
  bool cone_preserved = false;
  bool inequality_holds = false;
  double lhs = 0.0;  // value at the pinched matrix
  double rhs = 0.0;  // value at the original matrix
};

// Checks that pinching keeps A in the closed cone and does not decrease
// the polynomial: lhs >= rhs - eps * (1 + max(|lhs|, |rhs|)). Requires A
// in the closed cone within eps (ConeMembershipError otherwise).
FischerReport fischer_check(const LpmPolynomial& p, const SymmetricMatrix& a,
                            const Partition& pi, double eps = 1e-8);

}  // namespace hypermaj
