#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypermaj/linalg.hpp"
#include "hypermaj/lpm.hpp"
#include "hypermaj/majorization.hpp"
#include "hypermaj/partition.hpp"
#include "hypermaj/polynomial.hpp"
#include "hypermaj/rng.hpp"
#include "hypermaj/spectral.hpp"

namespace hypermaj {

// Outcome of one check or one merged suite run. failures always equals
// counterexamples.size(); each counterexample is a self-contained JSON
// object tagged with a "kind" field ("inequality", "majorization",
// "cone", "equality", ...) so a majorization defect is never conflated
// with an inequality defect. worst_slack is the most negative inequality
// margin (lhs - rhs) seen; checks without inequality margins leave it 0.
struct VerificationReport {
  std::string check_name;
  long trials = 0;
  long failures = 0;
  double worst_slack = 0.0;
  std::vector<std::string> counterexamples;
  std::uint64_t seed = 0;
};

std::string report_to_json(const VerificationReport& r);

struct SuiteConfig {
  int trials = 200;
  std::uint64_t seed = 1;
};

// ---- single-instance checks -------------------------------------------
//
// Caller-supplied preconditions throw (SymmetryError, ConeMembershipError,
// MajorizationError, DimensionError); the mathematical conclusions under
// test are recorded as counterexamples, never thrown. Every cone below is
// the one attached to the all-ones direction; every inequality carries
// additive slack 1e-8 * (1 + max(|lhs|, |rhs|)).

// diag(A) stays in the closed cone and P(diag(A)) >= P(lambda(A)).
// Requires symmetric P and lambda(A) in the closed cone.
VerificationReport verify_main(const HomogeneousPolynomial& p, const SymmetricMatrix& a);

// For x majorized by y with y in the closed cone: x lands in the closed
// cone and P(x) >= P(y). verify_schur_concavity additionally insists P is
// symmetric; verify_transfer takes any hyperbolic P.
VerificationReport verify_schur_concavity(const HomogeneousPolynomial& p, const Vec& x,
                                          const Vec& y);
VerificationReport verify_transfer(const HomogeneousPolynomial& p, const Vec& x, const Vec& y);

// Two-sided chain P(lambda(A)) <= P(diag(U A U^T)) <= P(mean * ones) for
// `trials` Haar-random U, plus the equality check at the U that
// diagonalizes A (accumulated Jacobi eigenvectors).
VerificationReport verify_minmax(const HomogeneousPolynomial& p, const SymmetricMatrix& a,
                                 int trials, std::uint64_t seed);

// Spectrum rearrangements of sums and differences: lambda(A+B) is
// majorized by lambda(A)_desc + lambda(B)_desc, and lambda(A)_desc -
// lambda(B)_desc is majorized by lambda(A-B). Each op requires its
// majorizing side in the closed cone and records the majorization, the
// cone membership of the majorized side, and the inequality.
VerificationReport verify_fan_sum(const HomogeneousPolynomial& p, const SymmetricMatrix& a,
                                  const SymmetricMatrix& b);
VerificationReport verify_fan_diff(const HomogeneousPolynomial& p, const SymmetricMatrix& a,
                                   const SymmetricMatrix& b);

// PSD A, B embedded on 2n coordinates: v = (lambda(A), lambda(B)) against
// u = (lambda(A+B), 0...0). The majorization orientation is established
// by majorizes (v is the averaged side), then P(v) >= P(u) is asserted.
VerificationReport verify_sum_psd_embed(const HomogeneousPolynomial& p2n,
                                        const SymmetricMatrix& a, const SymmetricMatrix& b);

// Concatenated diagonal-block spectra of A against lambda(A).
VerificationReport verify_block_pinch(const HomogeneousPolynomial& p, const SymmetricMatrix& a,
                                      const Partition& pi);

// S_k(lambda(A)) <= S_k(diag(A)) for a k-positive A; shares its code path
// with verify_main at P = S_k so the two agree bit for bit.
VerificationReport verify_le_kpositive(const SymmetricMatrix& a, std::size_t k);

// Blockwise sign-averaging of A does not leave the closed cone of an lpm
// polynomial and does not decrease its value; cross-checked against
// fischer_check through the pinching identity.
VerificationReport verify_symmetrization(const LpmPolynomial& p, const SymmetricMatrix& a,
                                         const Partition& pi);

// Informational strict-gap probe for the schur-concavity pair (x, y);
// requires x not to be a permutation of y (DomainError otherwise).
// strict means gap > 1e-9 * (1 + max(|P(x)|, |P(y)|)).
struct StrictnessProbe {
  bool strict = false;
  double gap = 0.0;
};
StrictnessProbe strictness_probe(const HomogeneousPolynomial& p, const Vec& x, const Vec& y);

// ---- randomized suites --------------------------------------------------
//
// Each suite runs config.trials independent seeded trials and merges the
// per-trial reports (counter sums, counterexample concatenation, min of
// inequality margins). Trial t draws every random object from a stream
// derived from (config.seed, suite name, t), so a merged report is
// independent of execution order and reruns of a single trial reproduce
// the suite's data exactly.

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);
std::vector<VerificationReport> run_all(const SuiteConfig& config);

// ---- deterministic generators -------------------------------------------
//
// Shared by the suites, the tests, and the acceptance battery.

// Dense symmetric matrix with N(0,1) entries (upper triangle drawn, then
// mirrored).
SymmetricMatrix random_symmetric(Rng& rng, std::size_t n);

// Gram matrix G^T G / n of an n x n Gaussian G; positive semidefinite.
SymmetricMatrix random_psd(Rng& rng, std::size_t n);

// U diag(lambda) U^T for a Haar orthogonal U drawn from `seed`.
SymmetricMatrix matrix_with_spectrum(const Vec& lambda, std::uint64_t seed);

// Symmetric matrix whose spectrum has S_1..S_k positive: Gaussian spectra
// accepted on their elementary-symmetric signs (shifted positive after 50
// rejections), conjugated by a Haar orthogonal. boundary pins the
// smallest eigenvalue of a nonnegative spectrum to exactly 0.
SymmetricMatrix random_k_positive(Rng& rng, std::size_t n, std::size_t k,
                                  bool boundary = false);

// Convex combination of `terms` uniform random permutation matrices with
// weights bounded away from 0.
DoublyStochasticMatrix random_doubly_stochastic(Rng& rng, std::size_t n, std::size_t terms);

// Gaussian sample shifted along the direction a until every directional
// eigenvalue is >= 1 (boundary: until the smallest is exactly 0). Valid
// because shifting by s*a moves the whole directional spectrum up by s.
Vec random_cone_point(const HomogeneousPolynomial& p, const Vec& a, Rng& rng,
                      bool boundary = false);

// Same construction in matrix space for an lpm polynomial hyperbolic with
// respect to the identity: X + s*I with s from the identity-direction
// spectrum of X.
SymmetricMatrix random_lpm_cone_point(const LpmPolynomial& p, Rng& rng, bool boundary = false);

// Uniform-ish random set partition of {0..n-1} grown label by label.
Partition random_partition(Rng& rng, std::size_t n);

// Coefficient-level product of two homogeneous polynomials on the same
// variables; degree adds. Products of hyperbolic polynomials stay
// hyperbolic, which supplies non-elementary-symmetric test subjects.
HomogeneousPolynomial polynomial_product(const HomogeneousPolynomial& p,
                                         const HomogeneousPolynomial& q);

// Sum of all k x k principal minors, coefficient 1 each: det for k = n,
// the trace for k = 1.
LpmPolynomial minor_sum_polynomial(std::size_t n, std::size_t k);

// Rotating cast of symmetric hyperbolic polynomials on n variables:
// S_2..S_n followed by the product S_1*S_2, indexed cyclically.
struct NamedPolynomial {
  HomogeneousPolynomial poly;
  std::string name;
};
NamedPolynomial symmetric_family(std::size_t n, std::uint64_t index);

// Rotating cast of lpm polynomials: det, then the 2- and 3-minor sums
// (clamped to degree n for small n).
struct NamedLpm {
  LpmPolynomial poly;
  std::string name;
};
NamedLpm lpm_family(std::size_t n, std::uint64_t index);

}  // namespace hypermaj
