#ifndef HYPERMAJ_REAL_ROOTS_HPP
#define HYPERMAJ_REAL_ROOTS_HPP

#include "hypermaj/linalg.hpp"
#include "hypermaj/polynomial.hpp"

namespace hypermaj {

// Real spectrum of a univariate polynomial, or the failed attempt at one.
struct RootSet {
  // Ascending, repeated according to multiplicity; filled with the real
  // parts even when certification fails.
  Vec roots;
  // True iff every (clustered) root sat within tol_imag * (1 + max |root|)
  // of the real axis. An uncertified RootSet is a result, not an error:
  // it is how non-real-rootedness is reported.
  bool certified = true;
  // Largest imaginary magnitude discarded when projecting to the axis.
  double max_imag_residual = 0.0;
};

// All roots of p, expected (but not required) to be real.
//
// Method: Aberth-Ehrlich simultaneous iteration on the monic normalization,
// root clustering, then multiplicity-aware Newton polishing on the real
// axis. A root of multiplicity m computed in doubles scatters into a
// conjugate-symmetric cluster of radius ~eps^(1/m), which for m >= 3 is
// far wider than any fixed clustering window; clusters are therefore
// coalesced adaptively, and a tentative merge is only kept when the
// polished center actually annihilates p to rounding level. Certification
// then looks at cluster centers, whose imaginary parts cancel for genuine
// real roots but persist for genuine conjugate pairs.
//
// Throws DegenerateLeadingCoefficient when the nominal leading coefficient
// is negligible (|c_k| <= 1e-14 * max_j |c_j|) and DomainError for degree 0.
RootSet all_real_roots(const UnivariateRestriction& p, double tol_imag = 1e-7);

inline bool is_real_rooted(const UnivariateRestriction& p, double tol_imag = 1e-7) {
  return all_real_roots(p, tol_imag).certified;
}

}  // namespace hypermaj

#endif  // HYPERMAJ_REAL_ROOTS_HPP
