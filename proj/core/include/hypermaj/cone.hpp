#pragma once

#include <cstdint>
#include <vector>

#include "hypermaj/linalg.hpp"
#include "hypermaj/polynomial.hpp"

namespace hypermaj {

enum class ConeMode { kOpen, kClosed };

// Eigenvalues of a point x relative to a hyperbolic direction a: the
// negated roots of t -> P(ta + x), so that P(ta + x) = P(a) prod(t + l_i).
struct DirectionalSpectrum {
  Vec eigenvalues;  // sorted descending
  Vec direction;
  Vec point;
  bool certified = true;
};

struct ConeMembership {
  bool member = false;
  ConeMode mode = ConeMode::kOpen;
  double min_eigenvalue = 0.0;
  double eps = 0.0;  // tolerance actually used for the decision
};

struct HyperbolicityReport {
  bool passed = true;
  std::vector<Vec> failures;  // sample points whose restriction is not real-rooted
};

struct ConcavityReport {
  bool passed = true;
  double worst_gap = 0.0;  // most negative concavity slack seen on the grid
};

// Membership tolerance scaled to the point, consistent with the residual
// accuracy of polished roots.
double default_membership_eps(const Vec& x);

// Restricts P to the line through x in direction a and negates the roots.
// Requires P(a) > 0 (throws NotHyperbolicDirection otherwise). A root set
// that fails real-root certification is reported with certified = false,
// not an error: membership queries treat it as non-membership.
DirectionalSpectrum directional_eigenvalues(const HomogeneousPolynomial& P, const Vec& a,
                                            const Vec& x, double tol_imag = 1e-7);

// Open cone: min eigenvalue > eps. Closed cone: min eigenvalue >= -eps.
// Uncertified spectra are never members in either mode.
ConeMembership cone_member(const HomogeneousPolynomial& P, const Vec& a, const Vec& x,
                           ConeMode mode, double eps);
ConeMembership cone_member(const HomogeneousPolynomial& P, const Vec& a, const Vec& x,
                           ConeMode mode);

// Samples `trials` unit-sphere points and checks that every restriction
// to the line spanned by a is real-rooted. Probabilistic only: passing
// certifies nothing beyond the sampled points. Deterministic per seed;
// trial t draws from a stream derived by counter splitting.
HyperbolicityReport hyperbolicity_probe(const HomogeneousPolynomial& P, const Vec& a,
                                        int trials, std::uint64_t seed);

// Checks concavity of f = P^(1/k) along the segment [x, y] on a uniform
// grid of grid+1 points including both endpoints: f((1-t)x + ty) must not
// fall below the chord by more than 1e-9. Both endpoints must be open
// members of the cone (ConeMembershipError otherwise).
ConcavityReport concavity_probe(const HomogeneousPolynomial& P, const Vec& a, const Vec& x,
                                const Vec& y, int grid);

}  // namespace hypermaj
