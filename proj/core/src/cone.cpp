#include "hypermaj/cone.hpp"

#include <algorithm>
#include <cmath>

#include "hypermaj/errors.hpp"
#include "hypermaj/real_roots.hpp"
#include "hypermaj/rng.hpp"

namespace hypermaj {

namespace {

void check_direction(const HomogeneousPolynomial& P, const Vec& a, const Vec& x) {
  if (a.size() != P.n() || x.size() != P.n())
    throw DimensionError("cone: direction/point length must equal the variable count");
  if (!(evaluate(P, a) > 0.0))
    throw NotHyperbolicDirection("cone: P(a) must be positive for a hyperbolic direction");
}

constexpr std::uint64_t kHyperbolicityStream = 0x686870726f6265ULL;  // probe stream tag

}  // namespace

double default_membership_eps(const Vec& x) { return 1e-8 * (1.0 + inf_norm(x)); }

DirectionalSpectrum directional_eigenvalues(const HomogeneousPolynomial& P, const Vec& a,
                                            const Vec& x, double tol_imag) {
  check_direction(P, a, x);
  const UnivariateRestriction q = restrict_to_line(P, a, x);
  const RootSet roots = all_real_roots(q, tol_imag);

  DirectionalSpectrum out;
  out.direction = a;
  out.point = x;
  out.certified = roots.certified;
  out.eigenvalues.reserve(roots.roots.size());
  // Roots come back ascending and negation reverses the order, so a
  // forward walk yields eigenvalues sorted descending directly.
  for (double r : roots.roots) out.eigenvalues.push_back(-r);
  return out;
}

ConeMembership cone_member(const HomogeneousPolynomial& P, const Vec& a, const Vec& x,
                           ConeMode mode, double eps) {
  const DirectionalSpectrum spec = directional_eigenvalues(P, a, x);
  ConeMembership out;
  out.mode = mode;
  out.eps = eps;
  out.min_eigenvalue = spec.eigenvalues.back();
  if (!spec.certified) {
    out.member = false;
    return out;
  }
  out.member = mode == ConeMode::kOpen ? out.min_eigenvalue > eps
                                       : out.min_eigenvalue >= -eps;
  return out;
}

ConeMembership cone_member(const HomogeneousPolynomial& P, const Vec& a, const Vec& x,
                           ConeMode mode) {
  return cone_member(P, a, x, mode, default_membership_eps(x));
}

HyperbolicityReport hyperbolicity_probe(const HomogeneousPolynomial& P, const Vec& a,
                                        int trials, std::uint64_t seed) {
  if (a.size() != P.n())
    throw DimensionError("hyperbolicity_probe: direction length must equal the variable count");
  if (!(evaluate(P, a) > 0.0))
    throw NotHyperbolicDirection("hyperbolicity_probe: P(a) must be positive");
  if (trials < 0) throw DomainError("hyperbolicity_probe: trials must be >= 0");

  HyperbolicityReport report;
  const std::size_t n = P.n();
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, kHyperbolicityStream, static_cast<std::uint64_t>(t)));
    Vec x(n);
    double norm = 0.0;
    do {
      for (double& v : x) v = rng.gauss();
      norm = 0.0;
      for (double v : x) norm += v * v;
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;

    bool ok = false;
    try {
      ok = all_real_roots(restrict_to_line(P, a, x)).certified;
    } catch (const DegenerateLeadingCoefficient&) {
      ok = false;  // restriction collapsed; cannot certify real-rootedness
    }
    if (!ok) {
      report.passed = false;
      report.failures.push_back(std::move(x));
    }
  }
  return report;
}

ConcavityReport concavity_probe(const HomogeneousPolynomial& P, const Vec& a, const Vec& x,
                                const Vec& y, int grid) {
  if (grid < 1) throw DomainError("concavity_probe: grid must be >= 1");
  if (x.size() != y.size())
    throw DimensionError("concavity_probe: endpoint lengths differ");
  if (!cone_member(P, a, x, ConeMode::kOpen).member)
    throw ConeMembershipError("concavity_probe: first endpoint is not an open cone member");
  if (!cone_member(P, a, y, ConeMode::kOpen).member)
    throw ConeMembershipError("concavity_probe: second endpoint is not an open cone member");

  const double invk = 1.0 / static_cast<double>(P.degree());
  const double fx = std::pow(evaluate(P, x), invk);
  const double fy = std::pow(evaluate(P, y), invk);

  ConcavityReport report;
  Vec z(x.size());
  for (int g = 0; g <= grid; ++g) {
    const double theta = static_cast<double>(g) / grid;
    for (std::size_t i = 0; i < z.size(); ++i)
      z[i] = (1.0 - theta) * x[i] + theta * y[i];
    const double pz = evaluate(P, z);
    // The open cone is convex, so P(z) > 0 along the segment; clamp keeps
    // pow well-defined if rounding grazes zero at extreme conditioning.
    const double fz = std::pow(std::max(pz, 0.0), invk);
    const double slack = fz - ((1.0 - theta) * fx + theta * fy);
    report.worst_gap = std::min(report.worst_gap, slack);
  }
  report.passed = report.worst_gap >= -1e-9;
  return report;
}

}  // namespace hypermaj
