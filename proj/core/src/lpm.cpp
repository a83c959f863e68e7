#include "hypermaj/lpm.hpp"

#include <algorithm>
#include <cmath>

#include "hypermaj/errors.hpp"
#include "hypermaj/real_roots.hpp"
#include "hypermaj/rng.hpp"

namespace hypermaj {

namespace {

constexpr std::size_t kMaxLpmVars = 20;
constexpr std::uint64_t kPsdProbeStream = 0x70736470726f6265ULL;  // probe stream tag

double minor_of_mask(const SymmetricMatrix& a, std::uint32_t mask) {
  if (mask == 0) return 1.0;
  IndexSet idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask & (1u << i)) idx.push_back(i);
  Matrix sub(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = a(idx[i], idx[j]);
  return lu_determinant(sub);
}

// Coefficients of t -> lpm_eval(p, tI + a): values at degree+1 Chebyshev
// nodes spanning the root region, Newton divided differences, then
// expansion to the monomial basis. The leading coefficient is replaced by
// the exact sum of the c_J.
UnivariateRestriction identity_restriction(const LpmPolynomial& p, const SymmetricMatrix& a) {
  const int deg = p.degree();
  if (deg < 1)
    throw DomainError("lpm restriction: polynomial degree must be >= 1");
  double lead = 0.0;
  for (const auto& [mask, c] : p.terms()) lead += c;
  if (!(lead > 0.0))
    throw NotHyperbolicDirection("lpm restriction: value at the identity must be positive");

  const std::size_t n = a.size();
  const double radius = 1.0 + frobenius_norm(a.entries());
  const std::size_t count = static_cast<std::size_t>(deg) + 1;

  Vec nodes(count), values(count);
  for (std::size_t i = 0; i < count; ++i) {
    nodes[i] = radius * std::cos(3.141592653589793 * (2.0 * i + 1.0) / (2.0 * count));
    Matrix shifted = a.entries();
    for (std::size_t d = 0; d < n; ++d) shifted(d, d) += nodes[i];
    values[i] = lpm_eval(p, SymmetricMatrix(shifted));
  }

  // Divided differences in place: values[i] becomes f[t_0..t_i].
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i)
      values[i] = (values[i] - values[i - 1]) / (nodes[i] - nodes[i - level]);

  // Horner expansion of the Newton form into ascending monomial
  // coefficients: poly <- poly * (t - nodes[i]) + dd[i], innermost first.
  Vec coef(count, 0.0);
  coef[0] = values[count - 1];
  std::size_t len = 1;
  for (std::size_t i = count - 1; i-- > 0;) {
    for (std::size_t j = len; j >= 1; --j)
      coef[j] = coef[j - 1] - nodes[i] * coef[j];
    coef[0] = values[i] - nodes[i] * coef[0];
    ++len;
  }
  coef[count - 1] = lead;
  return UnivariateRestriction{coef};
}

}  // namespace

LpmPolynomial::LpmPolynomial(std::size_t n, const std::vector<LpmTerm>& terms) : n_(n) {
  if (n_ < 1 || n_ > kMaxLpmVars)
    throw DomainError("lpm polynomial: n must lie in 1..20");
  if (terms.empty()) throw DomainError("lpm polynomial: no terms");
  bool first = true;
  for (const LpmTerm& term : terms) {
    if (!std::isfinite(term.coefficient) || term.coefficient == 0.0)
      throw DomainError("lpm polynomial: coefficients must be finite and nonzero");
    std::uint32_t mask = 0;
    for (std::size_t i : term.indices) {
      if (i >= n_) throw DomainError("lpm polynomial: index out of range");
      if (mask & (1u << i)) throw DomainError("lpm polynomial: repeated index in a subset");
      mask |= 1u << i;
    }
    if (!terms_.emplace(mask, term.coefficient).second)
      throw DomainError("lpm polynomial: duplicate subset");
    const int size = static_cast<int>(term.indices.size());
    if (first) {
      degree_ = size;
      first = false;
    } else if (size != degree_) {
      homogeneous_ = false;
    }
  }
}

int LpmPolynomial::degree() const {
  if (!homogeneous_) throw DomainError("lpm polynomial: degree of an inhomogeneous polynomial");
  return degree_;
}

SignVector::SignVector(std::vector<int> s) : signs(std::move(s)) {
  if (signs.empty()) throw DomainError("sign vector: must be nonempty");
  for (int v : signs)
    if (v != 1 && v != -1) throw DomainError("sign vector: entries must be +/-1");
}

SignVector blockwise_signs(const Partition& p, std::uint32_t pattern) {
  std::vector<int> signs(p.n(), 1);
  for (std::size_t i = 0; i < p.n(); ++i)
    if (pattern & (1u << p.block_of()[i])) signs[i] = -1;
  return SignVector(std::move(signs));
}

double principal_minor(const SymmetricMatrix& a, const IndexSet& j) {
  if (j.empty()) return 1.0;
  IndexSet idx = j;
  std::sort(idx.begin(), idx.end());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= a.size()) throw DomainError("principal_minor: index out of range");
    if (i > 0 && idx[i] == idx[i - 1]) throw DomainError("principal_minor: repeated index");
  }
  Matrix sub(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = a(idx[r], idx[c]);
  return lu_determinant(sub);
}

double lpm_eval(const LpmPolynomial& p, const SymmetricMatrix& a) {
  if (p.n() != a.size()) throw DimensionError("lpm_eval: dimension mismatch");
  double sum = 0.0;
  for (const auto& [mask, c] : p.terms()) sum += c * minor_of_mask(a, mask);
  return sum;
}

SymmetricMatrix sign_conjugate(const SymmetricMatrix& a, const SignVector& s) {
  if (s.signs.size() != a.size()) throw DimensionError("sign_conjugate: length mismatch");
  Matrix out(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      out(i, j) = static_cast<double>(s.signs[i] * s.signs[j]) * a(i, j);
  return SymmetricMatrix(out);
}

SymmetricMatrix block_pinch(const SymmetricMatrix& a, const Partition& p) {
  if (p.n() != a.size()) throw DimensionError("block_pinch: partition size mismatch");
  Matrix out = a.entries();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (p.block_of()[i] != p.block_of()[j]) out(i, j) = 0.0;
  return SymmetricMatrix(out);
}

SymmetricMatrix reynolds_sign_average(const SymmetricMatrix& a, const Partition& p) {
  if (p.n() != a.size())
    throw DimensionError("reynolds_sign_average: partition size mismatch");
  const std::size_t m = p.block_count();
  if (m > kMaxLpmVars)
    throw GroupTooLarge("reynolds_sign_average: more than 20 blocks");
  const std::uint32_t group = 1u << m;
  Matrix acc(a.size(), a.size());
  for (std::uint32_t pattern = 0; pattern < group; ++pattern) {
    const SymmetricMatrix conj = sign_conjugate(a, blockwise_signs(p, pattern));
    acc = acc + conj.entries();
  }
  return SymmetricMatrix((1.0 / static_cast<double>(group)) * acc);
}

LpmSpectrum lpm_identity_spectrum(const LpmPolynomial& p, const SymmetricMatrix& a,
                                  double tol_imag) {
  if (p.n() != a.size()) throw DimensionError("lpm_identity_spectrum: dimension mismatch");
  const RootSet roots = all_real_roots(identity_restriction(p, a), tol_imag);
  LpmSpectrum out;
  out.certified = roots.certified;
  out.eigenvalues.reserve(roots.roots.size());
  // Ascending roots negate into descending eigenvalues as-is.
  for (double r : roots.roots) out.eigenvalues.push_back(-r);
  return out;
}

LpmProbeReport psd_stable_probe(const LpmPolynomial& p, int trials, std::uint64_t seed) {
  const int deg = p.degree();
  if (deg < 1) throw DomainError("psd_stable_probe: degree must be >= 1");
  if (trials < 0) throw DomainError("psd_stable_probe: trials must be >= 0");
  double lead = 0.0;
  for (const auto& [mask, c] : p.terms()) lead += c;
  if (!(lead > 0.0))
    throw NotHyperbolicDirection("psd_stable_probe: value at the identity must be positive");

  LpmProbeReport report;
  const std::size_t n = p.n();
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, kPsdProbeStream, static_cast<std::uint64_t>(t)));
    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const double g = rng.gauss();
        x(i, j) = g;
        x(j, i) = g;
      }
    const SymmetricMatrix sym(x);
    bool ok = false;
    try {
      const RootSet roots = all_real_roots(identity_restriction(p, sym));
      ok = roots.certified && roots.roots.size() == static_cast<std::size_t>(deg);
    } catch (const DegenerateLeadingCoefficient&) {
      ok = false;
    }
    if (!ok) {
      report.passed = false;
      report.failures.push_back(x);
    }
  }
  return report;
}

ConeMembership lpm_cone_member(const LpmPolynomial& p, const SymmetricMatrix& a,
                               ConeMode mode, double eps) {
  const LpmSpectrum spec = lpm_identity_spectrum(p, a);
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

ConeMembership lpm_cone_member(const LpmPolynomial& p, const SymmetricMatrix& a,
                               ConeMode mode) {
  return lpm_cone_member(p, a, mode, 1e-8 * (1.0 + max_abs(a.entries())));
}

FischerReport fischer_check(const LpmPolynomial& p, const SymmetricMatrix& a,
                            const Partition& pi, double eps) {
  if (!lpm_cone_member(p, a, ConeMode::kClosed, eps).member)
    throw ConeMembershipError("fischer_check: matrix is outside the closed cone");
  const SymmetricMatrix pinched = block_pinch(a, pi);

  FischerReport report;
  report.cone_preserved = lpm_cone_member(p, pinched, ConeMode::kClosed, eps).member;
  report.lhs = lpm_eval(p, pinched);
  report.rhs = lpm_eval(p, a);
  const double scale = 1.0 + std::max(std::abs(report.lhs), std::abs(report.rhs));
  report.inequality_holds = report.lhs >= report.rhs - eps * scale;
  return report;
}

}  // namespace hypermaj
